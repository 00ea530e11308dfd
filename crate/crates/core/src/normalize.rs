//! Moves between parameter sets describing the same fibred space, and the
//! reduction of any valid set to its canonical form.
//!
//! The move calculus:
//!
//! * **twist** `(p, q), b  ->  (p, q - n p), b + n`
//! * **unit pairs** a pair `(1, c)` is interchangeable with adding `c` to `b`
//! * **reflect** `(p, q), b  ->  (p, p - q), b + 1`, only when some curve in the
//!   base reverses the fibre (`ε ∉ {o1, n2}`)
//! * **mirror** reverses the orientation of `M` minus its exceptional surfaces
//!   (`ε ∈ {o1, n2}`): every `q -> p - q`, and `b -> -b - r` when `M` is closed
//!   and orientable
//! * `b` is absorbed completely as soon as there is a reflector circle or a
//!   boundary component, and is only defined mod 2 for `ε ∈ {o2, n1, n3, n4}`.

use crate::cf::gcd;
use crate::error::{Error, Result};
use crate::invariants::validate;
use crate::params::{FibreType, FibredSolidTorusType, NormalizedSeifertParams, SeifertParams};

fn pair_index(params: &SeifertParams, j: usize) -> Result<usize> {
    if j == 0 || j > params.r() {
        return Err(Error::PairIndex { index: j, len: params.r() });
    }
    Ok(j - 1)
}

fn add_b(b: i64, n: i64) -> Result<i64> {
    b.checked_add(n).ok_or(Error::Overflow("adjusting b"))
}

/// Replaces pair `j` (1-based) by `(p_j, q_j - n p_j)` and `b` by `b + n`.
pub fn twist(params: &SeifertParams, j: usize, n: i64) -> Result<SeifertParams> {
    let i = pair_index(params, j)?;
    let mut out = params.clone();
    let FibreType { p, q } = out.pairs[i];
    out.pairs[i].q =
        n.checked_mul(p).and_then(|np| q.checked_sub(np)).ok_or(Error::Overflow("twisting a pair"))?;
    out.b = add_b(out.b, n)?;
    Ok(out)
}

/// Replaces pair `j` (1-based) by `(p_j, p_j - q_j)` and `b` by `b + 1`.
pub fn reflect_pair(params: &SeifertParams, j: usize) -> Result<SeifertParams> {
    if params.epsilon.complement_orientable() {
        return Err(Error::NoFibreReversal(params.epsilon));
    }
    let i = pair_index(params, j)?;
    let mut out = params.clone();
    let FibreType { p, q } = out.pairs[i];
    out.pairs[i].q = p.checked_sub(q).ok_or(Error::Overflow("reflecting a pair"))?;
    out.b = add_b(out.b, 1)?;
    Ok(out)
}

fn closed_orientable(params: &SeifertParams) -> bool {
    crate::is_closed(params) && crate::is_orientable(params)
}

/// Orientation reversal on the complement of the exceptional surfaces.
pub fn mirror(params: &SeifertParams) -> Result<SeifertParams> {
    if !params.epsilon.complement_orientable() {
        return Err(Error::NeedsOrientableComplement(params.epsilon));
    }
    let mut out = params.clone();
    for pair in &mut out.pairs {
        pair.q = pair.p.checked_sub(pair.q).ok_or(Error::Overflow("mirroring a pair"))?;
    }
    if closed_orientable(params) {
        let r = i64::try_from(params.r()).map_err(|_| Error::Overflow("mirroring b"))?;
        out.b =
            params.b.checked_neg().and_then(|nb| nb.checked_sub(r)).ok_or(Error::Overflow("mirroring b"))?;
    }
    Ok(out)
}

/// Appends the pair `(1, c)` and subtracts `c` from `b`.
pub fn insert_unit_pair(params: &SeifertParams, c: i64) -> Result<SeifertParams> {
    let mut out = params.clone();
    out.b = out.b.checked_sub(c).ok_or(Error::Overflow("inserting a unit pair"))?;
    out.pairs.push(FibreType::new(1, c));
    Ok(out)
}

/// Removes every `(1, c)` pair, adding `c` to `b`.
pub fn absorb_unit_pairs(params: &SeifertParams) -> Result<SeifertParams> {
    let mut out = params.clone();
    let mut b = out.b;
    for pair in out.pairs.iter().filter(|x| x.p == 1) {
        b = add_b(b, pair.q)?;
    }
    out.b = b;
    out.pairs.retain(|x| x.p != 1);
    Ok(out)
}

fn mirrored_pairs(pairs: &[FibreType]) -> Vec<FibreType> {
    let mut out: Vec<_> = pairs.iter().map(|x| FibreType::new(x.p, x.p - x.q)).collect();
    out.sort_unstable();
    out
}

/// Reduces a valid parameter set to its canonical form.
pub fn normalize(params: &SeifertParams) -> Result<NormalizedSeifertParams> {
    let violations = validate(params);
    if !violations.is_empty() {
        return Err(Error::Invalid(violations));
    }
    let mut x = absorb_unit_pairs(params)?;

    for pair in &mut x.pairs {
        let n = pair.q.div_euclid(pair.p);
        pair.q = pair.q.rem_euclid(pair.p);
        x.b = add_b(x.b, n)?;
    }

    let fibre_reversing = !x.epsilon.complement_orientable();
    if fibre_reversing {
        for pair in &mut x.pairs {
            if pair.q > pair.p - pair.q {
                pair.q = pair.p - pair.q;
                x.b = add_b(x.b, 1)?;
            }
        }
    }

    x.hplus.sort_unstable();
    x.kminus.sort_unstable();
    x.pairs.sort_unstable();

    let absorbed = x.t > 0 || !crate::is_closed(&x);
    if absorbed {
        x.b = 0;
    } else if fibre_reversing {
        x.b = x.b.rem_euclid(2);
        if x.b == 1 && x.pairs.iter().any(|pair| pair.p == 2) {
            x.b = 0;
        }
    }

    if !fibre_reversing {
        if closed_orientable(&x) {
            let r = x.r() as i64;
            // compare b with -r/2 without halving
            match (2 * i128::from(x.b)).cmp(&-i128::from(r)) {
                std::cmp::Ordering::Less => {
                    x.b =
                        x.b.checked_neg()
                            .and_then(|nb| nb.checked_sub(r))
                            .ok_or(Error::Overflow("mirroring b"))?;
                    x.pairs = mirrored_pairs(&x.pairs);
                }
                std::cmp::Ordering::Equal => {
                    let other = mirrored_pairs(&x.pairs);
                    if other < x.pairs {
                        x.pairs = other;
                    }
                }
                std::cmp::Ordering::Greater => {}
            }
        } else {
            let other = mirrored_pairs(&x.pairs);
            if other < x.pairs {
                x.pairs = other;
            }
        }
    }

    Ok(NormalizedSeifertParams::new_unchecked(x))
}

/// Fibre-preserving equivalence: equal canonical forms.
pub fn equivalent(a: &SeifertParams, b: &SeifertParams) -> Result<bool> {
    Ok(normalize(a)? == normalize(b)?)
}

/// Canonical form of the space with reversed orientation. Canonical forms do
/// not distinguish `M` from `-M`, so this agrees with [`normalize`].
pub fn reverse_orientation(params: &SeifertParams) -> Result<NormalizedSeifertParams> {
    normalize(&mirror(params)?)
}

/// `T(p, r) ≅ T(p', r')` iff `p = p'` and `r ≡ ±r' (mod p)`.
pub fn solid_torus_equivalent(a: FibredSolidTorusType, b: FibredSolidTorusType) -> bool {
    if a.p() != b.p() {
        return false;
    }
    let p = i128::from(a.p());
    let (r, s) = (i128::from(a.r()), i128::from(b.r()));
    (r - s) % p == 0 || (r + s) % p == 0
}

/// Reads a census row written with the census convention, where a space with
/// `b = 1` may be listed with `b = 0` and its last pair replaced by
/// `(p_r, p_r - q_r)`. Such a row is just an unnormalized set, so this is
/// [`normalize`].
pub fn from_burton(params: &SeifertParams) -> Result<NormalizedSeifertParams> {
    normalize(params)
}

/// Checks every canonical-form condition on a parameter set. Used by tests and
/// by census ingestion diagnostics; [`normalize`] output always passes.
pub fn normal_form_violations(x: &SeifertParams) -> Vec<String> {
    let mut out: Vec<String> = validate(x).iter().map(ToString::to_string).collect();
    let eps = x.epsilon;
    if !x.hplus.is_sorted() || !x.kminus.is_sorted() {
        out.push("boundary lists not sorted".into());
    }
    if !x.pairs.is_sorted() {
        out.push("pairs not sorted".into());
    }
    for pair in &x.pairs {
        let ok_range = pair.p >= 2
            && 0 < pair.q
            && if eps.complement_orientable() { pair.q < pair.p } else { pair.q <= pair.p - pair.q };
        if !ok_range || gcd(pair.p, pair.q) != 1 {
            out.push(format!("pair {pair} out of normalized range"));
        }
    }
    let absorbed = x.t > 0 || !crate::is_closed(x);
    let b_ok = if absorbed {
        x.b == 0
    } else if eps.complement_orientable() {
        true
    } else if x.pairs.iter().any(|pair| pair.p == 2) {
        x.b == 0
    } else {
        x.b == 0 || x.b == 1
    };
    if !b_ok {
        out.push(format!("b = {} out of normalized range", x.b));
    }
    if eps.complement_orientable() {
        let leading = x.pairs.iter().find(|pair| pair.p > 2);
        let leading_ok = leading.is_none_or(|pair| pair.q > 0 && pair.q < pair.p - pair.q);
        if closed_orientable(x) {
            let twice_b = 2 * i128::from(x.b);
            let r = x.r() as i128;
            if twice_b < -r {
                out.push(format!("b = {} below -r/2", x.b));
            } else if twice_b == -r && !leading_ok {
                out.push("b = -r/2 but leading pair has q > p/2".into());
            }
        } else if !leading_ok {
            out.push("leading pair has q > p/2".into());
        }
    }
    out
}
