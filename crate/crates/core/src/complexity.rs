//! Upper bounds for the complexity `c(M)`: the minimum number of true vertices
//! over all almost simple spines of `M`.
//!
//! Every bound is evaluated on the canonical form, so it is invariant under
//! the moves of [`crate::normalize`].

use std::fmt;

use serde::Serialize;

use crate::cf::s_cf;
use crate::error::{Error, Result};
use crate::invariants::{euler_char_base, is_closed, is_orientable};
use crate::normalize::normalize;
use crate::params::{Epsilon, FibreType, SeifertParams};

/// Which formula (or recognized special space) produced a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CaseTag {
    BorderedSpecialZero,
    BorderedGeneral,
    #[serde(rename = "Lens_b1")]
    LensB1,
    #[serde(rename = "Lens_bpq")]
    LensBpq,
    #[serde(rename = "Lens_qp")]
    LensQp,
    #[serde(rename = "RP2xS1")]
    Rp2xS1,
    S2twistS1,
    #[serde(rename = "S2twistS1_reflector")]
    S2twistS1Reflector,
    ClosedOrientableGeneral,
    ClosedNonorientableGeneral,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::BorderedSpecialZero => "BorderedSpecialZero",
            CaseTag::BorderedGeneral => "BorderedGeneral",
            CaseTag::LensB1 => "Lens_b1",
            CaseTag::LensBpq => "Lens_bpq",
            CaseTag::LensQp => "Lens_qp",
            CaseTag::Rp2xS1 => "RP2xS1",
            CaseTag::S2twistS1 => "S2twistS1",
            CaseTag::S2twistS1Reflector => "S2twistS1_reflector",
            CaseTag::ClosedOrientableGeneral => "ClosedOrientableGeneral",
            CaseTag::ClosedNonorientableGeneral => "ClosedNonorientableGeneral",
        }
    }

    /// Fibrations of reducible or `P²`-reducible manifolds.
    pub fn is_reducible_special(self) -> bool {
        matches!(self, CaseTag::Rp2xS1 | CaseTag::S2twistS1 | CaseTag::S2twistS1Reflector)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityBound {
    pub value: u64,
    pub case_tag: CaseTag,
    /// `c(M) = value` is known, not just `c(M) ≤ value`.
    pub exact: bool,
    pub label: Option<String>,
}

impl ComplexityBound {
    fn upper(value: i128, case_tag: CaseTag) -> Self {
        ComplexityBound { value: clamp(value), case_tag, exact: false, label: None }
    }

    fn exact_zero(case_tag: CaseTag, label: &str) -> Self {
        ComplexityBound { value: 0, case_tag, exact: true, label: Some(label.to_owned()) }
    }

    fn labelled(mut self, label: String) -> Self {
        self.label = Some(label);
        self
    }
}

fn clamp(v: i128) -> u64 {
    u64::try_from(v.max(0)).unwrap_or(u64::MAX)
}

fn s(pair: &FibreType) -> i128 {
    // canonical pairs always satisfy 0 < q < p
    i128::from(s_cf(pair.p, pair.q).expect("normalized pair"))
}

fn pair_sum(pairs: &[FibreType]) -> i128 {
    pairs.iter().map(|x| s(x) + 1).sum()
}

/// Names the bordered spaces with a spine free of true vertices, if `x` (in
/// canonical form) is one of their fibrations.
fn recognize_bordered(x: &SeifertParams) -> Option<&'static str> {
    if x.b != 0 {
        return None;
    }
    let pairs: Vec<(i64, i64)> = x.pairs.iter().map(|f| (f.p, f.q)).collect();
    let shape = (x.epsilon, x.g, x.t, x.k, x.hplus.as_slice(), x.kminus.as_slice());
    match (shape, pairs.as_slice()) {
        ((Epsilon::N1, 1, 0, 0, [0], []), []) => Some("NxS1"),
        ((Epsilon::O1, 0, 1, 0, [0], []), []) => Some("NxS1"),
        ((Epsilon::O1, 0, 0, 0, [1], []), [(2, 1)]) => Some("N~xS1"),
        ((Epsilon::O, 0, 1, 1, [], [0]), []) => Some("N~xS1"),
        ((Epsilon::O1, 0, 0, 0, [0], []), [] | [_]) => Some("D2xS1"),
        ((Epsilon::O1, 0, 0, 0, [1], []), []) => Some("SK"),
        _ => None,
    }
}

/// The complexity upper bound, dispatched on the canonical form.
pub fn upper_bound(params: &SeifertParams) -> Result<ComplexityBound> {
    let norm = normalize(params)?;
    let x = norm.as_params();
    let t = i128::from(x.t);
    let r = x.r();

    if !is_closed(x) {
        if let Some(name) = recognize_bordered(x) {
            return Ok(ComplexityBound::exact_zero(CaseTag::BorderedSpecialZero, name));
        }
        let v = t + x.pairs.iter().map(|f| (s(f) - 3).max(0)).sum::<i128>();
        return Ok(ComplexityBound::upper(v, CaseTag::BorderedGeneral));
    }

    let chi = i128::from(euler_char_base(x));
    let b = i128::from(x.b);

    if chi == 2 && x.t == 0 && r <= 1 {
        let (bound, order, second) = match x.pairs.first() {
            None => (ComplexityBound::upper(b - 3, CaseTag::LensB1), b, 1),
            Some(f) if x.b > 0 => {
                let (p, q) = (i128::from(f.p), i128::from(f.q));
                (ComplexityBound::upper(b + s(f) - 3, CaseTag::LensBpq), b * p + q, p)
            }
            Some(f) => {
                let (p, q) = (i128::from(f.p), i128::from(f.q));
                (ComplexityBound::upper(s(f) - 3 - p / q, CaseTag::LensQp), q, p)
            }
        };
        let mut bound = bound.labelled(format!("L({order},{second})"));
        // S^3, RP^3 and L(3,1) are the lens spaces of complexity zero
        bound.exact = bound.value == 0 && (1..=3).contains(&order);
        return Ok(bound);
    }

    if chi == 1 && x.epsilon == Epsilon::N1 && x.t == 0 && r == 0 {
        return Ok(if x.b == 0 {
            ComplexityBound::upper(1, CaseTag::Rp2xS1).labelled("RP2xS1".into())
        } else {
            ComplexityBound::exact_zero(CaseTag::S2twistS1, "S2~xS1")
        });
    }

    if chi == 2 && x.t == 1 && r == 0 {
        return Ok(ComplexityBound::exact_zero(CaseTag::S2twistS1Reflector, "S2~xS1"));
    }

    let pairs = pair_sum(&x.pairs);
    Ok(if is_orientable(x) {
        ComplexityBound::upper((b - 1 + chi).max(0) + 6 * (1 - chi) + pairs, CaseTag::ClosedOrientableGeneral)
    } else {
        ComplexityBound::upper(6 * (1 - chi) + 6 * t + pairs, CaseTag::ClosedNonorientableGeneral)
    })
}

/// `6(1-χ) + 6t + Σ (S(p_j,q_j) + 1)` on the canonical form of a closed
/// non-orientable space, without case dispatch. May be negative only in
/// principle; every closed non-orientable space gives a value ≥ 0.
pub fn nonorientable_formula(params: &SeifertParams) -> Result<i128> {
    let norm = normalize(params)?;
    let x = norm.as_params();
    if !is_closed(x) || is_orientable(x) {
        return Err(Error::NotClosedNonorientable);
    }
    let chi = i128::from(euler_char_base(x));
    Ok(6 * (1 - chi) + 6 * i128::from(x.t) + pair_sum(&x.pairs))
}

/// For a bordered space: no reflector circles and every exceptional fibre of
/// type (2,1), (3,1) or (3,2). Such spaces have complexity zero.
pub fn zero_complexity_corollary_check(params: &SeifertParams) -> Result<bool> {
    let norm = normalize(params)?;
    if is_closed(&norm) {
        return Err(Error::NotBordered);
    }
    Ok(norm.t == 0 && norm.pairs.iter().all(|f| matches!((f.p, f.q), (2, 1) | (3, 1) | (3, 2))))
}

/// Conjectured exact complexity of a closed non-orientable space, assuming it
/// is irreducible and `P²`-irreducible (not checked). `None` for the
/// fibrations of `RP²×S¹` and `S²×~S¹` recognized by [`upper_bound`].
pub fn conjectured_complexity(params: &SeifertParams) -> Result<Option<u64>> {
    let value = nonorientable_formula(params)?;
    if upper_bound(params)?.case_tag.is_reducible_special() {
        return Ok(None);
    }
    Ok(Some(clamp(value)))
}

/// Closed orientable families where the general bound is known not to be
/// sharp; a note for display only, the bound itself is not changed.
pub fn sharper_estimate_note(params: &SeifertParams) -> Result<Option<&'static str>> {
    let x = normalize(params)?;
    let shape = x.b == -1
        && x.epsilon == Epsilon::O1
        && x.g == 0
        && x.t == 0
        && is_closed(&x)
        && x.r() == 3
        && x.pairs[0] == FibreType::new(2, 1);
    if !shape {
        return Ok(None);
    }
    let (second, third) = (x.pairs[1], x.pairs[2]);
    if second.q == 1 && third.q == 1 {
        return Ok(Some(
            "family {-1;(o1,0,(0,0));(|);((2,1),(n,1),(m,1))}: the bound exceeds c(M) by one or two",
        ));
    }
    if second == FibreType::new(3, 1) && third.q != 1 && third.p > 5 * third.q {
        return Ok(Some(
            "family {-1;(o1,0,(0,0));(|);((2,1),(3,1),(p,q))} with p/q > 5 non-integer: the bound exceeds c(M) by one",
        ));
    }
    Ok(None)
}
