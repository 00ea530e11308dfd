//! Continued fractions of `p/q`.

use crate::error::{Error, Result};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

fn check_range(p: i64, q: i64) -> Result<()> {
    if q <= 0 || (q >= p && !(q == 1 && p >= 1)) {
        return Err(Error::ContinuedFractionRange { p, q });
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    Ok(())
}

/// Coefficients `[a_1, ..., a_k]` of `p/q = a_1 + 1/(a_2 + ...)` with the
/// last coefficient at least 2 (or the single coefficient `p` when `q = 1`).
/// These are exactly the Euclidean quotients of `(p, q)`.
pub fn expansion(p: i64, q: i64) -> Result<Vec<u64>> {
    check_range(p, q)?;
    let (mut a, mut b) = (p as u64, q as u64);
    let mut coeffs = Vec::new();
    while b != 0 {
        coeffs.push(a / b);
        (a, b) = (b, a % b);
    }
    Ok(coeffs)
}

/// `S(p, q)`: the sum of the continued fraction coefficients of `p/q`.
pub fn s_cf(p: i64, q: i64) -> Result<u64> {
    Ok(expansion(p, q)?.iter().sum())
}

/// Inverse of [`expansion`]: evaluates `[a_1; a_2, ..., a_k]` to the reduced
/// fraction `(p, q)`. Returns `None` on overflow or an empty sequence.
pub fn continuant(coeffs: &[u64]) -> Option<(u64, u64)> {
    let (&last, rest) = coeffs.split_last()?;
    let (mut num, mut den) = (last, 1u64);
    for &a in rest.iter().rev() {
        (num, den) = (a.checked_mul(num)?.checked_add(den)?, num);
    }
    Some((num, den))
}
