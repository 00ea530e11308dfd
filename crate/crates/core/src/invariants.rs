//! Structural validation and elementary invariants read directly off a
//! parameter set.

use std::fmt;

use serde::Serialize;

use crate::cf::gcd;
use crate::params::{Epsilon, FibreType, SeifertParams};

/// A violated structural constraint on a raw parameter set.
///
/// Raw `q` ranges and raw `b` values are never violations: normalization
/// brings them into range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Pair indices are 1-based.
    NonPositiveP {
        index: usize,
        p: i64,
    },
    NotCoprime {
        index: usize,
        p: i64,
        q: i64,
    },
    KExceedsT {
        k: u32,
        t: u32,
    },
    OddKPlusMMinus {
        k: u32,
        m_minus: usize,
    },
    GenusTooSmall {
        epsilon: Epsilon,
        g: u32,
        min: u32,
    },
    /// `ε ∈ {o, n}` must hold exactly when `k + m- > 0`.
    MixedEpsilonMismatch {
        epsilon: Epsilon,
        k_plus_m_minus: u64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonPositiveP { index, p } => write!(f, "pair {index}: p = {p} must be positive"),
            Violation::NotCoprime { index, p, q } => write!(f, "pair {index}: ({p},{q}) is not coprime"),
            Violation::KExceedsT { k, t } => write!(f, "k = {k} exceeds t = {t}"),
            Violation::OddKPlusMMinus { k, m_minus } => {
                write!(f, "k + m- = {k} + {m_minus} must be even")
            }
            Violation::GenusTooSmall { epsilon, g, min } => {
                write!(f, "{epsilon} requires g ≥ {min}, got g = {g}")
            }
            Violation::MixedEpsilonMismatch { epsilon, k_plus_m_minus } => {
                write!(f, "ε=o,n iff k+m->0 (ε = {epsilon}, k + m- = {k_plus_m_minus})")
            }
        }
    }
}

/// Collects every violated constraint; an empty list means the set is valid.
pub fn validate(params: &SeifertParams) -> Vec<Violation> {
    let mut out = Vec::new();
    for (i, pair) in params.pairs.iter().enumerate() {
        let index = i + 1;
        if pair.p <= 0 {
            out.push(Violation::NonPositiveP { index, p: pair.p });
        }
        if gcd(pair.p, pair.q) != 1 {
            out.push(Violation::NotCoprime { index, p: pair.p, q: pair.q });
        }
    }
    if params.k > params.t {
        out.push(Violation::KExceedsT { k: params.k, t: params.t });
    }
    let k_plus_m_minus = u64::from(params.k) + params.m_minus() as u64;
    if k_plus_m_minus % 2 == 1 {
        out.push(Violation::OddKPlusMMinus { k: params.k, m_minus: params.m_minus() });
    }
    if params.epsilon.is_mixed() != (k_plus_m_minus > 0) {
        out.push(Violation::MixedEpsilonMismatch { epsilon: params.epsilon, k_plus_m_minus });
    }
    let min = params.epsilon.min_genus();
    if params.g < min {
        out.push(Violation::GenusTooSmall { epsilon: params.epsilon, g: params.g, min });
    }
    out
}

pub fn is_valid(params: &SeifertParams) -> bool {
    validate(params).is_empty()
}

/// Euler characteristic of the base surface with its boundary capped off.
pub fn euler_char_base(params: &SeifertParams) -> i64 {
    let g = i64::from(params.g);
    if params.epsilon.orientable_base() {
        2 - 2 * g
    } else {
        2 - g
    }
}

pub fn is_orientable(params: &SeifertParams) -> bool {
    params.t == 0
        && params.kminus.is_empty()
        && params.hplus.iter().all(|&h| h == 0)
        && params.epsilon.complement_orientable()
}

pub fn is_closed(params: &SeifertParams) -> bool {
    params.hplus.is_empty() && params.kminus.is_empty()
}

/// Boundary components of `M`, by kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct BoundaryProfile {
    /// Regularly fibred tori, one per `h_i = 0`.
    pub tori: u64,
    /// Regularly fibred Klein bottles, one per `k_j = 0`.
    pub klein_regular: u64,
    /// Klein bottles carrying two exceptional fibres.
    pub klein_with_exceptional: u64,
    /// Exceptional annuli `t' = Σ h_i + Σ k_j`.
    pub exceptional_annuli: u64,
}

impl BoundaryProfile {
    pub fn components(&self) -> u64 {
        self.tori + self.klein_regular + self.klein_with_exceptional
    }
}

pub fn boundary_profile(params: &SeifertParams) -> BoundaryProfile {
    let annuli: u64 = params.hplus.iter().chain(&params.kminus).map(|&x| u64::from(x)).sum();
    BoundaryProfile {
        tori: params.hplus.iter().filter(|&&h| h == 0).count() as u64,
        klein_regular: params.kminus.iter().filter(|&&k| k == 0).count() as u64,
        klein_with_exceptional: annuli,
        exceptional_annuli: annuli,
    }
}

/// The base orbifold `B = M / fibres`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbifoldSummary {
    pub genus: u32,
    pub orientable_base: bool,
    /// One cone point of angle `2π/p` per exceptional fibre with `p > 1`.
    pub cone_points: Vec<FibreType>,
    pub reflector_circles: u64,
    pub reflector_arcs: u64,
    pub underlying_boundary_components: u64,
    /// Boundary components of the underlying surface whose preimage is a Klein bottle.
    pub minus_decorations: u64,
}

pub fn orbifold_summary(params: &SeifertParams) -> OrbifoldSummary {
    OrbifoldSummary {
        genus: params.g,
        orientable_base: params.epsilon.orientable_base(),
        cone_points: params.pairs.iter().copied().filter(|x| x.p > 1).collect(),
        reflector_circles: u64::from(params.t),
        reflector_arcs: boundary_profile(params).exceptional_annuli,
        underlying_boundary_components: (params.m_plus() + params.m_minus()) as u64 + u64::from(params.t),
        minus_decorations: u64::from(params.k) + params.m_minus() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse;

    fn p(s: &str) -> SeifertParams {
        parse(s).unwrap()
    }

    #[test]
    fn validate_examples() {
        let v = validate(&p("{0;(n4,2,(0,0));(|);}"));
        assert_eq!(v, vec![Violation::GenusTooSmall { epsilon: Epsilon::N4, g: 2, min: 3 }]);
        assert_eq!(v[0].to_string(), "n4 requires g ≥ 3, got g = 2");

        assert!(validate(&p("{0;(o,0,(1,1));(|0);}")).is_empty());

        let v = validate(&p("{0;(o1,0,(1,1));(0|);}"));
        assert_eq!(
            v,
            vec![
                Violation::OddKPlusMMinus { k: 1, m_minus: 0 },
                Violation::MixedEpsilonMismatch { epsilon: Epsilon::O1, k_plus_m_minus: 1 }
            ]
        );
    }

    #[test]
    fn validate_collects_everything() {
        let v = validate(&p("{0;(n3,1,(1,2));(|);((4,2),(0,1),(-3,1))}"));
        assert_eq!(v.len(), 6, "{v:?}");
        assert!(v.contains(&Violation::NotCoprime { index: 1, p: 4, q: 2 }));
        assert!(v.contains(&Violation::NonPositiveP { index: 2, p: 0 }));
        assert!(v.contains(&Violation::NonPositiveP { index: 3, p: -3 }));
        assert!(v.contains(&Violation::KExceedsT { k: 2, t: 1 }));
        assert!(v.contains(&Violation::MixedEpsilonMismatch { epsilon: Epsilon::N3, k_plus_m_minus: 2 }));
        assert!(v.contains(&Violation::GenusTooSmall { epsilon: Epsilon::N3, g: 1, min: 2 }));
    }

    #[test]
    fn raw_ranges_are_not_violations() {
        assert!(validate(&p("{-17;(o1,0,(0,0));(|);((5,7),(1,4),(3,-1))}")).is_empty());
    }

    #[test]
    fn every_verbatim_example_validates() {
        for s in crate::notation::tests::VERBATIM {
            assert!(validate(&p(s)).is_empty(), "{s}");
        }
    }

    #[test]
    fn euler_characteristic() {
        assert_eq!(euler_char_base(&p("{0;(o1,0,(0,0));(|);}")), 2);
        assert_eq!(euler_char_base(&p("{0;(n1,1,(0,0));(|);}")), 1);
        assert_eq!(euler_char_base(&p("{0;(n2,3,(0,0));(|);}")), -1);
        assert_eq!(euler_char_base(&p("{0;(o2,2,(0,0));(|);}")), -2);
    }

    #[test]
    fn orientability_and_closedness() {
        assert!(is_orientable(&p("{-1;(o1,0,(0,0));(|);((2,1),(3,1),(3,1))}")));
        assert!(!is_orientable(&p("{0;(o,4,(1,1));(1|0);((3,1),(5,2))}")));
        assert!(!is_orientable(&p("{0;(o1,0,(0,0));(1|);}")));
        assert!(is_orientable(&p("{0;(o1,0,(0,0));(0|);}")));
        assert!(is_orientable(&p("{2;(n2,1,(0,0));(|);}")));
        assert!(!is_orientable(&p("{0;(n2,1,(1,0));(|);}")));
        assert!(!is_orientable(&p("{0;(o2,1,(0,0));(|);}")));

        assert!(is_closed(&p("{0;(n1,1,(0,0));(|);}")));
        assert!(!is_closed(&p("{0;(o1,0,(0,0));(0|);}")));
        assert!(!is_closed(&p("{0;(o,0,(1,1));(|0);}")));
    }

    #[test]
    fn boundary_profiles() {
        let fig = boundary_profile(&p("{0;(o,4,(1,1));(1|0);((3,1),(5,2))}"));
        assert_eq!(
            fig,
            BoundaryProfile { tori: 0, klein_regular: 1, klein_with_exceptional: 1, exceptional_annuli: 1 }
        );
        assert_eq!(fig.components(), 2);
        assert_eq!(boundary_profile(&p("{1;(n1,1,(0,0));(|);((3,1))}")), BoundaryProfile::default());
        let txi = boundary_profile(&p("{0;(o1,0,(0,0));(0,0|);}"));
        assert_eq!(txi, BoundaryProfile { tori: 2, ..Default::default() });
        let kxi = boundary_profile(&p("{0;(o1,0,(0,0));(2|);}"));
        assert_eq!(kxi.klein_with_exceptional, 2);
        assert_eq!(kxi.tori, 0);
    }

    #[test]
    fn orbifold_summaries() {
        let s = orbifold_summary(&p("{0;(o,4,(1,1));(1|0);((3,1),(5,2))}"));
        assert_eq!(
            s,
            OrbifoldSummary {
                genus: 4,
                orientable_base: true,
                cone_points: vec![FibreType::new(3, 1), FibreType::new(5, 2)],
                reflector_circles: 1,
                reflector_arcs: 1,
                underlying_boundary_components: 3,
                minus_decorations: 2,
            }
        );

        let s = orbifold_summary(&p("{0;(o1,0,(0,0));(|);}"));
        assert_eq!(s.genus, 0);
        assert!(s.orientable_base);
        assert!(s.cone_points.is_empty());
        assert_eq!(
            (s.reflector_circles, s.reflector_arcs, s.underlying_boundary_components, s.minus_decorations),
            (0, 0, 0, 0)
        );

        let s = orbifold_summary(&p("{1;(n1,1,(0,0));(|);}"));
        assert_eq!(s.genus, 1);
        assert!(!s.orientable_base);
        assert!(s.cone_points.is_empty() && s.reflector_circles == 0 && s.reflector_arcs == 0);
    }
}
