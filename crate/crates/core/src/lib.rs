//! Combinatorial invariants of Seifert fibre spaces.
//!
//! A Seifert fibre space is described by a parameter set
//!
//! ```text
//! {b; (ε, g, (t, k)); (h_1, ..., h_m+ | k_1, ..., k_m-); ((p_1,q_1), ..., (p_r,q_r))}
//! ```
//!
//! which this crate validates, reduces to a canonical form (deciding
//! fibre-preserving homeomorphism), and uses to compute upper bounds for the
//! complexity of the space. The [`census`] module enumerates closed
//! non-orientable spaces by bound and compares bounds against tabulated data.
//!
//! ```
//! use seifert::{normalize, upper_bound, SeifertParams};
//!
//! let x: SeifertParams = "{0;(n3,2,(0,0));(|);((3,2))}".parse().unwrap();
//! assert_eq!(normalize(&x).unwrap().to_string(), "{1;(n3,2,(0,0));(|);((3,1))}");
//! assert_eq!(upper_bound(&x).unwrap().value, 6 * (1 - 0) + 4);
//! ```

pub mod census;
pub mod cf;
pub mod complexity;
mod error;
pub mod invariants;
pub mod normalize;
pub mod notation;
mod params;

pub use cf::s_cf;
pub use complexity::{
    conjectured_complexity, sharper_estimate_note, upper_bound, zero_complexity_corollary_check, CaseTag,
    ComplexityBound,
};
pub use error::{Error, Result};
pub use invariants::{
    boundary_profile, euler_char_base, is_closed, is_orientable, orbifold_summary, validate, BoundaryProfile,
    OrbifoldSummary, Violation,
};
pub use normalize::{
    equivalent, from_burton, mirror, normalize, reflect_pair, reverse_orientation, solid_torus_equivalent,
    twist,
};
pub use params::{Epsilon, FibreType, FibredSolidTorusType, NormalizedSeifertParams, SeifertParams};
