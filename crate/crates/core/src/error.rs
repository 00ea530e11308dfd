use thiserror::Error;

use crate::invariants::Violation;

/// Errors returned by the operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("S(p,q) requires 0 < q < p or q = 1, got ({p},{q})")]
    ContinuedFractionRange { p: i64, q: i64 },

    #[error("({p},{q}) is not a coprime pair")]
    NotCoprime { p: i64, q: i64 },

    #[error("pair index {index} out of range (1..={len})")]
    PairIndex { index: usize, len: usize },

    #[error("operation requires epsilon in {{o1, n2}}, got {0}")]
    NeedsOrientableComplement(crate::Epsilon),

    #[error(
        "operation is not available for epsilon {0} (fibre-reversing moves need epsilon outside {{o1, n2}})"
    )]
    NoFibreReversal(crate::Epsilon),

    #[error("invalid parameters: {}", display_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("operation requires a space with non-empty boundary")]
    NotBordered,

    #[error("operation requires a closed non-orientable space")]
    NotClosedNonorientable,

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("census line {line}: {msg}")]
    CensusLine { line: usize, msg: String },
}

fn display_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
