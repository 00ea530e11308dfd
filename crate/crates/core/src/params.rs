//! Parameter sets in bracket notation
//! `{b; (ε, g, (t, k)); (h_1..h_m+ | k_1..k_m-); ((p_1,q_1)..(p_r,q_r))}`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bundle-type symbol. Encodes orientability of the base surface and how the
/// fibre orientation behaves along its generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Epsilon {
    O,
    O1,
    O2,
    N,
    N1,
    N2,
    N3,
    N4,
}

impl Epsilon {
    pub const ALL: [Epsilon; 8] = [
        Epsilon::O,
        Epsilon::O1,
        Epsilon::O2,
        Epsilon::N,
        Epsilon::N1,
        Epsilon::N2,
        Epsilon::N3,
        Epsilon::N4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Epsilon::O => "o",
            Epsilon::O1 => "o1",
            Epsilon::O2 => "o2",
            Epsilon::N => "n",
            Epsilon::N1 => "n1",
            Epsilon::N2 => "n2",
            Epsilon::N3 => "n3",
            Epsilon::N4 => "n4",
        }
    }

    /// Whether the underlying base surface is orientable.
    pub fn orientable_base(self) -> bool {
        matches!(self, Epsilon::O | Epsilon::O1 | Epsilon::O2)
    }

    /// `o` and `n`: the symbols used when some boundary curve reverses the fibre.
    pub fn is_mixed(self) -> bool {
        matches!(self, Epsilon::O | Epsilon::N)
    }

    /// `o1` and `n2`: the complement of the exceptional surfaces is orientable.
    pub fn complement_orientable(self) -> bool {
        matches!(self, Epsilon::O1 | Epsilon::N2)
    }

    /// Smallest genus the symbol admits.
    pub fn min_genus(self) -> u32 {
        match self {
            Epsilon::O | Epsilon::O1 => 0,
            Epsilon::O2 | Epsilon::N | Epsilon::N1 | Epsilon::N2 => 1,
            Epsilon::N3 => 2,
            Epsilon::N4 => 3,
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Epsilon {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Epsilon::ALL
            .into_iter()
            .find(|e| e.as_str() == s)
            .ok_or_else(|| format!("unknown epsilon symbol {s:?}"))
    }
}

/// Type `(p, q)` of an isolated exceptional fibre. `p = 1` only appears in raw
/// parameter sets, where it encodes a twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FibreType {
    pub p: i64,
    pub q: i64,
}

impl FibreType {
    pub const fn new(p: i64, q: i64) -> Self {
        FibreType { p, q }
    }
}

impl From<(i64, i64)> for FibreType {
    fn from((p, q): (i64, i64)) -> Self {
        FibreType { p, q }
    }
}

impl fmt::Display for FibreType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// A raw parameter set. Nothing is enforced at construction; see
/// [`crate::validate`] and [`crate::normalize`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SeifertParams {
    pub b: i64,
    pub epsilon: Epsilon,
    pub g: u32,
    pub t: u32,
    pub k: u32,
    pub hplus: Vec<u32>,
    pub kminus: Vec<u32>,
    pub pairs: Vec<FibreType>,
}

impl SeifertParams {
    /// Closed space `{b; (ε, g, (t, k)); (|); pairs}`.
    pub fn closed(b: i64, epsilon: Epsilon, g: u32, t: u32, k: u32, pairs: &[(i64, i64)]) -> Self {
        SeifertParams {
            b,
            epsilon,
            g,
            t,
            k,
            hplus: Vec::new(),
            kminus: Vec::new(),
            pairs: pairs.iter().copied().map(FibreType::from).collect(),
        }
    }

    pub fn with_boundary(mut self, hplus: &[u32], kminus: &[u32]) -> Self {
        self.hplus = hplus.to_vec();
        self.kminus = kminus.to_vec();
        self
    }

    pub fn m_plus(&self) -> usize {
        self.hplus.len()
    }

    pub fn m_minus(&self) -> usize {
        self.kminus.len()
    }

    pub fn r(&self) -> usize {
        self.pairs.len()
    }
}

impl fmt::Display for SeifertParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::print(self))
    }
}

impl FromStr for SeifertParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::notation::parse(s)
    }
}

/// The canonical representative of a fibre-preserving homeomorphism class.
/// Only [`crate::normalize`] builds these.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct NormalizedSeifertParams(SeifertParams);

impl NormalizedSeifertParams {
    pub(crate) fn new_unchecked(params: SeifertParams) -> Self {
        NormalizedSeifertParams(params)
    }

    pub fn as_params(&self) -> &SeifertParams {
        &self.0
    }

    pub fn into_params(self) -> SeifertParams {
        self.0
    }
}

impl Deref for NormalizedSeifertParams {
    type Target = SeifertParams;

    fn deref(&self) -> &SeifertParams {
        &self.0
    }
}

impl AsRef<SeifertParams> for NormalizedSeifertParams {
    fn as_ref(&self) -> &SeifertParams {
        &self.0
    }
}

impl From<NormalizedSeifertParams> for SeifertParams {
    fn from(n: NormalizedSeifertParams) -> Self {
        n.0
    }
}

impl fmt::Display for NormalizedSeifertParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Fibred solid torus `T(p, r)`: `D × I` with the ends glued by a `2πr/p` rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FibredSolidTorusType {
    p: i64,
    r: i64,
}

impl FibredSolidTorusType {
    pub fn new(p: i64, r: i64) -> Result<Self> {
        if p <= 0 || crate::cf::gcd(p, r) != 1 {
            return Err(Error::NotCoprime { p, q: r });
        }
        Ok(FibredSolidTorusType { p, r })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn r(&self) -> i64 {
        self.r
    }
}
