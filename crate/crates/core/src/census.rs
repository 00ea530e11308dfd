//! Enumeration of closed non-orientable spaces by complexity bound, and
//! comparison against externally tabulated complexities.
//!
//! Census files are tab-separated, one record per line:
//!
//! ```text
//! name<TAB>params<TAB>complexity<TAB>convention
//! ```
//!
//! `params` uses the bracket notation of [`crate::notation`] and `convention`
//! is `normalized` or `burton`. Blank lines and lines starting with `#` are
//! ignored; both LF and CRLF line endings are accepted.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::cf::continuant;
use crate::complexity::{upper_bound, CaseTag, ComplexityBound};
use crate::error::{Error, Result};
use crate::normalize::{from_burton, normalize};
use crate::notation::{parse, print};
use crate::params::{Epsilon, FibreType, NormalizedSeifertParams, SeifertParams};

/// Every coprime `(p, q)` with `0 < q < p` and `S(p, q) ≤ s_max`, sorted.
///
/// Built from the coefficient sequences themselves, so the cost is
/// proportional to the output (about `2^s_max` pairs).
pub fn enumerate_pairs_by_budget(s_max: u64) -> Vec<FibreType> {
    fn extend(prefix: &mut Vec<u64>, remaining: u64, out: &mut Vec<FibreType>) {
        // close the sequence with a last coefficient >= 2
        for last in 2..=remaining {
            prefix.push(last);
            if let Some((p, q)) = continuant(prefix) {
                if let (Ok(p), Ok(q)) = (i64::try_from(p), i64::try_from(q)) {
                    out.push(FibreType::new(p, q));
                }
            }
            prefix.pop();
        }
        // or keep going with any coefficient >= 1, leaving room for a final 2
        for a in 1..=remaining.saturating_sub(2) {
            prefix.push(a);
            extend(prefix, remaining - a, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    extend(&mut Vec::new(), s_max, &mut out);
    out.sort_unstable();
    out
}

/// One enumerated space with its bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub params: NormalizedSeifertParams,
    pub bound: ComplexityBound,
}

fn chi(epsilon: Epsilon, g: u32) -> i64 {
    let g = i64::from(g);
    if epsilon.orientable_base() {
        2 - 2 * g
    } else {
        2 - g
    }
}

/// Smallest number of reflector circles a closed non-orientable space with
/// this symbol can have.
fn min_reflectors(epsilon: Epsilon) -> u32 {
    if epsilon.is_mixed() {
        2
    } else if epsilon.complement_orientable() {
        1
    } else {
        0
    }
}

fn pair_multisets(
    pool: &[(FibreType, i64)],
    start: usize,
    budget: i64,
    current: &mut Vec<FibreType>,
    visit: &mut dyn FnMut(&[FibreType]),
) {
    visit(current);
    for (i, &(pair, cost)) in pool.iter().enumerate().skip(start) {
        if cost <= budget {
            current.push(pair);
            pair_multisets(pool, i, budget - cost, current, visit);
            current.pop();
        }
    }
}

/// All closed non-orientable spaces (as canonical forms) whose complexity
/// bound is at most `c_max`, sorted by their printed form.
///
/// Pruning uses `6(1-χ) + 6t + Σ (S(p_j,q_j) + 1)`, which never exceeds the
/// dispatched bound of a closed non-orientable space, together with
/// `S(p,q) ≥ 2`.
pub fn enumerate_nonorientable_closed(c_max: u64) -> Vec<CensusEntry> {
    let c = i64::try_from(c_max).unwrap_or(i64::MAX / 8);
    let all_pairs = enumerate_pairs_by_budget(c_max.saturating_sub(1));
    let mut found: BTreeMap<String, CensusEntry> = BTreeMap::new();

    for epsilon in Epsilon::ALL {
        let t_min = min_reflectors(epsilon);
        for g in epsilon.min_genus().. {
            let chi = chi(epsilon, g);
            if 6 * (1 - chi) + 6 * i64::from(t_min) > c {
                break;
            }
            for t in t_min.. {
                let base = 6 * (1 - chi) + 6 * i64::from(t);
                if base > c {
                    break;
                }
                let budget = c - base;
                let pool: Vec<(FibreType, i64)> = all_pairs
                    .iter()
                    .filter(|f| epsilon.complement_orientable() || 2 * f.q <= f.p)
                    .filter_map(|&f| {
                        let cost = crate::cf::s_cf(f.p, f.q).ok()? as i64 + 1;
                        (cost <= budget).then_some((f, cost))
                    })
                    .collect();
                let ks: Vec<u32> = if epsilon.is_mixed() { (2..=t).step_by(2).collect() } else { vec![0] };
                let bs: &[i64] = if t == 0 { &[0, 1] } else { &[0] };

                let mut visit = |pairs: &[FibreType]| {
                    for &k in &ks {
                        for &b in bs {
                            let raw = SeifertParams {
                                b,
                                epsilon,
                                g,
                                t,
                                k,
                                hplus: Vec::new(),
                                kminus: Vec::new(),
                                pairs: pairs.to_vec(),
                            };
                            let Ok(params) = normalize(&raw) else { continue };
                            let Ok(bound) = upper_bound(&params) else { continue };
                            if bound.value <= c_max {
                                found.entry(print(&params)).or_insert(CensusEntry { params, bound });
                            }
                        }
                    }
                };
                pair_multisets(&pool, 0, budget, &mut Vec::new(), &mut visit);
            }
        }
    }
    found.into_values().collect()
}

/// Writes entries in the census TSV format, naming each row after its
/// recognized manifold or case tag.
pub fn write_census_tsv(entries: &[CensusEntry], c_max: u64) -> String {
    let mut out = format!(
        "# closed non-orientable Seifert fibre spaces, bound <= {c_max}: {} entries\n",
        entries.len()
    );
    for e in entries {
        let name = e.bound.label.clone().unwrap_or_else(|| e.bound.case_tag.to_string());
        out.push_str(&format!("{name}\t{}\t{}\tnormalized\n", e.params, e.bound.value));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Normalized,
    Burton,
}

impl std::str::FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "normalized" => Ok(Convention::Normalized),
            "burton" => Ok(Convention::Burton),
            other => Err(format!("unknown convention {other:?} (expected normalized or burton)")),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Normalized => "normalized",
            Convention::Burton => "burton",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub name: String,
    /// Rows in the `burton` convention are stored already converted.
    pub params: SeifertParams,
    pub complexity: u64,
    pub convention: Convention,
}

pub fn ingest_census<R: BufRead>(reader: R) -> Result<Vec<CensusRecord>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let err = |msg: String| Error::CensusLine { line: line_no, msg };
        let line = line.map_err(|e| err(e.to_string()))?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [name, params, complexity, convention] = fields[..] else {
            return Err(err(format!("expected 4 tab-separated fields, found {}", fields.len())));
        };
        let params = parse(params).map_err(|e| err(e.to_string()))?;
        let complexity = complexity.trim();
        if complexity.starts_with('-') {
            return Err(err(format!("negative complexity {complexity}")));
        }
        let complexity: u64 =
            complexity.parse().map_err(|_| err(format!("bad complexity {complexity:?}")))?;
        let convention: Convention = convention.trim().parse().map_err(err)?;
        let params = match convention {
            Convention::Normalized => {
                normalize(&params).map_err(|e| err(e.to_string()))?;
                params
            }
            Convention::Burton => from_burton(&params).map_err(|e| err(e.to_string()))?.into_params(),
        };
        out.push(CensusRecord { name: name.trim().to_owned(), params, complexity, convention });
    }
    Ok(out)
}

pub fn ingest_census_str(text: &str) -> Result<Vec<CensusRecord>> {
    ingest_census(text.as_bytes())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RowStatus {
    Sharp,
    Overestimate {
        by: u64,
    },
    /// The bound is below the recorded complexity: the data or the
    /// normalization is wrong.
    Violation,
    /// Recorded complexity above the requested `c_max`.
    Skipped,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowStatus::Sharp => f.write_str("sharp"),
            RowStatus::Overestimate { by } => write!(f, "overestimate(by {by})"),
            RowStatus::Violation => f.write_str("violation"),
            RowStatus::Skipped => f.write_str("skipped"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonRow {
    pub name: String,
    pub normalized: NormalizedSeifertParams,
    pub recorded: u64,
    pub bound: ComplexityBound,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Overestimate {
    pub name: String,
    pub by: u64,
    pub case_tag: CaseTag,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ComparisonSummary {
    pub total: usize,
    pub sharp: usize,
    pub overestimate: usize,
    pub violation: usize,
    pub skipped: usize,
    pub overestimates: Vec<Overestimate>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
    pub summary: ComparisonSummary,
}

impl ComparisonReport {
    pub fn has_violations(&self) -> bool {
        self.summary.violation > 0
    }
}

/// Compares each recorded complexity with [`upper_bound`]. Rows recorded above
/// `c_max` (when given) are marked [`RowStatus::Skipped`].
pub fn compare(records: &[CensusRecord], c_max: Option<u64>) -> Result<ComparisonReport> {
    let mut rows = Vec::with_capacity(records.len());
    let mut summary = ComparisonSummary { total: records.len(), ..Default::default() };
    let mut by_name: BTreeMap<&str, BTreeSet<String>> = BTreeMap::new();

    for rec in records {
        let normalized = normalize(&rec.params)?;
        let bound = upper_bound(&rec.params)?;
        let status = if c_max.is_some_and(|c| rec.complexity > c) {
            summary.skipped += 1;
            RowStatus::Skipped
        } else if bound.value < rec.complexity {
            summary.violation += 1;
            RowStatus::Violation
        } else if bound.value == rec.complexity {
            summary.sharp += 1;
            RowStatus::Sharp
        } else {
            let by = bound.value - rec.complexity;
            summary.overestimate += 1;
            summary.overestimates.push(Overestimate { name: rec.name.clone(), by, case_tag: bound.case_tag });
            RowStatus::Overestimate { by }
        };
        by_name.entry(&rec.name).or_default().insert(normalized.to_string());
        rows.push(ComparisonRow {
            name: rec.name.clone(),
            normalized,
            recorded: rec.complexity,
            bound,
            status,
        });
    }

    for (name, forms) in by_name {
        if forms.len() > 1 {
            let forms: Vec<_> = forms.into_iter().collect();
            summary.notes.push(format!(
                "{name}: {} distinct fibrations ({}); not compared as manifolds",
                forms.len(),
                forms.join(", ")
            ));
        }
    }
    Ok(ComparisonReport { rows, summary })
}
