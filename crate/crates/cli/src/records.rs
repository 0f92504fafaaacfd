//! Machine-readable output records.
//!
//! One record per line in JSON mode, discriminated by `kind`. Every integer
//! is carried as a decimal string so arbitrary precision survives any
//! consumer; records parse back into the exact values they were written
//! from.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use tripleforge::{DiscrepancyEntry, Error, PowerRelationReport, Spurious, Triple};

/// One line of output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OutputRecord {
    Triple(TripleRecord),
    Relation(RelationRecord),
    Discrepancy(DiscrepancyRecord),
}

/// A single Pythagorean triple with its generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRecord {
    pub x: String,
    pub y: String,
    pub z: String,
    pub d: String,
    pub primitive: bool,
}

impl From<&Triple> for TripleRecord {
    fn from(t: &Triple) -> Self {
        Self {
            x: t.x().to_string(),
            y: t.y().to_string(),
            z: t.z().to_string(),
            d: t.d().to_string(),
            primitive: t.is_primitive(),
        }
    }
}

impl TripleRecord {
    /// Compact `(x, y, z)` form for table output.
    pub fn compact(&self) -> String {
        format!("({},{},{})", self.x, self.y, self.z)
    }
}

/// `(y', z')` produced by one computation route.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub y_prime: String,
    pub z_prime: String,
}

/// Power-relation outcome for a pair `(x, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationRecord {
    pub x: String,
    pub m: String,
    pub y_prime: String,
    pub z_prime: String,
    /// Per-route values, present only when requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub paths: Option<BTreeMap<String, PathRecord>>,
    pub agreed: bool,
}

pub fn relation_record(report: &PowerRelationReport, include_paths: bool) -> RelationRecord {
    let paths = include_paths.then(|| {
        report
            .paths
            .iter()
            .map(|(path, (y, z))| {
                (
                    path.label().to_string(),
                    PathRecord {
                        y_prime: y.to_string(),
                        z_prime: z.to_string(),
                    },
                )
            })
            .collect()
    });
    RelationRecord {
        x: report.x.to_string(),
        m: report.m.to_string(),
        y_prime: report.y_prime.to_string(),
        z_prime: report.z_prime.to_string(),
        paths,
        agreed: report.agreed,
    }
}

/// One candidate that went wrong during verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpuriousRecord {
    pub d: String,
    /// `degenerate`, `non-integer`, `unmatched` or `error`.
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub y: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub z: Option<String>,
}

/// Differences found at one leg during verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyRecord {
    pub x: String,
    pub missing: Vec<TripleRecord>,
    pub spurious: Vec<SpuriousRecord>,
}

pub fn discrepancy_record(entry: &DiscrepancyEntry) -> DiscrepancyRecord {
    let spurious = entry
        .spurious
        .iter()
        .map(|s| match s {
            Spurious::FailedCandidate { d, error } => SpuriousRecord {
                d: d.to_string(),
                reason: match error {
                    Error::DegenerateTriple { .. } => "degenerate",
                    Error::NonIntegerResult { .. } => "non-integer",
                    _ => "error",
                }
                .to_string(),
                y: None,
                z: None,
            },
            Spurious::UnmatchedTriple { triple } => SpuriousRecord {
                d: triple.d().to_string(),
                reason: "unmatched".to_string(),
                y: Some(triple.y().to_string()),
                z: Some(triple.z().to_string()),
            },
        })
        .collect();
    DiscrepancyRecord {
        x: entry.x.to_string(),
        missing: entry.missing.iter().map(TripleRecord::from).collect(),
        spurious,
    }
}
