//! Independent brute-force ground truth.
//!
//! [`triples_with_leg`] enumerates every Pythagorean triple with a given
//! leg by scanning all possible values of the other leg and testing the
//! hypotenuse for squareness. It never touches factorization or the
//! candidate-set logic; its only arithmetic dependency is the integer
//! square root. Deliberately dumb: a smarter oracle would stop being an
//! oracle.
//!
//! [`cross_check`] compares the divisor-based enumeration against this
//! search over a range of legs and reports every difference as data.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::chatetus::{self, Mode, Triple};
use crate::error::{Error, Result};
use crate::factorization::integer_sqrt_u128;

/// Limits for the exhaustive search.
#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Largest leg the per-leg O(x^2) scan accepts.
    pub sweep_limit: u64,
    /// Optional wall-clock cap for a single search or sweep.
    pub time_budget: Option<Duration>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            sweep_limit: 100_000,
            time_budget: None,
        }
    }
}

// Quadratic residues mod 256; rules out ~83% of non-squares before the
// square root runs.
fn square_residues() -> &'static [bool; 256] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<[bool; 256]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [false; 256];
        for i in 0..256u32 {
            t[((i * i) % 256) as usize] = true;
        }
        t
    })
}

fn exact_sqrt(n: u128) -> Option<u128> {
    if !square_residues()[(n & 0xff) as usize] {
        return None;
    }
    let (root, exact) = integer_sqrt_u128(n);
    exact.then_some(root)
}

/// Every Pythagorean triple with leg `x`, by exhaustive search.
///
/// Scans `y` from 1 to `(x^2 - 1)/2`; the bound is complete because
/// `(z - y)(z + y) = x^2` with `z - y >= 1` forces `2y + 1 <= x^2`.
/// Output is sorted by ascending `y`.
pub fn triples_with_leg(x: u64, config: &OracleConfig) -> Result<Vec<Triple>> {
    if x == 0 {
        return Err(Error::ZeroLeg);
    }
    if x > config.sweep_limit {
        return Err(Error::SweepLimitExceeded {
            x,
            limit: config.sweep_limit,
        });
    }
    let deadline = config.time_budget.map(|budget| Instant::now() + budget);
    let x2 = (x as u128) * (x as u128);
    let mut triples = Vec::new();
    let mut y = 1u128;
    let y_max = (x2 - 1) / 2;
    while y <= y_max {
        if let Some(deadline) = deadline {
            if y.is_multiple_of(1 << 16) && Instant::now() > deadline {
                return Err(Error::TimeBudgetExceeded);
            }
        }
        if let Some(z) = exact_sqrt(x2 + y * y) {
            triples.push(Triple::new(
                BigUint::from(x),
                BigUint::from(y),
                BigUint::from(z),
            )?);
        }
        y += 1;
    }
    Ok(triples)
}

/// How a candidate went wrong: it either failed to build a triple at all,
/// or built one the exhaustive search does not contain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Spurious {
    /// The candidate produced a construction error.
    FailedCandidate { d: BigUint, error: Error },
    /// The candidate produced a triple the oracle never found.
    UnmatchedTriple { triple: Triple },
}

impl Spurious {
    /// The generator the problem is attached to.
    pub fn d(&self) -> &BigUint {
        match self {
            Spurious::FailedCandidate { d, .. } => d,
            Spurious::UnmatchedTriple { triple } => triple.d(),
        }
    }
}

/// Differences found at a single leg.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyEntry {
    pub x: u64,
    /// Triples the oracle found but the characterization missed.
    pub missing: Vec<Triple>,
    /// Candidates that errored or produced triples the oracle lacks.
    pub spurious: Vec<Spurious>,
}

/// Outcome of sweeping a leg interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    /// The enumeration rule that was checked.
    pub mode: Mode,
    /// Smallest leg covered.
    pub lo: u64,
    /// Largest leg covered.
    pub hi: u64,
    /// Per-leg differences, ascending in `x`; legs that agree exactly are
    /// not listed.
    pub entries: Vec<DiscrepancyEntry>,
    /// True iff every entry has empty missing and spurious lists, i.e.
    /// there are no entries at all.
    pub clean: bool,
}

impl DiscrepancyReport {
    /// Merges two partial sweeps of the same mode. Associative and
    /// commutative up to the ordering the result re-imposes.
    pub fn merge(mut self, mut other: DiscrepancyReport) -> Result<DiscrepancyReport> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch {
                left: self.mode,
                right: other.mode,
            });
        }
        self.entries.append(&mut other.entries);
        self.entries.sort_by_key(|e| e.x);
        Ok(DiscrepancyReport {
            mode: self.mode,
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
            clean: self.entries.is_empty(),
            entries: self.entries,
        })
    }
}

fn check_leg(x: u64, mode: Mode, config: &OracleConfig) -> Result<Option<DiscrepancyEntry>> {
    let expected = triples_with_leg(x, config)?;
    let produced = chatetus::triples_with_leg(&BigUint::from(x), mode)?;

    let produced_set: BTreeSet<&Triple> = produced.triples.iter().collect();
    let expected_set: BTreeSet<&Triple> = expected.iter().collect();

    let missing: Vec<Triple> = expected
        .iter()
        .filter(|t| !produced_set.contains(*t))
        .cloned()
        .collect();
    let mut spurious: Vec<Spurious> = produced
        .failures
        .into_iter()
        .map(|f| Spurious::FailedCandidate {
            d: f.d,
            error: f.error,
        })
        .collect();
    spurious.extend(
        produced
            .triples
            .iter()
            .filter(|t| !expected_set.contains(*t))
            .map(|t| Spurious::UnmatchedTriple { triple: t.clone() }),
    );
    spurious.sort_by(|a, b| a.d().cmp(b.d()));

    if missing.is_empty() && spurious.is_empty() {
        Ok(None)
    } else {
        Ok(Some(DiscrepancyEntry {
            x,
            missing,
            spurious,
        }))
    }
}

/// Cross-checks the divisor-based enumeration against the exhaustive
/// search for every leg in `lo..=hi`.
///
/// Problems are data, not errors: the result lists them per leg. Legs are
/// checked in parallel and merged in ascending order, so the report is
/// deterministic regardless of scheduling.
pub fn cross_check(lo: u64, hi: u64, mode: Mode, config: &OracleConfig) -> Result<DiscrepancyReport> {
    if lo > hi {
        return Err(Error::EmptyRange);
    }
    cross_check_legs(lo..=hi, mode, config)
}

/// [`cross_check`] over an arbitrary collection of legs, e.g. only the odd
/// ones, or a sampled set above the exhaustive range.
pub fn cross_check_legs<I>(legs: I, mode: Mode, config: &OracleConfig) -> Result<DiscrepancyReport>
where
    I: IntoIterator<Item = u64>,
{
    let legs: Vec<u64> = legs.into_iter().collect();
    if legs.is_empty() {
        return Err(Error::EmptyRange);
    }
    let checked: Vec<Option<DiscrepancyEntry>> = legs
        .par_iter()
        .map(|&x| check_leg(x, mode, config))
        .collect::<Result<_>>()?;
    let mut entries: Vec<DiscrepancyEntry> = checked.into_iter().flatten().collect();
    entries.sort_by_key(|e| e.x);
    Ok(DiscrepancyReport {
        mode,
        lo: *legs.iter().min().expect("nonempty"),
        hi: *legs.iter().max().expect("nonempty"),
        clean: entries.is_empty(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chatetus::Interpretation;
    use num_traits::ToPrimitive;

    fn pairs(triples: &[Triple]) -> Vec<(u64, u64)> {
        triples
            .iter()
            .map(|t| (t.y().to_u64().unwrap(), t.z().to_u64().unwrap()))
            .collect()
    }

    #[test]
    fn search_examples() {
        let config = OracleConfig::default();
        assert_eq!(pairs(&triples_with_leg(6, &config).unwrap()), vec![(8, 10)]);
        assert_eq!(pairs(&triples_with_leg(1, &config).unwrap()), vec![]);
        assert_eq!(
            pairs(&triples_with_leg(20, &config).unwrap()),
            vec![(15, 25), (21, 29), (48, 52), (99, 101)]
        );
    }

    #[test]
    fn search_rejects_out_of_bounds_legs() {
        let config = OracleConfig {
            sweep_limit: 100,
            time_budget: None,
        };
        assert_eq!(triples_with_leg(0, &config), Err(Error::ZeroLeg));
        assert_eq!(
            triples_with_leg(101, &config),
            Err(Error::SweepLimitExceeded { x: 101, limit: 100 })
        );
    }

    #[test]
    fn search_honors_time_budget() {
        let config = OracleConfig {
            sweep_limit: 100_000,
            time_budget: Some(Duration::ZERO),
        };
        assert_eq!(triples_with_leg(10_000, &config), Err(Error::TimeBudgetExceeded));
    }

    #[test]
    fn cross_check_corrected_is_clean_on_small_range() {
        let report = cross_check(1, 100, Mode::Corrected, &OracleConfig::default()).unwrap();
        assert!(report.clean, "unexpected entries: {:?}", report.entries);
        assert!(report.entries.is_empty());
    }

    #[test]
    fn cross_check_flags_the_missing_even_leg_triple() {
        for interpretation in [Interpretation::OddL, Interpretation::AnyL] {
            let report = cross_check(
                6,
                6,
                Mode::PaperStrict(interpretation),
                &OracleConfig::default(),
            )
            .unwrap();
            assert!(!report.clean);
            assert_eq!(report.entries.len(), 1);
            let entry = &report.entries[0];
            assert_eq!(entry.x, 6);
            assert_eq!(pairs(&entry.missing), vec![(8, 10)]);
            assert!(entry.spurious.is_empty());
        }
    }

    #[test]
    fn cross_check_rejects_empty_ranges() {
        let config = OracleConfig::default();
        assert_eq!(
            cross_check(10, 9, Mode::Corrected, &config),
            Err(Error::EmptyRange)
        );
        assert_eq!(
            cross_check_legs(std::iter::empty(), Mode::Corrected, &config),
            Err(Error::EmptyRange)
        );
    }

    #[test]
    fn merge_rejects_mode_mismatch() {
        let config = OracleConfig::default();
        let a = cross_check(1, 5, Mode::Corrected, &config).unwrap();
        let b = cross_check(6, 6, Mode::PaperStrict(Interpretation::OddL), &config).unwrap();
        assert!(matches!(a.merge(b), Err(Error::ModeMismatch { .. })));
    }

    #[test]
    fn merge_is_order_independent() {
        let config = OracleConfig::default();
        let mode = Mode::PaperStrict(Interpretation::OddL);
        let whole = cross_check(1, 30, mode, &config).unwrap();
        let left = cross_check(1, 15, mode, &config).unwrap();
        let right = cross_check(16, 30, mode, &config).unwrap();
        assert_eq!(right.clone().merge(left.clone()).unwrap(), whole);
        assert_eq!(left.merge(right).unwrap(), whole);
    }
}
