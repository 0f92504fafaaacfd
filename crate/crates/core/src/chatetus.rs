//! Enumeration of every Pythagorean triple sharing a prescribed leg.
//!
//! A triple with leg `x` is reconstructed from a generator `d = z - y`
//! through
//!
//! ```text
//! y = x^2/(2d) - d/2,    z = x^2/(2d) + d/2,
//! ```
//!
//! so enumerating triples reduces to enumerating admissible `d` among the
//! divisors of `x^2`. Two candidate sets are supported:
//!
//! * [`Mode::Corrected`] keeps exactly the divisors for which the formulas
//!   above produce positive integers: `d | x^2`, `d < x`, and `x^2/d ≡ d
//!   (mod 2)`. This is complete and sound for every leg.
//! * [`Mode::PaperStrict`] reproduces a published divisor-set rule verbatim
//!   so that its gaps can be measured: all `d <= x` dividing `x^2` for odd
//!   legs, intersected with an auxiliary power-of-two set for even legs.
//!   The rule under-enumerates some even legs and admits degenerate or
//!   non-integral candidates; those failures are collected, not thrown.
//!
//! The published rule leaves one point open for even legs: whether the `l`
//! in `d = 2^s * l` ranges over all divisors of `x^2` or only the odd ones.
//! Both readings are implemented behind [`Interpretation`].

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factorization::{divisors, factorize};

/// How the `l` part of the even-leg set `{2^s * l}` is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Interpretation {
    /// `l` ranges over odd divisors of `x^2` only.
    OddL,
    /// `l` ranges over all divisors of `x^2`.
    AnyL,
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Interpretation::OddL => write!(f, "odd-l"),
            Interpretation::AnyL => write!(f, "any-l"),
        }
    }
}

/// Candidate-set construction rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Exact integrality and positivity conditions; complete and sound.
    Corrected,
    /// The divisor-set rule exactly as published, under the given reading
    /// of the even-leg set.
    PaperStrict(Interpretation),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Corrected => write!(f, "corrected"),
            Mode::PaperStrict(i) => write!(f, "paper-strict({i})"),
        }
    }
}

/// One Pythagorean triple `(x, y, z)` with its generator `d = z - y`.
///
/// Construction checks `x^2 + y^2 = z^2` exactly; a value of this type is
/// always a genuine triple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    x: BigUint,
    y: BigUint,
    z: BigUint,
    d: BigUint,
    primitive: bool,
}

impl Triple {
    /// Validates the Pythagorean identity and derives `d` and primitivity.
    pub fn new(x: BigUint, y: BigUint, z: BigUint) -> Result<Self> {
        let not_pythagorean = |x: &BigUint, y: &BigUint, z: &BigUint| Error::NotPythagorean {
            x: x.clone(),
            y: y.clone(),
            z: z.clone(),
        };
        if x.is_zero() || y.is_zero() || z < y {
            return Err(not_pythagorean(&x, &y, &z));
        }
        if &x * &x + &y * &y != &z * &z {
            return Err(not_pythagorean(&x, &y, &z));
        }
        let d = &z - &y;
        let primitive = x.gcd(&y).is_one();
        Ok(Self {
            x,
            y,
            z,
            d,
            primitive,
        })
    }

    /// The prescribed leg.
    pub fn x(&self) -> &BigUint {
        &self.x
    }

    /// The other leg.
    pub fn y(&self) -> &BigUint {
        &self.y
    }

    /// The hypotenuse.
    pub fn z(&self) -> &BigUint {
        &self.z
    }

    /// The generator `d = z - y`.
    pub fn d(&self) -> &BigUint {
        &self.d
    }

    /// Whether `gcd(x, y) = 1` (equivalently, all three members coprime).
    pub fn is_primitive(&self) -> bool {
        self.primitive
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Admissible generators for a leg, under a given mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    /// The leg the candidates belong to.
    pub x: BigUint,
    /// The rule that produced the set.
    pub mode: Mode,
    /// Strictly increasing candidate generators; every one divides `x^2`.
    pub ds: Vec<BigUint>,
}

/// Divisors of `x^2` not exceeding `x`, strictly increasing.
pub fn divisor_set(x: &BigUint) -> Result<Vec<BigUint>> {
    if x.is_zero() {
        return Err(Error::ZeroLeg);
    }
    Ok(divisors(&factorize(x)?.square())
        .into_iter()
        .filter(|d| d <= x)
        .collect())
}

/// The raw even-leg auxiliary set: all `2^s * l` with `s` in `1..v2(x)` and
/// `l` a divisor of `x^2` (odd divisors only under [`Interpretation::OddL`]).
/// Empty whenever `v2(x) = 1`, because the index range is empty.
pub fn paper_set(x: &BigUint, interpretation: Interpretation) -> Result<Vec<BigUint>> {
    if x.is_zero() {
        return Err(Error::ZeroLeg);
    }
    if x.bit(0) {
        return Err(Error::EvenLegRequired { x: x.clone() });
    }
    let n = x.trailing_zeros().expect("x > 0");
    let divs = divisors(&factorize(x)?.square());
    let mut set = BTreeSet::new();
    for s in 1..n {
        for l in &divs {
            if interpretation == Interpretation::OddL && !l.bit(0) {
                continue;
            }
            set.insert(l << s);
        }
    }
    Ok(set.into_iter().collect())
}

/// Membership test equivalent to `d ∈ paper_set(x, ..)`, without
/// materializing the raw set.
fn in_paper_set(d: &BigUint, x2: &BigUint, n: u64, interpretation: Interpretation) -> bool {
    let v = match d.trailing_zeros() {
        Some(v) => v,
        None => return false, // d = 0 never divides
    };
    if v == 0 {
        return false; // odd d cannot be written as 2^s * l with s >= 1
    }
    match interpretation {
        Interpretation::OddL => v <= n.saturating_sub(1) && (x2 % (d >> v)).is_zero(),
        Interpretation::AnyL => {
            (1..=v.min(n.saturating_sub(1))).any(|s| (x2 % (d >> s)).is_zero())
        }
    }
}

/// Builds the candidate generator set for `x` under the given mode.
pub fn candidate_set(x: &BigUint, mode: Mode) -> Result<CandidateSet> {
    if x.is_zero() {
        return Err(Error::ZeroLeg);
    }
    let square_divs = divisors(&factorize(x)?.square());
    let x2 = x * x;
    let ds: Vec<BigUint> = match mode {
        Mode::Corrected => square_divs
            .into_iter()
            .filter(|d| d < x && (&x2 / d).bit(0) == d.bit(0))
            .collect(),
        Mode::PaperStrict(_) if x.bit(0) => {
            square_divs.into_iter().filter(|d| d <= x).collect()
        }
        Mode::PaperStrict(interpretation) => {
            let n = x.trailing_zeros().expect("x > 0 and even");
            square_divs
                .into_iter()
                .filter(|d| d <= x && in_paper_set(d, &x2, n, interpretation))
                .collect()
        }
    };
    Ok(CandidateSet {
        x: x.clone(),
        mode,
        ds,
    })
}

/// Reconstructs the triple with leg `x` and generator `d`.
///
/// Fails with [`Error::DegenerateTriple`] when `d >= x` (the short leg
/// would drop to zero or below) and with [`Error::NonIntegerResult`] when
/// `d` does not divide `x^2` or `x^2/d` and `d` differ in parity (the
/// formulas would produce half-integers).
pub fn triple_from_leg(x: &BigUint, d: &BigUint) -> Result<Triple> {
    if x.is_zero() {
        return Err(Error::ZeroLeg);
    }
    let non_integer = || Error::NonIntegerResult {
        x: x.clone(),
        d: d.clone(),
    };
    if d.is_zero() {
        return Err(non_integer());
    }
    if d >= x {
        return Err(Error::DegenerateTriple {
            x: x.clone(),
            d: d.clone(),
        });
    }
    let x2 = x * x;
    let (q, r) = x2.div_rem(d);
    if !r.is_zero() || q.bit(0) != d.bit(0) {
        return Err(non_integer());
    }
    let y = (&q - d) >> 1;
    let z = (&q + d) >> 1;
    Triple::new(x.clone(), y, z)
}

/// A candidate that failed to produce a triple, kept for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateFailure {
    pub d: BigUint,
    pub error: Error,
}

/// All triples with leg `x` under a mode, plus the candidates that failed.
///
/// Triples are strictly increasing in `y`. In corrected mode the failure
/// list is always empty; in paper-strict mode it records the degenerate and
/// non-integral candidates the published rule admits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegTriples {
    pub x: BigUint,
    pub mode: Mode,
    pub triples: Vec<Triple>,
    pub failures: Vec<CandidateFailure>,
}

/// Enumerates every triple with leg `x` under the given mode.
pub fn triples_with_leg(x: &BigUint, mode: Mode) -> Result<LegTriples> {
    let candidates = candidate_set(x, mode)?;
    let mut triples = Vec::new();
    let mut failures = Vec::new();
    for d in &candidates.ds {
        match triple_from_leg(x, d) {
            Ok(t) => triples.push(t),
            Err(error) => failures.push(CandidateFailure {
                d: d.clone(),
                error,
            }),
        }
    }
    // y is strictly decreasing in d, so reversing the (ascending-d) walk
    // sorts by ascending y.
    triples.reverse();
    debug_assert!(triples.windows(2).all(|w| w[0].y() < w[1].y()));
    Ok(LegTriples {
        x: x.clone(),
        mode,
        triples,
        failures,
    })
}
