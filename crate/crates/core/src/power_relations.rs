//! Exact identities between the `d = 1` triple on an odd leg `x` and the
//! `d = 1` triple on the leg `x^m`.
//!
//! For odd `x >= 3` the generator `d = 1` produces
//! `(x, (x^2-1)/2, (x^2+1)/2)`, and raising the leg to any power `m` keeps
//! `z' - y' = 1`. The primed pair can be computed four independent ways:
//!
//! * `direct`: `y' = (x^{2m} - 1)/2`, `z' = y' + 1`;
//! * `eq2.1`: `y' = y * (1 + x^2 + x^4 + ... + x^{2(m-1)})`;
//! * `eq2.2-2.3`: `z * (x^{2(m-1)} - x^{2(m-2)} + ... ± 1)` gives `y'` for
//!   even `m` and `z'` for odd `m`, the other member differing by 1;
//! * `equivalent`: `z' = z + y * (x^2 + ... + x^{2(m-1)})`.
//!
//! [`relate`] runs all four and checks exact agreement. The bracketed sums
//! are accumulated Horner-style, never derived from `x^{2m}` by division,
//! so the paths stay genuinely independent.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::chatetus::Triple;
use crate::error::{Error, Result};

/// The four computation routes of [`relate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationPath {
    /// Power formula evaluated directly on `x^m`.
    Direct,
    /// `y` times the geometric factor.
    GeometricFromY,
    /// `z` times the alternating factor, routed by the parity of `m`.
    AlternatingFromZ,
    /// Base `z` shifted by `y` times the tail of the geometric factor.
    SumShift,
}

impl RelationPath {
    pub const ALL: [RelationPath; 4] = [
        RelationPath::Direct,
        RelationPath::GeometricFromY,
        RelationPath::AlternatingFromZ,
        RelationPath::SumShift,
    ];

    /// Stable label used in reports and serialized output.
    pub fn label(self) -> &'static str {
        match self {
            RelationPath::Direct => "direct",
            RelationPath::GeometricFromY => "eq2.1",
            RelationPath::AlternatingFromZ => "eq2.2-2.3",
            RelationPath::SumShift => "equivalent",
        }
    }
}

impl fmt::Display for RelationPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome of relating the triple on leg `x` to the triple on leg `x^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerRelationReport {
    pub x: BigUint,
    pub m: u64,
    /// The `d = 1` triple on leg `x`.
    pub base: Triple,
    /// `1 + x^2 + x^4 + ... + x^{2(m-1)}`.
    pub geometric_factor: BigUint,
    /// `x^{2(m-1)} - x^{2(m-2)} + ... + (-1)^{m-1}`, computed signed.
    pub alternating_factor: BigInt,
    pub y_prime: BigUint,
    pub z_prime: BigUint,
    /// `(y', z')` per route, in [`RelationPath::ALL`] order.
    pub paths: Vec<(RelationPath, (BigUint, BigUint))>,
    /// Whether every route produced identical values.
    pub agreed: bool,
}

fn require_odd_base(x: &BigUint) -> Result<()> {
    if !x.bit(0) || *x < BigUint::from(3u32) {
        return Err(Error::OddLegRequired { x: x.clone() });
    }
    Ok(())
}

fn require_exponent(m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroExponent);
    }
    Ok(())
}

/// The `d = 1` triple on an odd leg `x >= 3`:
/// `(x, (x^2 - 1)/2, (x^2 + 1)/2)`. Always primitive.
pub fn base_triple(x: &BigUint) -> Result<Triple> {
    require_odd_base(x)?;
    let x2 = x * x;
    let y = (&x2 - 1u32) >> 1;
    let z = (&x2 + 1u32) >> 1;
    Triple::new(x.clone(), y, z)
}

/// The `d = 1` triple on leg `x^m`:
/// `(x^m, (x^{2m} - 1)/2, (x^{2m} + 1)/2)`. This is the `direct` route.
pub fn power_triple(x: &BigUint, m: u64) -> Result<Triple> {
    require_odd_base(x)?;
    require_exponent(m)?;
    let xm = pow(x, m);
    let x2m = &xm * &xm;
    let y = (&x2m - 1u32) >> 1;
    let z = (&x2m + 1u32) >> 1;
    Triple::new(xm, y, z)
}

/// `1 + x^2 + x^4 + ... + x^{2(m-1)}`, by Horner accumulation.
/// The empty sum at `m = 1` gives 1.
pub fn geometric_factor(x: &BigUint, m: u64) -> Result<BigUint> {
    require_odd_base(x)?;
    require_exponent(m)?;
    let x2 = x * x;
    let mut acc = BigUint::one();
    for _ in 1..m {
        acc = acc * &x2 + 1u32;
    }
    Ok(acc)
}

/// `x^{2(m-1)} - x^{2(m-2)} + ... + (-1)^{m-1}`, by signed Horner
/// accumulation. Positive for every odd `x >= 3`, but computed signed.
pub fn alternating_factor(x: &BigUint, m: u64) -> Result<BigInt> {
    require_odd_base(x)?;
    require_exponent(m)?;
    let x2 = BigInt::from(x * x);
    let mut acc = BigInt::one();
    let mut sign = -1i32;
    for _ in 1..m {
        acc = acc * &x2 + sign;
        sign = -sign;
    }
    Ok(acc)
}

fn pow(x: &BigUint, m: u64) -> BigUint {
    use num_traits::Pow;
    Pow::pow(x, m)
}

/// Computes `(y', z')` for the pair `(x, m)` along all four routes and
/// checks exact agreement.
pub fn relate(x: &BigUint, m: u64) -> Result<PowerRelationReport> {
    let base = base_triple(x)?;
    let direct = power_triple(x, m)?;
    let geometric = geometric_factor(x, m)?;
    let alternating = alternating_factor(x, m)?;

    let direct_pair = (direct.y().clone(), direct.z().clone());

    let y_geo = base.y() * &geometric;
    let z_geo = &y_geo + 1u32;
    let geometric_pair = (y_geo, z_geo);

    let routed = (BigInt::from(base.z().clone()) * &alternating)
        .to_biguint()
        .expect("alternating route is positive for x >= 3");
    let alternating_pair = if m.is_multiple_of(2) {
        let z = &routed + 1u32;
        (routed, z)
    } else {
        let y = &routed - 1u32;
        (y, routed)
    };

    let tail = base.y() * (&geometric - 1u32); // y * (x^2 + ... + x^{2(m-1)})
    let z_shift = base.z() + &tail;
    let y_shift = &z_shift - 1u32;
    let shift_pair = (y_shift, z_shift);

    let paths = vec![
        (RelationPath::Direct, direct_pair.clone()),
        (RelationPath::GeometricFromY, geometric_pair),
        (RelationPath::AlternatingFromZ, alternating_pair),
        (RelationPath::SumShift, shift_pair),
    ];
    let agreed = paths.iter().all(|(_, pair)| *pair == direct_pair);

    Ok(PowerRelationReport {
        x: x.clone(),
        m,
        base,
        geometric_factor: geometric,
        alternating_factor: alternating,
        y_prime: direct_pair.0,
        z_prime: direct_pair.1,
        paths,
        agreed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn base_triple_examples() {
        let t = base_triple(&big(3)).unwrap();
        assert_eq!((t.y(), t.z()), (&big(4), &big(5)));
        let t = base_triple(&big(5)).unwrap();
        assert_eq!((t.y(), t.z()), (&big(12), &big(13)));
        let t = base_triple(&big(7)).unwrap();
        assert_eq!((t.y(), t.z()), (&big(24), &big(25)));
        assert!(t.is_primitive());
    }

    #[test]
    fn base_triple_rejects_bad_legs() {
        assert_eq!(base_triple(&big(4)), Err(Error::OddLegRequired { x: big(4) }));
        assert_eq!(base_triple(&big(1)), Err(Error::OddLegRequired { x: big(1) }));
    }

    #[test]
    fn power_triple_examples() {
        let t = power_triple(&big(3), 2).unwrap();
        assert_eq!((t.x(), t.y(), t.z()), (&big(9), &big(40), &big(41)));
        let t = power_triple(&big(3), 1).unwrap();
        assert_eq!((t.x(), t.y(), t.z()), (&big(3), &big(4), &big(5)));
        let t = power_triple(&big(3), 6).unwrap();
        assert_eq!((t.x(), t.y(), t.z()), (&big(729), &big(265_720), &big(265_721)));
        assert_eq!(power_triple(&big(3), 0), Err(Error::ZeroExponent));
    }

    #[test]
    fn geometric_factor_examples() {
        assert_eq!(geometric_factor(&big(3), 2).unwrap(), big(10));
        assert_eq!(geometric_factor(&big(3), 4).unwrap(), big(820));
        assert_eq!(geometric_factor(&big(3), 1).unwrap(), big(1));
        assert_eq!(geometric_factor(&big(11), 1).unwrap(), big(1));
    }

    #[test]
    fn alternating_factor_examples() {
        assert_eq!(alternating_factor(&big(3), 2).unwrap(), BigInt::from(8));
        assert_eq!(alternating_factor(&big(3), 3).unwrap(), BigInt::from(73));
        assert_eq!(alternating_factor(&big(3), 1).unwrap(), BigInt::from(1));
        assert_eq!(alternating_factor(&big(11), 1).unwrap(), BigInt::from(1));
    }

    #[test]
    fn relate_examples() {
        let r = relate(&big(3), 2).unwrap();
        assert_eq!((r.y_prime.to_u64(), r.z_prime.to_u64()), (Some(40), Some(41)));
        assert!(r.agreed);

        let r = relate(&big(3), 5).unwrap();
        assert_eq!((r.y_prime.to_u64(), r.z_prime.to_u64()), (Some(29_524), Some(29_525)));
        assert!(r.agreed);

        let r = relate(&big(3), 1).unwrap();
        assert_eq!((r.y_prime.to_u64(), r.z_prime.to_u64()), (Some(4), Some(5)));
        assert!(r.agreed);
        for (_, pair) in &r.paths {
            assert_eq!(pair, &(big(4), big(5)));
        }

        let r = relate(&big(5), 3).unwrap();
        assert_eq!((r.y_prime.to_u64(), r.z_prime.to_u64()), (Some(7_812), Some(7_813)));
        assert!(r.agreed);
    }

    #[test]
    fn relate_rejects_bad_input() {
        assert_eq!(relate(&big(4), 2), Err(Error::OddLegRequired { x: big(4) }));
        assert_eq!(relate(&big(1), 2), Err(Error::OddLegRequired { x: big(1) }));
        assert_eq!(relate(&big(3), 0), Err(Error::ZeroExponent));
    }

    #[test]
    fn report_paths_are_labeled_and_complete() {
        let r = relate(&big(7), 4).unwrap();
        let labels: Vec<&str> = r.paths.iter().map(|(p, _)| p.label()).collect();
        assert_eq!(labels, vec!["direct", "eq2.1", "eq2.2-2.3", "equivalent"]);
        assert_eq!(r.paths.len(), RelationPath::ALL.len());
    }
}
