//! Property tests for the structural invariants of the crate.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, ToPrimitive, Zero};
use proptest::prelude::*;

use tripleforge::chatetus::{self, Interpretation, Mode};
use tripleforge::factorization::{self, divisors, factorize, integer_sqrt, integer_sqrt_u128};
use tripleforge::oracle::{self, OracleConfig};
use tripleforge::power_relations::{alternating_factor, geometric_factor, relate};

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

proptest! {
    #[test]
    fn factorize_reconstructs_its_input(n in 1u64..=1_000_000_000_000) {
        let f = factorize(&big(n)).unwrap();
        let product = f
            .factors()
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        prop_assert_eq!(product, big(n));
        for (p, _) in f.factors() {
            prop_assert!(factorization::is_prime(p));
        }
    }

    #[test]
    fn divisors_are_sorted_unique_and_divide(n in 1u64..=5_000_000) {
        let f = factorize(&big(n)).unwrap();
        let divs = divisors(&f);
        prop_assert_eq!(divs.len() as u128, f.divisor_count());
        prop_assert!(divs.windows(2).all(|w| w[0] < w[1]));
        for d in &divs {
            prop_assert!((big(n) % d).is_zero());
        }
    }

    #[test]
    fn two_adic_valuation_is_maximal(n in 1u64..=u64::MAX) {
        let t = factorization::two_adic(&big(n)).unwrap();
        prop_assert_eq!(t.k() << t.s(), big(n));
        prop_assert!(t.k().bit(0));
    }

    #[test]
    fn integer_sqrt_is_the_floor_root(hi in 0u64.., lo in 0u64..) {
        let n = (BigUint::from(hi) << 64) | BigUint::from(lo);
        let (r, exact) = integer_sqrt(&n);
        prop_assert!(&r * &r <= n);
        prop_assert!((&r + 1u32) * (&r + 1u32) > n);
        prop_assert_eq!(exact, &r * &r == n);
    }

    #[test]
    fn integer_sqrt_u128_matches_the_big_version(n in 0u128..) {
        let (r, exact) = integer_sqrt_u128(n);
        let (big_r, big_exact) = integer_sqrt(&BigUint::from(n));
        prop_assert_eq!(BigUint::from(r), big_r);
        prop_assert_eq!(exact, big_exact);
    }

    #[test]
    fn candidates_give_strictly_increasing_y(x in 1u64..=5_000, strict in any::<bool>()) {
        let mode = if strict {
            Mode::PaperStrict(Interpretation::OddL)
        } else {
            Mode::Corrected
        };
        let legs = chatetus::triples_with_leg(&big(x), mode).unwrap();
        prop_assert!(legs.triples.windows(2).all(|w| w[0].y() < w[1].y()));
        // Distinct candidates give distinct triples.
        let ds: std::collections::BTreeSet<_> = legs.triples.iter().map(|t| t.d()).collect();
        prop_assert_eq!(ds.len(), legs.triples.len());
    }

    #[test]
    fn corrected_mode_never_records_failures(x in 1u64..=5_000) {
        let legs = chatetus::triples_with_leg(&big(x), Mode::Corrected).unwrap();
        prop_assert!(legs.failures.is_empty());
        for t in &legs.triples {
            prop_assert_eq!(t.x() * t.x() + t.y() * t.y(), t.z() * t.z());
        }
    }

    #[test]
    fn corrected_candidates_for_odd_legs_are_the_small_odd_divisors(k in 1u64..=2_500) {
        let x = 2 * k + 1;
        let expected: Vec<BigUint> = divisors(&factorize(&big(x)).unwrap().square())
            .into_iter()
            .filter(|d| d.bit(0) && *d < big(x))
            .collect();
        let cs = chatetus::candidate_set(&big(x), Mode::Corrected).unwrap();
        prop_assert_eq!(cs.ds, expected);
    }

    #[test]
    fn corrected_candidates_for_even_legs_sit_in_the_valuation_window(k in 1u64..=2_500) {
        let x = 2 * k;
        let v2 = big(x).trailing_zeros().unwrap();
        let expected: Vec<BigUint> = divisors(&factorize(&big(x)).unwrap().square())
            .into_iter()
            .filter(|d| {
                let v = d.trailing_zeros().unwrap_or(0);
                *d < big(x) && v >= 1 && v < 2 * v2
            })
            .collect();
        let cs = chatetus::candidate_set(&big(x), Mode::Corrected).unwrap();
        prop_assert_eq!(cs.ds, expected);
    }

    #[test]
    fn paper_strict_even_candidates_equal_the_materialized_intersection(k in 1u64..=500, odd_l in any::<bool>()) {
        let x = 2 * k;
        let interpretation = if odd_l { Interpretation::OddL } else { Interpretation::AnyL };
        let d_set = chatetus::divisor_set(&big(x)).unwrap();
        let p_set: std::collections::BTreeSet<BigUint> =
            chatetus::paper_set(&big(x), interpretation).unwrap().into_iter().collect();
        let expected: Vec<BigUint> = d_set.into_iter().filter(|d| p_set.contains(d)).collect();
        let cs = chatetus::candidate_set(&big(x), Mode::PaperStrict(interpretation)).unwrap();
        prop_assert_eq!(cs.ds, expected);
    }

    #[test]
    fn corrected_enumeration_matches_the_oracle(x in 1u64..=200) {
        let legs = chatetus::triples_with_leg(&big(x), Mode::Corrected).unwrap();
        let expected = oracle::triples_with_leg(x, &OracleConfig::default()).unwrap();
        prop_assert_eq!(legs.triples, expected);
    }

    #[test]
    fn oracle_agrees_with_the_odd_divisor_route(k in 1u64..=150) {
        // Independent algebraic route for odd legs: one triple per odd
        // divisor of x^2 below x.
        let x = 2 * k + 1;
        let algebraic: Vec<_> = divisors(&factorize(&big(x)).unwrap().square())
            .into_iter()
            .filter(|d| d.bit(0) && *d < big(x))
            .rev()
            .map(|d| chatetus::triple_from_leg(&big(x), &d).unwrap())
            .collect();
        let searched = oracle::triples_with_leg(x, &OracleConfig::default()).unwrap();
        prop_assert_eq!(algebraic, searched);
    }

    #[test]
    fn relate_paths_agree_for_random_pairs(i in 1u64..=100, m in 1u64..=16) {
        let x = 2 * i + 1;
        let report = relate(&big(x), m).unwrap();
        prop_assert!(report.agreed);
        prop_assert_eq!(&report.z_prime - &report.y_prime, BigUint::one());
        let xm = big(x).pow(m);
        prop_assert_eq!(
            &xm * &xm + &report.y_prime * &report.y_prime,
            &report.z_prime * &report.z_prime
        );
    }

    #[test]
    fn factor_telescoping_identities(i in 1u64..=100, m in 1u64..=16) {
        let x = 2 * i + 1;
        let x2m = BigInt::from(big(x).pow(2 * m));
        let g = BigInt::from(geometric_factor(&big(x), m).unwrap());
        let a = alternating_factor(&big(x), m).unwrap();
        let x2 = BigInt::from(big(x) * big(x));
        prop_assert_eq!(&g * (&x2 - 1), &x2m - 1);
        let expected = if m % 2 == 1 { &x2m + 1 } else { &x2m - 1 };
        prop_assert_eq!(&a * (&x2 + 1), expected);
    }

    #[test]
    fn unit_generator_triples_are_primitive(i in 1u64..=5_000) {
        let x = 2 * i + 1;
        let t = chatetus::triple_from_leg(&big(x), &BigUint::one()).unwrap();
        prop_assert!(t.is_primitive());
        prop_assert_eq!(t.d(), &BigUint::one());
    }
}

#[test]
fn report_primitivity_matches_a_direct_gcd() {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b > 0 {
            a %= b;
            std::mem::swap(&mut a, &mut b);
        }
        a
    }
    for x in 1u64..=300 {
        let legs = chatetus::triples_with_leg(&big(x), Mode::Corrected).unwrap();
        for t in &legs.triples {
            let y = t.y().to_u64().unwrap();
            assert_eq!(t.is_primitive(), gcd(x, y) == 1, "x={x} y={y}");
        }
    }
}
