//! Shared inputs for the benchmark suite.

use num_bigint::BigUint;

/// 720720 = 2^4 * 3^2 * 5 * 7 * 11 * 13; its square has 3645 divisors, so
/// it stresses divisor enumeration and candidate filtering.
pub const HIGHLY_COMPOSITE_LEG: u64 = 720_720;

/// Product of two primes just above 10^6, out of reach of the default
/// trial-division bound; exercises the rho fallback.
pub fn semiprime() -> BigUint {
    BigUint::from(1_000_003u64) * BigUint::from(1_000_033u64)
}

/// A 92-bit product of two Mersenne primes; exercises the big-integer rho
/// path.
pub fn wide_semiprime() -> BigUint {
    BigUint::from(2_147_483_647u64) * BigUint::from(2_305_843_009_213_693_951u64)
}
