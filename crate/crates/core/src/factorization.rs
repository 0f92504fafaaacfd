//! Exact integer arithmetic support: prime factorization, divisor
//! enumeration, 2-adic decomposition and integer square roots over
//! arbitrary-precision nonnegative integers.
//!
//! No floating point anywhere, including square-root initial guesses.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Complete prime factorization of a positive integer.
///
/// Primes are strictly increasing, exponents are >= 1, and the product of
/// `prime^exponent` reconstructs the value exactly. `1` is represented by an
/// empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: BigUint,
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    /// Builds a factorization from raw `(prime, exponent)` pairs, checking
    /// every invariant: ordering, exponent positivity and primality.
    pub fn new(factors: Vec<(BigUint, u32)>) -> Result<Self> {
        let mut n = BigUint::one();
        for (i, (p, e)) in factors.iter().enumerate() {
            if *e == 0 {
                return Err(Error::InvalidFactorization {
                    reason: format!("exponent 0 on prime {p}"),
                });
            }
            if i > 0 && factors[i - 1].0 >= *p {
                return Err(Error::InvalidFactorization {
                    reason: "primes not strictly increasing".into(),
                });
            }
            if !is_prime(p) {
                return Err(Error::InvalidFactorization {
                    reason: format!("{p} is not prime"),
                });
            }
            n *= p.pow(*e);
        }
        Ok(Self { n, factors })
    }

    /// The factored value.
    pub fn n(&self) -> &BigUint {
        &self.n
    }

    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    /// Factorization of `n^2`, obtained by doubling every exponent. This is
    /// how divisors of a squared leg are enumerated: the square itself is
    /// never factored.
    pub fn square(&self) -> Factorization {
        Factorization {
            n: &self.n * &self.n,
            factors: self
                .factors
                .iter()
                .map(|(p, e)| (p.clone(), e * 2))
                .collect(),
        }
    }

    /// Number of divisors: the product of `exponent + 1`.
    pub fn divisor_count(&self) -> u128 {
        self.factors.iter().map(|(_, e)| *e as u128 + 1).product()
    }
}

/// Tuning knobs for [`factorize_with`].
#[derive(Debug, Clone)]
pub struct FactorizeConfig {
    /// Largest candidate tried by trial division.
    pub trial_bound: u64,
    /// Fall back to Pollard rho (Brent variant) for cofactors trial division
    /// cannot finish. When off, such inputs fail with
    /// [`Error::IncompleteFactorization`].
    pub pollard_rho: bool,
}

impl Default for FactorizeConfig {
    fn default() -> Self {
        Self {
            trial_bound: 1 << 16,
            pollard_rho: true,
        }
    }
}

/// Factors `n >= 1` completely with the default configuration.
pub fn factorize(n: &BigUint) -> Result<Factorization> {
    factorize_with(n, &FactorizeConfig::default())
}

/// Factors `n >= 1` completely. Deterministic: equal inputs produce equal
/// factor lists, including the rho fallback, which escalates a fixed
/// parameter sequence instead of drawing random ones.
pub fn factorize_with(n: &BigUint, config: &FactorizeConfig) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::FactorizeZero);
    }
    let mut out: BTreeMap<BigUint, u32> = BTreeMap::new();
    match n.to_u64() {
        Some(small) => factor_u64(small, config, &mut out)?,
        None => factor_big(n.clone(), config, &mut out)?,
    }
    let factorization = Factorization {
        n: n.clone(),
        factors: out.into_iter().collect(),
    };
    debug_assert_eq!(
        factorization
            .factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e)),
        *n
    );
    Ok(factorization)
}

/// All divisors of the factored value, strictly increasing.
pub fn divisors(f: &Factorization) -> Vec<BigUint> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in f.factors() {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        let mut pk = BigUint::one();
        for k in 0..=*e {
            for d in &divs {
                next.push(d * &pk);
            }
            if k < *e {
                pk *= p;
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    divs
}

/// `n = 2^s * k` with `k` odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoAdic {
    n: BigUint,
    s: u64,
    k: BigUint,
}

impl TwoAdic {
    /// The decomposed value.
    pub fn n(&self) -> &BigUint {
        &self.n
    }

    /// The 2-adic valuation of `n`.
    pub fn s(&self) -> u64 {
        self.s
    }

    /// The odd part of `n`.
    pub fn k(&self) -> &BigUint {
        &self.k
    }
}

/// Splits `n >= 1` into its 2-adic valuation and odd part.
pub fn two_adic(n: &BigUint) -> Result<TwoAdic> {
    if n.is_zero() {
        return Err(Error::TwoAdicZero);
    }
    let s = n.trailing_zeros().unwrap_or(0);
    Ok(TwoAdic {
        n: n.clone(),
        s,
        k: n >> s,
    })
}

/// Floor square root plus an exactness flag.
///
/// Newton iteration on integers only. The root `r` satisfies
/// `r^2 <= n < (r+1)^2`; `exact` holds iff `r^2 == n`.
pub fn integer_sqrt(n: &BigUint) -> (BigUint, bool) {
    if n.bits() <= 1 {
        return (n.clone(), true); // 0 and 1 are their own roots
    }
    // 2^ceil(bits/2) >= sqrt(n), so the iteration descends onto the floor.
    let mut x: BigUint = BigUint::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    let exact = &x * &x == *n;
    (x, exact)
}

/// [`integer_sqrt`] specialized to `u128`, for search loops that stay within
/// fixed width.
pub fn integer_sqrt_u128(n: u128) -> (u128, bool) {
    if n < 2 {
        return (n, true);
    }
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    (x, x * x == n)
}

/// Miller-Rabin primality check.
///
/// Deterministic for inputs below 3.3 * 10^24 (first twelve prime bases);
/// larger inputs use six additional fixed bases, so the check is
/// probabilistic there, with error probability far below 2^-128.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    // n > 2^64 from here on.
    if !n.bit(0) {
        return false;
    }
    for p in MR_BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n - 1 > 0");
    let d = &n_minus_1 >> s;
    'witness: for a in MR_BASES {
        let mut v = BigUint::from(a).modpow(&d, n);
        if v == one || v == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            v = v.modpow(&BigUint::from(2u32), n);
            if v == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const MR_BASES: [u64; 18] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61];

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    // Deterministic for all u64 with these twelve bases.
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut v = powmod_u64(a, d, n);
        if v == 1 || v == n - 1 {
            continue;
        }
        for _ in 1..s {
            v = mulmod_u64(v, v, n);
            if v == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b > 0 {
        a %= b;
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn push_factor(p: u64, count: u32, out: &mut BTreeMap<BigUint, u32>) {
    *out.entry(BigUint::from(p)).or_insert(0) += count;
}

fn factor_u64(mut n: u64, config: &FactorizeConfig, out: &mut BTreeMap<BigUint, u32>) -> Result<()> {
    for p in [2u64, 3, 5] {
        let mut count = 0;
        while n.is_multiple_of(p) {
            n /= p;
            count += 1;
        }
        if count > 0 {
            push_factor(p, count, out);
        }
    }
    let mut d = 7u64;
    let mut sieved_past_sqrt = false;
    while d <= config.trial_bound {
        if d > n / d {
            sieved_past_sqrt = true;
            break;
        }
        for candidate in [d, d + 4] {
            let mut count = 0;
            while n.is_multiple_of(candidate) {
                n /= candidate;
                count += 1;
            }
            if count > 0 {
                push_factor(candidate, count, out);
            }
        }
        d += 6;
    }
    if n == 1 {
        return Ok(());
    }
    if sieved_past_sqrt || is_prime_u64(n) {
        push_factor(n, 1, out);
        return Ok(());
    }
    if !config.pollard_rho {
        return Err(Error::IncompleteFactorization {
            remaining: BigUint::from(n),
        });
    }
    split_composite_u64(n, out);
    Ok(())
}

fn split_composite_u64(n: u64, out: &mut BTreeMap<BigUint, u32>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        push_factor(n, 1, out);
        return;
    }
    let d = pollard_brent_u64(n);
    split_composite_u64(d, out);
    split_composite_u64(n / d, out);
}

/// Brent's cycle variant of Pollard rho. Expects an odd composite with no
/// factor below 7. Escalates the polynomial offset deterministically until a
/// nontrivial factor appears.
fn pollard_brent_u64(n: u64) -> u64 {
    const BATCH: u64 = 128;
    let step = |v: u64, c: u64| (mulmod_u64(v, v, n) + c) % n;
    for c in 1u64.. {
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y, c);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = step(y, c);
                    q = mulmod_u64(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // The batched product collapsed to 0; replay one step at a time.
            g = 1;
            let mut v = ys;
            while g == 1 {
                v = step(v, c);
                g = gcd_u64(n, x.abs_diff(v));
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("composite input always yields a factor")
}

fn strip_big(n: &mut BigUint, p: u64, out: &mut BTreeMap<BigUint, u32>) {
    let big_p = BigUint::from(p);
    let mut count = 0;
    while (&*n % &big_p).is_zero() {
        *n /= &big_p;
        count += 1;
    }
    if count > 0 {
        push_factor(p, count, out);
    }
}

fn factor_big(mut n: BigUint, config: &FactorizeConfig, out: &mut BTreeMap<BigUint, u32>) -> Result<()> {
    for p in [2u64, 3, 5] {
        strip_big(&mut n, p, out);
    }
    let mut d = 7u64;
    while d <= config.trial_bound {
        if let Some(small) = n.to_u64() {
            return factor_u64(small, config, out);
        }
        strip_big(&mut n, d, out);
        strip_big(&mut n, d + 4, out);
        d += 6;
    }
    if let Some(small) = n.to_u64() {
        return factor_u64(small, config, out);
    }
    if is_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return Ok(());
    }
    if !config.pollard_rho {
        return Err(Error::IncompleteFactorization { remaining: n });
    }
    split_composite_big(n, out);
    Ok(())
}

fn split_composite_big(n: BigUint, out: &mut BTreeMap<BigUint, u32>) {
    if let Some(small) = n.to_u64() {
        split_composite_u64(small, out);
        return;
    }
    if is_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_brent_big(&n);
    let q = &n / &d;
    split_composite_big(d, out);
    split_composite_big(q, out);
}

fn pollard_brent_big(n: &BigUint) -> BigUint {
    const BATCH: u64 = 64;
    let one = BigUint::one();
    for c in 1u64.. {
        let cbig = BigUint::from(c);
        let step = |v: &BigUint| (v * v + &cbig) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = one.clone();
        let mut g = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0u64;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = num_integer::Integer::gcd(&q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == *n {
            g = one.clone();
            let mut v = ys;
            while g == one {
                v = step(&v);
                let diff = if x > v { &x - &v } else { &v - &x };
                g = num_integer::Integer::gcd(&diff, n);
            }
        }
        if g != *n {
            return g;
        }
    }
    unreachable!("composite input always yields a factor")
}
