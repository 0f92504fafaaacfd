use num_bigint::BigUint;
use thiserror::Error;

use crate::chatetus::Mode;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// 0 has no prime factorization.
    #[error("0 has no prime factorization")]
    FactorizeZero,

    /// 0 has no 2-adic decomposition.
    #[error("0 cannot be written as 2^s * k with k odd")]
    TwoAdicZero,

    /// Trial division left a composite cofactor and the rho fallback is off.
    #[error("composite cofactor {remaining} left after trial division (Pollard rho disabled)")]
    IncompleteFactorization { remaining: BigUint },

    /// Raw factor data failed validation.
    #[error("invalid factorization: {reason}")]
    InvalidFactorization { reason: String },

    /// Legs are positive integers.
    #[error("leg must be >= 1")]
    ZeroLeg,

    /// The auxiliary even-leg set is only defined for even legs.
    #[error("leg {x} is odd; this set is defined for even legs only")]
    EvenLegRequired { x: BigUint },

    /// Power relations hold only for odd legs of the d = 1 family, x >= 3.
    #[error("leg {x} is not an odd integer >= 3")]
    OddLegRequired { x: BigUint },

    /// Power relations need an exponent of at least 1.
    #[error("exponent must be >= 1")]
    ZeroExponent,

    /// The generator would produce half-integers for this leg.
    #[error("candidate d={d} does not yield integer legs for x={x}")]
    NonIntegerResult { x: BigUint, d: BigUint },

    /// The generator is too large: the short leg would drop to 0 or below.
    #[error("candidate d={d} is degenerate for x={x}: it forces y <= 0")]
    DegenerateTriple { x: BigUint, d: BigUint },

    /// The three values do not satisfy the Pythagorean identity.
    #[error("({x}, {y}, {z}) is not a Pythagorean triple")]
    NotPythagorean { x: BigUint, y: BigUint, z: BigUint },

    /// Exhaustive search refuses legs above the configured limit.
    #[error("leg {x} exceeds the sweep limit {limit}")]
    SweepLimitExceeded { x: u64, limit: u64 },

    /// An exhaustive search ran past its configured time budget.
    #[error("search exceeded the configured time budget")]
    TimeBudgetExceeded,

    /// A cross-check needs at least one leg.
    #[error("empty leg range")]
    EmptyRange,

    /// Reports produced under different modes cannot be merged.
    #[error("cannot merge reports for modes {left} and {right}")]
    ModeMismatch { left: Mode, right: Mode },
}

pub type Result<T> = std::result::Result<T, Error>;
