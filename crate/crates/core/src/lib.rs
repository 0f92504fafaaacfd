//! Exact enumeration of Pythagorean triples sharing a prescribed leg.
//!
//! Every triple `(x, y, z)` with leg `x` corresponds to a generator
//! `d = z - y` dividing `x^2`; [`chatetus`] enumerates triples through that
//! correspondence, [`power_relations`] relates the `d = 1` triple on an odd
//! leg `x` to the one on `x^m` through four independent exact formulas, and
//! [`oracle`] cross-validates everything against a brute-force search. All
//! arithmetic is arbitrary precision; nothing here rounds.
//!
//! ```
//! use num_bigint::BigUint;
//! use tripleforge::{chatetus, Mode};
//!
//! let legs = chatetus::triples_with_leg(&BigUint::from(12u32), Mode::Corrected).unwrap();
//! let shown: Vec<String> = legs.triples.iter().map(|t| t.to_string()).collect();
//! assert_eq!(shown, ["(12, 5, 13)", "(12, 9, 15)", "(12, 16, 20)", "(12, 35, 37)"]);
//! ```

pub mod chatetus;
pub mod error;
pub mod factorization;
pub mod oracle;
pub mod power_relations;

pub use chatetus::{CandidateSet, Interpretation, LegTriples, Mode, Triple};
pub use error::{Error, Result};
pub use factorization::{Factorization, FactorizeConfig, TwoAdic};
pub use oracle::{DiscrepancyEntry, DiscrepancyReport, OracleConfig, Spurious};
pub use power_relations::{PowerRelationReport, RelationPath};
