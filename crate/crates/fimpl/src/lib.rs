//! Fuzzy implication functions on the unit interval, built by feeding
//! chain-transformed inputs through an aggregation function.
//!
//! The core construction takes an n-ary aggregator `F`, two increasing
//! mappings `c1, c2 : [0,1] -> [0,1]^n` with `c(0) = (0,...,0)` and
//! `c(1) = (1,...,1)`, and n fuzzy implication functions, and produces
//!
//! ```text
//! I(x, y) = F(I_1(c1_1(x), c2_1(y)), ..., I_n(c1_n(x), c2_n(y)))
//! ```
//!
//! which is again a fuzzy implication function. Several classical
//! construction methods (pointwise aggregation, contrapositivisation,
//! horizontal/vertical threshold gluing, ordinal sums) are instances of
//! this scheme for particular choices of `F`, `c1` and `c2`; the
//! [`methods`] module provides both the closed forms and the equivalent
//! constructions so the equality can be machine-checked on grids.
//!
//! The crate also ships:
//!
//! - a catalog of base operators (implications, negations, t-norms,
//!   t-conorms, aggregators, chain components),
//! - a grid-based verification engine for the implication axioms and ten
//!   additional properties ([`properties`]),
//! - sufficient-condition checkers mirroring the preservation results for
//!   the construction,
//! - a small declarative text format (`.fimpl`) for defining operators in
//!   files ([`dsl`]).
//!
//! Everything is pure and immutable after construction; values are plain
//! `f64` in `[0,1]` and verification is sampling-based, never symbolic.

// Negated float comparisons like `!(r > 0.0)` are deliberate: they
// reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod aggregation;
pub mod chain;
pub mod construction;
pub mod dsl;
mod error;
pub mod implication;
pub mod methods;
pub mod negation;
pub mod numerics;
pub mod properties;
pub mod tnorm;
mod unary;

pub use aggregation::{Aggregator, DualityReport, MultiplierKind, TriState};
pub use chain::{ChainMap, FChainReport};
pub use construction::Construction;
pub use error::Error;
pub use implication::Implication;
pub use negation::Negation;
pub use numerics::{approx_eq, Grid, Tolerance};
pub use tnorm::{tnorm_power, yager_tconorm, ContinuousTNorm, TConorm};
pub use unary::UnaryMap;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
