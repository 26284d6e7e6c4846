//! Numerical tools around the Riemann zeta function: three independent
//! evaluators for ζ, Γ and ξ, argument-principle zero counting, checkers for
//! the classical growth inequalities, and a measured version of the
//! zero-regularized growth argument near a height T.
//!
//! Floats are validated by negated comparisons throughout so that NaN fails
//! every precondition.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod bernoulli;
pub mod cli;
pub mod cmath;
pub mod contour;
pub mod error;
pub mod eval;
pub mod func;
pub mod gamma_xi;
pub mod geometry;
pub mod growth;
pub mod json;
pub mod lemma;
pub mod pseudo;
pub mod sum;
pub mod sweep;
pub mod types;

pub use error::{Error, Result};
pub use types::{ComplexPoint, PrecisionPolicy};
