//! Exact computations with monomial and binomial ideals attached to monomial
//! curves defined by arithmetic sequences.
//!
//! * [`monomial`]: exponent vectors, monomial ideals, weighted grevlex orders,
//!   binomial division and Buchberger's criterion.
//! * [`closure_lab`]: colon chains, bounded Ratliff-Rush verdicts and the
//!   Γ-spread construction.
//! * [`integral`]: Newton-polyhedron membership, integral closure and
//!   normality.
//! * [`curve`]: semigroup data, Gröbner bases, initial ideals and the
//!   generator sets of their powers and closures.

pub mod closure_lab;
pub mod curve;
pub mod error;
pub mod integral;
pub mod monomial;

pub use error::{Error, Result};
