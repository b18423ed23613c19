//! Exact total deciders for the extremal problems of deterministic,
//! probabilistic and quantum machines, recursive presentations of the
//! standard promise classes, and the delayed-diagonalization construction
//! (uniform diagonalization and Ladner's theorem) at desk scale.
//!
//! The numeric core ([`field`], [`qcircuit`]) is generic over the coordinate
//! scalar; the aliases below fix the exact rational instantiation used by the
//! deciders and an `f64` shadow used for cross-checks.

pub mod enumeration;
pub mod error;
pub mod field;
pub mod gap;
pub mod promise;
pub mod ptm;
pub mod qcircuit;
pub mod scalar;
pub mod tm;
pub mod word;

pub use error::{Error, Result};
pub use word::Word;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

/// Exact element of Q(1/√2, i).
pub type FieldElem = field::Cyclo8<Rational>;
/// Floating-point shadow of [`FieldElem`].
pub type FloatElem = field::Cyclo8<f64>;
/// Exact square matrix over Q(1/√2, i).
pub type ExactMatrix = field::Matrix<Rational>;
/// Exact state vector over Q(1/√2, i).
pub type ExactState = qcircuit::StateVector<Rational>;
