//! Exact verification of the algebra behind quaternionic Killing spinors.
//!
//! Everything is computed over ℚ or ℚ(i, √2) with zero tolerance. The
//! linear algebra is generic over [`Field`]; the aliases below are the
//! concrete instances every other module uses.

pub mod clifford;
pub mod dims;
pub mod error;
pub mod killing;
pub mod rep_spaces;
pub mod report;
pub mod scalars;
pub mod weitzenbock;
pub mod wolf;

pub use error::{Error, Result};
pub use report::{Check, Report, Status};
pub use scalars::{Field, Matrix, Qi2, Space, Subspace};

/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// Elements of ℚ(i, √2).
pub type Scalar = Qi2<Rational>;
/// Matrices over ℚ.
pub type RatMatrix = Matrix<Rational>;
/// Matrices over ℚ(i, √2).
pub type ScalarMatrix = Matrix<Scalar>;
