//! Exact scalars, labeled matrices and elimination.

pub mod elim;
pub mod field;
pub mod matrix;
pub mod qi2;
pub mod space;
pub mod subspace;

pub use elim::Echelon;
pub use field::{binomial, q, qi, Field, random_rational};
pub use matrix::Matrix;
pub use qi2::Qi2;
pub use space::Space;
pub use subspace::Subspace;
