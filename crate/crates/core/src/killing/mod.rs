//! Curvature models, the Killing connection ∇ + A on
//! Λ^n_∘E ⊕ H⊗Λ^{n−1}_∘E ⊕ Λ^{n−2}_∘E and the Δ system for the three norms.

mod curvature;
mod curvature_term;
mod laplace;
mod spinor;

pub use curvature::{assemble_r, check_symmetrization, curvature_parts, CurvatureModel, Dec, Quartic};
pub use curvature_term::{alpha_cubic, check_curvature_term_vanishing, hyper_contribution, r_e_contribution};
pub use laplace::{
    check_laplace, expected_eigenfunctions, expected_eigenvalues, laplace_matrix, laplace_system, Eigenfunction,
    LaplaceSpectrum,
};
pub use spinor::{
    check_killing_curvature, check_killing_equation_consequences, check_skew_hermitian, expected_consequences,
    killing_consequences, killing_curvature_with, killing_gram, lambda_squared_over_kappa, perturbation,
    perturbation_entries, perturbation_rational, tangent_curvature, Consequence, KillingCurvature, KillingFiber,
    BLOCK_NAMES,
};
