//! Symmetric quaternionic Kähler spaces: partial Killing forms, the
//! cobracket and the curvature endomorphism ρ, and the regularity of its
//! hyperkähler part.

mod lie;
mod symmetric;
mod table;

pub use lie::{complex_to_real, quaternion, so_generator, su, LieAlgebraModel};
pub use symmetric::{
    build_classical_wolf, check_classical_family, classical_l_values, curvature_endomorphism, CartanDecomposition,
    ClassicalFamily, CurvatureEndomorphism, Ideal,
};
pub use table::{
    check_regularity_criterion, check_trace_identity, check_wolf_table, quaternionic_l, wolf_row, wolf_table,
    IdealEntry, Regularity, TraceIdentity, WolfEntry, WolfRow, WolfRowIdeal,
};
