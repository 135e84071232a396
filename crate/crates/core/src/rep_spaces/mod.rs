//! Explicit bases and operators for E, H, Λ^sE, Λ^s_∘E, Sym^rH and K^sE.

pub mod actions;
pub mod exterior;
pub mod identities;
pub mod pr_k;
pub mod primitive;
pub mod sym_h;
pub mod symplectic;

pub use exterior::{build_sl2_triple, ExteriorAlgebra, Sl2Triple};
pub use identities::{
    check_kom1, check_kom2, check_operator_identity, check_projector_relations_e,
    check_projector_relations_h,
};
pub use pr_k::{check_pr_tilde_k, k_dim, k_label};
pub use primitive::{check_wedge_circ, prim_label, primitive_dim, PrimitiveCalculus};
pub use symplectic::{build_e, build_h, SymplecticSpace};
