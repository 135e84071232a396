//! Partial Clifford multiplications μ^±_± on Sym^rH ⊗ Λ^s_∘E, tangent
//! frames of H⊗E and the identities they satisfy.

mod checks;
mod frame;
mod sums;

pub use checks::{check_adjointness, check_clifford_relation, check_wedge_identities, spinor_mu};
pub(crate) use checks::{mu_dec, r_e, r_h};
pub use frame::{build_frame, build_frame_rotated, TangentFrame, TangentVector};
pub use frame::metric;
pub use sums::{
    build_iota, check_frame_independence, check_right_inverses, check_summe, frame_sum, frame_sum_explicit,
    iota_coefficient, mu_on_tangent, summe_value,
};

use serde::Serialize;

use crate::error::{out_of_range, Result};
use crate::rep_spaces::{build_h, sym_h, PrimitiveCalculus, SymplecticSpace};
use crate::scalars::{binomial, q, Space};
use crate::{RatMatrix, Rational, Scalar, ScalarMatrix};

/// Which partial Clifford multiplication; the superscript moves r, the
/// subscript moves s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MuKind {
    /// μ^+_− : (r,s) → (r+1,s−1), √2 (h·⊗e^#⌟)
    PlusMinus,
    /// μ^−_+ : (r,s) → (r−1,s+1), √2 (h^#⌟_∘⊗e∧_∘)
    MinusPlus,
    /// μ^+_+ : (r,s) → (r+1,s+1), √2 (h·⊗e∧_∘)
    PlusPlus,
    /// μ^−_− : (r,s) → (r−1,s−1), √2 (h^#⌟_∘⊗e^#⌟)
    MinusMinus,
}

impl MuKind {
    pub const ALL: [MuKind; 4] = [MuKind::PlusMinus, MuKind::MinusPlus, MuKind::PlusPlus, MuKind::MinusMinus];

    pub fn shift(self) -> (i32, i32) {
        match self {
            MuKind::PlusMinus => (1, -1),
            MuKind::MinusPlus => (-1, 1),
            MuKind::PlusPlus => (1, 1),
            MuKind::MinusMinus => (-1, -1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MuKind::PlusMinus => "μ^+_−",
            MuKind::MinusPlus => "μ^−_+",
            MuKind::PlusPlus => "μ^+_+",
            MuKind::MinusMinus => "μ^−_−",
        }
    }
}

/// Sym^rH ⊗ Λ^s_∘E.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpinorFiber {
    pub n: usize,
    pub r: i32,
    pub s: i32,
}

impl SpinorFiber {
    pub fn space(&self) -> Space {
        Space::tensor(&sym_h::sym_label(self.r), &crate::rep_spaces::prim_label(self.n, self.s))
    }

    pub fn admissible(&self) -> bool {
        self.r >= 0 && self.s >= 0 && self.s as usize <= self.n
    }
}

/// rank S_r = (r+1)(C(2n,n−r) − C(2n,n−r−2)).
pub fn spinor_rank(n: usize, r: i32) -> i64 {
    let (n, r) = (n as i64, r as i64);
    (r + 1) * (binomial(2 * n, n - r) - binomial(2 * n, n - r - 2))
}

/// Operators on H and on Λ^•_∘E for one n, plus the μ^±_± built from them.
#[derive(Clone, Debug)]
pub struct Clifford {
    pub pc: PrimitiveCalculus,
    pub h: SymplecticSpace,
}

impl Clifford {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Clifford { pc: PrimitiveCalculus::new(n)?, h: build_h() })
    }

    pub fn n(&self) -> usize {
        self.pc.n
    }

    /// Real dimension of the tangent space is 4n; this is the complex dimension of H⊗E.
    pub fn tangent_dim(&self) -> usize {
        4 * self.n()
    }

    pub fn fiber(&self, r: i32, s: i32) -> SpinorFiber {
        SpinorFiber { n: self.n(), r, s }
    }

    pub fn fiber_dim(&self, r: i32, s: i32) -> usize {
        if !self.fiber(r, s).admissible() {
            return 0;
        }
        sym_h::sym_dim(r) * self.pc.dim(s)
    }

    fn unit(&self, d: usize, k: usize) -> Vec<Rational> {
        let mut v = vec![q(0, 1); d];
        v[k] = q(1, 1);
        v
    }

    /// μ(h_a⊗e_k)/√2 on Sym^rH⊗Λ^s_∘E. Both the source and the target
    /// degree must be admissible.
    pub fn mu_unit(&self, kind: MuKind, a: usize, k: usize, r: i32, s: i32) -> Result<RatMatrix> {
        let (dr, ds) = kind.shift();
        let (src, dst) = (self.fiber(r, s), self.fiber(r + dr, s + ds));
        if !src.admissible() || !dst.admissible() {
            return out_of_range(format!(
                "{} maps (r,s)=({r},{s}) to ({},{}), outside r ≥ 0, 0 ≤ s ≤ n={}",
                kind.name(),
                r + dr,
                s + ds,
                self.n()
            ));
        }
        let h_part = match dr {
            1 => sym_h::mul_basis(a, r),
            _ => sym_h::contract_circ(&self.h.sharp(&self.unit(2, a)), r),
        };
        let e_part = match ds {
            1 => self.pc.wedge_basis(k, s).clone(),
            _ => self.pc.contract_sharp(&self.unit(2 * self.n(), k), s)?,
        };
        Ok(h_part.kron(&e_part))
    }

    /// μ^±_±(X) for a tangent vector X ∈ H⊗E.
    pub fn build_mu(&self, kind: MuKind, x: &TangentVector, r: i32, s: i32) -> Result<ScalarMatrix> {
        let d = 2 * self.n();
        let mut out: Option<ScalarMatrix> = None;
        for a in 0..2 {
            for k in 0..d {
                let c = x.coeff(a, k, d);
                let u = self.mu_unit(kind, a, k, r, s)?;
                let acc = out.get_or_insert_with(|| {
                    ScalarMatrix::zeros(u.rows(), u.cols()).labeled(u.codomain().clone(), u.domain().clone())
                });
                if num_traits::Zero::is_zero(c) {
                    continue;
                }
                acc.add_scaled(c, &u.map(|v| Scalar::real(v.clone())))?;
            }
        }
        Ok(out.expect("H⊗E is nonzero").scale(&Scalar::sqrt2()))
    }

    /// Hermitian Gram matrix on Sym^rH⊗Λ^s_∘E induced by (x,y) = σ(x,Jy).
    pub fn gram(&self, r: i32, s: i32) -> Result<RatMatrix> {
        let b = self.pc.primitive_basis(s)?.embedding();
        let ge = &b.transpose() * b;
        let ge = ge.labeled(crate::rep_spaces::prim_label(self.n(), s), crate::rep_spaces::prim_label(self.n(), s));
        Ok(sym_h::gram(r).kron(&ge))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_sum_to_spinor_dimension() {
        for n in 1..=5usize {
            let total: i64 = (0..=n as i32).map(|r| spinor_rank(n, r)).sum();
            assert_eq!(total, 1 << (2 * n));
        }
        assert_eq!((0..=2).map(|r| spinor_rank(2, r)).collect::<Vec<_>>(), vec![5, 8, 3]);
        assert_eq!((0..=3).map(|r| spinor_rank(3, r)).collect::<Vec<_>>(), vec![14, 28, 18, 4]);
    }

    #[test]
    fn degree_bookkeeping() {
        let cl = Clifford::new(2).unwrap();
        for kind in MuKind::ALL {
            for r in 0..3 {
                for s in 0..=2 {
                    let (dr, ds) = kind.shift();
                    match cl.mu_unit(kind, 0, 1, r, s) {
                        Ok(m) => {
                            assert_eq!(m.cols(), cl.fiber_dim(r, s));
                            assert_eq!(m.rows(), cl.fiber_dim(r + dr, s + ds));
                            assert_eq!(m.domain(), &cl.fiber(r, s).space());
                            assert_eq!(m.codomain(), &cl.fiber(r + dr, s + ds).space());
                        }
                        Err(_) => assert!(!cl.fiber(r + dr, s + ds).admissible()),
                    }
                }
            }
        }
    }

    #[test]
    fn mu_minus_plus_rejected_on_s0() {
        let cl = Clifford::new(2).unwrap();
        assert!(cl.mu_unit(MuKind::MinusPlus, 0, 0, 0, 2).is_err());
    }

    #[test]
    fn mu_plus_minus_kills_closed_forms() {
        // e₁^#⌟ω = 0 ⇒ μ^+_−(h₁⊗e₁)(1⊗ω) = 0; ω = e₁ has e₁^#⌟e₁ = σ(e₁,e₁) = 0
        let cl = Clifford::new(2).unwrap();
        let m = cl.mu_unit(MuKind::PlusMinus, 1, 0, 0, 1).unwrap();
        let b = cl.pc.primitive_basis(1).unwrap();
        let omega = b.coords(&[q(1, 1), q(0, 1), q(0, 1), q(0, 1)]).unwrap();
        assert!(m.apply(&omega).iter().all(num_traits::Zero::is_zero));
    }
}
