//! Infinitesimal actions of End(E) and End(H) as derivations.

use super::primitive::PrimitiveCalculus;
use super::sym_h;
use super::symplectic::SymplecticSpace;
use crate::error::{Error, Result};
use crate::{RatMatrix, Rational};

/// The endomorphism e ↦ σ(x,e)y + σ(y,e)x, i.e. the element xy ∈ Sym² acting
/// on the defining representation. Column m is the image of the m-th basis vector.
pub fn sym2_endo(space: &SymplecticSpace, x: &[Rational], y: &[Rational]) -> RatMatrix {
    let d = space.dim();
    RatMatrix::from_fn(d, d, |j, m| {
        let mut unit = vec![Rational::from_integer(0.into()); d];
        unit[m] = Rational::from_integer(1.into());
        &space.sigma(x, &unit) * &y[j] + &space.sigma(y, &unit) * &x[j]
    })
}

/// Derivation extension of `a` ∈ End(E) to Λ^s_∘E, 0 ≤ s ≤ n. Fails if the
/// result does not preserve the primitive forms, which happens exactly when
/// `a` is not in 𝔰𝔭(n) up to scalars.
pub fn derivation_on_primitive(pc: &PrimitiveCalculus, a: &RatMatrix, s: i32) -> Result<RatMatrix> {
    let ext = &pc.ext;
    let d = 2 * pc.n;
    let mut amb = RatMatrix::zeros(ext.dim(s), ext.dim(s)).labeled(
        super::exterior::lambda_label(pc.n, s),
        super::exterior::lambda_label(pc.n, s),
    );
    if s > 0 {
        for m in 0..d {
            let con = ext.contract(m, s);
            for j in 0..d {
                if num_traits::Zero::is_zero(&a[(j, m)]) {
                    continue;
                }
                let term = &ext.wedge(j, s - 1) * &con;
                amb.add_scaled(&a[(j, m)], &term)?;
            }
        }
    }
    let sub = pc.primitive_basis(s)?;
    sub.restrict(&(&amb * sub.embedding()))
        .map_err(|e| Error::Failed(format!("derivation does not preserve Λ^{s}_∘E: {e}")))
}

/// Derivation extension of `a` ∈ End(H) to Sym^rH.
pub fn derivation_on_sym(a: &RatMatrix, r: i32) -> RatMatrix {
    let mut out = RatMatrix::zeros(sym_h::sym_dim(r), sym_h::sym_dim(r))
        .labeled(sym_h::sym_label(r), sym_h::sym_label(r));
    if r > 0 {
        for m in 0..2 {
            for j in 0..2 {
                let term = &sym_h::mul_basis(j, r - 1) * &sym_h::contract_basis(m, r);
                out.add_scaled(&a[(j, m)], &term).expect("labels agree");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qi;

    #[test]
    fn sym_derivation_matches_sym2_action() {
        let h = super::super::symplectic::build_h();
        let (x, y) = (vec![qi(1), qi(2)], vec![qi(-3), qi(1)]);
        for r in 0..4 {
            let d = derivation_on_sym(&sym2_endo(&h, &x, &y), r);
            assert!(d.same_entries(&sym_h::sym2_action(&x, &y, r)), "r={r}");
        }
    }

    #[test]
    fn sp_elements_preserve_primitive_forms() {
        let pc = PrimitiveCalculus::new(2).unwrap();
        let x = vec![qi(1), qi(0), qi(2), qi(-1)];
        let y = vec![qi(0), qi(1), qi(1), qi(3)];
        let a = sym2_endo(&pc.e, &x, &y);
        for s in 0..=2 {
            derivation_on_primitive(&pc, &a, s).unwrap();
        }
        // a non-symplectic endomorphism does not
        let mut b = RatMatrix::zeros(4, 4);
        b[(0, 0)] = qi(1);
        assert!(derivation_on_primitive(&pc, &b, 2).is_err());
    }
}
