//! The projector p̃r_K : E⊗Λ^s_∘E → K^sE and the Cartan summand K^sE.

use super::primitive::{prim_label, PrimitiveCalculus};
use crate::error::{out_of_range, Result};
use crate::report::Report;
use crate::scalars::{q, qi, Space, Subspace};
use crate::{RatMatrix, Rational};

pub fn e_prim_label(n: usize, s: i32) -> Space {
    Space::tensor(&Space::e(n), &prim_label(n, s))
}

pub fn k_label(n: usize, s: i32) -> Space {
    Space::KE { n, s }
}

/// dim K^sE = 2n·d_s − d_{s−1} − d_{s+1}.
pub fn k_dim(n: usize, s: i32) -> usize {
    use super::primitive::primitive_dim as d;
    2 * n * d(n, s) - d(n, s - 1) - d(n, s + 1)
}

impl PrimitiveCalculus {
    /// p̃r_K as an endomorphism of E⊗Λ^s_∘E (E index major):
    /// e⊗φ ↦ e⊗φ − 1/(s+1) Σ e_i⊗de_i⌟e∧_∘φ − c Σ de_i^♭⊗e_i∧_∘e^#⌟φ
    /// with c = (n−s+2)/((2n−s+3)(n−s+1)).
    pub fn pr_tilde_k_endo(&self, s: i32) -> Result<RatMatrix> {
        let n = self.n as i32;
        if s < 1 || s > n {
            return out_of_range(format!("p̃r_K needs 1 ≤ s ≤ n, got s={s}"));
        }
        let d = 2 * self.n;
        let dim = self.dim(s);
        let label = e_prim_label(self.n, s);
        let c1 = q(1, (s + 1) as i64);
        let c2 = q((n - s + 2) as i64, ((2 * n - s + 3) * (n - s + 1)) as i64);
        let mut m = RatMatrix::identity(d * dim);
        let unit = |k: usize| -> Vec<Rational> { (0..d).map(|i| qi((i == k) as i64)).collect() };
        for k in 0..d {
            let e = unit(k);
            let sharp_contract = RatMatrix::lincomb(
                &self.e.sharp(&e),
                &(0..d).map(|j| self.contract_basis(j, s).clone()).collect::<Vec<_>>(),
            );
            for i in 0..d {
                let mut blk = (self.contract_basis(i, s + 1) * self.wedge_basis(k, s)).scale(&c1);
                // Σ_{i'} (de_{i'}^♭)_i e_{i'}∧_∘ e^#⌟
                let mut w = RatMatrix::zeros(dim, self.dim(s - 1))
                    .labeled(prim_label(self.n, s), prim_label(self.n, s - 1));
                for ip in 0..d {
                    let flat = self.e.flat(&unit(ip));
                    if !num_traits::Zero::is_zero(&flat[i]) {
                        w.add_scaled(&flat[i], self.wedge_basis(ip, s - 1))?;
                    }
                }
                blk.add_scaled(&c2, &(&w * &sharp_contract))?;
                m.add_block(i * dim, k * dim, &(-&blk));
            }
        }
        Ok(m.labeled(label.clone(), label))
    }

    /// K^sE as the image of p̃r_K, with a basis chosen from its columns.
    pub fn k_space(&self, s: i32) -> Result<Subspace<Rational>> {
        let p = self.pr_tilde_k_endo(s)?;
        let basis = p.column_space().with_codomain(p.codomain().clone());
        Subspace::new(basis, k_label(self.n, s))
    }

    /// p̃r_K as a map E⊗Λ^s_∘E → K^sE.
    pub fn build_pr_tilde_k(&self, s: i32) -> Result<RatMatrix> {
        let p = self.pr_tilde_k_endo(s)?;
        self.k_space(s)?.restrict(&p)
    }

    /// φ ↦ Σ_i e_i⊗de_i⌟φ : Λ^s_∘ → E⊗Λ^{s−1}_∘.
    pub fn contraction_insertion(&self, s: i32) -> RatMatrix {
        let d = 2 * self.n;
        let dim = self.dim(s - 1);
        let mut m = RatMatrix::zeros(d * dim, self.dim(s));
        for i in 0..d {
            m.set_block(i * dim, 0, self.contract_basis(i, s));
        }
        m.labeled(e_prim_label(self.n, s - 1), prim_label(self.n, s))
    }

    /// φ ↦ Σ_i de_i^♭⊗e_i∧_∘φ : Λ^s_∘ → E⊗Λ^{s+1}_∘.
    pub fn wedge_insertion(&self, s: i32) -> RatMatrix {
        let d = 2 * self.n;
        let dim = self.dim(s + 1);
        let mut m = RatMatrix::zeros(d * dim, self.dim(s));
        for i in 0..d {
            let mut unit = vec![qi(0); d];
            unit[i] = qi(1);
            let flat = self.e.flat(&unit);
            for (j, c) in flat.iter().enumerate() {
                if !num_traits::Zero::is_zero(c) {
                    m.add_block(j * dim, 0, &self.wedge_basis(i, s).scale(c));
                }
            }
        }
        m.labeled(e_prim_label(self.n, s + 1), prim_label(self.n, s))
    }
}

/// p̃r_K is idempotent of rank dim K^sE and annihilates both
/// Σ e_i⊗de_i⌟ (from Λ^{s+1}_∘) and Σ de_i^♭⊗e_i∧_∘ (from Λ^{s−1}_∘).
pub fn check_pr_tilde_k(pc: &PrimitiveCalculus, s: i32) -> Result<Report> {
    let p = pc.pr_tilde_k_endo(s)?;
    let mut rep = Report::new();
    rep.matrix_eq("p̃r_K² = p̃r_K", &(&p * &p), &p);
    let rank = p.rank();
    let want = k_dim(pc.n, s);
    rep.check("rank p̃r_K = dim K^sE", rank == want, || format!("rank {rank}, expected {want}"));
    rep.is_zero("p̃r_K ∘ Σ e_i⊗de_i⌟ = 0", &(&p * &pc.contraction_insertion(s + 1)));
    rep.is_zero("p̃r_K ∘ Σ de_i^♭⊗e_i∧_∘ = 0", &(&p * &pc.wedge_insertion(s - 1)));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotent_with_expected_rank() {
        for n in 2..=3 {
            let pc = PrimitiveCalculus::new(n).unwrap();
            for s in 1..=n as i32 {
                let p = pc.pr_tilde_k_endo(s).unwrap();
                assert_eq!(&p * &p, p, "n={n} s={s}");
                assert_eq!(p.rank(), k_dim(n, s), "n={n} s={s}");
            }
        }
        // E⊗Λ¹_∘E at n=2 has dimension 16 = 1 + 5 + 10
        assert_eq!(k_dim(2, 1), 10);
    }

    #[test]
    fn kills_both_insertions() {
        let pc = PrimitiveCalculus::new(2).unwrap();
        for s in 1..=2 {
            let p = pc.pr_tilde_k_endo(s).unwrap();
            assert!((&p * &pc.contraction_insertion(s + 1)).is_zero(), "s={s}");
            assert!((&p * &pc.wedge_insertion(s - 1)).is_zero(), "s={s}");
        }
    }
}
