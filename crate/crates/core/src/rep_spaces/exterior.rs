//! Λ^•E in the basis of sorted multi-indices.

use std::collections::HashMap;

use crate::scalars::{binomial, qi, Space};
use crate::{RatMatrix, Rational};

/// The exterior algebra of E = ℂ^{2n}. Basis elements of Λ^sE are the
/// s-subsets of {0..2n}, stored as bitmasks in increasing numeric order.
#[derive(Clone, Debug)]
pub struct ExteriorAlgebra {
    pub n: usize,
    bases: Vec<Vec<u32>>,
    index: Vec<HashMap<u32, usize>>,
}

/// Label for Λ^sE, also for out-of-range degrees.
pub fn lambda_label(n: usize, s: i32) -> Space {
    Space::LambdaE { n, s }
}

impl ExteriorAlgebra {
    pub fn new(n: usize) -> Self {
        let big = 2 * n;
        let mut bases = vec![Vec::new(); big + 1];
        for mask in 0u32..(1 << big) {
            bases[mask.count_ones() as usize].push(mask);
        }
        let index = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, &m)| (m, i)).collect())
            .collect();
        ExteriorAlgebra { n, bases, index }
    }

    /// dim Λ^sE, zero outside 0..=2n.
    pub fn dim(&self, s: i32) -> usize {
        binomial(2 * self.n as i64, s as i64) as usize
    }

    pub fn basis(&self, s: usize) -> &[u32] {
        &self.bases[s]
    }

    fn zero_map(&self, to: i32, from: i32) -> RatMatrix {
        RatMatrix::zeros(self.dim(to), self.dim(from))
            .labeled(lambda_label(self.n, to), lambda_label(self.n, from))
    }

    // sign of moving e_k past the indices of `mask` below k
    fn sign(mask: u32, k: usize) -> Rational {
        let below = (mask & ((1u32 << k) - 1)).count_ones();
        qi(if below.is_multiple_of(2) { 1 } else { -1 })
    }

    /// e_k∧ : Λ^sE → Λ^{s+1}E.
    pub fn wedge(&self, k: usize, s: i32) -> RatMatrix {
        let mut m = self.zero_map(s + 1, s);
        if s < 0 || s as usize >= 2 * self.n {
            return m;
        }
        for (j, &mask) in self.bases[s as usize].iter().enumerate() {
            if mask & (1 << k) != 0 {
                continue;
            }
            let i = self.index[s as usize + 1][&(mask | (1 << k))];
            m[(i, j)] = Self::sign(mask, k);
        }
        m
    }

    /// de_k⌟ : Λ^sE → Λ^{s−1}E.
    pub fn contract(&self, k: usize, s: i32) -> RatMatrix {
        let mut m = self.zero_map(s - 1, s);
        if s <= 0 || s as usize > 2 * self.n {
            return m;
        }
        for (j, &mask) in self.bases[s as usize].iter().enumerate() {
            if mask & (1 << k) == 0 {
                continue;
            }
            let i = self.index[s as usize - 1][&(mask & !(1 << k))];
            m[(i, j)] = Self::sign(mask, k);
        }
        m
    }

    /// e∧ for a general vector e.
    pub fn wedge_vec(&self, e: &[Rational], s: i32) -> RatMatrix {
        let mats: Vec<_> = (0..2 * self.n).map(|k| self.wedge(k, s)).collect();
        RatMatrix::lincomb(e, &mats)
    }

    /// η⌟ for a general covector η.
    pub fn contract_vec(&self, eta: &[Rational], s: i32) -> RatMatrix {
        let mats: Vec<_> = (0..2 * self.n).map(|k| self.contract(k, s)).collect();
        RatMatrix::lincomb(eta, &mats)
    }

    /// L : Λ^{s−2}E → Λ^sE, wedging with L_E = Σ_{i<n} e_i∧e_{n+i}.
    pub fn lefschetz(&self, s: i32) -> RatMatrix {
        let n = self.n;
        let mut m = self.zero_map(s, s - 2);
        for i in 0..n {
            m = &m + &(&self.wedge(i, s - 1) * &self.wedge(n + i, s - 2));
        }
        m
    }

    /// Λ = L* : Λ^sE → Λ^{s−2}E, contraction with σ_E = Σ de_i∧de_{n+i}.
    pub fn dual_lefschetz(&self, s: i32) -> RatMatrix {
        let n = self.n;
        let mut m = self.zero_map(s - 2, s);
        for i in 0..n {
            m = &m + &(&self.contract(n + i, s - 1) * &self.contract(i, s));
        }
        m
    }

    /// The element L_E ∈ Λ²E built literally as ½ Σ_i de_i^♭ ∧ e_i over
    /// the full dual pair, for comparison with the Lefschetz operator.
    pub fn l_element_from_dual_pair(&self) -> Vec<Rational> {
        let e = super::symplectic::build_e(self.n).expect("n ≥ 1");
        let d = 2 * self.n;
        let mut out = vec![qi(0); self.dim(2)];
        let half = Rational::new(1.into(), 2.into());
        for i in 0..d {
            let de: Vec<Rational> = (0..d).map(|k| qi((k == i) as i64)).collect();
            let flat = e.flat(&de);
            let ei: Vec<Rational> = (0..d).map(|k| qi((k == i) as i64)).collect();
            // flat ∧ e_i = (flat∧)(e_i) with e_i ∈ Λ¹E
            let w = self.wedge_vec(&flat, 1).apply(&ei);
            for (o, x) in out.iter_mut().zip(w) {
                *o += &half * x;
            }
        }
        out
    }
}

/// The sl₂ triple on Λ^sE.
#[derive(Clone, Debug)]
pub struct Sl2Triple {
    /// L : Λ^{s−2}E → Λ^sE
    pub l: RatMatrix,
    /// Λ : Λ^sE → Λ^{s−2}E
    pub lambda: RatMatrix,
    /// H = [Λ, L] on Λ^sE
    pub h: RatMatrix,
}

pub fn build_sl2_triple(ext: &ExteriorAlgebra, s: i32) -> Sl2Triple {
    let l = ext.lefschetz(s);
    let lambda = ext.dual_lefschetz(s);
    let h = &(&ext.dual_lefschetz(s + 2) * &ext.lefschetz(s + 2)) - &(&l * &lambda);
    Sl2Triple { l, lambda, h }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims() {
        let ext = ExteriorAlgebra::new(2);
        assert_eq!(ext.dim(2), 6);
        assert_eq!(ext.dim(-1), 0);
        assert_eq!(ext.dim(5), 0);
    }

    #[test]
    fn anticommutation_of_generators() {
        let ext = ExteriorAlgebra::new(2);
        for s in 0..=4 {
            for a in 0..4 {
                for b in 0..4 {
                    let ww = &(&ext.wedge(a, s + 1) * &ext.wedge(b, s))
                        + &(&ext.wedge(b, s + 1) * &ext.wedge(a, s));
                    assert!(ww.is_zero());
                    let cw = &(&ext.contract(a, s + 1) * &ext.wedge(b, s))
                        + &(&ext.wedge(b, s - 1) * &ext.contract(a, s));
                    assert_eq!(cw.as_scalar(), Some(qi((a == b) as i64)), "s={s} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn sl2_weights() {
        for n in 1..=3 {
            let ext = ExteriorAlgebra::new(n);
            for s in 0..=(2 * n as i32) {
                let t = build_sl2_triple(&ext, s);
                assert_eq!(t.h.as_scalar(), Some(qi(n as i64 - s as i64)), "n={n} s={s}");
            }
        }
    }

    #[test]
    fn lambda_of_l_of_one_is_n() {
        let ext = ExteriorAlgebra::new(2);
        let one = vec![qi(1)];
        let l1 = ext.lefschetz(2).apply(&one);
        assert_eq!(ext.dual_lefschetz(2).apply(&l1), vec![qi(2)]);
    }

    #[test]
    fn lefschetz_element_matches_dual_pair_formula() {
        for n in 1..=3 {
            let ext = ExteriorAlgebra::new(n);
            assert_eq!(ext.lefschetz(2).column(0), ext.l_element_from_dual_pair());
        }
    }
}
