//! Primitive forms Λ^s_∘E = ker Λ and the operators that preserve them.

use super::exterior::ExteriorAlgebra;
use super::symplectic::{build_e, SymplecticSpace};
use crate::error::{out_of_range, Error, Result};
use crate::report::Report;
use crate::scalars::{binomial, q, Space, Subspace};
use crate::{RatMatrix, Rational};

pub fn prim_label(n: usize, s: i32) -> Space {
    Space::LambdaPrimE { n, s }
}

/// dim Λ^s_∘E = C(2n, s) − C(2n, s−2) for s ≤ n, and 0 above.
pub fn primitive_dim(n: usize, s: i32) -> usize {
    if s < 0 || s as usize > n {
        return 0;
    }
    let (n2, s) = (2 * n as i64, s as i64);
    (binomial(n2, s) - binomial(n2, s - 2)) as usize
}

/// Everything about Λ^•_∘E for one n: the embedded kernels and the
/// restricted operators de_k⌟ and e_k∧_∘ for every basis index k.
///
/// Degrees run over 0..=n+1; the top one is computed (and comes out zero)
/// so that e∧_∘ on Λ^n_∘E is an honest map rather than a special case.
#[derive(Clone, Debug)]
pub struct PrimitiveCalculus {
    pub n: usize,
    pub e: SymplecticSpace,
    pub ext: ExteriorAlgebra,
    prim: Vec<Subspace<Rational>>,
    // wedge[s][k] : Λ^s_∘ → Λ^{s+1}_∘, s in 0..=n
    wedge: Vec<Vec<RatMatrix>>,
    // contract[s][k] = de_k⌟ : Λ^s_∘ → Λ^{s−1}_∘, s in 0..=n+1
    contract: Vec<Vec<RatMatrix>>,
}

impl PrimitiveCalculus {
    pub fn new(n: usize) -> Result<Self> {
        let e = build_e(n)?;
        let ext = ExteriorAlgebra::new(n);
        let d = 2 * n;
        let mut prim = Vec::new();
        for s in 0..=(n as i32 + 1) {
            let lam = ext.dual_lefschetz(s);
            let basis = lam.kernel_matrix().with_codomain(lam.domain().clone());
            prim.push(Subspace::new(basis, prim_label(n, s))?);
        }
        let neg = Subspace::new(
            RatMatrix::zeros(0, 0).with_codomain(super::exterior::lambda_label(n, -1)),
            prim_label(n, -1),
        )?;

        let mut contract = Vec::new();
        for s in 0..=(n as i32 + 1) {
            let target = if s == 0 { &neg } else { &prim[s as usize - 1] };
            let mut row = Vec::new();
            for k in 0..d {
                let amb = &ext.contract(k, s) * prim[s as usize].embedding();
                row.push(target.restrict(&amb).map_err(|err| {
                    Error::Failed(format!("contraction leaves the primitive forms: {err}"))
                })?);
            }
            contract.push(row);
        }

        let mut calc = PrimitiveCalculus {
            n,
            e,
            ext,
            prim,
            wedge: Vec::new(),
            contract,
        };
        for s in 0..=n as i32 {
            let row = (0..d)
                .map(|k| {
                    let mut unit = vec![q(0, 1); d];
                    unit[k] = q(1, 1);
                    calc.wedge_circ_by_formula(&unit, s)
                })
                .collect::<Result<Vec<_>>>()?;
            calc.wedge.push(row);
        }
        Ok(calc)
    }

    pub fn dim(&self, s: i32) -> usize {
        if s < 0 || s as usize > self.n + 1 {
            0
        } else {
            self.prim[s as usize].dim()
        }
    }

    /// Λ^s_∘E as an embedded subspace of Λ^sE; only 0 ≤ s ≤ n is exposed.
    pub fn primitive_basis(&self, s: i32) -> Result<&Subspace<Rational>> {
        if s < 0 || s as usize > self.n {
            return out_of_range(format!("primitive forms need 0 ≤ s ≤ n, got s={s}"));
        }
        Ok(&self.prim[s as usize])
    }

    pub(crate) fn subspace(&self, s: i32) -> &Subspace<Rational> {
        &self.prim[s as usize]
    }

    /// e∧_∘ on Λ^s_∘E straight from the projection formula
    /// e∧ω − 1/(n−s+1) L_E∧(e^#⌟ω), checked to land in Λ^{s+1}_∘E.
    fn wedge_circ_by_formula(&self, e: &[Rational], s: i32) -> Result<RatMatrix> {
        let n = self.n as i32;
        let emb = self.prim[s as usize].embedding();
        let plain = &self.ext.wedge_vec(e, s) * emb;
        let corr = &(&self.ext.lefschetz(s + 1) * &self.ext.contract_vec(&self.e.sharp(e), s)) * emb;
        let amb = &plain - &corr.scale(&q(1, (n - s + 1) as i64));
        self.prim[s as usize + 1].restrict(&amb).map_err(|err| {
            Error::Failed(format!("e∧_∘ is not primitive on degree {s}: {err}"))
        })
    }

    /// e_k∧_∘ : Λ^s_∘ → Λ^{s+1}_∘ for 0 ≤ s ≤ n. At s = n the target is
    /// the zero space.
    pub fn wedge_basis(&self, k: usize, s: i32) -> &RatMatrix {
        &self.wedge[s as usize][k]
    }

    /// de_k⌟ : Λ^s_∘ → Λ^{s−1}_∘ for 0 ≤ s ≤ n.
    pub fn contract_basis(&self, k: usize, s: i32) -> &RatMatrix {
        &self.contract[s as usize][k]
    }

    /// e_k∧_∘ as an owned matrix, extended by the zero map from Λ^{−1}_∘.
    pub(crate) fn w(&self, k: usize, s: i32) -> RatMatrix {
        if s < 0 {
            return RatMatrix::zeros(self.dim(s + 1), 0)
                .labeled(prim_label(self.n, s + 1), prim_label(self.n, s));
        }
        self.wedge[s as usize][k].clone()
    }

    /// e∧_∘ for a general e, extended by zero below degree 0.
    pub(crate) fn w_vec(&self, e: &[Rational], s: i32) -> RatMatrix {
        if s < 0 {
            return self.w(0, s);
        }
        self.wedge_any(e, s)
    }

    /// η⌟ on Λ^s_∘E for 0 ≤ s ≤ n+1.
    pub(crate) fn c_vec(&self, eta: &[Rational], s: i32) -> RatMatrix {
        RatMatrix::lincomb(eta, &self.contract[s as usize])
    }

    /// e∧_∘ for a general e, public range s < n.
    pub fn wedge_circ(&self, e: &[Rational], s: i32) -> Result<RatMatrix> {
        if s < 0 || s >= self.n as i32 {
            return out_of_range(format!("e∧_∘ on Λ^s_∘E needs 0 ≤ s < n, got s={s}"));
        }
        Ok(self.wedge_any(e, s))
    }

    /// e∧_∘ including the boundary degree s = n.
    pub(crate) fn wedge_any(&self, e: &[Rational], s: i32) -> RatMatrix {
        RatMatrix::lincomb(e, &self.wedge[s as usize])
    }

    /// η⌟ on Λ^s_∘E for a covector η.
    pub fn contract(&self, eta: &[Rational], s: i32) -> Result<RatMatrix> {
        if s < 0 || s as usize > self.n {
            return out_of_range(format!("contraction on Λ^s_∘E needs 0 ≤ s ≤ n, got s={s}"));
        }
        Ok(RatMatrix::lincomb(eta, &self.contract[s as usize]))
    }

    /// e^#⌟ on Λ^s_∘E.
    pub fn contract_sharp(&self, e: &[Rational], s: i32) -> Result<RatMatrix> {
        self.contract(&self.e.sharp(e), s)
    }

    /// Second route to e∧_∘: project e∧ω onto ker Λ along im L.
    pub fn wedge_circ_via_projector(&self, e: &[Rational], s: i32) -> Result<RatMatrix> {
        if s < 0 || s >= self.n as i32 {
            return out_of_range(format!("e∧_∘ on Λ^s_∘E needs 0 ≤ s < n, got s={s}"));
        }
        let t = s + 1;
        let prim = &self.prim[t as usize];
        let im_l = self.ext.lefschetz(t).column_space();
        let split = prim.embedding().hstack(&im_l);
        let inv = split.inverse()?;
        let sel = inv
            .select_rows(&(0..prim.dim()).collect::<Vec<_>>())
            .labeled(prim.label().clone(), prim.ambient().clone());
        let plain = &self.ext.wedge_vec(e, s) * self.prim[s as usize].embedding();
        Ok(&sel * &plain)
    }
}

/// e∧ω − 1/(n−s+1) L∧(e^#⌟ω) is killed by Λ for every basis vector e and
/// primitive ω, it is what e∧_∘ computes, and it agrees with the projection
/// of e∧ω onto ker Λ along im L.
pub fn check_wedge_circ(pc: &PrimitiveCalculus, s: i32) -> Result<Report> {
    let n = pc.n as i32;
    if s < 0 || s >= n {
        return out_of_range(format!("e∧_∘ on Λ^s_∘E needs 0 ≤ s < n, got s={s}"));
    }
    let d = 2 * pc.n;
    let emb = pc.prim[s as usize].embedding();
    let mut rep = Report::new();
    for k in 0..d {
        let mut e = vec![q(0, 1); d];
        e[k] = q(1, 1);
        let plain = &pc.ext.wedge_vec(&e, s) * emb;
        let corr = &(&pc.ext.lefschetz(s + 1) * &pc.ext.contract_vec(&pc.e.sharp(&e), s)) * emb;
        let amb = &plain - &corr.scale(&q(1, (n - s + 1) as i64));
        rep.is_zero(format!("Λ(e_{k}∧_∘ω) = 0"), &(&pc.ext.dual_lefschetz(s + 1) * &amb));
        let circ = pc.wedge_circ(&e, s)?;
        rep.matrix_eq(format!("e_{k}∧_∘ matches the formula"), &(pc.prim[s as usize + 1].embedding() * &circ), &amb);
        rep.matrix_eq(format!("e_{k}∧_∘ matches the projection route"), &circ, &pc.wedge_circ_via_projector(&e, s)?);
    }
    Ok(rep)
}
