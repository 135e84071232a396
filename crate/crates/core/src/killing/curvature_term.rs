//! The curvature term in the twistor Weitzenböck formula on Sym^rH⊗Λ^s_∘E
//! has no component in K^{s−1}E.

use rand::Rng;

use super::curvature::Quartic;
use crate::clifford::Clifford;
use crate::error::{out_of_range, Result};
use crate::rep_spaces::actions::{derivation_on_primitive, sym2_endo};
use crate::rep_spaces::sym_h;
use crate::report::Report;
use crate::scalars::{q, random_rational};
use crate::{RatMatrix, Rational};

fn unit(d: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![q(0, 1); d];
    v[k] = q(1, 1);
    v
}

/// φ ↦ Σ_{ij} (de_i^♭⊗de_j⌟ + de_j^♭⊗de_i⌟) act(i,j)φ : Λ^s_∘ → E⊗Λ^{s−1}_∘,
/// where act(i,j) is an endomorphism of Λ^s_∘E.
fn insertion_morphism(cl: &Clifford, s: i32, act: impl Fn(usize, usize) -> Result<RatMatrix>) -> Result<RatMatrix> {
    let pc = &cl.pc;
    let d = 2 * pc.n;
    let (src, dst) = (pc.dim(s), pc.dim(s - 1));
    let flats: Vec<Vec<Rational>> = (0..d).map(|i| pc.e.flat(&unit(d, i))).collect();
    let mut out = RatMatrix::zeros(d * dst, src);
    for i in 0..d {
        for j in 0..d {
            let a = act(i, j)?;
            if a.is_zero() {
                continue;
            }
            for (u, w) in [(i, j), (j, i)] {
                let c = pc.contract_basis(w, s) * &a;
                for (row, f) in flats[u].iter().enumerate() {
                    if !num_traits::Zero::is_zero(f) {
                        out.add_block(row * dst, 0, &c.scale(f));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The R^E contribution Sym^rH⊗Λ^s_∘E → Sym^rH⊗(E⊗Λ^{s−1}_∘E) followed by p̃r_K.
pub fn r_e_contribution(cl: &Clifford, r: i32, s: i32) -> Result<RatMatrix> {
    let d = 2 * cl.n();
    let m = insertion_morphism(cl, s, |i, j| {
        derivation_on_primitive(&cl.pc, &sym2_endo(&cl.pc.e, &unit(d, i), &unit(d, j)), s)
    })?;
    let pk = cl.pc.pr_tilde_k_endo(s - 1)?.with_codomain(m.codomain().clone()).with_domain(m.codomain().clone());
    Ok(RatMatrix::identity(sym_h::sym_dim(r)).kron(&(&pk * &m)))
}

/// The same morphism with 𝔎_{e_i,e_j} in place of e_ie_j, before projecting.
pub fn hyper_contribution(cl: &Clifford, s: i32, quartic: &Quartic) -> Result<RatMatrix> {
    let d = 2 * cl.n();
    insertion_morphism(cl, s, |i, j| {
        derivation_on_primitive(&cl.pc, &quartic.endo(cl, &unit(d, i), &unit(d, j)), s)
    })
}

/// α⌟ α^♭∧_∘ α⌟ on Λ^s_∘E.
pub fn alpha_cubic(cl: &Clifford, alpha: &[Rational], s: i32) -> Result<RatMatrix> {
    let pc = &cl.pc;
    let inner = pc.contract(alpha, s)?;
    let wedge = pc.wedge_any(&pc.e.flat(alpha), s - 1);
    let outer = pc.contract(alpha, s)?;
    Ok(&(&outer * &wedge) * &inner)
}

/// (i) α⌟α^♭∧_∘α⌟ = 0 for basis covectors, sums of pairs and random α,
/// and the unprojected 𝔎-morphism vanishes for random 𝔎; (ii) the
/// R^E-morphism into Sym^rH⊗K^{s−1}E is zero.
pub fn check_curvature_term_vanishing<G: Rng + ?Sized>(cl: &Clifford, r: i32, s: i32, rng: &mut G) -> Result<Report> {
    let n = cl.n() as i32;
    if s < 2 || s > n || r < 0 {
        return out_of_range(format!("curvature term needs r ≥ 0 and 2 ≤ s ≤ n, got (r,s)=({r},{s})"));
    }
    let d = 2 * cl.n();
    let mut alphas: Vec<Vec<Rational>> = (0..d).map(|k| unit(d, k)).collect();
    for i in 0..d {
        for j in i + 1..d {
            alphas.push((0..d).map(|k| q((k == i || k == j) as i64, 1)).collect());
        }
    }
    for _ in 0..4 {
        alphas.push((0..d).map(|_| random_rational(rng, 5)).collect());
    }
    let mut rep = Report::new();
    let bad = alphas
        .iter()
        .map(|a| alpha_cubic(cl, a, s).map(|m| (a, m)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .find(|(_, m)| !m.is_zero());
    match bad {
        None => rep.pass(format!("α⌟α^♭∧_∘α⌟ = 0 on Λ^{s}_∘E for {} covectors", alphas.len())),
        Some((a, _)) => rep.fail("α⌟α^♭∧_∘α⌟ = 0", format!("α = {:?}", a.iter().map(|x| x.to_string()).collect::<Vec<_>>())),
    }
    let k = Quartic::random(d, rng);
    rep.is_zero("𝔎-morphism vanishes before projecting (random 𝔎)", &hyper_contribution(cl, s, &k)?);
    rep.is_zero(format!("R^E-morphism into Sym^{r}H⊗K^{}E", s - 1), &r_e_contribution(cl, r, s)?);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn n2_first_covector() {
        let cl = Clifford::new(2).unwrap();
        assert!(alpha_cubic(&cl, &unit(4, 1), 2).unwrap().is_zero());
    }

    #[test]
    fn small_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (n, r, s) in [(2, 0, 2), (3, 1, 2), (3, 0, 3), (4, 2, 3)] {
            let cl = Clifford::new(n).unwrap();
            let rep = check_curvature_term_vanishing(&cl, r, s, &mut rng).unwrap();
            assert!(rep.passed(), "(n,r,s)=({n},{r},{s}): {:?}", rep.first_failure());
        }
    }

    #[test]
    fn unprojected_r_e_map_is_not_zero() {
        // the projection is doing real work
        let cl = Clifford::new(3).unwrap();
        let m = insertion_morphism(&cl, 2, |i, j| {
            derivation_on_primitive(&cl.pc, &sym2_endo(&cl.pc.e, &unit(6, i), &unit(6, j)), 2)
        })
        .unwrap();
        assert!(!m.is_zero());
    }

    #[test]
    fn rejects_low_degree() {
        let cl = Clifford::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(check_curvature_term_vanishing(&cl, 0, 1, &mut rng).is_err());
    }
}
