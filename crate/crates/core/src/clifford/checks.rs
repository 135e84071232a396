//! Clifford relation, hermitian adjointness and the wedge identities
//! behind the curvature of the Killing connection.

use rand::Rng;

use super::frame::metric;
use super::{Clifford, MuKind, TangentFrame, TangentVector};
use crate::error::{out_of_range, Result};
use crate::rep_spaces::actions::{derivation_on_primitive, derivation_on_sym, sym2_endo};
use crate::rep_spaces::sym_h;
use crate::report::Report;
use crate::scalars::{q, random_rational, Space};
use crate::{RatMatrix, Rational, Scalar, ScalarMatrix};

/// μ(X) = μ^+_−(X) + μ^−_+(X) on the full spinor fiber ⊕_r S_r,
/// with blocks ordered by r.
pub fn spinor_mu(cl: &Clifford, x: &TangentVector) -> Result<ScalarMatrix> {
    let n = cl.n() as i32;
    let dims: Vec<usize> = (0..=n).map(|r| cl.fiber_dim(r, n - r)).collect();
    let off: Vec<usize> = dims.iter().scan(0, |acc, d| { let o = *acc; *acc += d; Some(o) }).collect();
    let total: usize = dims.iter().sum();
    let label = Space::coeff("S", total);
    let mut out = ScalarMatrix::zeros(total, total).labeled(label.clone(), label);
    for r in 0..=n {
        let ri = r as usize;
        if r < n {
            out.set_block(off[ri + 1], off[ri], &cl.build_mu(MuKind::PlusMinus, x, r, n - r)?);
        }
        if r > 0 {
            out.set_block(off[ri - 1], off[ri], &cl.build_mu(MuKind::MinusPlus, x, r, n - r)?);
        }
    }
    Ok(out)
}

/// μ(X)μ(Y) + μ(Y)μ(X) = −2g(X,Y) on ⊕S_r for all pairs of frame vectors.
pub fn check_clifford_relation(cl: &Clifford, frame: &TangentFrame) -> Result<Report> {
    let mut rep = Report::new();
    let mus = frame.vectors.iter().map(|x| spinor_mu(cl, x)).collect::<Result<Vec<_>>>()?;
    for a in 0..mus.len() {
        for b in a..mus.len() {
            let ac = mus[a].anticommutator(&mus[b])?;
            let g = metric(cl, &frame.vectors[a], &frame.vectors[b]);
            rep.scalar_eq(format!("μ(X_{a})μ(X_{b}) + μ(X_{b})μ(X_{a}) = −2g"), &ac, &(-(g.scale(&q(2, 1)))));
        }
    }
    Ok(rep)
}

fn gram_scalar(cl: &Clifford, r: i32, s: i32) -> Result<ScalarMatrix> {
    Ok(cl.gram(r, s)?.map(|v| Scalar::real(v.clone())))
}

/// Gram matrix positive definite, by symmetric elimination with positive pivots.
fn positive_definite(g: &RatMatrix) -> bool {
    let n = g.rows();
    let mut m = g.clone();
    for k in 0..n {
        let p = m[(k, k)].clone();
        if p <= q(0, 1) {
            return false;
        }
        for i in k + 1..n {
            let f = &m[(i, k)] / &p;
            for j in k..n {
                let v = &m[(k, j)] * &f;
                m[(i, j)] -= v;
            }
        }
    }
    *g == g.transpose()
}

/// The two adjointness relations on every admissible fiber, for all frame
/// vectors and all basis vectors h_a⊗e_k (conjugation is J⊗J):
/// (μ^−_+(X)φ, ψ) = −(φ, μ^+_−(X̄)ψ) and (μ^+_+(X)φ, ψ) = (φ, μ^−_−(X̄)ψ).
pub fn check_adjointness(cl: &Clifford, frame: &TangentFrame) -> Result<Report> {
    let n = cl.n();
    let mut rep = Report::new();
    for r in 0..=n as i32 {
        for s in 0..=n as i32 {
            let g = cl.gram(r, s)?;
            rep.check(format!("hermitian product positive on ({r},{s})"), positive_definite(&g), || {
                "nonpositive pivot".into()
            });
        }
    }
    let mut vectors: Vec<TangentVector> = frame.vectors.clone();
    for a in 0..2 {
        for k in 0..2 * n {
            vectors.push(TangentVector::basis(n, a, k));
        }
    }
    let pairs = [(MuKind::MinusPlus, MuKind::PlusMinus, -1), (MuKind::PlusPlus, MuKind::MinusMinus, 1)];
    for (down, up, sign) in pairs {
        for r in 0..=n as i32 {
            for s in 0..=n as i32 {
                let (dr, ds) = down.shift();
                if !cl.fiber(r + dr, s + ds).admissible() {
                    continue;
                }
                let g_src = gram_scalar(cl, r, s)?;
                let g_dst = gram_scalar(cl, r + dr, s + ds)?;
                let mut ok = true;
                let mut witness = String::new();
                for (i, x) in vectors.iter().enumerate() {
                    let a = cl.build_mu(down, x, r, s)?;
                    let b = cl.build_mu(up, &x.real_structure(cl), r + dr, s + ds)?;
                    // (Aφ, ψ) = ψ^† G_dst A φ and (φ, Bψ) = ψ^† B^† G_src φ
                    let lhs = g_dst.compose(&a)?;
                    let rhs = b.adjoint().compose(&g_src)?.scale(&Scalar::real(q(sign, 1)));
                    if !lhs.same_entries(&rhs) {
                        ok = false;
                        witness = format!("tangent vector {i}");
                        break;
                    }
                }
                rep.check(
                    format!("{} adjoint to {}{} on ({r},{s})", down.name(), if sign < 0 { "−" } else { "" }, up.name()),
                    ok,
                    || witness.clone(),
                );
            }
        }
    }
    Ok(rep)
}

/// μ(h⊗e)/√2 for rational h, e.
pub(crate) fn mu_dec(cl: &Clifford, kind: MuKind, h: &[Rational], e: &[Rational], r: i32, s: i32) -> Result<RatMatrix> {
    let (dr, ds) = kind.shift();
    let hp = if dr > 0 { sym_h::mul(h, r) } else { sym_h::contract_circ(&cl.h.sharp(h), r) };
    let ep = if ds > 0 {
        if s >= cl.n() as i32 {
            return out_of_range("e∧_∘ beyond Λ^n_∘E");
        }
        cl.pc.wedge_circ(e, s)?
    } else {
        cl.pc.contract_sharp(e, s)?
    };
    Ok(hp.kron(&ep))
}

/// (B∧C)_{X,Y} = B_X C_Y − B_Y C_X for X = h₁⊗e₁, Y = h₂⊗e₂, including the
/// factor 2 from the two √2 prefactors.
#[allow(clippy::too_many_arguments)]
fn wedge(cl: &Clifford, b: MuKind, c: MuKind, x: (&[Rational], &[Rational]), y: (&[Rational], &[Rational]), r: i32, s: i32) -> Result<RatMatrix> {
    let (dr, ds) = c.shift();
    let xy = mu_dec(cl, b, x.0, x.1, r + dr, s + ds)?.compose(&mu_dec(cl, c, y.0, y.1, r, s)?)?;
    let yx = mu_dec(cl, b, y.0, y.1, r + dr, s + ds)?.compose(&mu_dec(cl, c, x.0, x.1, r, s)?)?;
    Ok((&xy - &yx).scale(&q(2, 1)))
}

/// R^E_{X,Y} = σ_H(h₁,h₂)(id ⊗ e₁e₂) on Sym^rH⊗Λ^s_∘E.
pub(crate) fn r_e(cl: &Clifford, x: (&[Rational], &[Rational]), y: (&[Rational], &[Rational]), r: i32, s: i32) -> Result<RatMatrix> {
    let act = derivation_on_primitive(&cl.pc, &sym2_endo(&cl.pc.e, x.1, y.1), s)?;
    let id = RatMatrix::identity(sym_h::sym_dim(r)).labeled(sym_h::sym_label(r), sym_h::sym_label(r));
    Ok(id.kron(&act).scale(&cl.h.sigma(x.0, y.0)))
}

/// R^H_{X,Y} = σ_E(e₁,e₂)(h₁h₂ ⊗ id).
pub(crate) fn r_h(cl: &Clifford, x: (&[Rational], &[Rational]), y: (&[Rational], &[Rational]), r: i32, s: i32) -> Result<RatMatrix> {
    let act = derivation_on_sym(&sym2_endo(&cl.h, x.0, y.0), r);
    let d = cl.pc.dim(s);
    let p = crate::rep_spaces::prim_label(cl.n(), s);
    let id = RatMatrix::identity(d).labeled(p.clone(), p);
    Ok(act.kron(&id).scale(&cl.pc.e.sigma(x.1, y.1)))
}

type Pair = (Vec<Rational>, Vec<Rational>);

/// The five wedge identities on every pair of basis vectors h_a⊗e_k and on
/// `random_pairs` pairs of random rational decomposable vectors.
pub fn check_wedge_identities<G: Rng + ?Sized>(cl: &Clifford, random_pairs: usize, rng: &mut G) -> Result<Report> {
    let n = cl.n();
    if n < 2 {
        return out_of_range(format!("wedge identities need n ≥ 2, got n={n}"));
    }
    let d = 2 * n;
    let unit = |len: usize, k: usize| {
        let mut v = vec![q(0, 1); len];
        v[k] = q(1, 1);
        v
    };
    let mut vectors: Vec<Pair> = Vec::new();
    for a in 0..2 {
        for k in 0..d {
            vectors.push((unit(2, a), unit(d, k)));
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..vectors.len() {
        for j in 0..vectors.len() {
            pairs.push((i, j));
        }
    }
    for _ in 0..random_pairs {
        let mut sample = || -> Pair {
            ((0..2).map(|_| random_rational(rng, 5)).collect(), (0..d).map(|_| random_rational(rng, 5)).collect())
        };
        let (x, y) = (sample(), sample());
        vectors.push(x);
        vectors.push(y);
        pairs.push((vectors.len() - 2, vectors.len() - 1));
    }

    let s = n as i32;
    use MuKind::*;
    let names = [
        "(μ^−_−∧μ^+_−) = 0 on Λ^n_∘E",
        "(μ^−_+∧μ^+_+) = 0 on Λ^{n−2}_∘E",
        "(μ^−_+∧μ^+_−) = 2R^E on Λ^n_∘E",
        "(μ^−_−∧μ^+_+) = −(4/3)R^E on Λ^{n−2}_∘E",
        "(μ^+_−∧μ^−_+ − (3/2)μ^+_+∧μ^−_−) = 2(R^H+R^E) on H⊗Λ^{n−1}_∘E",
    ];
    let mut failures: [Option<String>; 5] = Default::default();
    for &(i, j) in &pairs {
        let x = (vectors[i].0.as_slice(), vectors[i].1.as_slice());
        let y = (vectors[j].0.as_slice(), vectors[j].1.as_slice());
        let results: [(RatMatrix, RatMatrix); 5] = [
            {
                let w = wedge(cl, MinusMinus, PlusMinus, x, y, 0, s)?;
                let z = RatMatrix::zeros(w.rows(), w.cols()).labeled(w.codomain().clone(), w.domain().clone());
                (w, z)
            },
            {
                let w = wedge(cl, MinusPlus, PlusPlus, x, y, 0, s - 2)?;
                let z = RatMatrix::zeros(w.rows(), w.cols()).labeled(w.codomain().clone(), w.domain().clone());
                (w, z)
            },
            (wedge(cl, MinusPlus, PlusMinus, x, y, 0, s)?, r_e(cl, x, y, 0, s)?.scale(&q(2, 1))),
            (wedge(cl, MinusMinus, PlusPlus, x, y, 0, s - 2)?, r_e(cl, x, y, 0, s - 2)?.scale(&q(-4, 3))),
            {
                let a = wedge(cl, PlusMinus, MinusPlus, x, y, 1, s - 1)?;
                let b = wedge(cl, PlusPlus, MinusMinus, x, y, 1, s - 1)?;
                let lhs = &a - &b.scale(&q(3, 2));
                let rhs = (&r_h(cl, x, y, 1, s - 1)? + &r_e(cl, x, y, 1, s - 1)?).scale(&q(2, 1));
                (lhs, rhs)
            },
        ];
        for (k, (lhs, rhs)) in results.iter().enumerate() {
            if failures[k].is_none() && !lhs.same_entries(rhs) {
                failures[k] = Some(format!("X = {:?}⊗{:?}, Y = {:?}⊗{:?}", show(x.0), show(x.1), show(y.0), show(y.1)));
            }
        }
    }
    let mut rep = Report::new();
    for (k, name) in names.iter().enumerate() {
        match &failures[k] {
            None => rep.note(*name, format!("{} pairs", pairs.len())),
            Some(w) => rep.fail(*name, w.clone()),
        }
    }
    Ok(rep)
}

fn show(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}
