//! The Killing fiber Λ^n_∘E ⊕ H⊗Λ^{n−1}_∘E ⊕ Λ^{n−2}_∘E, the perturbation
//! A_X and the curvature of ∇ + A.
//!
//! λ only enters through λ², so A_X is stored divided by λ and every
//! quadratic expression picks up λ² = κ(n+3)/(4(n+2)).

use num_traits::Zero;
use serde::Serialize;

use super::curvature::{curvature_parts, CurvatureModel, Dec};
use crate::clifford::{
    check_adjointness, frame_sum, iota_coefficient, mu_dec, r_e, r_h, summe_value, Clifford, MuKind, TangentFrame,
    TangentVector,
};
use crate::error::{out_of_range, Error, Result};
use crate::rep_spaces::actions::derivation_on_primitive;
use crate::rep_spaces::sym_h;
use crate::report::Report;
use crate::scalars::q;
use crate::{RatMatrix, Rational, Scalar, ScalarMatrix};

/// Block names in the order ψ₀, ψ₁, ψ₋.
pub const BLOCK_NAMES: [&str; 3] = ["ψ₀", "ψ₁", "ψ₋"];

#[derive(Clone, Debug, Serialize)]
pub struct KillingFiber {
    pub n: usize,
    /// (r, s) of each block.
    pub blocks: [(i32, i32); 3],
    pub dims: [usize; 3],
}

impl KillingFiber {
    pub fn new(cl: &Clifford) -> Result<Self> {
        let n = cl.n();
        if n < 2 {
            return out_of_range(format!("the Killing fiber needs n ≥ 2, got n={n}"));
        }
        let n = n as i32;
        let blocks = [(0, n), (1, n - 1), (0, n - 2)];
        let dims = blocks.map(|(r, s)| cl.fiber_dim(r, s));
        Ok(KillingFiber { n: cl.n(), blocks, dims })
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn offset(&self, b: usize) -> usize {
        self.dims[..b].iter().sum()
    }

    /// The block living in Sym^rH⊗Λ^s_∘E, if any.
    pub fn block_at(&self, r: i32, s: i32) -> Option<usize> {
        self.blocks.iter().position(|&rs| rs == (r, s))
    }
}

/// λ²/κ = (n+3)/(4(n+2)).
pub fn lambda_squared_over_kappa(n: usize) -> Rational {
    let n = n as i64;
    q(n + 3, 4 * (n + 2))
}

/// Nonzero entries of A_X/λ as (row, column, μ, coefficient).
pub fn perturbation_entries(n: usize) -> [(usize, usize, MuKind, Rational); 4] {
    let n = n as i64;
    [
        (0, 1, MuKind::MinusPlus, q(1, n + 3)),
        (1, 0, MuKind::PlusMinus, q(1, 4 * n)),
        (1, 2, MuKind::PlusPlus, q(-3, 2 * (n + 3))),
        (2, 1, MuKind::MinusMinus, q(1, 4 * n)),
    ]
}

/// a_X = A_X/(√2λ) for X = h⊗e, a rational matrix.
pub fn perturbation_rational(cl: &Clifford, fib: &KillingFiber, h: &[Rational], e: &[Rational]) -> Result<RatMatrix> {
    let mut m = RatMatrix::zeros(fib.dim(), fib.dim());
    for (row, col, kind, c) in perturbation_entries(fib.n) {
        let (r, s) = fib.blocks[col];
        let blk = mu_dec(cl, kind, h, e, r, s)?.scale(&c);
        m.set_block(fib.offset(row), fib.offset(col), &blk);
    }
    Ok(m)
}

/// A_X/λ for any X ∈ H⊗E.
pub fn perturbation(cl: &Clifford, fib: &KillingFiber, x: &TangentVector) -> Result<ScalarMatrix> {
    let mut m = ScalarMatrix::zeros(fib.dim(), fib.dim());
    for (row, col, kind, c) in perturbation_entries(fib.n) {
        let (r, s) = fib.blocks[col];
        let blk = cl.build_mu(kind, x, r, s)?.scale(&Scalar::real(c));
        m.set_block(fib.offset(row), fib.offset(col), &blk);
    }
    Ok(m)
}

/// R^Killing_{X,Y} = κ·C_{X,Y} + H_{X,Y}, where H is R^hyper acting
/// blockwise and C collects the Weyl-type part of R and [A,A]/κ.
#[derive(Clone, Debug)]
pub struct KillingCurvature {
    pub kappa_coefficient: RatMatrix,
    pub hyper: RatMatrix,
    /// R^H + R^E blockwise, before the factor −κ/(8n(n+2)).
    pub weyl: RatMatrix,
}

impl KillingCurvature {
    pub fn total(&self, kappa: &Rational) -> RatMatrix {
        &self.kappa_coefficient.scale(kappa) + &self.hyper
    }
}

fn hyper_block(cl: &Clifford, model: &CurvatureModel, x: Dec, y: Dec, r: i32, s: i32) -> Result<RatMatrix> {
    let sig = cl.h.sigma(x.0, y.0);
    let dim = cl.fiber_dim(r, s);
    if sig.is_zero() {
        return Ok(RatMatrix::zeros(dim, dim));
    }
    let act = derivation_on_primitive(&cl.pc, &model.quartic.endo(cl, x.1, y.1), s)?;
    Ok(RatMatrix::identity(sym_h::sym_dim(r)).kron(&act).scale(&sig))
}

/// R^Killing at a pair of decomposable vectors, given a_X and a_Y.
pub fn killing_curvature_with(
    cl: &Clifford,
    fib: &KillingFiber,
    model: &CurvatureModel,
    x: Dec,
    y: Dec,
    ax: &RatMatrix,
    ay: &RatMatrix,
) -> Result<KillingCurvature> {
    let n = fib.n as i64;
    let dim = fib.dim();
    let (mut weyl, mut hyper) = (RatMatrix::zeros(dim, dim), RatMatrix::zeros(dim, dim));
    for (b, &(r, s)) in fib.blocks.iter().enumerate() {
        let o = fib.offset(b);
        let w = &r_h(cl, x, y, r, s)? + &r_e(cl, x, y, r, s)?;
        weyl.set_block(o, o, &w);
        hyper.set_block(o, o, &hyper_block(cl, model, x, y, r, s)?);
    }
    // [A,A] = 2λ²[a_X, a_Y] = κ·(n+3)/(2(n+2))·[a_X, a_Y]
    let comm = &(ax * ay) - &(ay * ax);
    let kappa_coefficient = &weyl.scale(&q(-1, 8 * n * (n + 2))) + &comm.scale(&(lambda_squared_over_kappa(fib.n) * q(2, 1)));
    Ok(KillingCurvature { kappa_coefficient, hyper, weyl })
}

fn unit(len: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![q(0, 1); len];
    v[k] = q(1, 1);
    v
}

fn basis_vectors(n: usize) -> Vec<(Vec<Rational>, Vec<Rational>)> {
    let d = 2 * n;
    (0..2).flat_map(|a| (0..d).map(move |k| (unit(2, a), unit(d, k)))).collect()
}

/// R^Killing = R^hyper on every pair of basis vectors h_a⊗e_k.
pub fn check_killing_curvature(cl: &Clifford, model: &CurvatureModel) -> Result<Report> {
    let fib = KillingFiber::new(cl)?;
    if model.n != fib.n {
        return Err(Error::Invalid(format!("curvature model for n={}, fiber for n={}", model.n, fib.n)));
    }
    let vecs = basis_vectors(fib.n);
    let a: Vec<RatMatrix> = vecs
        .iter()
        .map(|(h, e)| perturbation_rational(cl, &fib, h, e))
        .collect::<Result<_>>()?;
    let mut rep = Report::new();
    let (mut kappa_bad, mut total_bad, mut sym0_bad) = (None, None, None);
    for i in 0..vecs.len() {
        for j in i + 1..vecs.len() {
            let (x, y) = ((&vecs[i].0[..], &vecs[i].1[..]), (&vecs[j].0[..], &vecs[j].1[..]));
            let kc = killing_curvature_with(cl, &fib, model, x, y, &a[i], &a[j])?;
            if kappa_bad.is_none() && !kc.kappa_coefficient.is_zero() {
                kappa_bad = Some(format!("pair ({i},{j}), entry {:?}", kc.kappa_coefficient.first_nonzero()));
            }
            if total_bad.is_none() && !kc.total(&model.kappa).same_entries(&kc.hyper) {
                total_bad = Some(format!("pair ({i},{j})"));
            }
            // Sym⁰H blocks see no R^H
            for b in [0, 2] {
                let (r, s) = fib.blocks[b];
                if sym0_bad.is_none() && !r_h(cl, x, y, r, s)?.is_zero() {
                    sym0_bad = Some(format!("pair ({i},{j}), block {}", BLOCK_NAMES[b]));
                }
            }
        }
    }
    let mut record = |name: &str, bad: Option<String>| match bad {
        None => rep.pass(name),
        Some(w) => rep.fail(name, w),
    };
    record("κ-part of R + [A,A] vanishes", kappa_bad);
    record("R^Killing = R^hyper", total_bad);
    record("R^H vanishes on the Sym⁰H blocks", sym0_bad);
    if fib.blocks[2].1 == 0 {
        // n = 2: ψ₋ is a function
        let (x, y) = ((&vecs[0].0[..], &vecs[0].1[..]), (&vecs[1].0[..], &vecs[1].1[..]));
        rep.is_zero("R^E vanishes on Λ⁰E", &r_e(cl, x, y, 0, 0)?);
    }
    if model.quartic.is_zero() {
        rep.note("ℍPⁿ model", "𝔎 = 0, so the check above says R^Killing = 0");
    }
    Ok(rep)
}

/// R_{X,Y} on H⊗E split as (R^H, R^E, R^hyper), re-exported for callers
/// that want the tangent representation next to the Killing one.
pub fn tangent_curvature(cl: &Clifford, model: &CurvatureModel, x: Dec, y: Dec) -> [RatMatrix; 3] {
    curvature_parts(cl, model, x, y)
}

/// blockdiag((n+3)/(4n)·G₀, G₁, 6n/(n+3)·G₋) from the fiber Gram matrices.
pub fn killing_gram(cl: &Clifford, fib: &KillingFiber) -> Result<RatMatrix> {
    let n = fib.n as i64;
    let weights = [q(n + 3, 4 * n), q(1, 1), q(6 * n, n + 3)];
    let mut g = RatMatrix::zeros(fib.dim(), fib.dim());
    for (b, &(r, s)) in fib.blocks.iter().enumerate() {
        let o = fib.offset(b);
        g.set_block(o, o, &cl.gram(r, s)?.scale(&weights[b]));
    }
    Ok(g)
}

/// G·A_X + A_X^†·G = 0 for every frame vector X, plus the underlying
/// adjoint relations between the μ's.
pub fn check_skew_hermitian(cl: &Clifford, frame: &TangentFrame) -> Result<Report> {
    let fib = KillingFiber::new(cl)?;
    let g = killing_gram(cl, &fib)?.map(|v| Scalar::real(v.clone()));
    let mut rep = Report::new();
    let mut bad = None;
    for (idx, x) in frame.vectors.iter().enumerate() {
        let a = perturbation(cl, &fib, x)?;
        let lhs = &(&g * &a) + &(&a.adjoint() * &g);
        if !lhs.is_zero() {
            bad = Some(format!("frame vector {idx}, entry {:?}", lhs.first_nonzero()));
            break;
        }
    }
    match bad {
        None => rep.pass(format!("A_X skew for ⟨,⟩ on all {} frame vectors", frame.vectors.len())),
        Some(w) => rep.fail("A_X skew for ⟨,⟩", w),
    }
    let zero = perturbation(cl, &fib, &TangentVector::zero(fib.n))?;
    rep.is_zero("A_0 = 0", &zero);
    rep.absorb("adjoint relations", check_adjointness(cl, frame)?);
    Ok(rep)
}

/// One consequence D^kind ψ_row = coefficient·λ·ψ_target.
#[derive(Clone, Debug, Serialize)]
pub struct Consequence {
    pub operator: &'static str,
    pub field: &'static str,
    pub target: &'static str,
    #[serde(serialize_with = "crate::report::serialize_display")]
    pub coefficient: Rational,
}

fn d_name(kind: MuKind) -> &'static str {
    match kind {
        MuKind::PlusMinus => "D⁺₋",
        MuKind::MinusPlus => "D⁻₊",
        MuKind::PlusPlus => "D⁺₊",
        MuKind::MinusMinus => "D⁻₋",
    }
}

fn opposite(kind: MuKind) -> MuKind {
    match kind {
        MuKind::PlusMinus => MuKind::MinusPlus,
        MuKind::MinusPlus => MuKind::PlusMinus,
        MuKind::PlusPlus => MuKind::MinusMinus,
        MuKind::MinusMinus => MuKind::PlusPlus,
    }
}

/// Scalar value of a frame sum, or an error if it is not a multiple of id.
fn sum_scalar(m: Option<RatMatrix>) -> Result<Rational> {
    match m {
        None => Ok(q(0, 1)),
        Some(m) if m.is_zero() => Ok(q(0, 1)),
        Some(m) => m
            .as_scalar()
            .ok_or_else(|| Error::Failed("frame sum is not a multiple of the identity".into())),
    }
}

/// Every D^kind ψ_row for ∇ψ = −Aψ, computed from frame sums. Components
/// that vanish are omitted.
pub fn killing_consequences(cl: &Clifford, frame: &TangentFrame) -> Result<Vec<Consequence>> {
    let fib = KillingFiber::new(cl)?;
    let mut out = Vec::new();
    for row in 0..3 {
        for kind in MuKind::ALL {
            // collect by target degree
            let mut acc: Vec<((i32, i32), Rational)> = Vec::new();
            for (r0, col, ek, c) in perturbation_entries(fib.n) {
                if r0 != row {
                    continue;
                }
                let (r, s) = fib.blocks[col];
                let (d1, e1) = ek.shift();
                let (d2, e2) = kind.shift();
                let tgt = (r + d1 + d2, s + e1 + e2);
                let v = -(c * sum_scalar(frame_sum(cl, frame, kind, ek, r, s)?)?);
                match acc.iter_mut().find(|(t, _)| *t == tgt) {
                    Some((_, x)) => *x += v,
                    None => acc.push((tgt, v)),
                }
            }
            for ((r, s), v) in acc {
                if v.is_zero() {
                    continue;
                }
                let b = fib.block_at(r, s).ok_or_else(|| {
                    Error::Failed(format!("{} {} lands in (r,s)=({r},{s}), outside the Killing fiber", d_name(kind), BLOCK_NAMES[row]))
                })?;
                out.push(Consequence { operator: d_name(kind), field: BLOCK_NAMES[row], target: BLOCK_NAMES[b], coefficient: v });
            }
        }
    }
    Ok(out)
}

/// The four nonzero consequences of the Killing equation with their λ-coefficients.
pub fn expected_consequences(n: usize) -> Vec<Consequence> {
    let n = n as i64;
    let c = |operator, field, target, coefficient| Consequence { operator, field, target, coefficient };
    vec![
        c("D⁺₋", "ψ₀", "ψ₁", q(1, 1)),
        c("D⁻₊", "ψ₁", "ψ₀", q(1, 1)),
        c("D⁻₋", "ψ₁", "ψ₋", q(4 * (n + 4), n + 3)),
        c("D⁺₊", "ψ₋", "ψ₁", q(-(n - 1), 2 * n)),
    ]
}

/// Frame-sum bookkeeping for ∇ψ = −A·ψ: the list of nonzero D-components,
/// the ι round trip back to A, and the ψ₋ normalization.
pub fn check_killing_equation_consequences(cl: &Clifford, frame: &TangentFrame) -> Result<Report> {
    let fib = KillingFiber::new(cl)?;
    let n = fib.n;
    let got = killing_consequences(cl, frame)?;
    let want = expected_consequences(n);
    let mut rep = Report::new();
    for w in &want {
        let name = format!("{}{} = ({})λ{}", w.operator, w.field, w.coefficient, w.target);
        match got.iter().find(|g| g.operator == w.operator && g.field == w.field && g.target == w.target) {
            Some(g) if g.coefficient == w.coefficient => rep.pass(name),
            Some(g) => rep.fail(name, format!("computed {}", g.coefficient)),
            None => rep.fail(name, "component vanishes"),
        }
    }
    let extra: Vec<String> = got
        .iter()
        .filter(|g| !want.iter().any(|w| w.operator == g.operator && w.field == g.field && w.target == g.target))
        .map(|g| format!("{}{} = ({})λ{}", g.operator, g.field, g.coefficient, g.target))
        .collect();
    rep.check("all other D-components vanish", extra.is_empty(), || extra.join(", "));

    // ι round trip: ∇ψ_row = ι(Dψ_row) recovers the A entry
    for w in &want {
        let row = BLOCK_NAMES.iter().position(|&b| b == w.field).expect("known block");
        let tgt = BLOCK_NAMES.iter().position(|&b| b == w.target).expect("known block");
        let kind = MuKind::ALL.into_iter().find(|&k| d_name(k) == w.operator).expect("known operator");
        let entry = perturbation_entries(n).into_iter().find(|e| e.0 == row && e.1 == tgt);
        let name = format!("ι round trip for {}{}", w.operator, w.field);
        let Some((_, _, ek, c)) = entry else {
            rep.fail(name, "no A entry in that position");
            continue;
        };
        if ek != opposite(kind) {
            rep.fail(name, format!("A entry uses {}, ι uses {}", ek.name(), opposite(kind).name()));
            continue;
        }
        let (r, s) = fib.blocks[tgt];
        let sum = sum_scalar(frame_sum(cl, frame, kind, ek, r, s)?)?;
        if sum.is_zero() {
            rep.fail(name, "μ∘μ' vanishes, no right inverse");
            continue;
        }
        let iota = sum.recip();
        let (rr, sr) = fib.blocks[row];
        if sr == n as i32 - rr && iota != iota_coefficient(kind, n, rr) {
            rep.fail(name.clone(), format!("coefficient {iota} differs from the expected {}", iota_coefficient(kind, n, rr)));
            continue;
        }
        let back = &iota * &w.coefficient;
        rep.check(name, back == -c.clone(), || format!("ι·D = {back}, −A entry = {}", -c.clone()));
    }

    // ψ₋ := (1/(4λ))((n+3)/(n+4)) D⁻₋ψ₁
    let nn = n as i64;
    let d = want.iter().find(|w| w.operator == "D⁻₋").expect("listed").coefficient.clone();
    let norm = q(nn + 3, 4 * (nn + 4)) * d;
    rep.check("ψ₋ normalization round trip", norm == q(1, 1), || format!("got {norm}"));

    let sample = summe_value(n, 1, n as i32 - 1, MuKind::PlusPlus, MuKind::MinusMinus).expect("closed-form pair");
    rep.note(
        "T⁻ψ₁ = 0",
        format!("fiberwise only through the twistor route; its r = 1 instance has s = {} (Σμ⁺₊μ⁻₋ = {sample})", n - 1),
    );
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build_frame;
    use crate::killing::Quartic;
    use crate::scalars::qi;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fiber_dims() {
        for n in 2..=4usize {
            let cl = Clifford::new(n).unwrap();
            let f = KillingFiber::new(&cl).unwrap();
            let d = |s: i32| crate::rep_spaces::primitive_dim(n, s);
            assert_eq!(f.dim(), d(n as i32) + 2 * d(n as i32 - 1) + d(n as i32 - 2));
        }
        assert!(KillingFiber::new(&Clifford::new(1).unwrap()).is_err());
    }

    #[test]
    fn sparsity_pattern() {
        let cl = Clifford::new(2).unwrap();
        let f = KillingFiber::new(&cl).unwrap();
        let a = perturbation_rational(&cl, &f, &[qi(1), qi(2)], &[qi(1), qi(0), qi(3), qi(-1)]).unwrap();
        for b in 0..3 {
            let o = f.offset(b);
            assert!(a.block(o, o, f.dims[b], f.dims[b]).is_zero());
        }
        assert!(a.block(f.offset(0), f.offset(2), f.dims[0], f.dims[2]).is_zero());
        assert!(a.block(f.offset(2), f.offset(0), f.dims[2], f.dims[0]).is_zero());
    }

    #[test]
    fn projective_space_is_flat() {
        for n in 2..=3 {
            let cl = Clifford::new(n).unwrap();
            let rep = check_killing_curvature(&cl, &CurvatureModel::projective(n, qi(3))).unwrap();
            assert!(rep.passed(), "n={n}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn random_quartics() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 2..=3 {
            let cl = Clifford::new(n).unwrap();
            let model = CurvatureModel::new(n, q(7, 2), Quartic::random(2 * n, &mut rng)).unwrap();
            let rep = check_killing_curvature(&cl, &model).unwrap();
            assert!(rep.passed(), "n={n}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn middle_block_for_fourth_power() {
        // n = 2, 𝔎 = (de₁)⁴: the H⊗Λ¹_∘E block is σ_H(h₁,h₂) id⊗𝔎_{e₁,e₂}
        let cl = Clifford::new(2).unwrap();
        let fib = KillingFiber::new(&cl).unwrap();
        let model = CurvatureModel::new(2, qi(1), Quartic::power(&unit(4, 1))).unwrap();
        let (h1, h2) = (vec![qi(1), qi(1)], vec![qi(0), qi(1)]);
        let (e1, e2) = (vec![qi(1), qi(2), qi(0), qi(1)], vec![qi(0), qi(-1), qi(1), qi(3)]);
        let ax = perturbation_rational(&cl, &fib, &h1, &e1).unwrap();
        let ay = perturbation_rational(&cl, &fib, &h2, &e2).unwrap();
        let kc = killing_curvature_with(&cl, &fib, &model, (&h1, &e1), (&h2, &e2), &ax, &ay).unwrap();
        let total = kc.total(&model.kappa);
        let mid = total.block(fib.offset(1), fib.offset(1), fib.dims[1], fib.dims[1]);
        let sub = cl.pc.primitive_basis(1).unwrap();
        let amb = sub.ambient().clone();
        let k = model.quartic.endo(&cl, &e1, &e2).labeled(amb.clone(), amb);
        let on_prim = sub.restrict(&(&k * sub.embedding())).unwrap();
        let want = RatMatrix::identity(2).kron(&on_prim).scale(&cl.h.sigma(&h1, &h2));
        assert!(mid.same_entries(&want));
        assert!(!want.is_zero());
    }

    #[test]
    fn skew_hermitian() {
        for n in 2..=3 {
            let cl = Clifford::new(n).unwrap();
            let frame = build_frame(&cl).unwrap();
            let rep = check_skew_hermitian(&cl, &frame).unwrap();
            assert!(rep.passed(), "n={n}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn consequences() {
        for n in 2..=4 {
            let cl = Clifford::new(n).unwrap();
            let frame = build_frame(&cl).unwrap();
            let rep = check_killing_equation_consequences(&cl, &frame).unwrap();
            assert!(rep.passed(), "n={n}: {:?}", rep.first_failure());
        }
        let at2 = expected_consequences(2);
        assert_eq!(at2[2].coefficient, q(24, 5));
        assert_eq!(at2[3].coefficient, q(-1, 4));
    }
}
