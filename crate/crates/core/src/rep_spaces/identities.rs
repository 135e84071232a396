//! The anticommutator calculus on Λ^s_∘E and Sym^rH, and the relations
//! between the two families of projectors onto Sym^rH and K^{s−1}E.

use super::pr_k::e_prim_label;
use super::primitive::{prim_label, PrimitiveCalculus};
use super::sym_h::{self, sym_label};
use super::symplectic::build_h;
use crate::error::{out_of_range, Result};
use crate::report::Report;
use crate::scalars::{q, qi, Space};
use crate::{RatMatrix, Rational};

fn unit(d: usize, k: usize) -> Vec<Rational> {
    (0..d).map(|i| qi((i == k) as i64)).collect()
}

fn identity_on(dim: usize, label: Space) -> RatMatrix {
    RatMatrix::identity(dim).labeled(label.clone(), label)
}

/// Anticommutator relations and number operators on Λ^s_∘E.
pub fn check_kom1(pc: &PrimitiveCalculus, s: i32) -> Result<Report> {
    let n = pc.n as i32;
    if s < 0 || s > n {
        return out_of_range(format!("kom1 needs 0 ≤ s ≤ n, got s={s}"));
    }
    let d = 2 * pc.n;
    let mut rep = Report::new();
    let id = identity_on(pc.dim(s), prim_label(pc.n, s));

    // e∧_∘ really lands in the primitive forms
    if s < n {
        let lam = pc.ext.dual_lefschetz(s + 1);
        let emb = pc.subspace(s + 1).embedding();
        for k in 0..d {
            rep.is_zero(format!("Λ(e_{k}∧_∘ω) = 0"), &(&lam * &(emb * pc.wedge_basis(k, s))));
        }
    }

    for a in 0..d {
        let (ea, eta_a) = (unit(d, a), unit(d, a));
        for b in 0..d {
            let (eb, eta_b) = (unit(d, b), unit(d, b));
            if s >= 2 {
                let lhs = &(&pc.c_vec(&eta_a, s - 1) * &pc.c_vec(&eta_b, s))
                    + &(&pc.c_vec(&eta_b, s - 1) * &pc.c_vec(&eta_a, s));
                rep.is_zero(format!("{{de_{a}⌟, de_{b}⌟}} = 0"), &lhs);
            }
            if s + 1 < n {
                let lhs = &(&pc.w_vec(&ea, s + 1) * &pc.w_vec(&eb, s))
                    + &(&pc.w_vec(&eb, s + 1) * &pc.w_vec(&ea, s));
                rep.is_zero(format!("{{e_{a}∧_∘, e_{b}∧_∘}} = 0"), &lhs);
            }
            // {η⌟, e∧_∘} = η(e) + 1/(n−s+1) η^♭∧_∘ e^#⌟ with η = de_a, e = e_b
            let lhs = &(&pc.c_vec(&eta_a, s + 1) * &pc.w_vec(&eb, s))
                + &(&pc.w_vec(&eb, s - 1) * &pc.c_vec(&eta_a, s));
            let corr = &pc.w_vec(&pc.e.flat(&eta_a), s - 1) * &pc.c_vec(&pc.e.sharp(&eb), s);
            let rhs = &id.scale(&qi((a == b) as i64)) + &corr.scale(&q(1, (n - s + 1) as i64));
            rep.matrix_eq(format!("{{de_{a}⌟, e_{b}∧_∘}}"), &lhs, &rhs);
        }
    }
    if s + 1 >= n {
        rep.note("{e₁∧_∘, e₂∧_∘} = 0", "target Λ^{s+2}_∘E is zero");
    }

    let mut up = id.scale(&qi(0));
    let mut down = id.scale(&qi(0));
    for i in 0..d {
        let ei = unit(d, i);
        up = &up + &(&pc.w_vec(&ei, s - 1) * &pc.c_vec(&ei, s));
        down = &down + &(&pc.c_vec(&ei, s + 1) * &pc.w_vec(&ei, s));
    }
    rep.scalar_eq("Σ e_i∧_∘ de_i⌟ = s", &up, &qi(s as i64));
    let c = q(((2 * n - s + 2) * (n - s)) as i64, (n - s + 1) as i64);
    rep.scalar_eq("Σ de_i⌟ e_i∧_∘ = (2n−s+2)(n−s)/(n−s+1)", &down, &c);
    Ok(rep)
}

/// Commutator relations and number operators on Sym^rH.
///
/// α⌟_∘ := (1/r)α⌟ needs r ≥ 1 on the space it acts on. At r = 0 the
/// relations that apply α⌟_∘ to Sym⁰H are reported as skipped and the
/// values they actually take there are recorded instead.
pub fn check_kom2(r: i32) -> Result<Report> {
    if r < 0 {
        return out_of_range(format!("kom2 needs r ≥ 0, got r={r}"));
    }
    let h = build_h();
    let mut rep = Report::new();
    let id = identity_on(r as usize + 1, sym_label(r));
    let m = |v: &[Rational], deg: i32| sym_h::mul(v, deg);
    let cc = |v: &[Rational], deg: i32| sym_h::contract_circ(v, deg);

    for a in 0..2 {
        for b in 0..2 {
            let (ha, hb) = (unit(2, a), unit(2, b));
            let lhs = &(&m(&ha, r + 1) * &m(&hb, r)) - &(&m(&hb, r + 1) * &m(&ha, r));
            rep.is_zero(format!("[h_{a}·, h_{b}·] = 0"), &lhs);

            let (alpha, hv) = (unit(2, a), unit(2, b));
            let alpha_flat = h.flat(&alpha);
            let h_sharp = h.sharp(&hv);
            let pairing = qi((a == b) as i64);
            if r >= 1 {
                let lhs = &(&cc(&unit(2, a), r - 1) * &cc(&unit(2, b), r))
                    - &(&cc(&unit(2, b), r - 1) * &cc(&unit(2, a), r));
                rep.is_zero(format!("[dh_{a}⌟_∘, dh_{b}⌟_∘] = 0"), &lhs);

                let lhs = &(&cc(&alpha, r + 1) * &m(&hv, r)) - &(&m(&hv, r - 1) * &cc(&alpha, r));
                let rhs = (&m(&alpha_flat, r - 1) * &cc(&h_sharp, r)).scale(&q(-1, (r + 1) as i64));
                rep.matrix_eq(format!("[dh_{a}⌟_∘, h_{b}·]"), &lhs, &rhs);

                let rhs = &(&m(&hv, r - 1) * &cc(&alpha, r)) - &(&m(&alpha_flat, r - 1) * &cc(&h_sharp, r));
                rep.matrix_eq(format!("dh_{a}(h_{b}) id = h·α⌟_∘ − α^♭·h^#⌟_∘"), &id.scale(&pairing), &rhs);
            } else {
                // on Sym⁰H: [α⌟_∘, h·]1 = α(h), the other terms have nothing to act on
                let lhs = &(&cc(&alpha, 1) * &m(&hv, 0)) - &(&m(&hv, -1) * &cc(&alpha, 0));
                rep.scalar_eq(format!("r=0: [dh_{a}⌟_∘, h_{b}·] = dh_{a}(h_{b})"), &lhs, &pairing);
            }
        }
    }

    let mut up = id.scale(&qi(0));
    let mut down = id.scale(&qi(0));
    for i in 0..2 {
        let hi = unit(2, i);
        up = &up + &(&m(&hi, r - 1) * &cc(&hi, r));
        down = &down + &(&cc(&hi, r + 1) * &m(&hi, r));
    }
    if r >= 1 {
        rep.scalar_eq("Σ h_i·dh_i⌟_∘ = id", &up, &qi(1));
    } else {
        rep.scalar_eq("r=0: Σ h_i·dh_i⌟_∘ = 0", &up, &qi(0));
        for name in [
            "[α₁⌟_∘, α₂⌟_∘] = 0",
            "[α⌟_∘, h·] = −1/(r+1) α^♭·h^#⌟_∘",
            "α(h) = h·α⌟_∘ − α^♭·h^#⌟_∘",
            "Σ h_i·dh_i⌟_∘ = id",
        ] {
            rep.skip(name, "α⌟_∘ = (1/r)α⌟ is only defined for r ≥ 1");
        }
    }
    rep.scalar_eq("Σ dh_i⌟_∘ h_i· = (r+2)/(r+1)", &down, &q((r + 2) as i64, (r + 1) as i64));
    Ok(rep)
}

/// The operator identity on Λ^{s−1}_∘E used to simplify pr_{−K}, in both
/// of its two forms, for all pairs of basis vectors e₁, e.
pub fn check_operator_identity(pc: &PrimitiveCalculus, s: i32) -> Result<Report> {
    let n = pc.n as i32;
    if s < 2 || s > n {
        return out_of_range(format!("operator identity needs 2 ≤ s ≤ n, got s={s}"));
    }
    let t = s - 1;
    let d = 2 * pc.n;
    let id = identity_on(pc.dim(t), prim_label(pc.n, t));
    let a = q(((n - s + 1) * (n - s + 3)) as i64, ((n - s + 2) * (n - s + 2)) as i64);
    let b = q((n - s + 1) as i64, (n - s + 2) as i64);
    let c = q(1, (n - s + 2) as i64);
    let mut rep = Report::new();
    for i in 0..d {
        let e1 = unit(d, i);
        let e1s = pc.e.sharp(&e1);
        for k in 0..d {
            let e = unit(d, k);
            let es = pc.e.sharp(&e);
            let sigma = pc.e.sigma(&e1, &e);
            let lhs = &pc.c_vec(&e1s, t + 1) * &pc.w_vec(&e, t);
            let we_c1 = &pc.w_vec(&e, t - 1) * &pc.c_vec(&e1s, t);

            let mut first = &id.scale(&sigma) - &we_c1;
            first.add_scaled(&c, &(&pc.w_vec(&e1, t - 1) * &pc.c_vec(&es, t)))?;
            rep.matrix_eq(format!("first form, e₁=e_{i}, e=e_{k}"), &lhs, &first);

            let mut second = we_c1.scale(&-a.clone());
            second.add_scaled(&b, &id.scale(&sigma))?;
            second.add_scaled(&-c.clone(), &(&pc.c_vec(&es, t + 1) * &pc.w_vec(&e1, t)))?;
            rep.matrix_eq(format!("second form, e₁=e_{i}, e=e_{k}"), &lhs, &second);
        }
    }
    Ok(rep)
}

/// Both projector pairs H⊗H⊗Sym^rH → Sym^rH and the matrix relating them.
pub fn check_projector_relations_h(r: i32) -> Result<Report> {
    if r < 0 {
        return out_of_range(format!("projector relations need r ≥ 0, got r={r}"));
    }
    let h = build_h();
    let dim = r as usize + 1;
    let dom = Space::tensor_all(&[Space::h(), Space::h(), sym_label(r)]);
    let blank = || RatMatrix::zeros(dim, 4 * dim).labeled(sym_label(r), dom.clone());
    let (mut pr_c, mut pr_sym2, mut pr_mp, mut pr_pm) = (blank(), blank(), blank(), blank());
    for a in 0..2 {
        for b in 0..2 {
            let (ha, hb) = (unit(2, a), unit(2, b));
            let off = (2 * a + b) * dim;
            let id = identity_on(dim, sym_label(r));
            pr_c.set_block(0, off, &id.scale(&h.sigma(&ha, &hb)));
            pr_sym2.set_block(0, off, &sym_h::sym2_action(&ha, &hb, r));
            pr_mp.set_block(0, off, &(&sym_h::contract_circ(&h.sharp(&ha), r + 1) * &sym_h::mul(&hb, r)));
            pr_pm.set_block(0, off, &(&sym_h::mul(&ha, r - 1) * &sym_h::contract_circ(&h.sharp(&hb), r)));
        }
    }
    let w = crate::weitzenbock::w_h(r);
    let mut rep = Report::new();
    let row0 = RatMatrix::lincomb(&[w[(0, 0)].clone(), w[(0, 1)].clone()], &[pr_mp.clone(), pr_pm.clone()]);
    let row1 = RatMatrix::lincomb(&[w[(1, 0)].clone(), w[(1, 1)].clone()], &[pr_mp, pr_pm]);
    rep.matrix_eq("pr_ℂ = pr_{−+} − r/(r+1) pr_{+−}", &pr_c, &row0);
    rep.matrix_eq("pr_{Sym²H} = r pr_{−+} + r(r+2)/(r+1) pr_{+−}", &pr_sym2, &row1);
    Ok(rep)
}

/// Permutation e₁⊗e₂⊗φ ↦ e₂⊗e₁⊗φ on E⊗E⊗V with dim V = inner.
fn swap_first_two(d: usize, inner: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(d * d * inner, d * d * inner);
    for a in 0..d {
        for b in 0..d {
            for j in 0..inner {
                m[((b * d + a) * inner + j, (a * d + b) * inner + j)] = qi(1);
            }
        }
    }
    m
}

/// Both projector pairs E⊗E⊗Λ^s_∘E → K^{s−1}E, the closed form of
/// pr_{−K}, and the matrix relating the pairs.
pub fn check_projector_relations_e(pc: &PrimitiveCalculus, s: i32) -> Result<Report> {
    let n = pc.n as i32;
    if s < 2 || s > n {
        return out_of_range(format!("E-side projector relations need 2 ≤ s ≤ n, got s={s}"));
    }
    let d = 2 * pc.n;
    let ds = pc.dim(s);
    let e_lab = Space::e(pc.n);
    let dom = Space::tensor(&e_lab, &e_prim_label(pc.n, s));

    // C : E⊗Λ^s_∘ → Λ^{s−1}_∘, e⊗φ ↦ e^#⌟φ
    let mut c = RatMatrix::zeros(pc.dim(s - 1), d * ds);
    for b in 0..d {
        c.set_block(0, b * ds, &pc.contract_sharp(&unit(d, b), s)?);
    }
    let c = c.labeled(prim_label(pc.n, s - 1), e_prim_label(pc.n, s));
    let id_e = identity_on(d, e_lab);
    let ic = id_e.kron(&c);
    let swap = swap_first_two(d, ds).labeled(dom.clone(), dom.clone());
    let p_low = pc.pr_tilde_k_endo(s - 1)?;
    let p_high = pc.pr_tilde_k_endo(s)?;
    let k = pc.k_space(s - 1)?;

    let amb_k_minus = &p_low * &ic;
    let amb_swapped = &(&p_low * &ic) * &swap;
    // e₁⊗e₂⊗φ ↦ e₁⊗p̃r_K(e₂⊗φ) ↦ p̃r_K((id⊗e₁^#⌟)p̃r_K(e₂⊗φ))
    let amb_minus_k = &amb_swapped * &id_e.kron(&p_high);

    let mut rep = Report::new();
    let to_k = |name: &str, m: &RatMatrix, rep: &mut Report| rep.check_result(format!("{name} lands in K^{{s−1}}E"), k.restrict(m));
    let (Some(k_minus), Some(swapped), Some(minus_k)) = (
        to_k("pr_{K−}", &amb_k_minus, &mut rep),
        to_k("p̃r_K(e₂⊗e₁^#⌟φ)", &amb_swapped, &mut rep),
        to_k("pr_{−K}", &amb_minus_k, &mut rep),
    ) else {
        return Ok(rep);
    };
    let k_sym2 = &swapped + &k_minus;
    let k_lam2 = &swapped - &k_minus;

    let closed = &swapped - &k_minus.scale(&q(1, (2 * n - s + 3) as i64));
    rep.matrix_eq("pr_{−K} = p̃r_K(e₂⊗e₁^#⌟φ) − 1/(2n−s+3) p̃r_K(e₁⊗e₂^#⌟φ)", &minus_k, &closed);

    let m = crate::weitzenbock::twist_e(pc.n, s);
    let row0 = RatMatrix::lincomb(&[m[(0, 0)].clone(), m[(0, 1)].clone()], &[k_minus.clone(), minus_k.clone()]);
    let row1 = RatMatrix::lincomb(&[m[(1, 0)].clone(), m[(1, 1)].clone()], &[k_minus, minus_k]);
    rep.matrix_eq("pr_{KSym²E} = (2n−s+4)/(2n−s+3) pr_{K−} + pr_{−K}", &k_sym2, &row0);
    rep.matrix_eq("pr_{KΛ²_∘E} = −(2n−s+2)/(2n−s+3) pr_{K−} + pr_{−K}", &k_lam2, &row1);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_pass(r: Result<Report>) {
        let r = r.unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
    }

    #[test]
    fn kom1_small() {
        let pc = PrimitiveCalculus::new(2).unwrap();
        for s in 0..=2 {
            assert_pass(check_kom1(&pc, s));
        }
    }

    #[test]
    fn kom1_number_operator_value() {
        // n=2, s=1: Σ de_i⌟ e_i∧_∘ = 5/2
        let pc = PrimitiveCalculus::new(2).unwrap();
        let rep = check_kom1(&pc, 1).unwrap();
        assert!(rep.checks.iter().any(|c| c.name.starts_with("Σ de_i⌟") && c.status == crate::Status::Pass));
    }

    #[test]
    fn kom2_range() {
        for r in 0..=4 {
            assert_pass(check_kom2(r));
        }
        assert_eq!(check_kom2(0).unwrap().count(crate::Status::Skipped), 4);
    }

    #[test]
    fn operator_identity_small() {
        let pc = PrimitiveCalculus::new(3).unwrap();
        for s in 2..=3 {
            assert_pass(check_operator_identity(&pc, s));
        }
    }

    #[test]
    fn projector_relations() {
        for r in 0..=3 {
            assert_pass(check_projector_relations_h(r));
        }
        let pc = PrimitiveCalculus::new(2).unwrap();
        assert_pass(check_projector_relations_e(&pc, 2));
    }
}
