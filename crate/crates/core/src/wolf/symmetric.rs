//! Cartan decompositions 𝔤 = 𝔨⊕𝔭 of the classical Wolf spaces, partial
//! Killing forms, the cobracket Δ : 𝔨 → Λ²𝔭 and the curvature endomorphism ρ.

use num_traits::Zero;
use serde::Serialize;

use super::lie::{quaternion, so_generator, su, LieAlgebraModel};
use crate::error::{out_of_range, Error, Result};
use crate::report::Report;
use crate::scalars::q;
use crate::{RatMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassicalFamily {
    /// Sp(n+1)/Sp(1)×Sp(n)
    HPn,
    /// SU(n+2)/S(U(2)×U(n))
    GrC2,
    /// SO(n+4)/S(O(4)×O(n))
    GrR4,
}

impl ClassicalFamily {
    pub const ALL: [ClassicalFamily; 3] = [ClassicalFamily::HPn, ClassicalFamily::GrC2, ClassicalFamily::GrR4];

    pub fn name(self) -> &'static str {
        match self {
            ClassicalFamily::HPn => "HPn",
            ClassicalFamily::GrC2 => "GrC2",
            ClassicalFamily::GrR4 => "GrR4",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(s))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Ideal {
    pub name: String,
    pub indices: Vec<usize>,
    /// The 𝔰𝔭(1) that defines the quaternionic structure.
    pub quaternionic: bool,
}

/// 𝔨 = ⊕𝔨_i and 𝔭 as index sets into the basis of 𝔤. `complex_structure`
/// holds the indices of I, J, K in the quaternionic 𝔰𝔭(1).
#[derive(Clone, Debug, Serialize)]
pub struct CartanDecomposition {
    pub family: ClassicalFamily,
    pub n: usize,
    pub k: Vec<usize>,
    pub p: Vec<usize>,
    pub ideals: Vec<Ideal>,
    pub complex_structure: [usize; 3],
}

/// Ideal names and basis blocks in order, then 𝔭.
struct Layout {
    ideals: Vec<(String, Vec<RatMatrix>, bool)>,
    p: Vec<RatMatrix>,
}

fn build_layout(family: ClassicalFamily, n: usize) -> Layout {
    match family {
        ClassicalFamily::HPn => {
            let m = n + 1;
            let sp1 = (1..4).map(|u| quaternion::imag(m, 0, 0, u)).collect();
            let mut spn = Vec::new();
            for a in 1..m {
                for u in 1..4 {
                    spn.push(quaternion::imag(m, a, a, u));
                }
                for b in a + 1..m {
                    spn.push(quaternion::real_off(m, a, b));
                    for u in 1..4 {
                        spn.push(quaternion::imag(m, a, b, u));
                    }
                }
            }
            let mut p = Vec::new();
            for b in 1..m {
                p.push(quaternion::real_off(m, 0, b));
                for u in 1..4 {
                    p.push(quaternion::imag(m, 0, b, u));
                }
            }
            Layout { ideals: vec![("sp(1)".into(), sp1, true), (format!("sp({n})"), spn, false)], p }
        }
        ClassicalFamily::GrC2 => {
            let m = n + 2;
            let diag = |entries: &[(usize, i64)]| {
                let mut d = vec![q(0, 1); m];
                for &(a, v) in entries {
                    d[a] = q(v, 1);
                }
                su::diag(&d)
            };
            let sp1 = vec![diag(&[(0, 1), (1, -1)]), su::x(m, 0, 1), su::y(m, 0, 1)];
            let mut sun = Vec::new();
            for a in 2..m {
                for b in a + 1..m {
                    sun.push(su::x(m, a, b));
                    sun.push(su::y(m, a, b));
                }
                if a + 1 < m {
                    sun.push(diag(&[(a, 1), (a + 1, -1)]));
                }
            }
            let nn = n as i64;
            let center: Vec<(usize, i64)> = (0..m).map(|a| (a, if a < 2 { nn } else { -2 })).collect();
            let mut p = Vec::new();
            for a in 0..2 {
                for b in 2..m {
                    p.push(su::x(m, a, b));
                    p.push(su::y(m, a, b));
                }
            }
            Layout {
                ideals: vec![
                    ("sp(1)".into(), sp1, true),
                    (format!("su({n})"), sun, false),
                    ("R".into(), vec![diag(&center)], false),
                ],
                p,
            }
        }
        ClassicalFamily::GrR4 => {
            let m = n + 4;
            let e = |a, b| so_generator(m, a, b);
            let sp1 = vec![&e(0, 1) + &e(2, 3), &e(0, 2) - &e(1, 3), &e(0, 3) + &e(1, 2)];
            let sp1t = vec![&e(0, 1) - &e(2, 3), &e(0, 2) + &e(1, 3), &e(0, 3) - &e(1, 2)];
            let son = (4..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).map(|(a, b)| e(a, b)).collect();
            let p = (0..4).flat_map(|a| (4..m).map(move |b| (a, b))).map(|(a, b)| e(a, b)).collect();
            Layout {
                ideals: vec![
                    ("sp(1)".into(), sp1, true),
                    ("sp~(1)".into(), sp1t, false),
                    (format!("so({n})"), son, false),
                ],
                p,
            }
        }
    }
}

/// The compact Lie algebra of the family with its Cartan decomposition.
pub fn build_classical_wolf(family: ClassicalFamily, n: usize) -> Result<(LieAlgebraModel, CartanDecomposition)> {
    if n < 2 {
        return out_of_range(format!("{} needs n ≥ 2, got n={n}", family.name()));
    }
    let layout = build_layout(family, n);
    let mut basis = Vec::new();
    let mut ideals = Vec::new();
    for (name, mats, quaternionic) in layout.ideals {
        let start = basis.len();
        basis.extend(mats);
        ideals.push(Ideal { name, indices: (start..basis.len()).collect(), quaternionic });
    }
    let k: Vec<usize> = (0..basis.len()).collect();
    let p: Vec<usize> = (basis.len()..basis.len() + layout.p.len()).collect();
    basis.extend(layout.p);
    let g_name = match family {
        ClassicalFamily::HPn => format!("sp({})", n + 1),
        ClassicalFamily::GrC2 => format!("su({})", n + 2),
        ClassicalFamily::GrR4 => format!("so({})", n + 4),
    };
    let g = LieAlgebraModel::from_matrices(&g_name, &basis)?;
    let quat = ideals.iter().find(|i| i.quaternionic).expect("every family has one");
    let complex_structure = [quat.indices[0], quat.indices[1], quat.indices[2]];
    Ok((g, CartanDecomposition { family, n, k, p, ideals, complex_structure }))
}

fn unit(d: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![q(0, 1); d];
    v[k] = q(1, 1);
    v
}

fn sub_matrix(m: &RatMatrix, rows: &[usize], cols: &[usize]) -> RatMatrix {
    RatMatrix::from_fn(rows.len(), cols.len(), |i, j| m[(rows[i], cols[j])].clone())
}

impl CartanDecomposition {
    /// Bracket relations and the ideal structure of 𝔨, on basis brackets.
    pub fn check_brackets(&self, g: &LieAlgebraModel) -> Report {
        let mut part = vec![0usize; g.dim];
        for (t, ideal) in self.ideals.iter().enumerate() {
            ideal.indices.iter().for_each(|&i| part[i] = t + 1);
        }
        let mut bad = None;
        for i in 0..g.dim {
            for j in 0..g.dim {
                let (pi, pj) = (part[i], part[j]);
                for (k, _) in g.bracket_basis(i, j) {
                    let pk = part[*k];
                    let ok = match (pi, pj) {
                        (0, 0) => pk != 0,
                        (0, _) | (_, 0) => pk == 0,
                        (a, b) => a == b && pk == a,
                    };
                    if !ok && bad.is_none() {
                        bad = Some(format!("[X_{i}, X_{j}] has a component along X_{k}"));
                    }
                }
            }
        }
        let mut rep = Report::new();
        match bad {
            None => rep.pass("[𝔨,𝔨] ⊆ 𝔨 by ideals, [𝔨,𝔭] ⊆ 𝔭, [𝔭,𝔭] ⊆ 𝔨"),
            Some(w) => rep.fail("Cartan bracket relations", w),
        }
        rep
    }

    /// l_i with B_𝔨 = l_i B on 𝔨_i×𝔨_i, cross-checked on every basis pair.
    pub fn compute_l_constants(&self, g: &LieAlgebraModel) -> Result<Vec<Rational>> {
        let bk = g.trace_form(&self.k);
        let b = &g.killing_form;
        let mut out = Vec::new();
        for ideal in &self.ideals {
            let x = ideal.indices[0];
            let l = if b[(x, x)].is_zero() {
                return Err(Error::Failed(format!("B vanishes on the first basis vector of {}", ideal.name)));
            } else {
                &bk[(x, x)] / &b[(x, x)]
            };
            for &i in &ideal.indices {
                for &j in &ideal.indices {
                    if bk[(i, j)] != &l * &b[(i, j)] {
                        return Err(Error::Failed(format!(
                            "B_𝔨 and B are not proportional on {} (pair {i},{j})",
                            ideal.name
                        )));
                    }
                }
            }
            out.push(l);
        }
        Ok(out)
    }

    /// B_𝔨 = B_𝔭 = ½B on 𝔭×𝔭, and both vanish on 𝔨×𝔭.
    pub fn check_partial_forms(&self, g: &LieAlgebraModel) -> Report {
        let bk = g.trace_form(&self.k);
        let bp = g.trace_form(&self.p);
        let half = g.killing_form.scale(&q(1, 2));
        let mut rep = Report::new();
        rep.check("B = B_𝔨 + B_𝔭", (&bk + &bp).same_entries(&g.killing_form), String::new);
        let pp = |m: &RatMatrix| sub_matrix(m, &self.p, &self.p);
        rep.check("B_𝔨 = ½B on 𝔭×𝔭", pp(&bk).same_entries(&pp(&half)), String::new);
        rep.check("B_𝔭 = ½B on 𝔭×𝔭", pp(&bp).same_entries(&pp(&half)), String::new);
        rep.check(
            "B_𝔨, B_𝔭 vanish on 𝔨×𝔭",
            sub_matrix(&bk, &self.k, &self.p).is_zero() && sub_matrix(&bp, &self.k, &self.p).is_zero(),
            String::new,
        );
        rep
    }

    /// ad_I is a complex structure on 𝔭, ad_I² = −4 on span{J, K}, and
    /// B(I,I) = −8 − 4n, so l_{𝔰𝔭(1)} = 2/(n+2).
    pub fn check_quaternionic_sp1(&self, g: &LieAlgebraModel) -> Report {
        let [i, j, k] = self.complex_structure;
        let ad = g.ad(i);
        let ad2 = &ad * &ad;
        let mut rep = Report::new();
        let on_p = sub_matrix(&ad2, &self.p, &self.p);
        rep.scalar_eq("ad_I² = −id on 𝔭", &on_p, &q(-1, 1));
        rep.check("ad_I preserves 𝔭", sub_matrix(&ad, &self.k, &self.p).is_zero(), String::new);
        let jk = sub_matrix(&ad2, &[j, k], &[j, k]);
        rep.scalar_eq("ad_I² = −4 on span{J, K}", &jk, &q(-4, 1));
        let n = self.n as i64;
        rep.check("B(I,I) = −8 − 4n", g.killing_form[(i, i)] == q(-8 - 4 * n, 1), || {
            format!("B(I,I) = {}", g.killing_form[(i, i)])
        });
        rep
    }

    /// Σ_i B(R_{E_i,X}Y, dE_i^♭) = −B_𝔭(X,Y) with R_{X,Y}Z = −[[X,Y],Z].
    pub fn check_ricci(&self, g: &LieAlgebraModel) -> Result<Report> {
        let bpp = sub_matrix(&g.killing_form, &self.p, &self.p);
        let inv = bpp.inverse()?;
        let bp = g.trace_form(&self.p);
        let d = g.dim;
        let mut bad = None;
        'outer: for (xi, &x) in self.p.iter().enumerate() {
            for &y in &self.p[xi..] {
                let mut acc = q(0, 1);
                for (a, &ea) in self.p.iter().enumerate() {
                    let exy = g.bracket(&g.bracket(&unit(d, ea), &unit(d, x)), &unit(d, y));
                    // dE_a^♭ = Σ_b (B_𝔭𝔭⁻¹)_{ba} E_b
                    for (bi, &eb) in self.p.iter().enumerate() {
                        let c = &inv[(bi, a)];
                        if c.is_zero() {
                            continue;
                        }
                        let bval: Rational =
                            (0..d).map(|t| &exy[t] * &g.killing_form[(t, eb)]).fold(q(0, 1), |s, v| s + v);
                        acc -= c * bval;
                    }
                }
                if acc != -bp[(x, y)].clone() {
                    bad = Some(format!("(X,Y) = (X_{x}, X_{y}): {acc} vs {}", -bp[(x, y)].clone()));
                    break 'outer;
                }
            }
        }
        let mut rep = Report::new();
        match bad {
            None => rep.pass("Ric = −B_𝔭"),
            Some(w) => rep.fail("Ric = −B_𝔭", w),
        }
        Ok(rep)
    }
}

/// Δ, [,] and ρ = −Δ∘[,] in the basis p_a∧p_b (a < b) of Λ²𝔭.
#[derive(Clone, Debug)]
pub struct CurvatureEndomorphism {
    /// Λ²𝔭 ← 𝔨
    pub cobracket: RatMatrix,
    /// 𝔨 ← Λ²𝔭
    pub bracket: RatMatrix,
    pub rho: RatMatrix,
    /// B extended to Λ²𝔭.
    pub gram: RatMatrix,
    /// ρ eigenvalue on Δ𝔨_i for each ideal.
    pub eigenvalues: Vec<Rational>,
}

pub fn curvature_endomorphism(g: &LieAlgebraModel, cd: &CartanDecomposition) -> Result<(CurvatureEndomorphism, Report)> {
    let d = g.dim;
    let p = &cd.p;
    let pairs: Vec<(usize, usize)> = (0..p.len()).flat_map(|a| (a + 1..p.len()).map(move |b| (a, b))).collect();
    let bpp = sub_matrix(&g.killing_form, p, p);
    let gram = RatMatrix::from_fn(pairs.len(), pairs.len(), |u, v| {
        let ((a, b), (c, e)) = (pairs[u], pairs[v]);
        &bpp[(a, c)] * &bpp[(b, e)] - &bpp[(a, e)] * &bpp[(b, c)]
    });
    let mut rep = Report::new();
    // [p_a, p_b] in 𝔨-coordinates
    let mut bracket = RatMatrix::zeros(cd.k.len(), pairs.len());
    let mut leaks = false;
    for (u, &(a, b)) in pairs.iter().enumerate() {
        let c = g.bracket(&unit(d, p[a]), &unit(d, p[b]));
        for (ki, &k) in cd.k.iter().enumerate() {
            bracket[(ki, u)] = c[k].clone();
        }
        leaks |= p.iter().any(|&t| !c[t].is_zero());
    }
    rep.check("[𝔭,𝔭] ⊆ 𝔨", !leaks, String::new);
    // B(ΔK, p_a∧p_b) = B(K, [p_a,p_b])
    let bkk = sub_matrix(&g.killing_form, &cd.k, &cd.k);
    let rhs = &bracket.transpose() * &bkk;
    let cobracket = &gram.inverse()? * &rhs;

    let ls = cd.compute_l_constants(g)?;
    let mut l_diag = RatMatrix::zeros(cd.k.len(), cd.k.len());
    for (ideal, l) in cd.ideals.iter().zip(&ls) {
        for &i in &ideal.indices {
            let ki = cd.k.iter().position(|&k| k == i).expect("ideal inside 𝔨");
            l_diag[(ki, ki)] = (l - q(1, 1)) / q(2, 1);
        }
    }
    let composed = &bracket * &cobracket;
    rep.check("[,]∘Δ = (L − id)/2", composed.same_entries(&l_diag), || {
        format!("first difference at {:?}", (&composed - &l_diag).first_nonzero())
    });

    let rho = -&(&cobracket * &bracket);
    // B(ρ(X∧Y), Z∧W) = −B([X,Y],[Z,W])
    let lhs = &gram * &rho;
    let rhs2 = -&(&rhs * &bracket);
    rep.check("B(ρ(X∧Y), Z∧W) = −B([X,Y],[Z,W])", lhs.same_entries(&rhs2), String::new);

    let mut eigenvalues = Vec::new();
    for (ideal, l) in cd.ideals.iter().zip(&ls) {
        let ev = (q(1, 1) - l) / q(2, 1);
        let mut ok = true;
        for &i in &ideal.indices {
            let ki = cd.k.iter().position(|&k| k == i).expect("ideal inside 𝔨");
            let v = cobracket.column(ki);
            let rv = rho.apply(&v);
            ok &= rv.iter().zip(&v).all(|(a, b)| *a == b * &ev);
        }
        rep.check(format!("ρ = (1 − l)/2 = {ev} on Δ{}", ideal.name), ok, String::new);
        eigenvalues.push(ev);
    }
    // B-orthogonal complement of Δ𝔨
    let orth = (&cobracket.transpose() * &gram).kernel_matrix();
    let killed = orth.cols() == 0 || (&rho * &orth).is_zero();
    rep.check(format!("ρ = 0 on the {}-dimensional complement of Δ𝔨", orth.cols()), killed, String::new);
    rep.check(
        "Δ𝔨 ⊕ complement = Λ²𝔭",
        orth.cols() + cobracket.rank() == pairs.len(),
        || format!("rank Δ = {}, complement {}", cobracket.rank(), orth.cols()),
    );
    let tr2 = rho.trace() * q(2, 1);
    let want = q(p.len() as i64, 2);
    rep.check("2 tr ρ = dim𝔭/2", tr2 == want, || format!("2 tr ρ = {tr2}"));
    Ok((CurvatureEndomorphism { cobracket, bracket, rho, gram, eigenvalues }, rep))
}

/// Everything about one classical family at one n.
pub fn check_classical_family(family: ClassicalFamily, n: usize) -> Result<Report> {
    let (g, cd) = build_classical_wolf(family, n)?;
    let mut rep = g.check();
    rep.absorb("", cd.check_brackets(&g));
    rep.absorb("", cd.check_partial_forms(&g));
    rep.absorb("", cd.check_quaternionic_sp1(&g));
    rep.absorb("", cd.check_ricci(&g)?);
    let ls = cd.compute_l_constants(&g)?;
    let want = classical_l_values(family, n);
    rep.check("l_i from partial Killing forms", ls == want, || {
        format!("computed {:?}", ls.iter().map(|x| x.to_string()).collect::<Vec<_>>())
    });
    let (_, crep) = curvature_endomorphism(&g, &cd)?;
    rep.absorb("", crep);
    Ok(rep)
}

/// Tabulated l_i in the order of the ideals built above.
pub fn classical_l_values(family: ClassicalFamily, n: usize) -> Vec<Rational> {
    let n = n as i64;
    let sp1 = q(2, n + 2);
    match family {
        ClassicalFamily::HPn => vec![sp1, q(n + 1, n + 2)],
        ClassicalFamily::GrC2 => vec![sp1, q(n, n + 2), q(0, 1)],
        ClassicalFamily::GrR4 => vec![sp1.clone(), sp1, q(n - 2, n + 2)],
    }
}
