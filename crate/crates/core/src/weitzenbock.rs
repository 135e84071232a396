//! Coefficient algebra of the matrix Weitzenböck formula.
//!
//! Nothing here builds a differential operator. The six operator slots are
//! symbolic labels and every identity is an identity between rational
//! coefficient vectors.

use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::report::Report;
use crate::scalars::{q, qi};
use crate::{RatMatrix, Rational};

/// Left-hand slots of the 6-row formula.
pub const LHS_SLOTS: [&str; 6] = ["−∇*∇", "κ-term H", "κ-term E", "𝒞", "ℒ", "0"];
/// Right-hand operator slots, in the order of the columns of 𝒲_E(s)⊗𝒲_H(r).
pub const RHS_SLOTS: [&str; 6] = [
    "−½(D⁺₊)*D⁺₊",
    "½D⁺₋D⁻₊",
    "½D⁻₊D⁺₋",
    "−½(D⁻₋)*D⁻₋",
    "−(T⁺)*T⁺",
    "(T⁻)*T⁻",
];

fn rq(num: i64, den: i64) -> Rational {
    q(num, den)
}

/// 𝒲_H(r).
pub fn w_h(r: i32) -> RatMatrix {
    let r = r as i64;
    RatMatrix::from_rows(vec![
        vec![qi(1), rq(-r, r + 1)],
        vec![qi(r), rq(r * (r + 2), r + 1)],
    ])
}

/// 𝒲_E(s) for quaternionic dimension n.
pub fn w_e(n: usize, s: i32) -> RatMatrix {
    let (n, s) = (n as i64, s as i64);
    let a = (n - s + 1) * (2 * n - s + 3);
    RatMatrix::from_rows(vec![
        vec![rq(1, s + 1), rq(-(n - s + 2), a), qi(1)],
        vec![rq(-s, s + 1), rq((n - s + 2) * (2 * n - s + 2), a), qi(1)],
        vec![
            rq(-(n + 1) * s, n * (s + 1)),
            rq(-(n + 1) * (n - s) * (2 * n - s + 2), n * a),
            rq(n - s, n),
        ],
    ])
}

/// The 2×2 matrix relating (pr_{KSym²E}, pr_{KΛ²_∘E}) to (pr_{K−}, pr_{−K}).
pub fn twist_e(n: usize, s: i32) -> RatMatrix {
    let (n, s) = (n as i64, s as i64);
    let den = 2 * n - s + 3;
    RatMatrix::from_rows(vec![
        vec![rq(2 * n - s + 4, den), qi(1)],
        vec![rq(-(2 * n - s + 2), den), qi(1)],
    ])
}

/// 𝒲_twist entry by entry in closed form.
pub fn w_twist_closed_form(n: usize, r: i32, s: i32) -> RatMatrix {
    let (n, r, s) = (n as i64, r as i64, s as i64);
    let a = rq(2 * n - s + 4, 2 * n - s + 3);
    let b = rq(2 * n - s + 2, 2 * n - s + 3);
    let rr = rq(r, r + 1);
    let rs = rq(r * (r + 2), r + 1);
    let ri = qi(r);
    RatMatrix::from_rows(vec![
        vec![a.clone(), -&rr * &a, qi(1), -rr.clone()],
        vec![&ri * &a, &rs * &a, ri.clone(), rs.clone()],
        vec![-b.clone(), &rr * &b, qi(1), -rr.clone()],
        vec![-&ri * &b, -&rs * &b, ri, rs],
    ])
}

#[derive(Clone, Debug)]
pub struct WeitzenbockMatrices {
    pub n: usize,
    pub r: i32,
    pub s: i32,
    pub wh: RatMatrix,
    pub we: RatMatrix,
    /// 𝒲_E(s)⊗𝒲_H(r): rows and columns are E-index major.
    pub w: RatMatrix,
    /// kron of the two 2×2 projector matrices, E-side major.
    pub wtwist: RatMatrix,
}

pub fn build_weitzenbock(n: usize, r: i32, s: i32) -> Result<WeitzenbockMatrices> {
    if n == 0 || r < 0 || s < 0 || s as usize > n {
        return out_of_range(format!("Weitzenböck matrices need r ≥ 0, 0 ≤ s ≤ n, got n={n} r={r} s={s}"));
    }
    let wh = w_h(r);
    let we = w_e(n, s);
    let w = we.kron(&wh);
    let wtwist = twist_e(n, s).kron(&wh);
    Ok(WeitzenbockMatrices { n, r, s, wh, we, w, wtwist })
}

/// One way of turning operator slots into norms after pairing with ψ.
#[derive(Clone, Debug, Serialize)]
pub struct NormDictionary {
    pub name: String,
    /// factor turning slot k into a multiple of ‖·‖²
    pub scale: [String; 6],
    /// which norm each slot becomes
    pub norm: [&'static str; 6],
}

#[derive(Clone, Debug, Serialize)]
pub struct MinIdentity {
    pub n: usize,
    pub r: i32,
    pub dictionary: String,
    /// Row vector applied to the 6-row formula.
    pub u: Vec<String>,
    /// Resulting coefficient of each norm.
    pub coefficients: Vec<(String, String)>,
    /// Coefficient of κ/4·‖ψ‖².
    pub lhs: String,
}

/// The candidate dictionaries: the adjoint of D⁺₋ is ±D⁻₊, everything else is
/// fixed by the slot definitions.
fn dictionaries() -> Vec<(String, [Rational; 6])> {
    let half = rq(1, 2);
    let mut out = Vec::new();
    for (name, eps) in [("(D⁺₋)* = D⁻₊", 1), ("(D⁺₋)* = −D⁻₊", -1)] {
        let e = qi(eps);
        out.push((
            name.to_string(),
            [-half.clone(), &half * &e, &half * &e, -half.clone(), qi(-1), qi(1)],
        ));
    }
    out
}

const NORMS: [&str; 6] = ["‖D⁺₊ψ‖²", "‖D⁻₊ψ‖²", "‖D⁺₋ψ‖²", "‖D⁻₋ψ‖²", "‖T⁺ψ‖²", "‖T⁻ψ‖²"];

/// Target coefficients of the key norm identity.
pub fn min_identity_targets(n: usize, r: i32) -> ([Rational; 6], Rational) {
    let (n, r) = (n as i64, r as i64);
    (
        [
            rq(-(r + 1), n - r + 1),
            qi(r + 2),
            rq((r + 2) * (n + r + 2), n + r + 3),
            qi(0),
            qi(-2 * (r + 1)),
            qi(0),
        ],
        rq((r + 2) * (n + r + 2), n + 2),
    )
}

/// κ/4-coefficients of the left-hand slots at (n, r, s).
fn lhs_kappa(n: usize, r: i32, s: i32) -> [Rational; 6] {
    let (n, r, s) = (n as i64, r as i64, s as i64);
    [
        qi(0),
        rq(r * (r + 2), n + 2),
        rq(s * (2 * n - s + 2), n * (n + 2)),
        qi(0),
        qi(0),
        qi(0),
    ]
}

/// Find the row vector u turning the formula at s = n − r into the key
/// norm identity. Every dictionary is tried; all that work are returned.
pub fn derive_min_identity(n: usize, r: i32) -> Result<Vec<MinIdentity>> {
    if r < 1 || r as usize >= n {
        return out_of_range(format!("key identity needs 1 ≤ r ≤ n−1, got n={n} r={r}"));
    }
    let s = n as i32 - r;
    let w = build_weitzenbock(n, r, s)?.w;
    let (targets, lhs_target) = min_identity_targets(n, r);
    let lhs = lhs_kappa(n, r, s);
    let mut found = Vec::new();
    for (name, scale) in dictionaries() {
        // unknown u; equations: (uW)_k·scale_k = target_k, u_0 = u_3 = u_4 = 0, u·lhs = lhs_target
        let mut a = RatMatrix::zeros(10, 6);
        let mut b = RatMatrix::zeros(10, 1);
        for k in 0..6 {
            for j in 0..6 {
                a[(k, j)] = &w[(j, k)] * &scale[k];
            }
            b[(k, 0)] = targets[k].clone();
        }
        for (row, slot) in [(6, 0), (7, 3), (8, 4)] {
            a[(row, slot)] = qi(1);
        }
        for j in 0..6 {
            a[(9, j)] = lhs[j].clone();
        }
        b[(9, 0)] = lhs_target.clone();
        let Ok(u) = a.solve(&b) else { continue };
        if a.rank() != 6 {
            return Err(Error::Failed("key identity row vector is not unique".into()));
        }
        let uvec = u.column(0);
        let coefficients = (0..6)
            .map(|k| {
                let mut c = qi(0);
                for j in 0..6 {
                    c += &uvec[j] * &w[(j, k)];
                }
                (NORMS[k].to_string(), (c * &scale[k]).to_string())
            })
            .collect();
        found.push(MinIdentity {
            n,
            r,
            dictionary: name,
            u: uvec.iter().map(|x| x.to_string()).collect(),
            coefficients,
            lhs: lhs_target.to_string(),
        });
    }
    if found.is_empty() {
        return Err(Error::Failed(format!("no row vector reproduces the key identity at n={n} r={r}")));
    }
    Ok(found)
}

#[derive(Clone, Debug, Serialize)]
pub struct LimitingSolution {
    /// The 3×3 coefficient matrix (rows 2, 3, 6; columns ½D⁺₋D⁻₊, −½(D⁻₋)*D⁻₋, (T⁻)*T⁻).
    pub matrix: Vec<Vec<String>>,
    /// (D⁻₋)*D⁻₋ψ₁ as a multiple of κψ₁.
    #[serde(serialize_with = "crate::report::serialize_display")]
    pub d_minus_minus: Rational,
    /// (T⁻)*T⁻ψ₁ as a multiple of κψ₁.
    #[serde(serialize_with = "crate::report::serialize_display")]
    pub t_minus: Rational,
}

/// The 3×3 matrix of the limiting system in closed form.
pub fn limiting_matrix_closed_form(n: usize) -> RatMatrix {
    let n = n as i64;
    RatMatrix::from_rows(vec![
        vec![rq(3, 2 * n), rq(-9, 4 * (n + 4)), rq(3, 2)],
        vec![rq(n - 1, 2 * n), rq(-3 * (n + 3), 4 * (n + 4)), rq(-1, 2)],
        vec![
            rq(-3 * (n - 1) * (n + 1), 2 * n * n),
            rq(-3 * (n + 3) * (n + 1), 4 * n * (n + 4)),
            rq(3, 2 * n),
        ],
    ])
}

/// Rows 2, 3 and 6 of the formula at r = 1, s = n − 1 after the minimality
/// conditions kill the D⁺₊, D⁺₋ and T⁺ columns.
pub fn solve_limiting_system(n: usize) -> Result<LimitingSolution> {
    if n < 2 {
        return out_of_range(format!("limiting system needs n ≥ 2, got n={n}"));
    }
    let s = n as i32 - 1;
    let w = build_weitzenbock(n, 1, s)?.w;
    let rows = [1, 2, 5];
    let cols = [1, 3, 5];
    let m = RatMatrix::from_fn(3, 3, |i, j| w[(rows[i], cols[j])].clone());
    if !m.same_entries(&limiting_matrix_closed_form(n)) {
        return Err(Error::Failed(format!("limiting matrix at n={n} differs from the closed form")));
    }
    let lhs = lhs_kappa(n, 1, s);
    // right-hand side in units of κ
    let rhs = RatMatrix::from_fn(3, 1, |i, _| &lhs[rows[i]] * &rq(1, 4));
    let x = m.solve(&rhs).map_err(|_| Error::Failed("limiting system is singular".into()))?;
    if m.rank() != 3 {
        return Err(Error::Failed("limiting system is singular".into()));
    }
    let nn = n as i64;
    // ½D⁺₋D⁻₊ψ₁ must match the known value ½·κ/4·(n+3)/(n+2)
    let expected = rq(nn + 3, 8 * (nn + 2));
    if x[(0, 0)] != expected {
        return Err(Error::Failed(format!(
            "solution gives ½D⁺₋D⁻₊ψ₁ = {}κψ₁, expected {}κψ₁",
            x[(0, 0)],
            expected
        )));
    }
    Ok(LimitingSolution {
        matrix: (0..3).map(|i| (0..3).map(|j| m[(i, j)].to_string()).collect()).collect(),
        d_minus_minus: &x[(1, 0)] * &qi(-2),
        t_minus: x[(2, 0)].clone(),
    })
}

/// Closed form (κ/2)(n+4)(n−1)/(n(n+2)) as a multiple of κ.
pub fn d_minus_minus_closed_form(n: usize) -> Rational {
    let n = n as i64;
    rq((n + 4) * (n - 1), 2 * n * (n + 2))
}

/// The third row at r = 0, s = n − 2 applied to ψ₋: with the known value of
/// (D⁺₊)*D⁺₊ψ₋ and T⁺ψ₋ = 0 the row must force (D⁺₋)*D⁺₋ψ₋ = 0.
pub fn solve_psi_minus_row(n: usize) -> Result<Report> {
    if n < 2 {
        return out_of_range(format!("ψ₋ row needs n ≥ 2, got n={n}"));
    }
    let s = n as i32 - 2;
    let w = build_weitzenbock(n, 0, s)?.w;
    let row = 2;
    let nn = n as i64;
    let mut rep = Report::new();
    let c_dpp = &w[(row, 0)] * &rq(-1, 2);
    let c_dmp = &w[(row, 2)] * &rq(1, 2);
    rep.check("coefficient of (D⁺₊)*D⁺₊ψ₋ is (n−2)/(2(n−1))", c_dpp == rq(nn - 2, 2 * (nn - 1)), || {
        format!("got {c_dpp}")
    });
    rep.check("coefficient of D⁻₊D⁺₋ψ₋ is 2(n+4)/(3(n+5))", c_dmp == rq(2 * (nn + 4), 3 * (nn + 5)), || {
        format!("got {c_dmp}")
    });
    let others: Vec<usize> = (0..6).filter(|&k| ![0, 2, 4].contains(&k)).collect();
    rep.check("no other slot enters the row", others.iter().all(|&k| num_traits::Zero::is_zero(&w[(row, k)])), || {
        "nonzero coefficient on D⁻₊, D⁻₋ or T⁻ slot".into()
    });
    let lhs = &lhs_kappa(n, 0, s)[row] * &rq(1, 4);
    rep.check("left side is κ/4·(n+4)(n−2)/(n(n+2))", lhs == rq((nn + 4) * (nn - 2), 4 * nn * (nn + 2)), || {
        format!("got {lhs}κ")
    });
    let residual = &lhs - &(&c_dpp * &d_minus_minus_closed_form(n));
    rep.check("the D⁺₊ term reproduces the left side", num_traits::Zero::is_zero(&residual), || {
        format!("residual {residual}κψ₋")
    });
    rep.check("remaining coefficient is positive, forcing D⁺₋ψ₋ = 0", c_dmp > qi(0), || {
        format!("coefficient {c_dmp}")
    });
    Ok(rep)
}

/// Corollary: row 0 of 𝒲_twist, whose left side vanishes, is the identity
/// a(T⁻D⁺₋ − r/(r+1)T⁺D⁻₋)/√2 + (θ⁻T⁺ − r/(r+1)θ⁺T⁻) = 0.
pub fn check_twistor_corollary(n: usize, r: i32, s: i32) -> Result<Report> {
    if r < 0 || s < 1 || s as usize > n {
        return out_of_range(format!("twistor corollary needs r ≥ 0, 1 ≤ s ≤ n, got n={n} r={r} s={s}"));
    }
    let mut rep = Report::new();
    if s == 1 {
        rep.note("corollary", "s = 1: the four operators vanish separately");
        return Ok(rep);
    }
    let wm = build_weitzenbock(n, r, s)?;
    let display = w_twist_closed_form(n, r, s).labeled(wm.wtwist.codomain().clone(), wm.wtwist.domain().clone());
    rep.matrix_eq("𝒲_twist = M_E ⊗ 𝒲_H", &wm.wtwist, &display);
    let (nn, ss, rr) = (n as i64, s as i64, r as i64);
    let a = rq(2 * nn - ss + 4, 2 * nn - ss + 3);
    let ratio = rq(rr, rr + 1);
    let expected = [a.clone(), -&a * &ratio, qi(1), -ratio];
    let row0: Vec<Rational> = (0..4).map(|j| wm.wtwist[(0, j)].clone()).collect();
    rep.check("row 0 gives the corollary coefficients", row0 == expected, || {
        format!("row 0 = {:?}", row0.iter().map(|x| x.to_string()).collect::<Vec<_>>())
    });
    rep.check("prefactor (2n−s+4)/(2n−s+3)", row0[0] == a, || format!("got {}", row0[0]));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrices() {
        assert!(w_h(1).same_entries(&RatMatrix::from_rows(vec![vec![qi(1), rq(-1, 2)], vec![qi(1), rq(3, 2)]])));
        assert!(w_h(0).same_entries(&RatMatrix::from_rows(vec![vec![qi(1), qi(0)], vec![qi(0), qi(0)]])));
        let we = w_e(2, 1);
        assert_eq!(we.row(0), &[rq(1, 2), rq(-1, 4), qi(1)]);
    }

    #[test]
    fn kron_entry() {
        // (1,1) of 𝒲_E(1)⊗𝒲_H(1) at n=2 is W_E(0,0)·W_H(1,1) = 1/2 · 3/2
        let w = build_weitzenbock(2, 1, 1).unwrap().w;
        assert_eq!(w[(1, 1)], rq(3, 4));
        // H-major would put W_H(0,0)·W_E(1,1) there instead
        assert_eq!(w_h(1).kron(&w_e(2, 1))[(1, 1)], rq(5, 4));
    }

    #[test]
    fn min_identity_at_3_1() {
        let found = derive_min_identity(3, 1).unwrap();
        assert_eq!(found.len(), 1);
        let m = &found[0];
        assert_eq!(m.dictionary, "(D⁺₋)* = D⁻₊");
        assert_eq!(m.u, ["0", "2", "3", "0", "0", "-3"]);
        let c: Vec<&str> = m.coefficients.iter().map(|(_, v)| v.as_str()).collect();
        assert_eq!(c, ["-2/3", "3", "18/7", "0", "-4", "0"]);
    }

    #[test]
    fn min_identity_all_small() {
        for n in 2..=7 {
            for r in 1..n as i32 {
                let found = derive_min_identity(n, r).unwrap();
                assert_eq!(found.len(), 1, "n={n} r={r}");
            }
        }
        assert!(derive_min_identity(3, 0).is_err());
        assert!(derive_min_identity(3, 3).is_err());
    }

    #[test]
    fn limiting_system() {
        for n in 2..=12 {
            let sol = solve_limiting_system(n).unwrap();
            assert_eq!(sol.d_minus_minus, d_minus_minus_closed_form(n));
            assert_eq!(sol.t_minus, qi(0));
        }
        assert_eq!(d_minus_minus_closed_form(2), rq(3, 8));
    }

    #[test]
    fn psi_minus_row() {
        for n in 2..=12 {
            assert!(solve_psi_minus_row(n).unwrap().passed(), "n={n}");
        }
    }

    #[test]
    fn twistor_corollary() {
        for n in 1..=6 {
            for s in 1..=n as i32 {
                for r in 0..=4 {
                    let rep = check_twistor_corollary(n, r, s).unwrap();
                    assert!(rep.passed(), "n={n} r={r} s={s}: {:?}", rep.first_failure());
                }
            }
        }
    }

    #[test]
    fn det_w_h() {
        // det 𝒲_H(r) = r(r+2)/(r+1) + r²/(r+1) = 2r
        for r in 0..10 {
            let w = w_h(r);
            let det = &w[(0, 0)] * &w[(1, 1)] - &w[(0, 1)] * &w[(1, 0)];
            assert_eq!(det, qi(2 * r as i64));
        }
    }
}
