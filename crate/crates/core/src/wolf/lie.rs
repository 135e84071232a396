//! Real Lie algebras given by rational structure constants, and the
//! compact forms 𝔰𝔬(m), 𝔰𝔲(m), 𝔰𝔭(m) as algebras of real matrices.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalars::{q, Space, Subspace};
use crate::{RatMatrix, Rational};

/// Sparse bracket table: `brackets[i][j]` lists (k, c_{ij}^k) with c ≠ 0.
#[derive(Clone, Debug)]
pub struct LieAlgebraModel {
    pub name: String,
    pub dim: usize,
    brackets: Vec<Vec<Vec<(usize, Rational)>>>,
    /// B(X_i, X_j) = tr(ad_{X_i} ad_{X_j}).
    pub killing_form: RatMatrix,
}

impl LieAlgebraModel {
    /// The Lie algebra spanned by `basis` inside gl(N, ℚ). Fails if the
    /// span is not closed under commutators or the matrices are dependent.
    pub fn from_matrices(name: &str, basis: &[RatMatrix]) -> Result<Self> {
        let dim = basis.len();
        let big = basis.first().map(|m| m.rows() * m.cols()).unwrap_or(0);
        let cols: Vec<Vec<Rational>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        let span = Subspace::new(RatMatrix::from_columns(big, &cols), Space::coeff(name, dim))?;
        if span.dim() != dim {
            return Err(Error::Invalid(format!("{name}: basis matrices are linearly dependent")));
        }
        let mut brackets = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let c = &(&basis[i] * &basis[j]) - &(&basis[j] * &basis[i]);
                let coords = span
                    .coords(c.entries())
                    .map_err(|_| Error::Failed(format!("{name}: [X_{i}, X_{j}] leaves the span")))?;
                for (k, v) in coords.into_iter().enumerate() {
                    if !v.is_zero() {
                        brackets[j][i].push((k, -v.clone()));
                        brackets[i][j].push((k, v));
                    }
                }
            }
        }
        Ok(Self::from_brackets(name, dim, brackets))
    }

    fn from_brackets(name: &str, dim: usize, brackets: Vec<Vec<Vec<(usize, Rational)>>>) -> Self {
        let mut model = LieAlgebraModel { name: name.into(), dim, brackets, killing_form: RatMatrix::zeros(dim, dim) };
        model.killing_form = model.trace_form(&(0..dim).collect::<Vec<_>>());
        model
    }

    /// The structure constant c_{ij}^k.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.brackets[i][j].iter().find(|(l, _)| *l == k).map(|(_, c)| c.clone()).unwrap_or_else(|| q(0, 1))
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.brackets[i][j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![q(0, 1); self.dim];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in &self.brackets[i][j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// ad_{X_i} as a dense matrix.
    pub fn ad(&self, i: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in &self.brackets[i][j] {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// (X_i, X_j) ↦ Σ_{k ∈ idx} (ad_{X_i} ad_{X_j})_{kk}, the trace of
    /// ad∘ad over the span of the basis vectors in `idx`.
    pub fn trace_form(&self, idx: &[usize]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                // Σ_k Σ_l c_{jk}^l c_{il}^k
                let mut acc = q(0, 1);
                for k in idx {
                    for (l, c1) in &self.brackets[j][*k] {
                        for (kk, c2) in &self.brackets[i][*l] {
                            if kk == k {
                                acc += c1 * c2;
                            }
                        }
                    }
                }
                m[(i, j)] = acc.clone();
                m[(j, i)] = acc;
            }
        }
        m
    }

    /// Antisymmetry, the Jacobi identity, and B recomputed from dense ad matrices.
    pub fn check(&self) -> Report {
        let mut rep = Report::new();
        let mut anti = true;
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in &self.brackets[i][j] {
                    if self.structure_constant(j, i, *k) != -c.clone() {
                        anti = false;
                    }
                }
            }
        }
        rep.check(format!("{}: c_ij^k = −c_ji^k", self.name), anti, || "antisymmetry fails".into());

        let mut jacobi_bad = None;
        'jac: for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let mut acc = vec![q(0, 1); self.dim];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (l, c1) in &self.brackets[b][c] {
                            for (m, c2) in &self.brackets[a][*l] {
                                acc[*m] += c1 * c2;
                            }
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        jacobi_bad = Some(format!("({i},{j},{k})"));
                        break 'jac;
                    }
                }
            }
        }
        match jacobi_bad {
            None => rep.pass(format!("{}: Jacobi identity", self.name)),
            Some(w) => rep.fail(format!("{}: Jacobi identity", self.name), w),
        }

        let ads: Vec<RatMatrix> = (0..self.dim).map(|i| self.ad(i)).collect();
        let dense = RatMatrix::from_fn(self.dim, self.dim, |i, j| (&ads[i] * &ads[j]).trace());
        rep.check(format!("{}: B = tr(ad ad)", self.name), dense.same_entries(&self.killing_form), || {
            format!("first difference at {:?}", (&dense - &self.killing_form).first_nonzero())
        });
        rep
    }
}

fn unit_matrix(size: usize, a: usize, b: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(size, size);
    m[(a, b)] = q(1, 1);
    m
}

/// E_ab − E_ba in 𝔰𝔬(m).
pub fn so_generator(m: usize, a: usize, b: usize) -> RatMatrix {
    &unit_matrix(m, a, b) - &unit_matrix(m, b, a)
}

/// Real 2m×2m matrix of a complex m×m matrix given by real and imaginary parts.
pub fn complex_to_real(re: &RatMatrix, im: &RatMatrix) -> RatMatrix {
    let m = re.rows();
    let mut out = RatMatrix::zeros(2 * m, 2 * m);
    for a in 0..m {
        for b in 0..m {
            let (x, y) = (&re[(a, b)], &im[(a, b)]);
            out[(2 * a, 2 * b)] = x.clone();
            out[(2 * a, 2 * b + 1)] = -y.clone();
            out[(2 * a + 1, 2 * b)] = y.clone();
            out[(2 * a + 1, 2 * b + 1)] = x.clone();
        }
    }
    out
}

/// Generators of 𝔰𝔲(m) in real form.
pub mod su {
    use super::*;

    /// E_ab − E_ba.
    pub fn x(m: usize, a: usize, b: usize) -> RatMatrix {
        complex_to_real(&so_generator(m, a, b), &RatMatrix::zeros(m, m))
    }

    /// i(E_ab + E_ba).
    pub fn y(m: usize, a: usize, b: usize) -> RatMatrix {
        complex_to_real(&RatMatrix::zeros(m, m), &(&unit_matrix(m, a, b) + &unit_matrix(m, b, a)))
    }

    /// i·diag(d).
    pub fn diag(d: &[Rational]) -> RatMatrix {
        let m = d.len();
        let im = RatMatrix::from_fn(m, m, |a, b| if a == b { d[a].clone() } else { q(0, 1) });
        complex_to_real(&RatMatrix::zeros(m, m), &im)
    }
}

/// Quaternions as 4-vectors over (1, i, j, k) and matrices over ℍ as real
/// 4m×4m matrices of left multiplications.
pub mod quaternion {
    use super::*;

    pub fn mul(p: &[Rational; 4], r: &[Rational; 4]) -> [Rational; 4] {
        let [a1, b1, c1, d1] = p;
        let [a2, b2, c2, d2] = r;
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ]
    }

    pub fn unit(k: usize) -> [Rational; 4] {
        std::array::from_fn(|i| q((i == k) as i64, 1))
    }

    /// Left multiplication by p on ℍ = ℝ⁴.
    pub fn left(p: &[Rational; 4]) -> RatMatrix {
        let mut m = RatMatrix::zeros(4, 4);
        for c in 0..4 {
            let col = mul(p, &unit(c));
            for (r, v) in col.into_iter().enumerate() {
                m[(r, c)] = v;
            }
        }
        m
    }

    /// The m×m quaternionic matrix with entries (a, b, p) as a real matrix.
    pub fn matrix(m: usize, entries: &[(usize, usize, [Rational; 4])]) -> RatMatrix {
        let mut out = RatMatrix::zeros(4 * m, 4 * m);
        for (a, b, p) in entries {
            out.add_block(4 * a, 4 * b, &left(p));
        }
        out
    }

    /// E_ab − E_ba (real off-diagonal generator of 𝔰𝔭(m)).
    pub fn real_off(m: usize, a: usize, b: usize) -> RatMatrix {
        let one = unit(0);
        let minus: [Rational; 4] = std::array::from_fn(|i| -one[i].clone());
        matrix(m, &[(a, b, one), (b, a, minus)])
    }

    /// (E_ab + E_ba)·u for an imaginary unit u (k = 1, 2, 3); a = b gives E_aa·u.
    pub fn imag(m: usize, a: usize, b: usize, k: usize) -> RatMatrix {
        if a == b {
            return matrix(m, &[(a, a, unit(k))]);
        }
        matrix(m, &[(a, b, unit(k)), (b, a, unit(k))])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn so(m: usize) -> LieAlgebraModel {
        let basis: Vec<_> = (0..m).flat_map(|a| (a + 1..m).map(move |b| so_generator(m, a, b))).collect();
        LieAlgebraModel::from_matrices("so", &basis).unwrap()
    }

    #[test]
    fn so3_structure() {
        let g = so(3);
        assert_eq!(g.dim, 3);
        assert!(g.check().passed());
        // B = (m−2)·tr on 𝔰𝔬(m): tr(E₀₁E₀₁) = −2
        assert_eq!(g.killing_form[(0, 0)], q(-2, 1));
    }

    #[test]
    fn so5_killing_form_is_trace_multiple() {
        let g = so(5);
        assert!(g.check().passed());
        for i in 0..g.dim {
            assert_eq!(g.killing_form[(i, i)], q(-6, 1));
        }
    }

    #[test]
    fn quaternion_units() {
        use quaternion::*;
        let (i, j, k) = (unit(1), unit(2), unit(3));
        assert_eq!(mul(&i, &j), k);
        assert_eq!(mul(&j, &k), i);
        assert_eq!(&left(&i) * &left(&j), left(&k));
    }

    #[test]
    fn dependent_basis_rejected() {
        let x = so_generator(3, 0, 1);
        assert!(LieAlgebraModel::from_matrices("bad", &[x.clone(), x]).is_err());
    }
}
