//! Fraction-free elimination and everything derived from it.

use super::field::Field;
use super::matrix::Matrix;
use super::space::Space;
use crate::error::{Error, Result};

/// Reduced row echelon form: `rref` holds only the `rank` nonzero rows.
#[derive(Clone)]
pub struct Echelon<F> {
    pub pivots: Vec<usize>,
    pub rref: Matrix<F>,
}

/// Bareiss elimination to echelon form. Pivots are always the first nonzero
/// entry in the column, so the result is a deterministic function of the input.
fn bareiss<F: Field>(m: &Matrix<F>) -> (Vec<Vec<F>>, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<F>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut prev = F::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let prev_inv = prev.inverse().expect("Bareiss pivot is nonzero");
        let (top, bottom) = a.split_at_mut(r + 1);
        let prow = &top[r];
        let piv = prow[c].clone();
        for row in bottom.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let t = piv.mul_ref(&row[j]).sub_ref(&f.mul_ref(&prow[j]));
                row[j] = t.mul_ref(&prev_inv);
            }
            row[c] = F::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

impl<F: Field> Matrix<F> {
    pub fn echelon(&self) -> Echelon<F> {
        let (mut a, pivots) = bareiss(self);
        let cols = self.cols();
        for k in (0..pivots.len()).rev() {
            let c = pivots[k];
            let inv = a[k][c].inverse().expect("pivot is nonzero");
            for x in a[k].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x = x.mul_ref(&inv);
                }
            }
            let (above, rest) = a.split_at_mut(k);
            let prow = &rest[0];
            for row in above.iter_mut() {
                let f = row[c].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..cols {
                    if !prow[j].is_zero() {
                        let t = row[j].sub_ref(&f.mul_ref(&prow[j]));
                        row[j] = t;
                    }
                }
            }
        }
        let rref = Matrix::from_fn(a.len(), cols, |i, j| a[i][j].clone());
        Echelon { pivots, rref }
    }

    pub fn rank(&self) -> usize {
        bareiss(self).1.len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let ech = self.echelon();
        let cols = self.cols();
        let mut is_pivot = vec![false; cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![F::zero(); cols];
                v[f] = F::one();
                for (k, &p) in ech.pivots.iter().enumerate() {
                    v[p] = -ech.rref[(k, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Kernel basis as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Matrix<F> {
        let basis = self.kernel_basis();
        Matrix::from_columns(self.cols(), &basis)
    }

    /// A solution `X` of `self·X = b`, free variables set to zero.
    pub fn solve(&self, b: &Matrix<F>) -> Result<Matrix<F>> {
        if b.rows() != self.rows() {
            return Err(Error::Shape("solve: right-hand side rows".into()));
        }
        let n = self.cols();
        let aug = self.hstack(b).echelon();
        if aug.pivots.iter().any(|&p| p >= n) {
            return Err(Error::Failed("linear system is inconsistent".into()));
        }
        let mut x = Matrix::zeros(n, b.cols());
        for (k, &p) in aug.pivots.iter().enumerate() {
            for j in 0..b.cols() {
                x[(p, j)] = aug.rref[(k, n + j)].clone();
            }
        }
        Ok(x.labeled(self.domain().clone(), b.domain().clone()))
    }

    pub fn inverse(&self) -> Result<Matrix<F>> {
        if self.rows() != self.cols() {
            return Err(Error::Shape("inverse of non-square matrix".into()));
        }
        let n = self.rows();
        if n == 0 {
            return Ok(Matrix::zeros(0, 0).labeled(self.domain().clone(), self.codomain().clone()));
        }
        let ech = self.hstack(&Matrix::identity(n)).echelon();
        if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(ech
            .rref
            .block(0, n, n, n)
            .labeled(self.domain().clone(), self.codomain().clone()))
    }

    /// Indices of a maximal independent set of columns (the pivot columns).
    pub fn independent_columns(&self) -> Vec<usize> {
        bareiss(self).1
    }

    /// Basis of the column space, taken from the original columns.
    pub fn column_space(&self) -> Matrix<F> {
        let idx = self.independent_columns();
        self.select_cols(&idx)
            .with_domain(Space::coeff("image", idx.len()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::field::{q, qi};
    use crate::scalars::qi2::Qi2;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type M = Matrix<BigRational>;

    fn m(rows: &[&[i64]]) -> M {
        M::from_rows(rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        assert_eq!(M::zeros(2, 3).kernel_basis().len(), 3);
        assert!(M::identity(4).kernel_basis().is_empty());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).same_entries(&M::identity(3)));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn solve_and_inconsistency() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&m(&[&[3], &[1]])).unwrap();
        assert_eq!(x.column(0), vec![qi(2), qi(1)]);
        let sing = m(&[&[1, 1], &[2, 2]]);
        assert!(sing.solve(&m(&[&[1], &[0]])).is_err());
    }

    #[test]
    fn complex_entries_eliminate() {
        type S = Qi2<BigRational>;
        let i = S::i();
        let r2 = S::sqrt2();
        let a = Matrix::from_rows(vec![vec![<S as num_traits::One>::one(), i.clone()], vec![r2.clone(), r2.clone() * i]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).iter().all(num_traits::Zero::is_zero));
    }

    fn arb_matrix(r: usize, c: usize) -> impl Strategy<Value = M> {
        proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
            // bias towards rank deficiency by zeroing a third of the entries
            M::from_fn(r, c, |i, j| {
                let x = v[i * c + j];
                if x.rem_euclid(3) == 0 { qi(0) } else { q(x, 2) }
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in arb_matrix(4, 6)) {
            let k = a.kernel_basis();
            prop_assert_eq!(a.rank() + k.len(), 6);
            for v in &k {
                prop_assert!(a.apply(v).iter().all(num_traits::Zero::is_zero));
            }
        }

        #[test]
        fn rank_of_product_is_bounded(a in arb_matrix(4, 5), b in arb_matrix(5, 3)) {
            let ab = &a * &b;
            prop_assert!(ab.rank() <= a.rank().min(b.rank()));
        }

        #[test]
        fn elimination_is_deterministic(a in arb_matrix(5, 5)) {
            let e1 = a.echelon();
            let e2 = a.clone().echelon();
            prop_assert_eq!(e1.pivots, e2.pivots);
            prop_assert!(e1.rref.same_entries(&e2.rref));
        }
    }
}
