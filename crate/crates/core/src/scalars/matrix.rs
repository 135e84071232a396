use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::field::Field;
use super::space::Space;
use crate::error::{Error, Result};

/// Dense exact matrix with domain and codomain labels.
///
/// Entries are stored row-major. Products skip zero entries, which is
/// where nearly all of the speed comes from: the operators built in this
/// crate are very sparse.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
    codomain: Space,
    domain: Space,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
            codomain: Space::coeff("C", rows),
            domain: Space::coeff("C", cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, F::one())
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            data,
            codomain: Space::coeff("C", rows),
            domain: Space::coeff("C", cols),
        }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rows[i][j].clone())
    }

    /// Column matrix built from a vector.
    pub fn column_vector(v: &[F]) -> Self {
        Self::from_fn(v.len(), 1, |i, _| v[i].clone())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<F>]) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    /// Attach labels; the labels say nothing about size.
    pub fn labeled(mut self, codomain: Space, domain: Space) -> Self {
        self.codomain = codomain;
        self.domain = domain;
        self
    }

    pub fn with_domain(mut self, domain: Space) -> Self {
        self.domain = domain;
        self
    }

    pub fn with_codomain(mut self, codomain: Space) -> Self {
        self.codomain = codomain;
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// First nonzero entry, as a witness for failed identities.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|x| !x.is_zero())
            .map(|p| (p / self.cols, p % self.cols))
    }

    /// `Some(c)` when the matrix is `c·id`.
    pub fn as_scalar(&self) -> Option<F> {
        if self.rows != self.cols {
            return None;
        }
        if self.rows == 0 {
            return Some(F::zero());
        }
        let c = self[(0, 0)].clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = &self[(i, j)];
                let ok = if i == j { *x == c } else { x.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Entrywise equality, ignoring labels.
    pub fn same_entries(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }

    /// Composition `self ∘ rhs`; the domain of `self` must be the codomain of `rhs`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.domain != rhs.codomain {
            return Err(Error::LabelMismatch {
                left: format!("[{} <- {}]", self.codomain, self.domain),
                right: format!("[{} <- {}]", rhs.codomain, rhs.domain),
            });
        }
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "{}x{} after {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let brow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        o.add_mul_assign(a, b);
                    }
                }
            }
        }
        Ok(out.labeled(self.codomain.clone(), rhs.domain.clone()))
    }

    fn check_same_space(&self, rhs: &Self) -> Result<()> {
        if self.domain != rhs.domain || self.codomain != rhs.codomain {
            return Err(Error::LabelMismatch {
                left: format!("[{} <- {}]", self.codomain, self.domain),
                right: format!("[{} <- {}]", rhs.codomain, rhs.domain),
            });
        }
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_space(rhs)?;
        let mut out = self.clone();
        for (o, b) in out.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                *o = o.add_ref(b);
            }
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_space(rhs)?;
        let mut out = self.clone();
        for (o, b) in out.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                *o = o.sub_ref(b);
            }
        }
        Ok(out)
    }

    /// `self += c·rhs`
    pub fn add_scaled(&mut self, c: &F, rhs: &Self) -> Result<()> {
        self.check_same_space(rhs)?;
        if c.is_zero() {
            return Ok(());
        }
        for (o, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                o.add_mul_assign(c, b);
            }
        }
        Ok(())
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            if !x.is_zero() {
                *x = x.mul_ref(c);
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
            .labeled(self.domain.clone(), self.codomain.clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
            .labeled(self.domain.clone(), self.codomain.clone())
    }

    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = x.conj();
        }
        out
    }

    /// Kronecker product; `(a⊗b)(x⊗y) = ax⊗by` with the left factor major.
    pub fn kron(&self, b: &Self) -> Self {
        let (p, q) = (b.rows, b.cols);
        let mut out = Self::zeros(self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let x = &b[(k, l)];
                        if !x.is_zero() {
                            out[(i * p + k, j * q + l)] = a.mul_ref(x);
                        }
                    }
                }
            }
        }
        out.labeled(
            Space::tensor(&self.codomain, &b.codomain),
            Space::tensor(&self.domain, &b.domain),
        )
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc.add_mul_assign(a, x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Rows listed in `idx`, in order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
            .with_domain(self.domain.clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
            .with_codomain(self.codomain.clone())
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Overwrite a block starting at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of bounds");
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    /// Add a block starting at `(r0, c0)`.
    pub fn add_block(&mut self, r0: usize, c0: usize, b: &Self) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of bounds");
        for i in 0..b.rows {
            for j in 0..b.cols {
                let x = &b[(i, j)];
                if !x.is_zero() {
                    let y = self[(r0 + i, c0 + j)].add_ref(x);
                    self[(r0 + i, c0 + j)] = y;
                }
            }
        }
    }

    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "hstack rows");
        let mut out = Self::zeros(self.rows, self.cols + rhs.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, rhs);
        out.with_codomain(self.codomain.clone())
    }

    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols, "vstack cols");
        let mut out = Self::zeros(self.rows + rhs.rows, self.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, 0, rhs);
        out.with_domain(self.domain.clone())
    }

    /// Entrywise change of field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            codomain: self.codomain.clone(),
            domain: self.domain.clone(),
        }
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn trace(&self) -> F {
        let mut acc = F::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add_ref(&self[(i, i)]);
        }
        acc
    }

    /// `Σ c_k M_k`; all terms must share labels and at least one term is required.
    pub fn lincomb(coeffs: &[F], mats: &[Self]) -> Self {
        assert_eq!(coeffs.len(), mats.len(), "lincomb lengths");
        let mut out = mats[0].scale(&F::zero());
        for (c, m) in coeffs.iter().zip(mats) {
            out.add_scaled(c, m).unwrap_or_else(|e| panic!("{e}"));
        }
        out
    }

    /// `[self, rhs] = self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.compose(rhs)?.try_sub(&rhs.compose(self)?)
    }

    /// `{self, rhs} = self·rhs + rhs·self`.
    pub fn anticommutator(&self, rhs: &Self) -> Result<Self> {
        self.compose(rhs)?.try_add(&rhs.compose(self)?)
    }
}

impl<F: Field> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

// Operator sugar for internal formulas. These panic on a label mismatch,
// which is always a construction bug; use `compose`/`try_add` when the
// inputs come from outside.
impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: Self) -> Matrix<F> {
        self.compose(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: Self) -> Matrix<F> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: Self) -> Matrix<F> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        self.scale(&-F::one())
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} [{} <- {}]",
            self.rows, self.cols, self.codomain, self.domain
        )?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|x| x.to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::field::qi;
    use num_rational::BigRational;

    type M = Matrix<BigRational>;

    fn m(rows: &[&[i64]]) -> M {
        M::from_rows(rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let k = M::identity(2).kron(&M::identity(3));
        assert!(k.same_entries(&M::identity(6)));
    }

    #[test]
    fn kron_acts_on_pure_tensors() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, -1], &[5, 2]]);
        let x = vec![qi(1), qi(0)];
        let lhs = a.kron(&b).apply(&[qi(1), qi(0), qi(0), qi(0)]);
        let ax = a.apply(&x);
        let bx = b.apply(&x);
        let rhs: Vec<_> = ax
            .iter()
            .flat_map(|p| bx.iter().map(move |q| p * q))
            .collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn label_mismatch_is_an_error() {
        let a = M::identity(3).labeled(Space::e(1), Space::e(1));
        let b = M::identity(3).labeled(Space::h(), Space::h());
        assert!(matches!(a.compose(&b), Err(Error::LabelMismatch { .. })));
        assert!(a.try_add(&b).is_err());
        assert!(a.compose(&a).is_ok());
    }

    #[test]
    fn scalar_detection() {
        assert_eq!(M::scalar(3, qi(5)).as_scalar(), Some(qi(5)));
        assert_eq!(m(&[&[1, 1], &[0, 1]]).as_scalar(), None);
        assert_eq!(M::zeros(0, 0).as_scalar(), Some(qi(0)));
    }
}
