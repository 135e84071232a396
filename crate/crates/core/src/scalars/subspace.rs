use super::field::Field;
use super::matrix::Matrix;
use super::space::Space;
use crate::error::{Error, Result};

/// A subspace stored by an embedded basis `B` (ambient × k) together with a
/// left inverse built from an invertible k×k block of `B`.
///
/// Coordinates are only returned after checking that `B·c` reproduces the
/// input, so mapping into a subspace doubles as a membership test.
#[derive(Clone)]
pub struct Subspace<F> {
    embedding: Matrix<F>,
    left_inverse: Matrix<F>,
}

impl<F: Field> std::fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace {} ⊂ {} (dim {})", self.label(), self.ambient(), self.dim())
    }
}

impl<F: Field> Subspace<F> {
    /// `basis` columns must be independent; its codomain label is the ambient space.
    pub fn new(basis: Matrix<F>, label: Space) -> Result<Self> {
        let k = basis.cols();
        let ambient = basis.codomain().clone();
        let pivot_rows = basis.transpose().independent_columns();
        if pivot_rows.len() != k {
            return Err(Error::Invalid(format!("basis of {label} is dependent")));
        }
        let block_inv = basis.select_rows(&pivot_rows).inverse()?;
        let mut left = Matrix::zeros(k, basis.rows());
        for (c, &p) in pivot_rows.iter().enumerate() {
            for r in 0..k {
                left[(r, p)] = block_inv[(r, c)].clone();
            }
        }
        Ok(Subspace {
            embedding: basis.labeled(ambient.clone(), label.clone()),
            left_inverse: left.labeled(label, ambient),
        })
    }

    /// The whole ambient space viewed as a subspace of itself.
    pub fn full(dim: usize, ambient: Space, label: Space) -> Self {
        Subspace {
            embedding: Matrix::identity(dim).labeled(ambient.clone(), label.clone()),
            left_inverse: Matrix::identity(dim).labeled(label, ambient),
        }
    }

    pub fn dim(&self) -> usize {
        self.embedding.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.embedding.rows()
    }

    pub fn label(&self) -> &Space {
        self.embedding.domain()
    }

    pub fn ambient(&self) -> &Space {
        self.embedding.codomain()
    }

    /// Inclusion into the ambient space.
    pub fn embedding(&self) -> &Matrix<F> {
        &self.embedding
    }

    /// A left inverse of the inclusion. It is a projection only on the
    /// subspace itself; use [`Subspace::restrict`] for checked coordinates.
    pub fn left_inverse(&self) -> &Matrix<F> {
        &self.left_inverse
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coords(v).is_ok()
    }

    pub fn coords(&self, v: &[F]) -> Result<Vec<F>> {
        let c = self.left_inverse.apply(v);
        if self.embedding.apply(&c) != v {
            return Err(Error::NotInSubspace(self.label().to_string()));
        }
        Ok(c)
    }

    /// Express a map with values in the ambient space as a map into the
    /// subspace, failing if some image vector leaves it.
    pub fn restrict(&self, m: &Matrix<F>) -> Result<Matrix<F>> {
        let c = self.left_inverse.compose(m)?;
        let back = self.embedding.compose(&c)?;
        if let Some((i, j)) = back.try_sub(m)?.first_nonzero() {
            return Err(Error::NotInSubspace(format!(
                "{} (column {j} of a map into {}, row {i})",
                self.label(),
                m.codomain()
            )));
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::field::qi;
    use num_rational::BigRational;

    #[test]
    fn membership_and_coordinates() {
        let amb = Space::coeff("V", 3);
        let b = Matrix::<BigRational>::from_rows(vec![
            vec![qi(1), qi(0)],
            vec![qi(2), qi(1)],
            vec![qi(0), qi(3)],
        ])
        .with_codomain(amb.clone());
        let sub = Subspace::new(b, Space::coeff("W", 2)).unwrap();
        assert_eq!(sub.coords(&[qi(1), qi(3), qi(3)]).unwrap(), vec![qi(1), qi(1)]);
        assert!(!sub.contains(&[qi(1), qi(0), qi(0)]));
    }

    #[test]
    fn dependent_basis_rejected() {
        let b = Matrix::<BigRational>::from_rows(vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]]);
        assert!(Subspace::new(b, Space::coeff("W", 2)).is_err());
    }
}
