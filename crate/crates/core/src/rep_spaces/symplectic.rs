use num_traits::Zero;
use rand::Rng;

use crate::error::{out_of_range, Result};
use crate::report::Report;
use crate::scalars::{qi, Field};
use crate::{RatMatrix, Rational, Scalar};

/// A complex symplectic vector space ℂ^{2m} with its compatible quaternionic
/// structure, in a standard symplectic basis.
///
/// `sigma[(i, j)] = σ(b_i, b_j)`; `j` is the matrix of the antilinear map
/// `J`, i.e. `J x = j · conj(x)`.
#[derive(Clone, Debug)]
pub struct SymplecticSpace {
    pub half_dim: usize,
    pub sigma: RatMatrix,
    pub j: RatMatrix,
}

/// E = ℂ^{2n} with σ(e_i, e_{n+i}) = 1, J e_i = e_{n+i}, J e_{n+i} = −e_i.
pub fn build_e(n: usize) -> Result<SymplecticSpace> {
    if n == 0 {
        return out_of_range("E needs n ≥ 1");
    }
    Ok(standard(n))
}

/// H = ℂ², the n = 1 instance of the same construction.
pub fn build_h() -> SymplecticSpace {
    standard(1)
}

fn standard(n: usize) -> SymplecticSpace {
    let mut sigma = RatMatrix::zeros(2 * n, 2 * n);
    let mut j = RatMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        sigma[(i, n + i)] = qi(1);
        sigma[(n + i, i)] = qi(-1);
        j[(n + i, i)] = qi(1);
        j[(i, n + i)] = qi(-1);
    }
    SymplecticSpace {
        half_dim: n,
        sigma,
        j,
    }
}

impl SymplecticSpace {
    pub fn dim(&self) -> usize {
        2 * self.half_dim
    }

    /// σ(x, y) for vectors over any field containing ℚ.
    pub fn sigma<F: Field>(&self, x: &[F], y: &[F]) -> F {
        let mut acc = F::zero();
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                let s = &self.sigma[(a, b)];
                if !s.is_zero() {
                    let t = x[a].mul_ref(&y[b]).mul_ref(&F::from_rational(s.clone()));
                    acc = acc.add_ref(&t);
                }
            }
        }
        acc
    }

    /// `J x = j · conj(x)`.
    pub fn apply_j<F: Field>(&self, x: &[F]) -> Vec<F> {
        let jm = self.j.map(|q| F::from_rational(q.clone()));
        let xc: Vec<F> = x.iter().map(|v| v.conj()).collect();
        jm.apply(&xc)
    }

    /// `e^# = σ(e, ·)` as a covector in the dual basis.
    pub fn sharp<F: Field>(&self, e: &[F]) -> Vec<F> {
        (0..self.dim())
            .map(|b| {
                let mut acc = F::zero();
                for (a, x) in e.iter().enumerate() {
                    let s = &self.sigma[(a, b)];
                    if !s.is_zero() {
                        acc = acc.add_ref(&x.mul_ref(&F::from_rational(s.clone())));
                    }
                }
                acc
            })
            .collect()
    }

    /// Inverse of [`SymplecticSpace::sharp`]. With Ω² = −1 this is `η ↦ −η·Ω`.
    pub fn flat<F: Field>(&self, eta: &[F]) -> Vec<F> {
        let v = self.sharp(eta);
        v.into_iter().map(|x| -x).collect()
    }

    /// The invariants of a compatible positive quaternionic structure,
    /// checked on basis vectors and on `samples` random ℚ(i)-vectors.
    pub fn check(&self, samples: usize, rng: &mut impl Rng) -> Report {
        let mut rep = Report::new();
        let d = self.dim();
        rep.check("σ antisymmetric", self.sigma.transpose().same_entries(&-&self.sigma), || {
            "σᵀ ≠ −σ".into()
        });
        rep.check("σ nondegenerate", self.sigma.rank() == d, || "rank deficient".into());
        let jj = &self.j * &self.j;
        rep.check("J² = −1", jj.same_entries(&RatMatrix::scalar(d, qi(-1))), || {
            "J² ≠ −1".into()
        });

        let mut vectors: Vec<Vec<Scalar>> = (0..d)
            .map(|k| (0..d).map(|i| Scalar::real(qi((i == k) as i64))).collect())
            .collect();
        for _ in 0..samples {
            vectors.push(
                (0..d)
                    .map(|_| {
                        let re = Rational::new(rng.gen_range(-9..10).into(), rng.gen_range(1..5).into());
                        let im = Rational::new(rng.gen_range(-9..10).into(), rng.gen_range(1..5).into());
                        Scalar::new(re, im, qi(0), qi(0))
                    })
                    .collect(),
            );
        }
        let mut positive = true;
        let mut compatible = true;
        let mut witness = String::new();
        for x in &vectors {
            if x.iter().all(|c| c.is_zero()) {
                continue;
            }
            let jx = self.apply_j(x);
            let p = self.sigma(x, &jx);
            if !(p.is_rational() && p.a > qi(0)) {
                positive = false;
                witness = format!("σ(x, Jx) = {p}");
            }
            for y in &vectors {
                let lhs = self.sigma(&jx, &self.apply_j(y));
                if lhs != self.sigma(x, y).conj() {
                    compatible = false;
                }
            }
        }
        rep.check("σ(x, Jx) > 0", positive, || witness);
        rep.check("σ(Jx, Jy) = conj σ(x, y)", compatible, || "mismatch".into());
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn unit(d: usize, k: usize) -> Vec<Rational> {
        (0..d).map(|i| qi((i == k) as i64)).collect()
    }

    #[test]
    fn basis_values() {
        let e1 = build_e(1).unwrap();
        assert_eq!(e1.sigma(&unit(2, 0), &unit(2, 1)), qi(1));
        assert_eq!(e1.sigma(&unit(2, 0), &unit(2, 0)), qi(0));
        let e2 = build_e(2).unwrap();
        let je = e2.apply_j(&unit(4, 0));
        assert_eq!(e2.sigma(&unit(4, 0), &je), qi(1));
        assert!(build_e(0).is_err());
    }

    #[test]
    fn invariants_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for sp in [build_h(), build_e(2).unwrap(), build_e(3).unwrap()] {
            let r = sp.check(6, &mut rng);
            assert!(r.passed(), "{:?}", r.first_failure());
        }
    }

    #[test]
    fn j_squared_on_h() {
        let h = build_h();
        for k in 0..2 {
            let v = unit(2, k);
            let jj = h.apply_j(&h.apply_j(&v));
            assert_eq!(jj, v.iter().map(|x| -x.clone()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn musical_maps_are_inverse() {
        let e = build_e(3).unwrap();
        for k in 0..6 {
            let v = unit(6, k);
            assert_eq!(e.flat(&e.sharp(&v)), v);
        }
        // de_i^♭ = −e_{n+i}, de_{n+i}^♭ = e_i
        assert_eq!(e.flat(&unit(6, 0)), unit(6, 3).iter().map(|x| -x.clone()).collect::<Vec<_>>());
        assert_eq!(e.flat(&unit(6, 3)), unit(6, 0));
    }
}
