//! Real orthonormal frames of TM = (H⊗E)^{J⊗J} and their completeness tensor.

use num_traits::{One, Zero};
use serde::Serialize;

use super::sums::summe_holds;
use super::Clifford;
use crate::error::{Error, Result};
use crate::scalars::{q, Field};
use crate::{RatMatrix, Scalar};

/// X = Σ X[a,k] h_a⊗e_k, stored with index a·2n + k.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentVector {
    pub coeffs: Vec<Scalar>,
}

impl TangentVector {
    pub fn zero(n: usize) -> Self {
        TangentVector { coeffs: vec![Scalar::zero(); 4 * n] }
    }

    pub fn basis(n: usize, a: usize, k: usize) -> Self {
        let mut v = Self::zero(n);
        v.coeffs[a * 2 * n + k] = Scalar::one();
        v
    }

    /// h⊗e for h ∈ H, e ∈ E.
    pub fn decomposable(h: &[Scalar], e: &[Scalar]) -> Self {
        let coeffs = h.iter().flat_map(|x| e.iter().map(move |y| x.mul_ref(y))).collect();
        TangentVector { coeffs }
    }

    pub fn coeff(&self, a: usize, k: usize, d: usize) -> &Scalar {
        &self.coeffs[a * d + k]
    }

    fn half_dim(&self) -> usize {
        self.coeffs.len() / 4
    }

    /// (J⊗J)X. Real tangent vectors are the fixed points.
    pub fn real_structure(&self, cl: &Clifford) -> Self {
        let d = 2 * self.half_dim();
        let mut out = Self::zero(self.half_dim());
        for a in 0..2 {
            for k in 0..d {
                let c = self.coeff(a, k, d).conj();
                if c.is_zero() {
                    continue;
                }
                for b in 0..2 {
                    let jh = &cl.h.j[(b, a)];
                    if jh.is_zero() {
                        continue;
                    }
                    for l in 0..d {
                        let je = &cl.pc.e.j[(l, k)];
                        if je.is_zero() {
                            continue;
                        }
                        out.coeffs[b * d + l] += c.scale(&(jh * je));
                    }
                }
            }
        }
        out
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        TangentVector { coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect() }
    }

    pub fn plus(&self, other: &Self) -> Self {
        TangentVector { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x.add_ref(y)).collect() }
    }
}

/// g = σ_H⊗σ_E, complex bilinear.
pub fn metric(cl: &Clifford, x: &TangentVector, y: &TangentVector) -> Scalar {
    let d = 2 * cl.n();
    let mut acc = Scalar::zero();
    for a in 0..2 {
        for b in 0..2 {
            let sh = &cl.h.sigma[(a, b)];
            if sh.is_zero() {
                continue;
            }
            for k in 0..d {
                let xk = x.coeff(a, k, d);
                if xk.is_zero() {
                    continue;
                }
                for l in 0..d {
                    let se = &cl.pc.e.sigma[(k, l)];
                    if se.is_zero() {
                        continue;
                    }
                    acc += xk.mul_ref(y.coeff(b, l, d)).scale(&(sh * se));
                }
            }
        }
    }
    acc
}

#[derive(Clone, Debug, Serialize)]
pub struct TangentFrame {
    pub n: usize,
    pub construction: String,
    #[serde(skip)]
    pub vectors: Vec<TangentVector>,
    /// Σ_a X_a⊗X_a, which has rational entries.
    #[serde(skip)]
    pub completeness: RatMatrix,
    /// Sign applied to the completeness tensor by the calibration.
    pub sign: i32,
}

impl TangentFrame {
    /// sign · Σ_a X_a⊗X_a, the tensor the frame sums are computed with.
    pub fn effective_completeness(&self) -> RatMatrix {
        self.completeness.scale(&q(self.sign as i64, 1))
    }
}

fn completeness(vectors: &[TangentVector], n: usize) -> Result<RatMatrix> {
    let m = 4 * n;
    let mut t = RatMatrix::zeros(m, m);
    for p in 0..m {
        for qq in 0..m {
            let mut acc = Scalar::zero();
            for x in vectors {
                acc += x.coeffs[p].mul_ref(&x.coeffs[qq]);
            }
            if !acc.is_rational() {
                return Err(Error::Failed(format!("completeness tensor entry ({p},{qq}) = {acc} is not rational")));
            }
            t[(p, qq)] = acc.a;
        }
    }
    Ok(t)
}

/// Four vectors per index i built from h₀⊗e_i, h₁⊗e_{n+i}, h₀⊗e_{n+i}, h₁⊗e_i.
fn standard_vectors(n: usize) -> Vec<TangentVector> {
    let d = 2 * n;
    let inv_sqrt2 = Scalar::sqrt2().scale(&q(1, 2));
    let i = Scalar::i();
    let mut out = Vec::new();
    let pair = |a0: usize, k0: usize, a1: usize, k1: usize, sign: i64, phase: &Scalar| {
        let mut v = TangentVector::zero(n);
        v.coeffs[a0 * d + k0] = phase.mul_ref(&inv_sqrt2);
        v.coeffs[a1 * d + k1] = phase.mul_ref(&inv_sqrt2).scale(&q(sign, 1));
        v
    };
    for k in 0..n {
        out.push(pair(0, k, 1, n + k, 1, &Scalar::one()));
        out.push(pair(0, k, 1, n + k, -1, &i));
        out.push(pair(0, n + k, 1, k, -1, &Scalar::one()));
        out.push(pair(0, n + k, 1, k, 1, &i));
    }
    out
}

fn finish(cl: &Clifford, construction: &str, vectors: Vec<TangentVector>) -> Result<TangentFrame> {
    let n = cl.n();
    for (a, x) in vectors.iter().enumerate() {
        if x.real_structure(cl) != *x {
            return Err(Error::Failed(format!("{construction}: frame vector {a} is not fixed by J⊗J")));
        }
        for (b, y) in vectors.iter().enumerate() {
            let g = metric(cl, x, y);
            let want = if a == b { Scalar::one() } else { Scalar::zero() };
            if g != want {
                return Err(Error::Failed(format!("{construction}: g(X_{a}, X_{b}) = {g}")));
            }
        }
    }
    let t = completeness(&vectors, n)?;
    // calibration instance: S_1, where the second closed-form sum is nonzero
    let (r, s) = (1, n as i32 - 1);
    for sign in [1, -1] {
        let candidate = TangentFrame { n, construction: construction.to_string(), vectors: vectors.clone(), completeness: t.clone(), sign };
        if summe_holds(cl, &candidate, r, s)? {
            return Ok(candidate);
        }
    }
    Err(Error::Failed(format!(
        "{construction}: neither sign of Σ X_a⊗X_a reproduces the number-operator sums at (r,s)=({r},{s})"
    )))
}

/// The standard frame, calibrated against the number-operator sums.
pub fn build_frame(cl: &Clifford) -> Result<TangentFrame> {
    finish(cl, "standard", standard_vectors(cl.n()))
}

/// A second frame: the standard one moved by a chain of rational rotations
/// with cosine 3/5 and sine 4/5 between consecutive vectors.
pub fn build_frame_rotated(cl: &Clifford) -> Result<TangentFrame> {
    let mut v = standard_vectors(cl.n());
    let (c, s) = (Scalar::real(q(3, 5)), Scalar::real(q(4, 5)));
    for j in 0..v.len() - 1 {
        let (x, y) = (v[j].clone(), v[j + 1].clone());
        v[j] = x.scaled(&c).plus(&y.scaled(&s));
        v[j + 1] = x.scaled(&-s.clone()).plus(&y.scaled(&c));
    }
    finish(cl, "rotated", v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_frame_is_real() {
        let cl = Clifford::new(1).unwrap();
        let f = build_frame(&cl).unwrap();
        assert_eq!(f.vectors.len(), 4);
        assert_eq!(f.sign, 1);
    }

    #[test]
    fn rotated_frame_has_same_completeness() {
        let cl = Clifford::new(2).unwrap();
        let a = build_frame(&cl).unwrap();
        let b = build_frame_rotated(&cl).unwrap();
        assert_ne!(a.vectors, b.vectors);
        assert!(a.completeness.same_entries(&b.completeness));
    }
}
