//! The 3×3 system for Δ acting on |ψ₀|², |ψ₁|², |ψ₋|² and its exact
//! eigenfunctions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::spinor::lambda_squared_over_kappa;
use crate::error::{out_of_range, Error, Result};
use crate::report::Report;
use crate::scalars::q;
use crate::{RatMatrix, Rational};

/// The matrix M with Δ(|ψ₀|², |ψ₁|², |ψ₋|²) = (2λ²/(n+3))·M·(|ψ₀|², |ψ₁|², |ψ₋|²).
pub fn laplace_system(n: usize) -> RatMatrix {
    let n = n as i64;
    RatMatrix::from_rows(vec![
        vec![q(1, 1), q(-1, 1), q(0, 1)],
        vec![q(-(n + 3), 4 * n), q(1, 1), q(-6 * (n + 4), n + 3)],
        vec![q(0, 1), q(-(n + 3) * (n - 1), 8 * n * n), q(n + 4, n)],
    ])
}

/// One eigenfunction f = c₀|ψ₀|² + c₁|ψ₁|² + c₋|ψ₋|² with Δf = (eigenvalue·κ) f.
#[derive(Clone, Debug, Serialize)]
pub struct Eigenfunction {
    /// Eigenvalue as a multiple of κ.
    #[serde(serialize_with = "crate::report::serialize_display")]
    pub eigenvalue: Rational,
    #[serde(serialize_with = "serialize_triple")]
    pub coefficients: Vec<Rational>,
}

fn serialize_triple<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct LaplaceSpectrum {
    pub n: usize,
    /// The full matrix over κ: (2λ²/(n+3))/κ · M.
    #[serde(skip)]
    pub matrix: RatMatrix,
    /// Sorted by eigenvalue.
    pub eigenfunctions: Vec<Eigenfunction>,
}

/// det(tI − A) = t³ + c₂t² + c₁t + c₀, returned as [c₀, c₁, c₂, 1].
fn char_poly3(a: &RatMatrix) -> [Rational; 4] {
    let m = |i: usize, j: usize| &a[(i, j)];
    let tr = m(0, 0) + m(1, 1) + m(2, 2);
    let minor = |i: usize, j: usize| m(i, i) * m(j, j) - m(i, j) * m(j, i);
    let c1 = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let det = m(0, 0) * minor(1, 2) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    [-det, c1, -tr, Rational::one()]
}

fn divisors(k: &BigInt) -> Vec<BigInt> {
    let k = k.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= k {
        if (&k % &d).is_zero() {
            out.push(d.clone());
            out.push(&k / &d);
        }
        d += 1;
    }
    out
}

/// Rational roots of a polynomial (ascending coefficients) with multiplicity.
fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    // clear denominators
    let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut p: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from(l.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    while p.len() > 1 && p[0].is_zero() {
        roots.push(Rational::zero());
        p.remove(0);
    }
    while p.len() > 1 {
        let lead = p.last().expect("nonempty").clone();
        let mut found = None;
        'search: for num in divisors(&p[0]) {
            for den in divisors(&lead) {
                for sign in [1, -1] {
                    let x = Rational::new(num.clone() * sign, den.clone());
                    if eval(&p, &x).is_zero() {
                        found = Some(x);
                        break 'search;
                    }
                }
            }
        }
        let Some(x) = found else { break };
        p = deflate(&p, &x);
        roots.push(x);
    }
    roots
}

fn eval(p: &[BigInt], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + Rational::from(c.clone()))
}

/// p(t)/(t − x) for a root x, rescaled to integer coefficients.
fn deflate(p: &[BigInt], x: &Rational) -> Vec<BigInt> {
    let mut quot = vec![Rational::zero(); p.len() - 1];
    let mut carry = Rational::zero();
    for k in (1..p.len()).rev() {
        carry = carry * x + Rational::from(p[k].clone());
        quot[k - 1] = carry.clone();
    }
    let l = quot.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    quot.iter().map(|c| (c * Rational::from(l.clone())).to_integer()).collect()
}

/// Exact eigen-decomposition of the Δ system. Eigenvectors are left
/// eigenvectors, since f = c·(|ψ₀|², |ψ₁|², |ψ₋|²) and Δf = c·Δ(...).
pub fn laplace_matrix(n: usize) -> Result<LaplaceSpectrum> {
    if n < 2 {
        return out_of_range(format!("the Δ system needs n ≥ 2, got n={n}"));
    }
    let nn = n as i64;
    let scale = lambda_squared_over_kappa(n) * q(2, nn + 3);
    let matrix = laplace_system(n).scale(&scale);
    let mut roots = rational_roots(&char_poly3(&matrix));
    if roots.len() != 3 {
        return Err(Error::Failed(format!("characteristic polynomial has only {} rational roots", roots.len())));
    }
    roots.sort();
    roots.dedup();
    if roots.len() != 3 {
        return Err(Error::Failed("repeated eigenvalue".into()));
    }
    let mut eigenfunctions = Vec::new();
    for mu in roots {
        let shifted = &matrix.transpose() - &RatMatrix::scalar(3, mu.clone());
        let ker = shifted.kernel_basis();
        if ker.len() != 1 {
            return Err(Error::Failed(format!("eigenvalue {mu} has a {}-dimensional eigenspace", ker.len())));
        }
        let mut v = ker.into_iter().next().expect("one vector");
        // first nonzero coefficient 1
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let c = v[p].clone();
            v.iter_mut().for_each(|x| *x = &*x / &c);
        }
        eigenfunctions.push(Eigenfunction { eigenvalue: mu, coefficients: v });
    }
    Ok(LaplaceSpectrum { n, matrix, eigenfunctions })
}

/// The eigenvalues 0, (1/2n)(n+1)/(n+2), (1/2n)(2n+3)/(n+2) as multiples of κ.
pub fn expected_eigenvalues(n: usize) -> [Rational; 3] {
    let n = n as i64;
    [q(0, 1), q(n + 1, 2 * n * (n + 2)), q(2 * n + 3, 2 * n * (n + 2))]
}

/// f₀, f₁, f₂ as coefficient triples.
pub fn expected_eigenfunctions(n: usize) -> [[Rational; 3]; 3] {
    let n = n as i64;
    [
        [q(n + 3, 4 * n), q(1, 1), q(6 * n, n + 3)],
        [q(-(n + 3), 4 * n), q(1, n), q(2 * (n + 4), n + 3)],
        [q(n + 3, 4 * n), q(-(n + 3), n), q(6 * (n + 4), n - 1)],
    ]
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

pub fn check_laplace(n: usize) -> Result<Report> {
    let spectrum = laplace_matrix(n)?;
    let mut rep = Report::new();
    let ev: Vec<Rational> = spectrum.eigenfunctions.iter().map(|f| f.eigenvalue.clone()).collect();
    let want = expected_eigenvalues(n);
    rep.check("eigenvalues", ev == want, || {
        format!("computed {:?}", ev.iter().map(|x| x.to_string()).collect::<Vec<_>>())
    });
    for (k, (f, w)) in spectrum.eigenfunctions.iter().zip(expected_eigenfunctions(n)).enumerate() {
        rep.check(format!("f{k} coefficients"), proportional(&f.coefficients, &w), || {
            format!("eigenvector {:?}", f.coefficients.iter().map(|x| x.to_string()).collect::<Vec<_>>())
        });
        // direct check f·A = μ f
        let fa = spectrum.matrix.transpose().apply(&w);
        let mu = &f.eigenvalue;
        rep.check(format!("f{k}·Δ = μ f{k}"), fa.iter().zip(&w).all(|(x, y)| *x == y * mu), || format!("{fa:?}"));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_eigenvalues() {
        let s = laplace_matrix(2).unwrap();
        let ev: Vec<_> = s.eigenfunctions.iter().map(|f| f.eigenvalue.clone()).collect();
        assert_eq!(ev, vec![q(0, 1), q(3, 16), q(7, 16)]);
    }

    #[test]
    fn n5_eigenvalues() {
        let s = laplace_matrix(5).unwrap();
        let ev: Vec<_> = s.eigenfunctions.iter().map(|f| f.eigenvalue.clone()).collect();
        assert_eq!(ev, vec![q(0, 1), q(3, 35), q(13, 70)]);
    }

    #[test]
    fn constant_in_kernel() {
        for n in 2..=8 {
            let m = laplace_system(n);
            let f0 = &expected_eigenfunctions(n)[0];
            assert!(m.transpose().apply(f0).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn full_check() {
        for n in 2..=10 {
            let rep = check_laplace(n).unwrap();
            assert!(rep.passed(), "n={n}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn roots_of_known_cubic() {
        // (t − 1)(t + 2)(2t − 3) = 2t³ − t² − 7t + 6
        let mut r = rational_roots(&[q(6, 1), q(-7, 1), q(-1, 1), q(2, 1)]);
        r.sort();
        assert_eq!(r, vec![q(-2, 1), q(1, 1), q(3, 2)]);
    }
}
