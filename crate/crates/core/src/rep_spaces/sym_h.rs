//! Sym^rH in the monomial basis h₀^{r−k}h₁^k, k = 0..=r.

use crate::scalars::{q, qi, Space};
use crate::{RatMatrix, Rational};

pub fn sym_label(r: i32) -> Space {
    Space::SymH { r }
}

pub fn sym_dim(r: i32) -> usize {
    if r < 0 {
        0
    } else {
        r as usize + 1
    }
}

fn zero_map(to: i32, from: i32) -> RatMatrix {
    RatMatrix::zeros(sym_dim(to), sym_dim(from)).labeled(sym_label(to), sym_label(from))
}

/// h_a· : Sym^rH → Sym^{r+1}H for a basis vector h_a.
pub fn mul_basis(a: usize, r: i32) -> RatMatrix {
    let mut m = zero_map(r + 1, r);
    for k in 0..sym_dim(r) {
        m[(k + a, k)] = qi(1);
    }
    m
}

/// h· for a general h ∈ H.
pub fn mul(h: &[Rational], r: i32) -> RatMatrix {
    RatMatrix::lincomb(h, &[mul_basis(0, r), mul_basis(1, r)])
}

/// dh_a⌟ : Sym^rH → Sym^{r−1}H, the derivation extending dh_a.
pub fn contract_basis(a: usize, r: i32) -> RatMatrix {
    let mut m = zero_map(r - 1, r);
    for k in 0..sym_dim(r) {
        // h₀^{p} h₁^{q} with p = r − k, q = k
        let (p, qexp) = (r as usize - k, k);
        match a {
            0 if p > 0 => m[(k, k)] = qi(p as i64),
            1 if qexp > 0 => m[(k - 1, k)] = qi(qexp as i64),
            _ => {}
        }
    }
    m
}

/// dh_a⌟_∘ = (1/r) dh_a⌟. On Sym⁰H the modified contraction is not
/// defined by the formula; it is taken to be the zero map into Sym^{−1}H = 0.
pub fn contract_circ_basis(a: usize, r: i32) -> RatMatrix {
    let m = contract_basis(a, r);
    if r <= 0 {
        m
    } else {
        m.scale(&q(1, r as i64))
    }
}

pub fn contract_circ(alpha: &[Rational], r: i32) -> RatMatrix {
    RatMatrix::lincomb(alpha, &[contract_circ_basis(0, r), contract_circ_basis(1, r)])
}

/// Action of h₁h₂ ∈ Sym²H on Sym^rH: the derivation extending
/// (h₁h₂)h = σ(h₁,h)h₂ + σ(h₂,h)h₁.
pub fn sym2_action(h1: &[Rational], h2: &[Rational], r: i32) -> RatMatrix {
    let h = super::symplectic::build_h();
    // (h₁h₂)· = h₂·h₁^#⌟ + h₁·h₂^#⌟ as a derivation on monomials
    let t1 = &mul(h2, r - 1) * &contract(&h.sharp(h1), r);
    let t2 = &mul(h1, r - 1) * &contract(&h.sharp(h2), r);
    &t1 + &t2
}

/// Plain derivation contraction α⌟ for a general covector.
pub fn contract(alpha: &[Rational], r: i32) -> RatMatrix {
    RatMatrix::lincomb(alpha, &[contract_basis(0, r), contract_basis(1, r)])
}

/// Gram matrix of the hermitian product on Sym^rH induced by (x, y) = σ(x, Jy):
/// the monomial basis is orthogonal with |h₀^{p}h₁^{q}|² = p!q!/r!.
pub fn gram(r: i32) -> RatMatrix {
    let fact = |m: usize| -> i64 { (1..=m as i64).product() };
    let mut g = zero_map(r, r);
    for k in 0..sym_dim(r) {
        let (p, qexp) = (r as usize - k, k);
        g[(k, k)] = q(fact(p) * fact(qexp), fact(r as usize));
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_and_contraction_shapes() {
        let m = mul_basis(1, 2);
        assert_eq!((m.rows(), m.cols()), (4, 3));
        let c = contract_basis(0, 0);
        assert_eq!((c.rows(), c.cols()), (0, 1));
    }

    #[test]
    fn contraction_is_a_derivation() {
        // dh₀⌟(h₀² h₁) = 2 h₀h₁
        let c = contract_basis(0, 3);
        assert_eq!(c.column(1), vec![qi(0), qi(2), qi(0)]);
        let c1 = contract_basis(1, 3);
        assert_eq!(c1.column(1), vec![qi(1), qi(0), qi(0)]);
    }

    #[test]
    fn sym2_action_on_h() {
        // (h₀h₀)h₁ = 2σ(h₀,h₁)h₀ = 2h₀
        let h0 = vec![qi(1), qi(0)];
        let a = sym2_action(&h0, &h0, 1);
        assert_eq!(a.column(1), vec![qi(2), qi(0)]);
        assert_eq!(a.column(0), vec![qi(0), qi(0)]);
    }
}
