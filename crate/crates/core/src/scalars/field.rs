use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact field arithmetic shared by every matrix in the crate.
///
/// The arithmetic operators come from `num-traits`/`std::ops`; the extra
/// methods cover conjugation and the by-reference fast paths the dense
/// kernels lean on.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Complex conjugation (identity on real fields).
    fn conj(&self) -> Self;

    fn from_rational(q: BigRational) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn mul_ref(&self, rhs: &Self) -> Self;

    fn add_ref(&self, rhs: &Self) -> Self;

    fn sub_ref(&self, rhs: &Self) -> Self;

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.mul_ref(b);
        *self = self.add_ref(&prod);
    }

    fn from_int(i: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(i)))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl Field for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rational(q: BigRational) -> Self {
        q
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

/// Shorthand for a rational from a numerator/denominator pair.
pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn qi(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}


pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A small random rational num/den with |num| ≤ bound and 1 ≤ den ≤ bound.
pub fn random_rational<G: rand::Rng + ?Sized>(rng: &mut G, bound: i64) -> BigRational {
    q(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(4, -2), 0);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(8, 4), 70);
    }

    #[test]
    fn rational_inverse() {
        assert_eq!(q(3, 7).inverse(), Some(q(7, 3)));
        assert_eq!(qi(0).inverse(), None);
    }
}
