use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::Field;

/// An element `a + b·i + c·√2 + d·i√2` of ℚ(i, √2), generic over the
/// underlying rational field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Qi2<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Field> Qi2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Qi2 { a, b, c, d }
    }

    pub fn real(a: R) -> Self {
        Qi2::new(a, R::zero(), R::zero(), R::zero())
    }

    pub fn i() -> Self {
        Qi2::new(R::zero(), R::one(), R::zero(), R::zero())
    }

    pub fn sqrt2() -> Self {
        Qi2::new(R::zero(), R::zero(), R::one(), R::zero())
    }

    /// Scale every component by a base-field element.
    pub fn scale(&self, k: &R) -> Self {
        Qi2::new(
            self.a.mul_ref(k),
            self.b.mul_ref(k),
            self.c.mul_ref(k),
            self.d.mul_ref(k),
        )
    }

    /// True when the element lies in the base field.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    fn mul_impl(x: &Self, y: &Self) -> Self {
        let two = R::from_int(2);
        let a = x.a.mul_ref(&y.a) - x.b.mul_ref(&y.b)
            + two.mul_ref(&(x.c.mul_ref(&y.c) - x.d.mul_ref(&y.d)));
        let b = x.a.mul_ref(&y.b)
            + x.b.mul_ref(&y.a)
            + two.mul_ref(&(x.c.mul_ref(&y.d) + x.d.mul_ref(&y.c)));
        let c = x.a.mul_ref(&y.c) + x.c.mul_ref(&y.a) - x.b.mul_ref(&y.d) - x.d.mul_ref(&y.b);
        let d = x.a.mul_ref(&y.d) + x.d.mul_ref(&y.a) + x.b.mul_ref(&y.c) + x.c.mul_ref(&y.b);
        Qi2::new(a, b, c, d)
    }
}

impl<R: Field> Zero for Qi2<R> {
    fn zero() -> Self {
        Qi2::real(R::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl<R: Field> One for Qi2<R> {
    fn one() -> Self {
        Qi2::real(R::one())
    }
}

impl<R: Field> Add for Qi2<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<R: Field> AddAssign for Qi2<R> {
    fn add_assign(&mut self, rhs: Self) {
        *self = self.add_ref(&rhs);
    }
}

impl<R: Field> Sub for Qi2<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl<R: Field> Mul for Qi2<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::mul_impl(&self, &rhs)
    }
}

impl<R: Field> Div for Qi2<R> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let inv = rhs.inverse().expect("division by zero in Qi2");
        Self::mul_impl(&self, &inv)
    }
}

impl<R: Field> Neg for Qi2<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Qi2::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl<R: Field> Field for Qi2<R> {
    fn conj(&self) -> Self {
        Qi2::new(
            self.a.conj(),
            -self.b.conj(),
            self.c.conj(),
            -self.d.conj(),
        )
    }

    fn from_rational(q: BigRational) -> Self {
        Qi2::real(R::from_rational(q))
    }

    // x⁻¹ = x̄ / (x x̄) with x x̄ = p + q√2 real, inverted in ℚ(√2).
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = Self::mul_impl(self, &self.conj());
        let (p, q) = (n.a, n.c);
        let two = R::from_int(2);
        let den = p.mul_ref(&p) - two.mul_ref(&q.mul_ref(&q));
        let den_inv = den.inverse()?;
        let real_inv = Qi2::new(p, R::zero(), -q, R::zero()).scale(&den_inv);
        Some(Self::mul_impl(&self.conj(), &real_inv))
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        Self::mul_impl(self, rhs)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Qi2::new(
            self.a.add_ref(&rhs.a),
            self.b.add_ref(&rhs.b),
            self.c.add_ref(&rhs.c),
            self.d.add_ref(&rhs.d),
        )
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        Qi2::new(
            self.a.sub_ref(&rhs.a),
            self.b.sub_ref(&rhs.b),
            self.c.sub_ref(&rhs.c),
            self.d.sub_ref(&rhs.d),
        )
    }
}

impl<R: Field> fmt::Display for Qi2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts = [
            (&self.a, ""),
            (&self.b, "i"),
            (&self.c, "√2"),
            (&self.d, "i√2"),
        ];
        let mut first = true;
        for (coef, unit) in parts {
            if coef.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if unit.is_empty() {
                write!(f, "{coef}")?;
            } else if coef.is_one() {
                write!(f, "{unit}")?;
            } else {
                write!(f, "({coef}){unit}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::field::q;
    use proptest::prelude::*;

    type S = Qi2<BigRational>;

    fn s(a: i64, b: i64, c: i64, d: i64) -> S {
        Qi2::new(q(a, 1), q(b, 1), q(c, 1), q(d, 1))
    }

    #[test]
    fn units_square_correctly() {
        assert_eq!(S::i() * S::i(), -S::one());
        assert_eq!(S::sqrt2() * S::sqrt2(), S::from_int(2));
        let isq = S::i() * S::sqrt2();
        assert_eq!(isq.clone() * isq, S::from_int(-2));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(s(1, 0, -2, 0).to_string(), "1 + (-2)√2");
        assert_eq!(S::zero().to_string(), "0");
        assert_eq!(S::i().to_string(), "i");
    }

    fn arb() -> impl Strategy<Value = S> {
        (-9i64..9, -9i64..9, -9i64..9, -9i64..9, 1i64..5)
            .prop_map(|(a, b, c, d, den)| Qi2::new(q(a, den), q(b, 1), q(c, den), q(d, 2)))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
            prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * x.inverse().unwrap(), S::one());
            }
        }

        #[test]
        fn conj_is_multiplicative_involution(x in arb(), y in arb()) {
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
        }
    }
}
