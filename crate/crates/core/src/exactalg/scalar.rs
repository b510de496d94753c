use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `a + b·√2` of the field Q(√2).
///
/// Both components are kept as reduced big rationals, so equality is
/// component-wise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Sqrt2Rational {
    a: BigRational,
    b: BigRational,
}

impl Sqrt2Rational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn rational(a: BigRational) -> Self {
        Self::new(a, BigRational::zero())
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn sqrt2() -> Self {
        Self::from_ints(0, 1)
    }

    /// `√2^k` for any integer `k`.
    pub fn sqrt2_pow(k: i64) -> Self {
        let half = k.unsigned_abs() / 2;
        let two_pow = BigInt::one() << half;
        let even = if k >= 0 { BigRational::from_integer(two_pow) } else { BigRational::new(BigInt::one(), two_pow) };
        match (k % 2 != 0, k >= 0) {
            (false, _) => Self::rational(even),
            (true, true) => Self::new(BigRational::zero(), even),
            // √2^{-(2h+1)} = √2 / 2^{h+1}
            (true, false) => Self::new(BigRational::zero(), even / BigRational::from_integer(2.into())),
        }
    }

    /// `(-1)^k`.
    pub fn sign_pow(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The field norm `a² − 2b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let n = self.norm();
        Ok(Self::new(&self.a / &n, -(&self.b / &n)))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// True when the value is a pure rational strictly below zero; used for
    /// rendering `-` separators.
    pub(crate) fn is_negative_rational(&self) -> bool {
        self.b.is_zero() && self.a.is_negative()
    }
}

impl Zero for Sqrt2Rational {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Sqrt2Rational {
    fn one() -> Self {
        Self::integer(1)
    }
}

impl From<i64> for Sqrt2Rational {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl From<BigRational> for Sqrt2Rational {
    fn from(a: BigRational) -> Self {
        Self::rational(a)
    }
}

impl Add<&Sqrt2Rational> for &Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn add(self, rhs: &Sqrt2Rational) -> Sqrt2Rational {
        Sqrt2Rational::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&Sqrt2Rational> for &Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn sub(self, rhs: &Sqrt2Rational) -> Sqrt2Rational {
        Sqrt2Rational::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&Sqrt2Rational> for &Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn mul(self, rhs: &Sqrt2Rational) -> Sqrt2Rational {
        if self.b.is_zero() && rhs.b.is_zero() {
            return Sqrt2Rational::rational(&self.a * &rhs.a);
        }
        let two = BigRational::from_integer(2.into());
        Sqrt2Rational::new(&self.a * &rhs.a + two * &self.b * &rhs.b, &self.a * &rhs.b + &self.b * &rhs.a)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Sqrt2Rational {
            type Output = Sqrt2Rational;
            fn $m(self, rhs: Sqrt2Rational) -> Sqrt2Rational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Sqrt2Rational> for Sqrt2Rational {
            type Output = Sqrt2Rational;
            fn $m(self, rhs: &Sqrt2Rational) -> Sqrt2Rational {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Sqrt2Rational> for Sqrt2Rational {
    fn add_assign(&mut self, rhs: &Sqrt2Rational) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Sqrt2Rational> for Sqrt2Rational {
    fn sub_assign(&mut self, rhs: &Sqrt2Rational) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&Sqrt2Rational> for Sqrt2Rational {
    fn mul_assign(&mut self, rhs: &Sqrt2Rational) {
        *self = &*self * rhs;
    }
}

impl Neg for Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn neg(self) -> Sqrt2Rational {
        Sqrt2Rational::new(-self.a, -self.b)
    }
}

impl Neg for &Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn neg(self) -> Sqrt2Rational {
        -(self.clone())
    }
}

/// Renders `a`, `a/b`, or `(a+b*r2)`; the rational part is omitted when it
/// is zero, e.g. `(1/2*r2)`.
impl fmt::Display for Sqrt2Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let b_unit = self.b.abs().is_one();
        let b_body = if b_unit { "r2".to_string() } else { format!("{}*r2", self.b.abs()) };
        let b_sign = if self.b.is_negative() { "-" } else { "" };
        if self.a.is_zero() {
            write!(f, "({b_sign}{b_body})")
        } else {
            let sep = if self.b.is_negative() { "-" } else { "+" };
            write!(f, "({}{sep}{b_body})", self.a)
        }
    }
}

impl serde::Serialize for Sqrt2Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for Sqrt2Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64)) -> Sqrt2Rational {
        Sqrt2Rational::new(BigRational::new(a.0.into(), a.1.into()), BigRational::new(b.0.into(), b.1.into()))
    }

    #[test]
    fn products() {
        assert_eq!(q((1, 1), (1, 1)) * q((1, 1), (-1, 1)), Sqrt2Rational::integer(-1));
        assert_eq!(Sqrt2Rational::sqrt2() * Sqrt2Rational::sqrt2(), Sqrt2Rational::integer(2));
        assert_eq!(q((0, 1), (1, 2)) * Sqrt2Rational::sqrt2(), Sqrt2Rational::one());
    }

    #[test]
    fn inverses() {
        assert_eq!(Sqrt2Rational::sqrt2().inv().unwrap(), q((0, 1), (1, 2)));
        assert_eq!(Sqrt2Rational::one().inv().unwrap(), Sqrt2Rational::one());
        // solving (1+√2)(a+b√2) = 1 gives a + 2b = 1, a + b = 0
        assert_eq!(Sqrt2Rational::from_ints(1, 1).inv().unwrap(), Sqrt2Rational::from_ints(-1, 1));
        assert_eq!(Sqrt2Rational::zero().inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn sqrt2_powers() {
        let r2 = Sqrt2Rational::sqrt2();
        for k in -7i64..=7 {
            let expected = if k >= 0 { r2.pow(k as u32) } else { r2.pow((-k) as u32).inv().unwrap() };
            assert_eq!(Sqrt2Rational::sqrt2_pow(k), expected, "k = {k}");
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(Sqrt2Rational::from_ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(Sqrt2Rational::from_ints(1, 1).to_string(), "(1+r2)");
        assert_eq!(q((3, 1), (-1, 2)).to_string(), "(3-1/2*r2)");
        assert_eq!(q((0, 1), (1, 2)).to_string(), "(1/2*r2)");
    }
}
