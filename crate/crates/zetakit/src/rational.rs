//! Arbitrary-precision rationals, the exact-rail scalar.
//!
//! Values are kept in canonical form at all times: denominator positive,
//! gcd(|numerator|, denominator) = 1, zero stored as 0/1. Equality is
//! therefore structural. Serialization is the string `num/den` in base 10
//! (integers emitted as `n`, and `n/1` accepted on input).

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Exact signed fraction with arbitrary-precision numerator and denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `num/den`, normalizing signs and reducing. Fails on `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Exact division; `rhs == 0` is an error, never a sentinel.
    pub fn try_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Reciprocal; zero is an error.
    pub fn try_recip(&self) -> Result<Rational> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Integer power (negative exponents invert; zero base with negative
    /// exponent is an error).
    pub fn try_pow(&self, exp: i32) -> Result<Rational> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.pow(exp)))
    }

    /// Nearest binary64 value.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(n, k)` as an arbitrary-precision integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..u64::from(k) {
        acc = acc * (u64::from(n) - i) / (i + 1);
    }
    acc
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(n)))
            }
            Some((num, den)) => {
                let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Rational(BigRational::new(n, d)))
            }
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d).unwrap()
    }

    #[test]
    fn small_fraction_arithmetic() {
        assert_eq!(r(1, 6) + r(-1, 2), r(-1, 3));
    }

    #[test]
    fn construction_normalizes() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(2, 4).to_string(), "1/2");
        assert_eq!(r(3, -6), r(-1, 2));
        assert!(r(3, -6).denominator().is_positive());
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        assert_eq!(r(691, 2730) * r(2730, 691), Rational::one());
    }

    #[test]
    fn zero_is_canonical() {
        let z = r(0, 7);
        assert_eq!(z.numerator(), &BigInt::zero());
        assert_eq!(z.denominator(), &BigInt::one());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(r(1, 2).try_div(&Rational::zero()), Err(Error::DivisionByZero));
        assert_eq!(Rational::from_ratio(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_and_parse_round_trip() {
        assert_eq!(r(-691, 2730).to_string(), "-691/2730");
        assert_eq!("-691/2730".parse::<Rational>().unwrap(), r(-691, 2730));
        assert_eq!("5/1".parse::<Rational>().unwrap().to_string(), "5");
        assert_eq!("-3".parse::<Rational>().unwrap(), r(-3, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(12), BigInt::from(479_001_600u64));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
        assert_eq!(binomial(7, 2), BigInt::from(21));
    }

    #[test]
    fn pow_and_recip() {
        assert_eq!(r(2, 3).try_pow(-2).unwrap(), r(9, 4));
        assert!(Rational::zero().try_pow(-1).is_err());
        assert_eq!(r(-2, 5).try_recip().unwrap(), r(-5, 2));
    }

    #[test]
    fn to_f64_handles_large_values() {
        // ~B_60 scale: numerator with 40+ digits.
        let v = "-1215233140483755572040304994079820246041491/56786730"
            .parse::<Rational>()
            .unwrap();
        let f = v.to_f64();
        assert!((f / -2.139994925722533e34 - 1.0).abs() < 1e-12);
    }
}
