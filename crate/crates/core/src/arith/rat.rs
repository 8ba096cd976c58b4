use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Scalar, ScalarKind};
use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(numer.into(), denom.into())))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    /// Largest of |numerator| and denominator.
    pub fn height(&self) -> BigInt {
        let n = self.0.numer().abs();
        let d = self.0.denom().clone();
        n.max(d)
    }

    pub fn to_f64(&self) -> f64 {
        // Ratio::to_f64 handles huge numerators/denominators without overflow.
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p`, `p/q` and decimals such as `-0.25`. Both the ASCII hyphen and
/// the unicode minus sign are recognised.
impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.trim().replace('\u{2212}', "-");
        if cleaned.is_empty() {
            return Err(Error::Parse("empty rational".into()));
        }
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        if let Some((n, d)) = cleaned.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            return Rat::from_bigints(n, d);
        }
        if let Some((int_part, frac_part)) = cleaned.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int_part.starts_with('-');
            let int_digits = int_part.trim_start_matches(['-', '+']);
            let digits = format!("{}{}", if int_digits.is_empty() { "0" } else { int_digits }, frac_part);
            let mut n = BigInt::from_str(&digits).map_err(|_| bad())?;
            if negative {
                n = -n;
            }
            let d = num_traits::pow(BigInt::from(10), frac_part.len());
            return Rat::from_bigints(n, d);
        }
        BigInt::from_str(&cleaned).map(Rat::from).map_err(|_| bad())
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Scalar for Rat {
    const KIND: ScalarKind = ScalarKind::Rational;

    fn zero() -> Self {
        Rat::zero()
    }

    fn one() -> Self {
        Rat::one()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn try_inv(&self) -> Result<Self> {
        self.recip()
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.0.is_zero() || b.0.is_zero() {
            return;
        }
        // Integer fast path: no gcd work needed.
        if a.0.is_integer() && b.0.is_integer() && self.0.is_integer() {
            let prod = a.0.numer() * b.0.numer();
            let sum = self.0.numer() + prod;
            self.0 = BigRational::from_integer(sum);
            return;
        }
        let prod = &a.0 * &b.0;
        self.0 += prod;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn adds_fractions() {
        assert_eq!(r("1/2") + r("1/3"), r("5/6"));
    }

    #[test]
    fn canonical_form() {
        let x = r("6/-4");
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(r("0/5"), Rat::zero());
        assert_eq!(Rat::zero().denom(), &BigInt::from(1));
        assert_eq!(x.numer().gcd(x.denom()), BigInt::from(1));
    }

    #[test]
    fn parses_signs_and_decimals() {
        assert_eq!(r("\u{2212}3/7"), Rat::new(-3, 7).unwrap());
        assert_eq!(r("5"), Rat::from(5));
        assert_eq!(r("-0.25"), Rat::new(-1, 4).unwrap());
        assert_eq!(r(".5"), Rat::new(1, 2).unwrap());
        assert!("1/0".parse::<Rat>().is_err());
        assert!("abc".parse::<Rat>().is_err());
        assert!("1.".parse::<Rat>().is_err());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Rat::zero().try_inv(), Err(Error::DivisionByZero));
        assert_eq!(r("3").checked_div(&Rat::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn add_mul_assign_matches_plain_ops() {
        let mut acc = r("1/3");
        acc.add_mul_assign(&r("2/5"), &r("-7/2"));
        assert_eq!(acc, r("1/3") + r("2/5") * r("-7/2"));
        let mut acc = r("4");
        acc.add_mul_assign(&r("2"), &r("-3"));
        assert_eq!(acc, r("-2"));
    }

    #[test]
    fn powi_handles_negative_exponents() {
        assert_eq!(r("2/3").powi(3).unwrap(), r("8/27"));
        assert_eq!(r("2/3").powi(-2).unwrap(), r("9/4"));
        assert_eq!(r("0").powi(0).unwrap(), r("1"));
        assert!(r("0").powi(-1).is_err());
    }

    #[test]
    fn serde_as_string() {
        let json = serde_json::to_string(&r("-3/7")).unwrap();
        assert_eq!(json, "\"-3/7\"");
        let back: Rat = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r("-3/7"));
    }
}
