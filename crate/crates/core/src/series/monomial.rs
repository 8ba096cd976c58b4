use std::fmt;

use crate::arith::{Rat, Scalar};
use crate::error::Result;

/// `coeff · t^exp`. The exponent is in units of `t`, so with scale `s` the
/// monomial `c·q^k` has `exp = k·s`.
#[derive(Clone, PartialEq)]
pub struct Monomial<S> {
    pub coeff: S,
    pub exp: i64,
}

impl<S: Scalar> Monomial<S> {
    pub fn new(coeff: S, exp: i64) -> Self {
        Monomial { coeff, exp }
    }

    pub fn constant(coeff: S) -> Self {
        Monomial { coeff, exp: 0 }
    }

    pub fn zero() -> Self {
        Monomial { coeff: S::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Monomial { coeff: S::one(), exp: 0 }
    }

    pub fn t_power(exp: i64) -> Self {
        Monomial { coeff: S::one(), exp }
    }

    /// `q^k` at the given scale.
    pub fn q_power(k: i64, scale: u32) -> Self {
        Monomial { coeff: S::one(), exp: k * i64::from(scale) }
    }

    pub fn from_rat(r: &Rat, exp: i64) -> Self {
        Monomial { coeff: S::from_rat(r), exp }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial { coeff: self.coeff.mul_ref(&other.coeff), exp: self.exp + other.exp }
    }

    pub fn try_inv(&self) -> Result<Self> {
        Ok(Monomial { coeff: self.coeff.try_inv()?, exp: -self.exp })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.try_inv()?))
    }

    pub fn neg(&self) -> Self {
        Monomial { coeff: self.coeff.neg_ref(), exp: self.exp }
    }

    pub fn powi(&self, n: i64) -> Result<Self> {
        Ok(Monomial { coeff: self.coeff.powi(n)?, exp: self.exp * n })
    }

    /// Multiplies by `t^e`.
    pub fn shift(&self, e: i64) -> Self {
        Monomial { coeff: self.coeff.clone(), exp: self.exp + e }
    }

    pub fn scale_coeff(&self, c: &S) -> Self {
        Monomial { coeff: self.coeff.mul_ref(c), exp: self.exp }
    }
}

impl<S: Scalar> fmt::Display for Monomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "({})t^{}", self.coeff, self.exp)
        }
    }
}

impl<S: Scalar> fmt::Debug for Monomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
