use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Rat, Scalar, ScalarKind, CF64};
use crate::error::{Error, Result};

/// An element `u + v·ω` of Q(ω), where ω is a primitive cube root of unity
/// (ω² = −1 − ω).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct EisRat {
    pub u: Rat,
    pub v: Rat,
}

impl EisRat {
    pub fn new(u: Rat, v: Rat) -> Self {
        EisRat { u, v }
    }

    pub fn omega() -> Self {
        EisRat::new(Rat::zero(), Rat::one())
    }

    /// ω² = ω̄ = −1 − ω.
    pub fn omega_sq() -> Self {
        EisRat::new(Rat::from(-1), Rat::from(-1))
    }

    /// Complex conjugate, which swaps ω and ω².
    pub fn conj(&self) -> Self {
        EisRat::new(&self.u - &self.v, -&self.v)
    }

    /// Field norm u² − uv + v², always ≥ 0.
    pub fn norm(&self) -> Rat {
        &self.u * &self.u - &self.u * &self.v + &self.v * &self.v
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn to_rat(&self) -> Result<Rat> {
        if self.v.is_zero() {
            Ok(self.u.clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    pub fn to_cf64(&self) -> CF64 {
        let half_sqrt3 = 3f64.sqrt() / 2.0;
        let u = self.u.to_f64();
        let v = self.v.to_f64();
        CF64::new(u - v / 2.0, v * half_sqrt3)
    }
}

impl From<Rat> for EisRat {
    fn from(u: Rat) -> Self {
        EisRat::new(u, Rat::zero())
    }
}

impl From<i64> for EisRat {
    fn from(n: i64) -> Self {
        EisRat::from(Rat::from(n))
    }
}

impl fmt::Display for EisRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{}", self.u)
        } else if self.u.is_zero() {
            write!(f, "{}ω", self.v)
        } else {
            write!(f, "{} + {}ω", self.u, self.v)
        }
    }
}

impl fmt::Debug for EisRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &EisRat {
    type Output = EisRat;
    fn add(self, rhs: &EisRat) -> EisRat {
        EisRat::new(&self.u + &rhs.u, &self.v + &rhs.v)
    }
}

impl Sub for &EisRat {
    type Output = EisRat;
    fn sub(self, rhs: &EisRat) -> EisRat {
        EisRat::new(&self.u - &rhs.u, &self.v - &rhs.v)
    }
}

impl Mul for &EisRat {
    type Output = EisRat;
    fn mul(self, rhs: &EisRat) -> EisRat {
        // (u1 + v1ω)(u2 + v2ω) with ω² = −1 − ω
        let vv = &self.v * &rhs.v;
        let u = &self.u * &rhs.u - &vv;
        let v = &self.u * &rhs.v + &self.v * &rhs.u - vv;
        EisRat::new(u, v)
    }
}

impl Neg for &EisRat {
    type Output = EisRat;
    fn neg(self) -> EisRat {
        EisRat::new(-&self.u, -&self.v)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for EisRat {
            type Output = EisRat;
            fn $method(self, rhs: EisRat) -> EisRat {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for EisRat {
    type Output = EisRat;
    fn neg(self) -> EisRat {
        -&self
    }
}

impl Scalar for EisRat {
    const KIND: ScalarKind = ScalarKind::Eisenstein;

    fn zero() -> Self {
        EisRat::default()
    }

    fn one() -> Self {
        EisRat::from(Rat::one())
    }

    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    fn from_rat(r: &Rat) -> Self {
        EisRat::from(r.clone())
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if rhs.v.is_zero() {
            return EisRat::new(&self.u * &rhs.u, &self.v * &rhs.u);
        }
        if self.v.is_zero() {
            return EisRat::new(&self.u * &rhs.u, &self.u * &rhs.v);
        }
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn try_inv(&self) -> Result<Self> {
        let n = self.norm();
        let inv_n = n.recip()?;
        let c = self.conj();
        Ok(EisRat::new(&c.u * &inv_n, &c.v * &inv_n))
    }
}
