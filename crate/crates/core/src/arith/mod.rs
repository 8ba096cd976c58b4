//! Exact coefficient rings.
//!
//! Series coefficients live in one of three rings: [`Rat`] (arbitrary-precision
//! rationals), [`EisRat`] (rationals with a primitive cube root of unity
//! adjoined) and [`CF64`] (double-precision complex numbers, numeric mode
//! only). The [`Scalar`] trait is the common interface the series and
//! continued-fraction code is generic over.

mod cf64;
mod eisenstein;
mod rat;

pub use cf64::{primitive_root, CF64};
pub use eisenstein::EisRat;
pub use rat::Rat;

use std::fmt;

use crate::error::Result;

/// Which ring a value came from. Every verification result records it, and
/// only `Rational`/`Eisenstein` results count as exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    Rational,
    Eisenstein,
    Float,
}

impl ScalarKind {
    pub fn is_exact(self) -> bool {
        !matches!(self, ScalarKind::Float)
    }
}

/// A commutative field used for series coefficients.
///
/// Methods take references so that big-number types are not cloned on every
/// operation. `try_inv` is the only fallible operation.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const KIND: ScalarKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rat(r: &Rat) -> Self;

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn try_inv(&self) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rat(&Rat::from(n))
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_ref(&rhs.try_inv()?))
    }

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.add_ref(&a.mul_ref(b));
    }

    /// Integer power; negative exponents invert.
    fn powi(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.try_inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Ok(acc)
    }
}
