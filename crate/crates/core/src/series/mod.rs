//! Truncated power series in a formal variable `t`, with `q = t^scale`.
//!
//! A [`Series`] of order `n` carries the coefficients of `t^0 ..= t^n`; all
//! arithmetic is modulo `t^(n+1)` and binary operations truncate to the
//! smaller order. Free parameters enter as [`Monomial`]s, and products whose
//! factors may have negative `t`-exponents are assembled as [`Factored`]
//! values before being collapsed to a series.

mod factored;
mod gaussian;
mod hypergeometric;
mod identities;
mod monomial;
mod pochhammer;

pub use factored::{linear_product, Factored};
pub use gaussian::{
    gaussian_binomial, gaussian_binomial_qinv_check, gaussian_poly, gaussian_product,
};
pub use hypergeometric::{rphis_partial, sum_finite, sum_infinite};
pub use identities::{jacobi_triple_product_sides, qbinomial_theorem_sides, QBinomialForm};
pub use monomial::Monomial;
pub use pochhammer::{
    pochhammer_factored, pochhammer_finite, pochhammer_infinite, pochhammer_infinite_base,
};

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{EisRat, Rat, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Series<S> {
    coeffs: Vec<S>,
    scale: u32,
}

impl<S: Scalar> Series<S> {
    pub fn zero(order: usize, scale: u32) -> Self {
        assert!(scale >= 1, "scale must be positive");
        Series { coeffs: vec![S::zero(); order + 1], scale }
    }

    pub fn one(order: usize, scale: u32) -> Self {
        Self::constant(S::one(), order, scale)
    }

    pub fn constant(c: S, order: usize, scale: u32) -> Self {
        let mut s = Self::zero(order, scale);
        s.coeffs[0] = c;
        s
    }

    /// Builds a series from explicit coefficients; the order is `len − 1`.
    pub fn from_coeffs(coeffs: Vec<S>, scale: u32) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        assert!(scale >= 1, "scale must be positive");
        Series { coeffs, scale }
    }

    /// `c·t^e`; fails for a nonzero monomial with negative exponent.
    pub fn from_monomial(m: &Monomial<S>, order: usize, scale: u32) -> Result<Self> {
        let mut s = Self::zero(order, scale);
        if m.is_zero() {
            return Ok(s);
        }
        if m.exp < 0 {
            return Err(Error::DegenerateSpecialization(format!(
                "monomial {m} has negative t-exponent"
            )));
        }
        if let Some(slot) = s.coeffs.get_mut(m.exp as usize) {
            *slot = m.coeff.clone();
        }
        Ok(s)
    }

    /// `q^k`, i.e. `t^(k·scale)`.
    pub fn q_power(k: usize, order: usize, scale: u32) -> Self {
        let mut s = Self::zero(order, scale);
        if let Some(slot) = s.coeffs.get_mut(k * scale as usize) {
            *slot = S::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Coefficient of `t^k`, or zero past the order.
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(S::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, S::zero());
        Series { coeffs, scale: self.scale }
    }

    fn check_scale(&self, other: &Self) -> Result<()> {
        if self.scale != other.scale {
            return Err(Error::ScaleMismatch(self.scale, other.scale));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_scale(other)?;
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeffs[k].add_ref(&other.coeffs[k])).collect();
        Ok(Series { coeffs, scale: self.scale })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_scale(other)?;
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeffs[k].sub_ref(&other.coeffs[k])).collect();
        Ok(Series { coeffs, scale: self.scale })
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(S::neg_ref).collect(), scale: self.scale }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_scale(other)?;
        let order = self.order().min(other.order());
        let mut out = vec![S::zero(); order + 1];
        for (i, x) in self.coeffs.iter().enumerate().take(order + 1) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !y.is_zero() {
                    out[i + j].add_mul_assign(x, y);
                }
            }
        }
        Ok(Series { coeffs: out, scale: self.scale })
    }

    pub fn scale_by(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.order(), self.scale);
        }
        Series { coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect(), scale: self.scale }
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![S::zero(); order + 1];
        for i in 0..=order.saturating_sub(k) {
            if i + k <= order {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        Series { coeffs, scale: self.scale }
    }

    /// Divides by `t^k`; the low `k` coefficients must vanish and the order
    /// drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::DegenerateSpecialization(format!(
                "cannot divide series by t^{k}"
            )));
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec(), scale: self.scale })
    }

    /// Multiplies by a monomial in place of a full series product.
    pub fn mul_monomial(&self, m: &Monomial<S>) -> Result<Self> {
        if m.is_zero() {
            return Ok(Self::zero(self.order(), self.scale));
        }
        let shifted = if m.exp >= 0 {
            self.shift_up(m.exp as usize)
        } else {
            let s = self.shift_down(m.exp.unsigned_abs() as usize)?;
            s.truncate(self.order().min(s.order()))
        };
        Ok(shifted.scale_by(&m.coeff))
    }

    /// In-place multiplication by `1 + c·t^k` with `k ≥ 1`.
    pub fn mul_binomial_in_place(&mut self, c: &S, k: usize) {
        debug_assert!(k >= 1);
        if c.is_zero() {
            return;
        }
        let order = self.order();
        for j in (k..=order).rev() {
            if !self.coeffs[j - k].is_zero() {
                let (lo, hi) = self.coeffs.split_at_mut(j);
                hi[0].add_mul_assign(&lo[j - k], c);
            }
        }
    }

    /// In-place division by `1 + c·t^k` with `k ≥ 1`.
    pub fn div_binomial_in_place(&mut self, c: &S, k: usize) {
        debug_assert!(k >= 1);
        if c.is_zero() {
            return;
        }
        let neg_c = c.neg_ref();
        let order = self.order();
        for j in k..=order {
            if !self.coeffs[j - k].is_zero() {
                let (lo, hi) = self.coeffs.split_at_mut(j);
                hi[0].add_mul_assign(&lo[j - k], &neg_c);
            }
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonInvertibleConstantTerm);
        }
        let inv0 = c0.try_inv()?;
        let order = self.order();
        let mut out: Vec<S> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = S::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() && !out[n - k].is_zero() {
                    acc.add_mul_assign(a, &out[n - k]);
                }
            }
            out.push(acc.neg_ref().mul_ref(&inv0));
        }
        Ok(Series { coeffs: out, scale: self.scale })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_scale(other)?;
        self.mul(&other.inverse()?)
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::one(self.order(), self.scale);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `q ↦ q^k`: coefficient `j` moves to `k·j` and the order becomes
    /// `k·order`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution power must be positive");
        let order = self.order() * k;
        let mut coeffs = vec![S::zero(); order + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * k] = c.clone();
        }
        Series { coeffs, scale: self.scale }
    }

    /// Re-reads the same coefficients under a different scale.
    pub fn with_scale(mut self, scale: u32) -> Self {
        assert!(scale >= 1, "scale must be positive");
        self.scale = scale;
        self
    }

    /// `self += m · poly(q)` for an integer polynomial in `q`. Terms past the
    /// order are dropped; a nonzero term at a negative exponent is an error.
    pub fn add_poly_term(&mut self, m: &Monomial<S>, poly: &[BigInt]) -> Result<()> {
        if m.is_zero() {
            return Ok(());
        }
        let step = i64::from(self.scale);
        let order = self.order() as i64;
        for (k, c) in poly.iter().enumerate() {
            let idx = m.exp + step * k as i64;
            if idx > order {
                break;
            }
            if c.is_zero() {
                continue;
            }
            if idx < 0 {
                return Err(Error::DegenerateSpecialization(format!(
                    "term {m}·q^{k} has negative t-exponent"
                )));
            }
            let c = S::from_rat(&Rat::from(c.clone()));
            self.coeffs[idx as usize].add_mul_assign(&m.coeff, &c);
        }
        Ok(())
    }

    /// First index at which the two series differ, up to the smaller order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&other.coeffs).position(|(x, y)| x != y)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Series<T> {
        Series { coeffs: self.coeffs.iter().map(f).collect(), scale: self.scale }
    }
}

impl Series<EisRat> {
    /// Drops to rational coefficients, failing if any coefficient involves ω.
    pub fn to_rational(&self) -> Result<Series<Rat>> {
        let coeffs = self.coeffs.iter().map(EisRat::to_rat).collect::<Result<Vec<_>>>()?;
        Ok(Series { coeffs, scale: self.scale })
    }
}

impl Series<Rat> {
    pub fn to_eisenstein(&self) -> Series<EisRat> {
        self.map(|c| EisRat::from(c.clone()))
    }
}

impl<S: Scalar> fmt::Display for Series<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl<S: Scalar> fmt::Debug for Series<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[scale {}]({})", self.scale, self)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    coeffs: Vec<Rat>,
    order: usize,
    scale: u32,
}

impl Serialize for Series<Rat> {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        SeriesRepr { coeffs: self.coeffs.clone(), order: self.order(), scale: self.scale }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Series<Rat> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(d)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(serde::de::Error::custom("coefficient count must be order + 1"));
        }
        if repr.scale == 0 {
            return Err(serde::de::Error::custom("scale must be positive"));
        }
        Ok(Series { coeffs: repr.coeffs, scale: repr.scale })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Series<Rat> {
        Series::from_coeffs(v.iter().map(|&x| Rat::from(x)).collect(), 1)
    }

    #[test]
    fn geometric_inverse() {
        let s = ints(&[1, -1, 0, 0, 0]);
        assert_eq!(s.inverse().unwrap(), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(s.mul(&ints(&[1, 1, 1, 1, 1])).unwrap(), ints(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn inverse_needs_unit() {
        assert_eq!(ints(&[0, 1]).inverse(), Err(Error::NonInvertibleConstantTerm));
    }

    #[test]
    fn scale_mismatch_is_rejected() {
        let a = ints(&[1, 1]);
        let b = ints(&[1, 1]).with_scale(2);
        assert_eq!(a.add(&b), Err(Error::ScaleMismatch(1, 2)));
        assert_eq!(a.mul(&b), Err(Error::ScaleMismatch(1, 2)));
    }

    #[test]
    fn binary_ops_take_min_order() {
        let a = ints(&[1, 2, 3, 4]);
        let b = ints(&[1, 1]);
        assert_eq!(a.add(&b).unwrap().order(), 1);
        assert_eq!(a.mul(&b).unwrap(), ints(&[1, 3]));
    }

    #[test]
    fn substitute_power_spreads_coefficients() {
        assert_eq!(ints(&[1, 1]).substitute_power(2), ints(&[1, 0, 1]));
        assert_eq!(ints(&[1, 1, 1]).substitute_power(3), ints(&[1, 0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn binomial_in_place_ops_round_trip() {
        let mut s = ints(&[1, 2, 3, 4, 5, 6]);
        let orig = s.clone();
        let c = Rat::new(-3, 2).unwrap();
        s.mul_binomial_in_place(&c, 2);
        let mut factor = ints(&[1, 0, 0, 0, 0, 0]);
        factor.coeffs[2] = c.clone();
        assert_eq!(s, orig.mul(&factor).unwrap());
        s.div_binomial_in_place(&c, 2);
        assert_eq!(s, orig);
    }

    #[test]
    fn monomial_multiplication_shifts() {
        let s = ints(&[0, 0, 1, 2]);
        let m = Monomial::new(Rat::from(3), -2);
        assert_eq!(s.mul_monomial(&m).unwrap(), ints(&[3, 6]));
        assert!(ints(&[1, 1]).mul_monomial(&m).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = Series::from_coeffs(vec![Rat::from(1), Rat::new(-1, 2).unwrap()], 2);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"coeffs":["1","-1/2"],"order":1,"scale":2}"#);
        let back: Series<Rat> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<Series<Rat>>(r#"{"coeffs":["1"],"order":3,"scale":1}"#).is_err());
    }
}
