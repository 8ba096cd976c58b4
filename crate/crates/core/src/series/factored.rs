use super::{Monomial, Series};
use crate::arith::Scalar;
use crate::error::{Error, Result};

/// A product `mono · series` where `series` has constant term 1, or the zero
/// value when `mono` has a zero coefficient.
///
/// Keeping the leading monomial apart lets products with negative-exponent
/// factors (such as `(q^{-n};q)_r`) be formed exactly and cancelled later.
#[derive(Clone, PartialEq)]
pub struct Factored<S> {
    mono: Monomial<S>,
    series: Series<S>,
}

impl<S: Scalar> Factored<S> {
    pub fn one(order: usize, scale: u32) -> Self {
        Factored { mono: Monomial::one(), series: Series::one(order, scale) }
    }

    pub fn zero(order: usize, scale: u32) -> Self {
        Factored { mono: Monomial::zero(), series: Series::one(order, scale) }
    }

    pub fn from_monomial(m: Monomial<S>, order: usize, scale: u32) -> Self {
        Factored { mono: m, series: Series::one(order, scale) }
    }

    /// Splits off the leading term of a series. The inner order drops by the
    /// valuation.
    pub fn from_series(s: &Series<S>) -> Result<Self> {
        let Some(v) = s.valuation() else {
            return Ok(Self::zero(s.order(), s.scale()));
        };
        let lead = s.coeffs()[v].clone();
        let inv = lead.try_inv()?;
        let series = s.shift_down(v)?.scale_by(&inv);
        Ok(Factored { mono: Monomial::new(lead, v as i64), series })
    }

    pub fn is_zero(&self) -> bool {
        self.mono.is_zero()
    }

    pub fn monomial(&self) -> &Monomial<S> {
        &self.mono
    }

    pub fn unit_part(&self) -> &Series<S> {
        &self.series
    }

    /// Exact `t`-valuation; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.mono.exp)
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn scale(&self) -> u32 {
        self.series.scale()
    }

    pub fn mul_monomial(&mut self, m: &Monomial<S>) {
        self.mono = self.mono.mul(m);
    }

    pub fn div_monomial(&mut self, m: &Monomial<S>) -> Result<()> {
        if m.is_zero() {
            return Err(Error::ZeroDenominatorFactor(format!("monomial {m}")));
        }
        self.mono = self.mono.try_div(m)?;
        Ok(())
    }

    pub fn mul_scalar(&mut self, c: &S) {
        self.mono.coeff = self.mono.coeff.mul_ref(c);
    }

    /// Multiplies by the binomial `u + v`.
    pub fn mul_binomial(&mut self, u: &Monomial<S>, v: &Monomial<S>) {
        if self.is_zero() {
            return;
        }
        match split_binomial(u, v) {
            None => self.mono.coeff = S::zero(),
            Some((lead, ratio, gap)) => {
                self.mono = self.mono.mul(&lead);
                if gap > 0 {
                    self.series.mul_binomial_in_place(&ratio, gap as usize);
                }
            }
        }
    }

    /// Divides by the binomial `u + v`, failing if it vanishes.
    pub fn div_binomial(&mut self, u: &Monomial<S>, v: &Monomial<S>) -> Result<()> {
        match split_binomial(u, v) {
            None => Err(Error::ZeroDenominatorFactor(format!("{u} + {v}"))),
            Some((lead, ratio, gap)) => {
                self.mono = self.mono.try_div(&lead)?;
                if gap > 0 {
                    self.series.div_binomial_in_place(&ratio, gap as usize);
                }
                Ok(())
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            let order = self.order().min(other.order());
            return Ok(Self::zero(order, self.scale()));
        }
        Ok(Factored { mono: self.mono.mul(&other.mono), series: self.series.mul(&other.series)? })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::ZeroDenominatorFactor("zero product".into()));
        }
        if self.is_zero() {
            let order = self.order().min(other.order());
            return Ok(Self::zero(order, self.scale()));
        }
        Ok(Factored {
            mono: self.mono.try_div(&other.mono)?,
            series: self.series.div(&other.series)?,
        })
    }

    pub fn mul_series(&self, s: &Series<S>) -> Result<Self> {
        self.mul(&Factored::from_series(s)?)
    }

    /// Collapses to a series of the inner order. Fails if the value has a
    /// negative `t`-exponent.
    pub fn to_series(&self) -> Result<Series<S>> {
        let order = self.order();
        if self.is_zero() {
            return Ok(Series::zero(order, self.scale()));
        }
        if self.mono.exp < 0 {
            return Err(Error::DegenerateSpecialization(format!(
                "product has negative t-valuation {}",
                self.mono.exp
            )));
        }
        Ok(self.series.shift_up(self.mono.exp as usize).scale_by(&self.mono.coeff))
    }
}

impl<S: Scalar> std::fmt::Debug for Factored<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} · ({})", self.mono, self.series)
    }
}

/// Writes `u + v` as `lead · (1 + ratio·t^gap)` with `gap ≥ 0`. Returns `None`
/// when the sum is zero.
fn split_binomial<S: Scalar>(u: &Monomial<S>, v: &Monomial<S>) -> Option<(Monomial<S>, S, i64)> {
    match (u.is_zero(), v.is_zero()) {
        (true, true) => None,
        (true, false) => Some((v.clone(), S::zero(), 0)),
        (false, true) => Some((u.clone(), S::zero(), 0)),
        (false, false) => {
            if u.exp == v.exp {
                let c = u.coeff.add_ref(&v.coeff);
                if c.is_zero() {
                    None
                } else {
                    Some((Monomial::new(c, u.exp), S::zero(), 0))
                }
            } else {
                let (lo, hi) = if u.exp < v.exp { (u, v) } else { (v, u) };
                let ratio = hi.coeff.try_div(&lo.coeff).ok()?;
                Some((lo.clone(), ratio, hi.exp - lo.exp))
            }
        }
    }
}

/// `∏_{i<count} (u + v·t^(step·i))`.
pub fn linear_product<S: Scalar>(
    u: &Monomial<S>,
    v: &Monomial<S>,
    step: i64,
    count: usize,
    order: usize,
    scale: u32,
) -> Factored<S> {
    let mut acc = Factored::one(order, scale);
    for i in 0..count {
        acc.mul_binomial(u, &v.shift(step * i as i64));
        if acc.is_zero() {
            break;
        }
    }
    acc
}
