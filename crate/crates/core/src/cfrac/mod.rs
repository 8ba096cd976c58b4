//! Continued fractions `b0 + K(a_n / b_n)` over truncated series.
//!
//! Convergents come from the three-term recurrence with seeds
//! `A_{-1} = 1, A_0 = b0, B_{-1} = 0, B_0 = 1`. For a pure `K`-fraction with
//! `a_1 = 1` this gives `A_0 = 0, A_1 = 1`.

mod numeric;
mod transform;

pub use numeric::NumericCf;
pub use transform::{equivalence_transform, odd_part};

use std::fmt;
use std::sync::Arc;

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::series::Series;

type TermFn<S> = dyn Fn(usize) -> Result<(Series<S>, Series<S>)> + Send + Sync;

/// A continued fraction with lazily generated partial numerators and
/// denominators, all truncated to a common order and scale.
#[derive(Clone)]
pub struct CfSpec<S> {
    b0: Series<S>,
    terms: Arc<TermFn<S>>,
    order: usize,
    scale: u32,
    allow_zero_numerators: bool,
}

impl<S: Scalar> CfSpec<S> {
    /// `terms(n)` must return `(a_n, b_n)` for `n ≥ 1`.
    pub fn new(
        b0: Series<S>,
        order: usize,
        terms: impl Fn(usize) -> Result<(Series<S>, Series<S>)> + Send + Sync + 'static,
    ) -> Self {
        let scale = b0.scale();
        CfSpec {
            b0: b0.truncate(order),
            terms: Arc::new(terms),
            order,
            scale,
            allow_zero_numerators: false,
        }
    }

    /// Permits `a_n = 0`, which terminates the fraction at `n − 1`.
    pub fn allowing_zero_numerators(mut self) -> Self {
        self.allow_zero_numerators = true;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn b0(&self) -> &Series<S> {
        &self.b0
    }

    pub fn allows_zero_numerators(&self) -> bool {
        self.allow_zero_numerators
    }

    /// `(a_n, b_n)`, checked for scale and (unless allowed) a nonzero `a_n`.
    pub fn term(&self, n: usize) -> Result<(Series<S>, Series<S>)> {
        assert!(n >= 1, "partial quotients start at n = 1");
        let (a, b) = (self.terms)(n)?;
        for s in [&a, &b] {
            if s.scale() != self.scale {
                return Err(Error::ScaleMismatch(self.scale, s.scale()));
            }
        }
        if a.is_zero() && !self.allow_zero_numerators {
            return Err(Error::ZeroPartialNumerator(n));
        }
        Ok((a.truncate(self.order), b.truncate(self.order)))
    }
}

impl<S: Scalar> fmt::Debug for CfSpec<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CfSpec")
            .field("b0", &self.b0)
            .field("order", &self.order)
            .field("scale", &self.scale)
            .finish_non_exhaustive()
    }
}

/// Numerator and denominator of the `index`-th convergent. `stable_order`
/// is the number of leading coefficients (minus one) of `A/B` certified to
/// agree with the previous convergent; `None` when even the constant terms
/// differ, there is no previous convergent, or neither the numerators nor
/// the denominators are units (so the ratios are not power series).
#[derive(Clone, PartialEq)]
pub struct ConvergentPair<S> {
    pub numer: Series<S>,
    pub denom: Series<S>,
    pub index: usize,
    pub stable_order: Option<usize>,
}

impl<S: Scalar> ConvergentPair<S> {
    /// `A/B` as a series; needs `B` with nonzero constant term.
    pub fn ratio(&self) -> Result<Series<S>> {
        self.numer.div(&self.denom)
    }
}

impl<S: Scalar> fmt::Debug for ConvergentPair<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConvergentPair")
            .field("index", &self.index)
            .field("numer", &self.numer)
            .field("denom", &self.denom)
            .field("stable_order", &self.stable_order)
            .finish()
    }
}

/// Incrementally extends the convergent sequence of a fraction.
pub struct ConvergentIter<S> {
    cf: CfSpec<S>,
    prev: (Series<S>, Series<S>),
    cur: (Series<S>, Series<S>),
    index: usize,
}

impl<S: Scalar> ConvergentIter<S> {
    pub fn new(cf: &CfSpec<S>) -> Self {
        let (o, s) = (cf.order, cf.scale);
        ConvergentIter {
            cf: cf.clone(),
            prev: (Series::one(o, s), Series::zero(o, s)),
            cur: (cf.b0.clone(), Series::one(o, s)),
            index: 0,
        }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn numer(&self) -> &Series<S> {
        &self.cur.0
    }

    pub fn denom(&self) -> &Series<S> {
        &self.cur.1
    }

    pub fn prev_numer(&self) -> &Series<S> {
        &self.prev.0
    }

    pub fn prev_denom(&self) -> &Series<S> {
        &self.prev.1
    }

    /// Advances to the next index.
    pub fn step(&mut self) -> Result<()> {
        let n = self.index + 1;
        let (a, b) = self.cf.term(n)?;
        let next_a = b.mul(&self.cur.0)?.add(&a.mul(&self.prev.0)?)?;
        let next_b = b.mul(&self.cur.1)?.add(&a.mul(&self.prev.1)?)?;
        self.prev = std::mem::replace(&mut self.cur, (next_a, next_b));
        self.index = n;
        Ok(())
    }

    pub fn pair(&self) -> Result<ConvergentPair<S>> {
        let stable_order = if self.index == 0 {
            None
        } else {
            match ratio_agreement(&self.prev.0, &self.prev.1, &self.cur.0, &self.cur.1) {
                Err(Error::NonInvertibleConstantTerm) => None,
                other => other?,
            }
        };
        Ok(ConvergentPair {
            numer: self.cur.0.clone(),
            denom: self.cur.1.clone(),
            index: self.index,
            stable_order,
        })
    }
}

/// Convergents with indices `0 ..= n`.
pub fn convergents<S: Scalar>(cf: &CfSpec<S>, n: usize) -> Result<Vec<ConvergentPair<S>>> {
    let mut it = ConvergentIter::new(cf);
    let mut out = Vec::with_capacity(n + 1);
    out.push(it.pair()?);
    for _ in 0..n {
        it.step()?;
        out.push(it.pair()?);
    }
    Ok(out)
}

/// Largest `j` such that `x0/y0` and `x1/y1` agree through `t^j`, compared as
/// the cross product `x0·y1 − x1·y0`. Either both denominators or both
/// numerators must be units (in the latter case this is the agreement of
/// the reciprocal ratios).
pub(crate) fn ratio_agreement<S: Scalar>(
    x0: &Series<S>,
    y0: &Series<S>,
    x1: &Series<S>,
    y1: &Series<S>,
) -> Result<Option<usize>> {
    let unit = |s: &Series<S>| !s.coeffs()[0].is_zero();
    if !(unit(y0) && unit(y1)) && !(unit(x0) && unit(x1)) {
        return Err(Error::NonInvertibleConstantTerm);
    }
    let cross = x0.mul(y1)?.sub(&x1.mul(y0)?)?;
    Ok(match cross.valuation() {
        None => Some(cross.order()),
        Some(0) => None,
        Some(v) => Some(v - 1),
    })
}

/// Agreement order of the ratios of the last two pairs.
pub fn stabilization_order<S: Scalar>(pairs: &[ConvergentPair<S>]) -> Result<Option<usize>> {
    assert!(pairs.len() >= 2, "stabilization needs at least two convergents");
    let p = &pairs[pairs.len() - 2];
    let c = &pairs[pairs.len() - 1];
    ratio_agreement(&p.numer, &p.denom, &c.numer, &c.denom)
}

/// Largest `j` such that two series agree through `t^j`; `None` if their
/// constant terms differ.
pub fn sequence_agreement<S: Scalar>(x: &Series<S>, y: &Series<S>) -> Result<Option<usize>> {
    let diff = x.sub(y)?;
    Ok(match diff.valuation() {
        None => Some(diff.order()),
        Some(0) => None,
        Some(v) => Some(v - 1),
    })
}

/// Lower bound on the ratio agreement order read from term valuations:
/// `A_N/B_N − A_{N−1}/B_{N−1}` is `±∏a_k / (B_N B_{N−1})`, so with unit
/// denominators it vanishes below `Σ val(a_k)`.
pub fn valuation_lower_bound<S: Scalar>(cf: &CfSpec<S>, n: usize) -> Result<Option<usize>> {
    let mut total = 0usize;
    for k in 1..=n {
        let (a, _) = cf.term(k)?;
        match a.valuation() {
            None => return Ok(Some(cf.order)),
            Some(v) => total += v,
        }
    }
    Ok(total.checked_sub(1).map(|v| v.min(cf.order)))
}

/// The ratio `A_N/B_N` once it is stable through `t^target` at two
/// successive indices, together with that index.
pub fn ratio_limit<S: Scalar>(
    cf: &CfSpec<S>,
    target: usize,
    max_terms: usize,
) -> Result<(Series<S>, usize)> {
    let mut it = ConvergentIter::new(cf);
    let mut streak = 0;
    while it.index() < max_terms {
        it.step()?;
        let stable = ratio_agreement(it.prev_numer(), it.prev_denom(), it.numer(), it.denom())?;
        if stable.is_some_and(|s| s >= target) {
            streak += 1;
            if streak >= 2 {
                return Ok((it.numer().div(it.denom())?, it.index()));
            }
        } else {
            streak = 0;
        }
    }
    Err(Error::NotStabilized { order: target, max_terms })
}

/// Like [`ratio_limit`] but returns `B_N/A_N`, for fractions whose
/// numerators rather than denominators are units.
pub fn inverse_ratio_limit<S: Scalar>(
    cf: &CfSpec<S>,
    target: usize,
    max_terms: usize,
) -> Result<(Series<S>, usize)> {
    let mut it = ConvergentIter::new(cf);
    let mut streak = 0;
    while it.index() < max_terms {
        it.step()?;
        let stable = ratio_agreement(it.prev_numer(), it.prev_denom(), it.numer(), it.denom())?;
        if stable.is_some_and(|s| s >= target) {
            streak += 1;
            if streak >= 2 {
                return Ok((it.denom().div(it.numer())?, it.index()));
            }
        } else {
            streak = 0;
        }
    }
    Err(Error::NotStabilized { order: target, max_terms })
}

/// Limits of `A_N` and `B_N` separately, once both sequences are stable
/// through `t^target` at two successive indices. Returns
/// `(numerator limit, denominator limit, index)`.
pub fn separate_limits<S: Scalar>(
    cf: &CfSpec<S>,
    target: usize,
    max_terms: usize,
) -> Result<(Series<S>, Series<S>, usize)> {
    let mut it = ConvergentIter::new(cf);
    let mut streak = 0;
    while it.index() < max_terms {
        it.step()?;
        let sa = sequence_agreement(it.numer(), it.prev_numer())?;
        let sb = sequence_agreement(it.denom(), it.prev_denom())?;
        if sa.is_some_and(|s| s >= target) && sb.is_some_and(|s| s >= target) {
            streak += 1;
            if streak >= 2 {
                return Ok((it.numer().clone(), it.denom().clone(), it.index()));
            }
        } else {
            streak = 0;
        }
    }
    Err(Error::NotStabilized { order: target, max_terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    fn q2q3(order: usize) -> CfSpec<Rat> {
        CfSpec::new(Series::zero(order, 1), order, move |n| {
            if n == 1 {
                return Ok((Series::one(order, 1), Series::one(order, 1)));
            }
            let k = n;
            let a = Series::q_power(2 * k - 3, order, 1).neg();
            let b = Series::one(order, 1).add(&Series::q_power(k - 1, order, 1))?;
            Ok((a, b))
        })
    }

    #[test]
    fn q2q3_second_convergent() {
        let pairs = convergents(&q2q3(6), 2).unwrap();
        let r = pairs[2].ratio().unwrap();
        assert_eq!(r.coeff(0), Rat::from(1));
        assert_eq!(r.coeff(1), Rat::from(1));
        assert_eq!(r.coeff(2), Rat::from(0));
        assert_eq!(pairs[0].numer, Series::zero(6, 1));
        assert_eq!(pairs[1].numer, Series::one(6, 1));
    }

    #[test]
    fn zero_numerator_rejected_unless_allowed() {
        let order = 4;
        let make = move || {
            CfSpec::<Rat>::new(Series::zero(order, 1), order, move |_| {
                Ok((Series::zero(order, 1), Series::constant(Rat::from(3), order, 1)))
            })
        };
        assert_eq!(convergents(&make(), 3).unwrap_err(), Error::ZeroPartialNumerator(1));
        let pairs = convergents(&make().allowing_zero_numerators(), 3).unwrap();
        assert!(pairs.iter().all(|p| p.numer.is_zero()));
    }

    #[test]
    fn stabilization_grows() {
        let pairs = convergents(&q2q3(40), 12).unwrap();
        let orders: Vec<usize> = pairs[1..].iter().map(|p| p.stable_order.unwrap_or(0)).collect();
        assert!(orders.windows(2).all(|w| w[0] <= w[1]), "{orders:?}");
        assert!(orders.last().unwrap() > &20);
    }

    #[test]
    fn identical_convergents_are_fully_stable() {
        let p = ConvergentPair {
            numer: Series::<Rat>::one(5, 1),
            denom: Series::one(5, 1),
            index: 1,
            stable_order: None,
        };
        assert_eq!(stabilization_order(&[p.clone(), p]).unwrap(), Some(5));
    }

    #[test]
    fn convergents_survive_nonunit_pairs() {
        // b0 = 0, a1 = b1 = q: A_1 = B_1 = q, so A_1/B_1 is not a power series
        let order = 4;
        let q = Series::<Rat>::q_power(1, order, 1);
        let cf = CfSpec::new(Series::zero(order, 1), order, move |_| Ok((q.clone(), q.clone())));
        let pairs = convergents(&cf, 3).unwrap();
        assert_eq!(pairs[1].stable_order, None);
        assert_eq!(pairs[1].numer, Series::q_power(1, order, 1));
        assert_eq!(stabilization_order(&pairs[..2]), Err(Error::NonInvertibleConstantTerm));
    }

    #[test]
    fn nonunit_numerator_and_denominator_rejected() {
        let p = ConvergentPair {
            numer: Series::<Rat>::q_power(2, 5, 1),
            denom: Series::q_power(1, 5, 1),
            index: 1,
            stable_order: None,
        };
        assert_eq!(stabilization_order(&[p.clone(), p]), Err(Error::NonInvertibleConstantTerm));
    }
}
