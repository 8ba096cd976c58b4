//! Limits of `H` and `H₁` and of their numerators and denominators.
//!
//! Each function returns the side computed from convergents next to the
//! closed-form series it should equal. The formal-series analogue of the
//! analytic hypotheses is that every summand has nonnegative valuation and
//! the fraction stabilizes; see [`require_unit_constant`] and friends.

use super::{cf_h, cf_h1, poly, require_nonnegative, require_unit_constant, running_sum, HParams};
use crate::arith::Scalar;
use crate::cfrac::{inverse_ratio_limit, separate_limits};
use crate::error::{Error, Result};
use crate::series::{pochhammer_infinite, Factored, Monomial, Series};

/// Limits of numerators and denominators, from convergents and in closed form.
#[derive(Clone, Debug)]
pub struct SeparateLimits<S: Scalar> {
    pub numer_convergent: Series<S>,
    pub denom_convergent: Series<S>,
    pub numer_series: Series<S>,
    pub denom_series: Series<S>,
    /// Convergent index at which both sequences were stable.
    pub index: usize,
}

pub(crate) fn convergence_cap(order: usize) -> usize {
    4 * order + 20
}

/// `Σ_n ∏_{i<n}(ratio_d + ratio_c·q^{i+1}) q^{n(n+1)/2 + extra·n} / ((ratio_a)_{n+1} (q)_n)`
fn h_family_sum<S: Scalar>(
    ratio_a: &Monomial<S>,
    ratio_c: &Monomial<S>,
    ratio_d: &Monomial<S>,
    shifted: bool,
    order: usize,
    scale: u32,
) -> Result<Series<S>> {
    let one = Monomial::one();
    let q = |k: i64| Monomial::<S>::q_power(k, scale);
    let mut first = Factored::one(order, scale);
    first.div_binomial(&one, &ratio_a.neg())?;
    running_sum(order, scale, first, |state, r| {
        state.mul_binomial(ratio_d, &ratio_c.mul(&q(r)));
        state.div_binomial(&one, &ratio_a.mul(&q(r)).neg())?;
        state.div_binomial(&one, &q(r).neg())?;
        state.mul_monomial(&q(if shifted { r + 1 } else { r }));
        Ok(())
    })
}

/// `Σ_j ∏_{i<j}(lead + tail·q^i) q^{j(j+1)/2 + extra·j} / ((q)_j (−ratio_a·q^{1+extra})_j)`
pub(crate) fn h1_family_sum<S: Scalar>(
    ratio_a: &Monomial<S>,
    lead: &Monomial<S>,
    tail: &Monomial<S>,
    shifted: bool,
    order: usize,
    scale: u32,
) -> Result<Series<S>> {
    let one = Monomial::one();
    let q = |k: i64| Monomial::<S>::q_power(k, scale);
    let extra = i64::from(shifted);
    running_sum(order, scale, Factored::one(order, scale), |state, r| {
        state.mul_binomial(lead, &tail.mul(&q(r - 1)));
        state.div_binomial(&one, &q(r).neg())?;
        state.div_binomial(&one, &ratio_a.mul(&q(r + extra)))?;
        state.mul_monomial(&q(r + extra));
        Ok(())
    })
}

fn minus_one<S: Scalar>(s: Series<S>) -> Result<Series<S>> {
    s.sub(&Series::one(s.order(), s.scale()))
}

/// `(B_N/A_N − 1, closed form)` for `H(a,b,c,d,q)`. Needs `b` a nonzero
/// constant and `a` of positive valuation, the formal stand-in for `|a/b| < 1`.
pub fn limit_h_sides<S: Scalar>(p: &HParams<S>, order: usize) -> Result<(Series<S>, Series<S>)> {
    require_unit_constant(&p.b, "b")?;
    if !p.a.is_zero() && p.a.exp < 1 {
        return Err(Error::DegenerateSpecialization("a must have positive valuation".into()));
    }
    require_nonnegative(&p.c, "c")?;
    require_nonnegative(&p.d, "d")?;
    let (ratio, _) = inverse_ratio_limit(&cf_h(p, order).allowing_zero_numerators(), order, convergence_cap(order))?;
    let lhs = minus_one(ratio)?;

    let b_inv = p.b.try_inv()?;
    let ratio_a = p.a.mul(&b_inv);
    let ratio_c = p.c.mul(&b_inv).mul(&b_inv);
    let ratio_d = p.d.mul(&b_inv);
    let top = h_family_sum(&ratio_a, &ratio_c, &ratio_d, true, order, p.scale)?;
    let bottom = h_family_sum(&ratio_a, &ratio_c, &ratio_d, false, order, p.scale)?;
    let lead = poly(&[p.c.mul(&p.q(1)).mul(&b_inv), p.a.neg()], order, p.scale)?;
    let rhs = lead.mul(&top)?.div(&bottom)?;
    Ok((lhs, rhs))
}

/// Separate limits of `A_N` and `B_N` for `H(a,1,c,d,q)`.
pub fn limit_h_separate<S: Scalar>(p: &HParams<S>, order: usize) -> Result<SeparateLimits<S>> {
    if p.b != Monomial::one() {
        return Err(Error::DegenerateSpecialization("separate limits need b = 1".into()));
    }
    if !p.a.is_zero() && p.a.exp < 1 {
        return Err(Error::DegenerateSpecialization("a must have positive valuation".into()));
    }
    require_nonnegative(&p.c, "c")?;
    require_nonnegative(&p.d, "d")?;
    let (numer_convergent, denom_convergent, index) =
        separate_limits(&cf_h(p, order), order, convergence_cap(order))?;
    let numer_series = h_family_sum(&p.a, &p.c, &p.d, false, order, p.scale)?;
    let extra = h_family_sum(&p.a, &p.c, &p.d, true, order, p.scale)?;
    let lead = poly(&[p.c.mul(&p.q(1)), p.a.neg()], order, p.scale)?;
    let denom_series = numer_series.add(&lead.mul(&extra)?)?;
    Ok(SeparateLimits { numer_convergent, denom_convergent, numer_series, denom_series, index })
}

/// `(D_N/C_N − 1, closed form)` for `H₁(a,b,c,d,q)` with `d` a nonzero
/// constant.
pub fn limit_h1_sides<S: Scalar>(p: &HParams<S>, order: usize) -> Result<(Series<S>, Series<S>)> {
    require_unit_constant(&p.d, "d")?;
    for (m, name) in [(&p.a, "a"), (&p.b, "b"), (&p.c, "c")] {
        require_nonnegative(m, name)?;
    }
    let (ratio, _) = inverse_ratio_limit(&cf_h1(p, order).allowing_zero_numerators(), order, convergence_cap(order))?;
    let lhs = minus_one(ratio)?;

    let d_inv = p.d.try_inv()?;
    let ratio_a = p.a.mul(&d_inv);
    let lead = p.b.mul(&d_inv);
    let tail = p.c.mul(&d_inv).mul(&d_inv);
    let top = h1_family_sum(&ratio_a, &lead, &tail, true, order, p.scale)?;
    let bottom = h1_family_sum(&ratio_a, &lead, &tail, false, order, p.scale)?;
    let numer = poly(&[p.c.clone(), p.a.mul(&p.b).mul(&p.q(1)).neg()], order, p.scale)?;
    let denom = poly(&[p.d.clone(), p.a.mul(&p.q(1))], order, p.scale)?;
    let rhs = numer.div(&denom)?.mul(&top)?.div(&bottom)?;
    Ok((lhs, rhs))
}

/// Separate limits of `C_N` and `D_N` for `H₁(a,b,c,1,q)`.
pub fn limit_h1_separate<S: Scalar>(p: &HParams<S>, order: usize) -> Result<SeparateLimits<S>> {
    if p.d != Monomial::one() {
        return Err(Error::DegenerateSpecialization("separate limits need d = 1".into()));
    }
    for (m, name) in [(&p.a, "a"), (&p.b, "b"), (&p.c, "c")] {
        require_nonnegative(m, name)?;
    }
    let (numer_convergent, denom_convergent, index) =
        separate_limits(&cf_h1(p, order), order, convergence_cap(order))?;
    let s = p.scale;
    let aq = p.a.mul(&p.q(1));
    let prefactor = pochhammer_infinite(&aq.neg(), order, s)?;
    let plain = h1_family_sum(&p.a, &p.b, &p.c, false, order, s)?;
    let shifted = h1_family_sum(&p.a, &p.b, &p.c, true, order, s)?;
    let numer_series = prefactor.mul(&plain)?;
    let lead = poly(&[p.c.clone(), p.a.mul(&p.b).mul(&p.q(1)).neg()], order, s)?;
    let first_factor = poly(&[Monomial::one(), aq], order, s)?;
    let extra = lead.mul(&prefactor)?.mul(&shifted)?.div(&first_factor)?;
    let denom_series = numer_series.add(&extra)?;
    Ok(SeparateLimits { numer_convergent, denom_convergent, numer_series, denom_series, index })
}
