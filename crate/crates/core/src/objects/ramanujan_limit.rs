//! The generalized three-limit fraction `1/(ω+ω̄+q) − 1/(ω+ω̄+q²) − …`
//! for a primitive `m`-th root of unity `ω`, whose approximants along each
//! residue class mod `m` tend to a quotient of values of
//! `P(a,x,q) = Σ q^{j(j+1)/2} a^j x^j / ((q)_j (x²q)_j)`.
//!
//! The limit only makes sense numerically, so everything here except
//! [`series_p`] works in `CF64`.

use crate::arith::{primitive_root, Scalar, CF64};
use crate::cfrac::NumericCf;
use crate::error::{Error, Result};
use crate::series::{Factored, Monomial, Series};

use super::running_sum;

/// `P(a, x, q)` as a truncated series.
pub fn series_p<S: Scalar>(a: &Monomial<S>, x: &Monomial<S>, order: usize, scale: u32) -> Result<Series<S>> {
    let one = Monomial::one();
    let q = |k: i64| Monomial::<S>::q_power(k, scale);
    let ax = a.mul(x);
    let x_sq = x.mul(x);
    running_sum(order, scale, Factored::one(order, scale), |state, r| {
        state.mul_monomial(&ax.mul(&q(r)));
        state.div_binomial(&one, &q(r).neg())?;
        state.div_binomial(&one, &x_sq.mul(&q(r)).neg())?;
        Ok(())
    })
}

/// `P(a, x, q)` summed numerically over `terms` terms.
pub fn series_p_numeric(a: CF64, x: CF64, q: CF64, terms: usize) -> Result<CF64> {
    let one = CF64::new(1.0, 0.0);
    let x_sq = x * x;
    let mut term = one;
    let mut total = one;
    let mut q_pow = one;
    for _ in 1..terms {
        q_pow = q_pow * q;
        let den = (one - q_pow) * (one - x_sq * q_pow);
        if den.abs() == 0.0 {
            return Err(Error::ZeroDenominatorFactor("1 − x²q^j".into()));
        }
        term = (term * a * x * q_pow / den).checked("P term")?;
        total = total + term;
    }
    total.checked("P")
}

const P_TERMS: usize = 200;

/// `(approximant, limit)` for modulus `m`, residue `i` (`1 ≤ i ≤ m`) and
/// `k` full periods.
///
/// The approximant keeps `mk + i − 1` partial quotients, i.e. it is the
/// `(mk+i)`-th approximant when the leading `1/1` of the generating fraction
/// is counted.
pub fn root_of_unity_limit_sides(m: u32, i: u32, q: CF64, k: usize) -> Result<(CF64, CF64)> {
    assert!(m >= 3 && (1..=m).contains(&i), "need m ≥ 3 and 1 ≤ i ≤ m");
    if q.abs() >= 1.0 {
        return Err(Error::DegenerateSpecialization("|q| must be below 1".into()));
    }
    let w = primitive_root(m);
    let one = CF64::new(1.0, 0.0);
    let w_bar = one / w;
    let trace = w + w_bar;
    let cf = NumericCf::new(CF64::new(0.0, 0.0), move |n| {
        let a = if n == 1 { one } else { -one };
        (a, trace + q.powi(n as i32))
    });
    let depth = m as usize * k + i as usize - 1;
    let approximant = cf.evaluate(depth)?;

    let i = i as i32;
    let p = |a: CF64, x: CF64| series_p_numeric(a, x, q, P_TERMS);
    let numer = w.powi(1 - i) * p(q, w)? - w.powi(i - 1) * p(q, w_bar)?;
    let denom = w.powi(-i) * p(one, w)? - w.powi(i) * p(one, w_bar)?;
    let limit = (numer / denom).checked("limit quotient")?;
    Ok((approximant, limit))
}

/// True iff the approximant and the limit agree within `tol`.
pub fn root_of_unity_limit_check(m: u32, i: u32, q: CF64, k: usize, tol: f64) -> Result<bool> {
    let (approximant, limit) = root_of_unity_limit_sides(m, i, q, k)?;
    Ok((approximant - limit).abs() < tol)
}
