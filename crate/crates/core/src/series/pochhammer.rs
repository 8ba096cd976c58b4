use super::{linear_product, Factored, Monomial, Series};
use crate::arith::Scalar;
use crate::error::{Error, Result};

/// `(z; Q)_n = ∏_{k<n} (1 − z·Q^k)` with `Q = t^base`, kept factored so that
/// negative exponents in `z` are allowed.
pub fn pochhammer_factored<S: Scalar>(
    z: &Monomial<S>,
    base: i64,
    n: usize,
    order: usize,
    scale: u32,
) -> Factored<S> {
    linear_product(&Monomial::one(), &z.neg(), base, n, order, scale)
}

/// `(z; q)_n` truncated at `order`.
pub fn pochhammer_finite<S: Scalar>(
    z: &Monomial<S>,
    n: usize,
    order: usize,
    scale: u32,
) -> Result<Series<S>> {
    pochhammer_factored(z, i64::from(scale), n, order, scale).to_series()
}

/// `(z; q)_∞` truncated at `order`.
pub fn pochhammer_infinite<S: Scalar>(z: &Monomial<S>, order: usize, scale: u32) -> Result<Series<S>> {
    pochhammer_infinite_base(z, i64::from(scale), order, scale)
}

/// `(z; Q)_∞` with `Q = t^base`. Needs `z` of positive `t`-valuation so that
/// only finitely many factors differ from 1 below `t^(order+1)`.
pub fn pochhammer_infinite_base<S: Scalar>(
    z: &Monomial<S>,
    base: i64,
    order: usize,
    scale: u32,
) -> Result<Series<S>> {
    if z.is_zero() {
        return Ok(Series::one(order, scale));
    }
    if z.exp < 1 || base < 1 {
        return Err(Error::NonconvergentFormalProduct(z.exp.min(base)));
    }
    let mut s = Series::one(order, scale);
    let c = z.coeff.neg_ref();
    let mut e = z.exp;
    while e <= order as i64 {
        s.mul_binomial_in_place(&c, e as usize);
        e += base;
    }
    Ok(s)
}
