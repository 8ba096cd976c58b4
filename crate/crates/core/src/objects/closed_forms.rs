//! Triple-sum closed forms for the numerators and denominators of `H` and
//! `H₁`. Every summand is a parameter monomial times a product of Gaussian
//! polynomials, added with [`Series::add_poly_term`].

use super::{powers, HParams};
use crate::arith::Scalar;
use crate::error::Result;
use crate::series::{gaussian_product, Series};

fn tri(n: i64) -> i64 {
    n * (n + 1) / 2
}

/// Inner sum of the `H` closed forms with top index `top` (`N−1` for the
/// numerator, `N−2` for the correction term of the denominator); the extra
/// `q`-power is `n(n+1)/2` or `n(n+3)/2` as selected by `shifted`.
fn h_sum<S: Scalar>(p: &HParams<S>, top: i64, shifted: bool, order: usize) -> Result<Series<S>> {
    let mut acc = Series::zero(order, p.scale);
    if top < 0 {
        return Ok(acc);
    }
    let n_max = top as usize;
    let (pa, pb, pc, pd) = (powers(&p.a, n_max), powers(&p.b, n_max), powers(&p.c, n_max), powers(&p.d, n_max));
    for n in 0..=top {
        for l in 0..=n {
            for j in 0..=(top - n - l).max(-1) {
                let poly = gaussian_product(&[(n + j, j), (top - j - l, n), (n, l)]);
                if poly.is_empty() {
                    continue;
                }
                let qexp = if shifted { n * (n + 3) / 2 } else { tri(n) } + tri(l);
                let m = pa[j as usize]
                    .mul(&pb[(top - n - j - l) as usize])
                    .mul(&pc[l as usize])
                    .mul(&pd[(n - l) as usize])
                    .mul(&p.q(qexp));
                acc.add_poly_term(&m, &poly)?;
            }
        }
    }
    Ok(acc)
}

/// `A_N` of `H(a,b,c,d,q)` from its triple-sum closed form. `A_0 = 0`.
pub fn h_numerator_closed_form<S: Scalar>(p: &HParams<S>, n: usize, order: usize) -> Result<Series<S>> {
    if n == 0 {
        return Ok(Series::zero(order, p.scale));
    }
    h_sum(p, n as i64 - 1, false, order)
}

/// `B_N = A_N + (cq − ab)·Σ…` of `H(a,b,c,d,q)`. `B_0 = 1`.
pub fn h_denominator_closed_form<S: Scalar>(p: &HParams<S>, n: usize, order: usize) -> Result<Series<S>> {
    if n == 0 {
        return Ok(Series::one(order, p.scale));
    }
    let base = h_numerator_closed_form(p, n, order)?;
    let tail = h_sum(p, n as i64 - 2, true, order)?;
    let factor = [p.c.mul(&p.q(1)), p.a.mul(&p.b).neg()];
    let mut acc = base;
    for m in &factor {
        acc = acc.add(&tail.mul_monomial(m)?)?;
    }
    Ok(acc)
}

/// Inner sum of the `H₁` closed forms with top index `top`. The numerator
/// uses `q^{n(n+1)/2 + l(l−1)/2}`; the denominator correction uses
/// `q^{(n+1)(n+2)/2 − 1 + l(l−1)/2}`.
fn h1_sum<S: Scalar>(p: &HParams<S>, top: i64, shifted: bool, order: usize) -> Result<Series<S>> {
    let mut acc = Series::zero(order, p.scale);
    if top < 0 {
        return Ok(acc);
    }
    let n_max = top as usize;
    let (pa, pb, pc, pd) = (powers(&p.a, n_max), powers(&p.b, n_max), powers(&p.c, n_max), powers(&p.d, n_max));
    for n in 0..=top {
        for j in 0..=n {
            for l in 0..=(n - j).min(top - n) {
                let poly = gaussian_product(&[(top - n + j, j), (top - j - l, n - j - l), (top - n, l)]);
                if poly.is_empty() {
                    continue;
                }
                let lead = if shifted { (n + 1) * (n + 2) / 2 - 1 } else { tri(n) };
                let qexp = lead + l * (l - 1) / 2;
                let m = pa[j as usize]
                    .mul(&pb[(n - j - l) as usize])
                    .mul(&pc[l as usize])
                    .mul(&pd[(top - n - l) as usize])
                    .mul(&p.q(qexp));
                acc.add_poly_term(&m, &poly)?;
            }
        }
    }
    Ok(acc)
}

/// `C_N` of `H₁(a,b,c,d,q)` from its triple-sum closed form. `C_0 = 0`.
pub fn h1_numerator_closed_form<S: Scalar>(p: &HParams<S>, n: usize, order: usize) -> Result<Series<S>> {
    if n == 0 {
        return Ok(Series::zero(order, p.scale));
    }
    h1_sum(p, n as i64 - 1, false, order)
}

/// `D_N = C_N + (c − abq)·Σ…` of `H₁(a,b,c,d,q)`. `D_0 = 1`.
pub fn h1_denominator_closed_form<S: Scalar>(p: &HParams<S>, n: usize, order: usize) -> Result<Series<S>> {
    if n == 0 {
        return Ok(Series::one(order, p.scale));
    }
    let base = h1_numerator_closed_form(p, n, order)?;
    let tail = h1_sum(p, n as i64 - 2, true, order)?;
    let factor = [p.c.clone(), p.a.mul(&p.b).mul(&p.q(1)).neg()];
    let mut acc = base;
    for m in &factor {
        acc = acc.add(&tail.mul_monomial(m)?)?;
    }
    Ok(acc)
}

/// Checks `C_N(q) = q^{N(N−1)/2} A_N(1/q)` at constant parameters (scale 1)
/// by reversing the coefficient list of `A_N` at degree `N(N−1)/2`.
pub fn reversal_duality_holds<S: Scalar>(p: &HParams<S>, n: usize) -> Result<bool> {
    assert!(p.scale == 1 && [&p.a, &p.b, &p.c, &p.d].iter().all(|m| m.exp == 0));
    let degree = n * n.saturating_sub(1) / 2;
    let numer = h_numerator_closed_form(p, n, degree)?;
    let mut reversed = numer.into_coeffs();
    reversed.reverse();
    let reversed = Series::from_coeffs(reversed, 1);
    Ok(reversed == h1_numerator_closed_form(p, n, degree)?)
}
