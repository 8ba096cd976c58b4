//! The single-sum series that appear as values of the two-periodic
//! fractions, and the two series identities they rest on.

use super::running_sum;
use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::series::{pochhammer_infinite, Factored, Monomial, Series};

/// `Σ_j ∏_{i<j}(lead + tail·q^i) q^{j(j+1)/2 + shift·j} / ((q)_j (−damping·q)_j)`.
///
/// Every series here is of this shape: a factor `x^j (−y/x)_j` is written as
/// `∏(x + y·q^i)` so that no parameter needs inverting.
fn product_sum<S: Scalar>(
    lead: &Monomial<S>,
    tail: &Monomial<S>,
    shift: i64,
    damping: &Monomial<S>,
    order: usize,
    scale: u32,
) -> Result<Series<S>> {
    let one = Monomial::one();
    let q = |k: i64| Monomial::<S>::q_power(k, scale);
    running_sum(order, scale, Factored::one(order, scale), |state, r| {
        state.mul_binomial(lead, &tail.mul(&q(r - 1)));
        state.mul_monomial(&q(r + shift));
        state.div_binomial(&one, &q(r).neg())?;
        state.div_binomial(&one, &damping.mul(&q(r)))?;
        Ok(())
    })
}

/// `G(a,b,λ) = Σ (−λ/a)_n a^n q^{n(n+1)/2} / ((q)_n (−bq)_n)`. With
/// `shifted` this is `G(aq, b, λq)`.
pub fn fg_series<S: Scalar>(
    a: &Monomial<S>,
    b: &Monomial<S>,
    lambda: &Monomial<S>,
    shifted: bool,
    order: usize,
    scale: u32,
) -> Result<Series<S>> {
    product_sum(a, lambda, i64::from(shifted), b, order, scale)
}

/// `φ(a)` (or `φ(aq)` when `shifted`) for the two-parameter fraction.
pub fn entry17_phi<S: Scalar>(
    a: &Monomial<S>,
    b: &Monomial<S>,
    shifted: bool,
    order: usize,
    scale: u32,
) -> Result<Series<S>> {
    fg_series(a, b, &Monomial::zero(), shifted, order, scale)
}

/// The series `G(a, λ; b)` of the terminating-numerator fraction; equal to
/// [`fg_series`] with the same arguments.
pub fn e644_series<S: Scalar>(
    a: &Monomial<S>,
    b: &Monomial<S>,
    lambda: &Monomial<S>,
    shifted: bool,
    order: usize,
    scale: u32,
) -> Result<Series<S>> {
    fg_series(a, b, lambda, shifted, order, scale)
}

fn shifted_one<S: Scalar>(e: &Monomial<S>) -> Result<Monomial<S>> {
    if e.exp != 0 {
        return Err(Error::DegenerateSpecialization("e must be a constant".into()));
    }
    let m = Monomial::constant(e.coeff.add_ref(&S::one()));
    if m.is_zero() {
        return Err(Error::DegenerateSpecialization("e = −1".into()));
    }
    Ok(m)
}

/// `φ(x) = Σ (x/(e+1))^j (eaq/(x(e+1)))_j q^{j(j+1)/2} / ((q)_j (−bq/(e+1))_j)`
/// for the fraction with `e` added to every even partial numerator.
pub fn h2_phi<S: Scalar>(
    x: &Monomial<S>,
    a: &Monomial<S>,
    b: &Monomial<S>,
    e: &Monomial<S>,
    order: usize,
    scale: u32,
) -> Result<Series<S>> {
    let inv = shifted_one(e)?.try_inv()?;
    let lead = x.mul(&inv);
    let tail = e.mul(a).mul(&Monomial::q_power(1, scale)).mul(&inv).mul(&inv).neg();
    product_sum(&lead, &tail, 0, &b.mul(&inv), order, scale)
}

/// `φ(a)` (or `φ(aq)` when `shifted`) with
/// `φ(x) = Σ (x/(e+1))^j (eb/(a(e+1)))_j q^{j(j+1)/2} / ((q)_j (−bq/(e+1))_j)`
/// for the fraction with `e` added to every odd partial numerator.
pub fn h3_phi<S: Scalar>(
    a: &Monomial<S>,
    b: &Monomial<S>,
    e: &Monomial<S>,
    shifted: bool,
    order: usize,
    scale: u32,
) -> Result<Series<S>> {
    let inv = shifted_one(e)?.try_inv()?;
    let lead = a.mul(&inv);
    let tail = e.mul(b).mul(&inv).mul(&inv).neg();
    product_sum(&lead, &tail, i64::from(shifted), &b.mul(&inv), order, scale)
}

/// Both sides of the `a ↔ b` symmetric identity
/// `(−aq)_∞ Σ (bq)^j (−c/b)_j q^{j(j−1)/2} / ((q)_j (−aq)_j) = (same with a, b swapped)`.
pub fn absym_sides<S: Scalar>(
    a: &Monomial<S>,
    b: &Monomial<S>,
    c: &Monomial<S>,
    order: usize,
    scale: u32,
) -> Result<(Series<S>, Series<S>)> {
    let q1 = Monomial::q_power(1, scale);
    let side = |x: &Monomial<S>, y: &Monomial<S>| -> Result<Series<S>> {
        let sum = product_sum(y, c, 0, x, order, scale)?;
        pochhammer_infinite(&x.mul(&q1).neg(), order, scale)?.mul(&sum)
    };
    Ok((side(a, b)?, side(b, a)?))
}

/// `(Σ (−b/a)_j a^j q^{j(j+1)/2} / ((q)_j (bq)_j), (−aq)_∞ / (bq)_∞)`.
pub fn rameq_sides<S: Scalar>(
    a: &Monomial<S>,
    b: &Monomial<S>,
    order: usize,
    scale: u32,
) -> Result<(Series<S>, Series<S>)> {
    let q1 = Monomial::q_power(1, scale);
    let lhs = product_sum(a, b, 0, &b.neg(), order, scale)?;
    let rhs = pochhammer_infinite(&a.mul(&q1).neg(), order, scale)?
        .div(&pochhammer_infinite(&b.mul(&q1), order, scale)?)?;
    Ok((lhs, rhs))
}
