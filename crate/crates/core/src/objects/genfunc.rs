//! Generating-function oracle for the `H` convergents.
//!
//! With `K(x) = 1/((1−ax)(1−bx))`, the series `F(x) = Σ A_N x^N` and
//! `G(x) = Σ B_N x^N` satisfy
//!
//! ```text
//! F(x) = x·K(x) + x(d + cqx)·K(x)·F(xq)
//! G(x) = x(1 + (cq − ab)x)·K(x) + x(d + cqx)·K(x)·G(xq)
//! ```
//!
//! The coefficient of `x^N` on the right only involves lower coefficients of
//! the unknown, so iterating the equation fixes one more coefficient per
//! pass. Nothing here shares code with the recurrence or the closed forms.

use super::{poly, powers, HParams};
use crate::arith::Scalar;
use crate::error::Result;
use crate::series::{Monomial, Series};

/// `h_k = Σ_{i≤k} a^i b^{k−i}`, the coefficients of `K(x)`.
fn kernel<S: Scalar>(p: &HParams<S>, n: usize, order: usize) -> Result<Vec<Series<S>>> {
    let (pa, pb) = (powers(&p.a, n), powers(&p.b, n));
    (0..=n)
        .map(|k| {
            let terms: Vec<Monomial<S>> = (0..=k).map(|i| pa[i].mul(&pb[k - i])).collect();
            poly(&terms, order, p.scale)
        })
        .collect()
}

fn solve<S: Scalar>(
    p: &HParams<S>,
    n: usize,
    order: usize,
    forcing: impl Fn(&[Series<S>], usize) -> Result<Series<S>>,
) -> Result<Vec<Series<S>>> {
    let s = p.scale;
    let h = kernel(p, n, order)?;
    // L = (d + cqx)·K
    let cq = p.c.mul(&p.q(1));
    let tail_kernel: Vec<Series<S>> = (0..=n)
        .map(|k| {
            let mut acc = h[k].mul_monomial(&p.d)?;
            if k >= 1 {
                acc = acc.add(&h[k - 1].mul_monomial(&cq)?)?;
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let mut coeffs = vec![Series::zero(order, s); n + 1];
    // Each pass substitutes the current iterate into the right-hand side.
    for _ in 0..n {
        let shifted: Vec<Series<S>> = coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| c.mul_monomial(&p.q(m as i64)))
            .collect::<Result<_>>()?;
        let mut next = vec![Series::zero(order, s); n + 1];
        for big_n in 1..=n {
            let mut acc = forcing(&h, big_n)?;
            for m in 1..big_n {
                acc = acc.add(&tail_kernel[big_n - 1 - m].mul(&shifted[m])?)?;
            }
            next[big_n] = acc;
        }
        coeffs = next;
    }
    Ok(coeffs)
}

/// `A_0, …, A_n` read off the iterated equation for `F`.
pub fn genfunc_numerators<S: Scalar>(p: &HParams<S>, n: usize, order: usize) -> Result<Vec<Series<S>>> {
    solve(p, n, order, |h, big_n| Ok(h[big_n - 1].clone()))
}

/// `B_1, …, B_n` (index 0 holds 0, not `B_0`) read off the iterated
/// equation for `G`.
pub fn genfunc_denominators<S: Scalar>(p: &HParams<S>, n: usize, order: usize) -> Result<Vec<Series<S>>> {
    let correction = poly(&[p.c.mul(&p.q(1)), p.a.mul(&p.b).neg()], order, p.scale)?;
    solve(p, n, order, move |h, big_n| {
        let mut acc = h[big_n - 1].clone();
        if big_n >= 2 {
            acc = acc.add(&h[big_n - 2].mul(&correction)?)?;
        }
        Ok(acc)
    })
}
