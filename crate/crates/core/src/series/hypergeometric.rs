use super::{Factored, Monomial, Series};
use crate::arith::Scalar;
use crate::error::{Error, Result};

/// Adds `mono·unit` into `acc`, ignoring everything past the order.
fn accumulate<S: Scalar>(acc: &mut Series<S>, term: &Factored<S>) -> Result<()> {
    if term.is_zero() {
        return Ok(());
    }
    let s = term.to_series()?;
    *acc = acc.add(&s)?;
    Ok(())
}

/// Sums `term(0) + … + term(count−1)`.
pub fn sum_finite<S: Scalar>(
    count: usize,
    order: usize,
    scale: u32,
    mut term: impl FnMut(usize) -> Result<Factored<S>>,
) -> Result<Series<S>> {
    let mut acc = Series::zero(order, scale);
    for r in 0..count {
        let t = term(r)?;
        if t.valuation().is_some_and(|v| v > order as i64) {
            continue;
        }
        accumulate(&mut acc, &t)?;
    }
    Ok(acc)
}

/// Sums `Σ_{r≥0} term(r)` where the exact `t`-valuation of each term is read
/// off its leading monomial.
///
/// Terms are requested in increasing `r`, so `term` may keep running state.
/// Summation stops at the first `J` where the valuations at `J, J+1, J+2` all
/// exceed `order`, increase, and have nonnegative second difference (term
/// valuations are quadratic in `r`); two vanishing terms in a row also stop
/// it. A negative valuation, or no stopping point within `4·order + 16`
/// terms, is a degenerate specialization.
pub fn sum_infinite<S: Scalar>(
    order: usize,
    scale: u32,
    mut term: impl FnMut(usize) -> Result<Factored<S>>,
) -> Result<Series<S>> {
    let cap = 4 * order + 16;
    let mut acc = Series::zero(order, scale);
    let mut window: [Option<i64>; 3] = [None; 3];
    let limit = order as i64;
    for r in 0..cap {
        let t = term(r)?;
        let v = t.valuation();
        if let Some(v) = v {
            if v < 0 {
                return Err(Error::DegenerateSpecialization(format!(
                    "term {r} has negative t-valuation {v}"
                )));
            }
            if v <= limit {
                accumulate(&mut acc, &t)?;
            }
        }
        window = [window[1], window[2], v];
        if r >= 2 && settled(window, limit) {
            return Ok(acc);
        }
    }
    Err(Error::DegenerateSpecialization(format!(
        "term valuations did not exceed order {order} within {cap} terms"
    )))
}

fn settled(w: [Option<i64>; 3], limit: i64) -> bool {
    match w {
        [first, None, None] => first.map_or(true, |v| v > limit),
        [Some(a), Some(b), Some(c)] => a > limit && b > a && c - b >= b - a,
        _ => false,
    }
}

/// Partial sum over `n < terms` of the basic hypergeometric series
/// `_rφ_s(num; den; q, x)` including the `((−1)^n q^{n(n−1)/2})^{1+s−r}`
/// factor.
pub fn rphis_partial<S: Scalar>(
    num: &[Monomial<S>],
    den: &[Monomial<S>],
    x: &Monomial<S>,
    terms: usize,
    order: usize,
    scale: u32,
) -> Result<Series<S>> {
    let q = i64::from(scale);
    let extra = 1 + den.len() as i64 - num.len() as i64;
    let one = Monomial::<S>::one();
    let mut current = Factored::one(order, scale);
    sum_finite(terms, order, scale, |n| {
        if n > 0 {
            let k = (n - 1) as i64;
            for a in num {
                current.mul_binomial(&one, &a.shift(q * k).neg());
            }
            for b in den {
                current.div_binomial(&one, &b.shift(q * k).neg())?;
            }
            current.div_binomial(&one, &Monomial::new(S::one().neg_ref(), q * (k + 1)))?;
            // ((−1)^n q^{n(n−1)/2})^extra over ((−1)^{n−1} q^{(n−1)(n−2)/2})^extra
            let step = Monomial::new(S::one().neg_ref(), q * k).powi(extra)?;
            current.mul_monomial(&step.mul(x));
        }
        Ok(current.clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;
    use crate::series::pochhammer_finite;

    #[test]
    fn zero_argument_gives_one() {
        let a = [Monomial::new(Rat::from(2), 1)];
        let b = [Monomial::new(Rat::from(3), 1)];
        let s = rphis_partial(&a, &b, &Monomial::zero(), 10, 8, 1).unwrap();
        assert_eq!(s, Series::one(8, 1));
    }

    #[test]
    fn empty_parameter_lists_match_hand_loop() {
        let order = 20;
        let x = Monomial::<Rat>::q_power(1, 1);
        let s = rphis_partial(&[], &[], &x, 8, order, 1).unwrap();
        let mut expect = Series::<Rat>::zero(order, 1);
        for n in 0..8usize {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let e = n + n * (n.saturating_sub(1)) / 2;
            let num = Series::q_power(e, order, 1).scale_by(&Rat::from(sign));
            let den = pochhammer_finite(&Monomial::q_power(1, 1), n, order, 1).unwrap();
            expect = expect.add(&num.div(&den).unwrap()).unwrap();
        }
        assert_eq!(s, expect);
    }

    #[test]
    fn stalled_sum_is_degenerate() {
        let r = sum_infinite::<Rat>(5, 1, |_| Ok(Factored::one(5, 1)));
        assert!(matches!(r, Err(Error::DegenerateSpecialization(_))));
    }

    #[test]
    fn geometric_sum_terminates() {
        let s = sum_infinite::<Rat>(6, 1, |r| {
            Ok(Factored::from_monomial(Monomial::t_power(r as i64), 6, 1))
        })
        .unwrap();
        assert_eq!(s, Series::one(6, 1).sub(&Series::q_power(1, 6, 1)).unwrap().inverse().unwrap());
    }
}
