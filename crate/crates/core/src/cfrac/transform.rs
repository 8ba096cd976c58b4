use super::CfSpec;
use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::series::{Monomial, Series};

fn unit_inverse<S: Scalar>(b: &Series<S>, n: usize) -> Result<Series<S>> {
    if b.is_zero() {
        return Err(Error::ZeroOddPartialDenominator(n));
    }
    b.inverse()
}

/// The canonical contraction onto odd-indexed convergents. Its `k`-th
/// convergent is `(A_{2k+1}, B_{2k+1})` of the input for `k ≥ 1`, and its
/// zeroth is `A_1/B_1`.
///
/// Needs every odd `b_{2k+1}` to be a unit series.
pub fn odd_part<S: Scalar>(cf: &CfSpec<S>) -> Result<CfSpec<S>> {
    let order = cf.order();
    let (a1, b1) = cf.term(1)?;
    let b1_inv = unit_inverse(&b1, 1)?;
    // d0 = (b0·b1 + a1)/b1
    let d0 = cf.b0().mul(&b1)?.add(&a1)?.mul(&b1_inv)?;
    let src = cf.clone();
    let mut out = CfSpec::new(d0, order, move |k| {
        let (a_lo, b_lo) = src.term(2 * k - 1)?;
        let (a_mid, b_mid) = src.term(2 * k)?;
        let (a_hi, b_hi) = src.term(2 * k + 1)?;
        if b_hi.is_zero() {
            return Err(Error::ZeroOddPartialDenominator(2 * k + 1));
        }
        match k {
            1 => {
                // c1 = −a1·a2·b3/b1, d1 = b1(a3 + b2·b3) + a2·b3
                let inv = unit_inverse(&b_lo, 1)?;
                let c = a_lo.mul(&a_mid)?.mul(&b_hi)?.mul(&inv)?.neg();
                let d = b_lo.mul(&a_hi.add(&b_mid.mul(&b_hi)?)?)?.add(&a_mid.mul(&b_hi)?)?;
                Ok((c, d))
            }
            _ => {
                // c_k = −a_{2k−1}·a_{2k}·b_{2k+1}/b_{2k−1}
                // d_k = a_{2k+1} + b_{2k}·b_{2k+1} + a_{2k}·b_{2k+1}/b_{2k−1}
                // with an extra factor b1 on c2 to undo the scaling of d1.
                let inv = unit_inverse(&b_lo, 2 * k - 1)?;
                let mut c = a_lo.mul(&a_mid)?.mul(&b_hi)?.mul(&inv)?.neg();
                if k == 2 {
                    let (_, b1) = src.term(1)?;
                    c = c.mul(&b1)?;
                }
                let d = a_hi.add(&b_mid.mul(&b_hi)?)?.add(&a_mid.mul(&b_hi)?.mul(&inv)?)?;
                Ok((c, d))
            }
        }
    });
    if cf.allows_zero_numerators() {
        out = out.allowing_zero_numerators();
    }
    Ok(out)
}

/// `a_n ↦ r_n r_{n−1} a_n`, `b_n ↦ r_n b_n` with `r_0 = 1`. Convergent ratios
/// are unchanged. Multipliers must be nonzero with nonnegative exponent.
pub fn equivalence_transform<S: Scalar>(
    cf: &CfSpec<S>,
    multipliers: impl Fn(usize) -> Monomial<S> + Send + Sync + 'static,
) -> Result<CfSpec<S>> {
    let src = cf.clone();
    let order = cf.order();
    let scale = cf.scale();
    let mult = move |n: usize| -> Result<Series<S>> {
        if n == 0 {
            return Ok(Series::one(order, scale));
        }
        let r = multipliers(n);
        if r.is_zero() {
            return Err(Error::ZeroMultiplier(n));
        }
        Series::from_monomial(&r, order, scale)
    };
    mult(1)?;
    let mut out = CfSpec::new(cf.b0().clone(), order, move |n| {
        let (a, b) = src.term(n)?;
        let rn = mult(n)?;
        let rp = mult(n - 1)?;
        Ok((a.mul(&rn)?.mul(&rp)?, b.mul(&rn)?))
    });
    if cf.allows_zero_numerators() {
        out = out.allowing_zero_numerators();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;
    use crate::cfrac::convergents;

    fn sample(order: usize) -> CfSpec<Rat> {
        CfSpec::new(Series::constant(Rat::from(2), order, 1), order, move |n| {
            let a = Series::from_coeffs(vec![Rat::from(n as i64), Rat::from(1)], 1).truncate(order);
            let b = Series::from_coeffs(vec![Rat::from(1), Rat::from(-(n as i64))], 1).truncate(order);
            Ok((a, b))
        })
    }

    #[test]
    fn odd_part_matches_odd_convergents() {
        let cf = sample(10);
        let orig = convergents(&cf, 17).unwrap();
        let odd = convergents(&odd_part(&cf).unwrap(), 8).unwrap();
        assert_eq!(odd[0].numer.mul(&orig[1].denom).unwrap(), orig[1].numer);
        for k in 1..=8 {
            assert_eq!(odd[k].numer, orig[2 * k + 1].numer, "k = {k}");
            assert_eq!(odd[k].denom, orig[2 * k + 1].denom, "k = {k}");
        }
    }

    #[test]
    fn odd_part_rejects_zero_odd_denominator() {
        let order = 4;
        let cf = CfSpec::<Rat>::new(Series::zero(order, 1), order, move |n| {
            let b = if n == 3 { Series::zero(order, 1) } else { Series::one(order, 1) };
            Ok((Series::one(order, 1), b))
        });
        let odd = odd_part(&cf).unwrap();
        assert_eq!(convergents(&odd, 2).unwrap_err(), Error::ZeroOddPartialDenominator(3));
    }

    #[test]
    fn unit_multipliers_are_identity() {
        let cf = sample(6);
        let same = equivalence_transform(&cf, |_| Monomial::one()).unwrap();
        for n in 1..6 {
            assert_eq!(cf.term(n).unwrap(), same.term(n).unwrap());
        }
    }

    #[test]
    fn zero_multiplier_is_rejected() {
        let cf = sample(6);
        assert_eq!(equivalence_transform(&cf, |_| Monomial::zero()).unwrap_err(), Error::ZeroMultiplier(1));
    }
}
