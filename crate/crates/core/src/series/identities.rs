use super::{gaussian_binomial, pochhammer_factored, sum_infinite, Factored, Monomial, Series};
use crate::arith::Scalar;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QBinomialForm {
    /// `(z;q)_N = Σ_j [N j] (−1)^j z^j q^{j(j−1)/2}`
    Finite,
    /// `1/(z;q)_N = Σ_j [N+j−1 j] z^j`
    Reciprocal,
}

/// Both sides of the q-binomial theorem in the requested form.
pub fn qbinomial_theorem_sides<S: Scalar>(
    z: &Monomial<S>,
    n: usize,
    form: QBinomialForm,
    order: usize,
    scale: u32,
) -> Result<(Series<S>, Series<S>)> {
    let q = i64::from(scale);
    let poch = pochhammer_factored(z, q, n, order, scale);
    match form {
        QBinomialForm::Finite => {
            let lhs = poch.to_series()?;
            let mut rhs = Series::zero(order, scale);
            for j in 0..=n {
                let sign = if j % 2 == 0 { S::one() } else { S::one().neg_ref() };
                let j = j as i64;
                let mono = z.powi(j)?.scale_coeff(&sign).shift(q * j * (j - 1) / 2);
                if mono.is_zero() {
                    continue;
                }
                let g = gaussian_binomial::<S>(n as i64, j, order, scale);
                rhs = rhs.add(&Factored::from_monomial(mono, order, scale).mul_series(&g)?.to_series()?)?;
            }
            Ok((lhs, rhs))
        }
        QBinomialForm::Reciprocal => {
            if n == 0 {
                return Err(Error::DegenerateSpecialization(
                    "reciprocal q-binomial form needs N ≥ 1".into(),
                ));
            }
            if !z.is_zero() && z.exp < 1 {
                return Err(Error::NonconvergentFormalProduct(z.exp));
            }
            let lhs = poch.to_series()?.inverse()?;
            let rhs = sum_infinite(order, scale, |j| {
                let j = j as i64;
                let mono = z.powi(j)?;
                let g = gaussian_binomial::<S>(n as i64 + j - 1, j, order, scale);
                Factored::from_monomial(mono, order, scale).mul_series(&g)
            })?;
            Ok((lhs, rhs))
        }
    }
}

/// Both sides of the Jacobi triple product in base `Q = t^base`:
/// `(−Qz;Q²)_∞ (−Q/z;Q²)_∞ (Q²;Q²)_∞ = Σ_n z^n Q^{n²}`.
pub fn jacobi_triple_product_sides<S: Scalar>(
    z: &Monomial<S>,
    base: i64,
    order: usize,
    scale: u32,
) -> Result<(Series<S>, Series<S>)> {
    if z.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let q2 = Monomial::<S>::t_power(2 * base);
    let first = z.shift(base).neg();
    let second = z.try_inv()?.shift(base).neg();
    for m in [&first, &second, &q2] {
        if m.exp < 1 {
            return Err(Error::NonconvergentFormalProduct(m.exp));
        }
    }
    let lhs = super::pochhammer_infinite_base(&first, 2 * base, order, scale)?
        .mul(&super::pochhammer_infinite_base(&second, 2 * base, order, scale)?)?
        .mul(&super::pochhammer_infinite_base(&q2, 2 * base, order, scale)?)?;

    let z_inv = z.try_inv()?;
    let mut rhs = Series::zero(order, scale);
    for (w, sign_n) in [(z, 1i64), (&z_inv, -1i64)] {
        let mut n = if sign_n == 1 { 0i64 } else { 1 };
        loop {
            let mono = w.powi(n)?.shift(base * n * n);
            if mono.exp > order as i64 {
                // n·exp(z^{±1}) + base·n² is increasing once past the order
                // because base ≥ |exp(z)| + 1.
                break;
            }
            rhs = rhs.add(&Series::from_monomial(&mono, order, scale)?)?;
            n += 1;
        }
    }
    Ok((lhs, rhs))
}
