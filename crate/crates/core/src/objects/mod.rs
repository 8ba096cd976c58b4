//! The concrete continued fractions, their closed-form convergents, limit
//! identities and the Watson-type transformations built on them.

mod closed_forms;
mod fractions;
mod genfunc;
mod limits;
mod phi;
mod ramanujan_limit;
mod watson;

pub use closed_forms::{
    h1_denominator_closed_form, h1_numerator_closed_form, h_denominator_closed_form,
    h_numerator_closed_form, reversal_duality_holds,
};
pub use fractions::{
    cf_amusing, cf_e644, cf_fg, cf_h, cf_h1, cf_h2, cf_h3, cf_q2q3, cf_rogers_ramanujan,
    cf_z3, named_fraction, FRACTION_IDS,
};
pub use genfunc::{genfunc_denominators, genfunc_numerators};
pub use limits::{limit_h1_sides, limit_h1_separate, limit_h_separate, limit_h_sides, SeparateLimits};
pub use phi::{
    absym_sides, e644_series, entry17_phi, fg_series, h2_phi, h3_phi, rameq_sides,
};
pub use ramanujan_limit::{series_p, series_p_numeric, root_of_unity_limit_check, root_of_unity_limit_sides};
pub use watson::{
    numerator_limit_scaled, wat1_forms, wat2_forms, watson_finite_sides, watson_limit_sides,
    WatsonForms, WatsonParams,
};

use crate::arith::{Rat, Scalar};
use crate::error::Result;
use crate::series::{Monomial, Series};

/// Specialisations of the four parameters of the `H` and `H₁` families.
#[derive(Clone, Debug, PartialEq)]
pub struct HParams<S: Scalar> {
    pub a: Monomial<S>,
    pub b: Monomial<S>,
    pub c: Monomial<S>,
    pub d: Monomial<S>,
    pub scale: u32,
}

impl<S: Scalar> HParams<S> {
    pub fn new(a: Monomial<S>, b: Monomial<S>, c: Monomial<S>, d: Monomial<S>, scale: u32) -> Self {
        HParams { a, b, c, d, scale }
    }

    /// Constant parameters at scale 1.
    pub fn constants(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Self {
        HParams {
            a: Monomial::from_rat(a, 0),
            b: Monomial::from_rat(b, 0),
            c: Monomial::from_rat(c, 0),
            d: Monomial::from_rat(d, 0),
            scale: 1,
        }
    }

    /// `q^k` in `t`-units.
    pub fn q(&self, k: i64) -> Monomial<S> {
        Monomial::q_power(k, self.scale)
    }
}

/// Sum of monomials as a series.
pub(crate) fn poly<S: Scalar>(terms: &[Monomial<S>], order: usize, scale: u32) -> Result<Series<S>> {
    let mut acc = Series::zero(order, scale);
    for m in terms {
        acc = acc.add(&Series::from_monomial(m, order, scale)?)?;
    }
    Ok(acc)
}

/// `[m⁰, m¹, …, m^n]`.
pub(crate) fn powers<S: Scalar>(m: &Monomial<S>, n: usize) -> Vec<Monomial<S>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Monomial::one());
    for k in 1..=n {
        out.push(out[k - 1].mul(m));
    }
    out
}

/// `Σ_{r≥0} term_r` where `advance(state, r)` turns `term_{r−1}` into
/// `term_r`, starting from `first`.
pub(crate) fn running_sum<S: Scalar>(
    order: usize,
    scale: u32,
    first: crate::series::Factored<S>,
    mut advance: impl FnMut(&mut crate::series::Factored<S>, i64) -> Result<()>,
) -> Result<Series<S>> {
    let mut state = first;
    crate::series::sum_infinite(order, scale, |r| {
        if r > 0 {
            advance(&mut state, r as i64)?;
        }
        Ok(state.clone())
    })
}

/// Rejects a parameter that is not a nonzero constant.
pub(crate) fn require_unit_constant<S: Scalar>(m: &Monomial<S>, name: &str) -> Result<()> {
    if m.is_zero() || m.exp != 0 {
        return Err(crate::Error::DegenerateSpecialization(format!(
            "{name} must be a nonzero constant, got {m}"
        )));
    }
    Ok(())
}

/// Rejects a parameter of negative `t`-valuation.
pub(crate) fn require_nonnegative<S: Scalar>(m: &Monomial<S>, name: &str) -> Result<()> {
    if !m.is_zero() && m.exp < 0 {
        return Err(crate::Error::DegenerateSpecialization(format!(
            "{name} has negative valuation: {m}"
        )));
    }
    Ok(())
}

/// Sum of monomials for a partial quotient. Unlike [`poly`], a sum that is
/// nonzero but vanishes below `t^(order+1)` keeps its leading term (the
/// order is raised to reach it), so that only an exactly vanishing partial
/// numerator counts as zero.
pub(crate) fn term_poly<S: Scalar>(terms: &[Monomial<S>], order: usize, scale: u32) -> Result<Series<S>> {
    let mut combined: Vec<Monomial<S>> = Vec::with_capacity(terms.len());
    for m in terms.iter().filter(|m| !m.is_zero()) {
        match combined.iter_mut().find(|c| c.exp == m.exp) {
            Some(c) => c.coeff = c.coeff.add_ref(&m.coeff),
            None => combined.push(m.clone()),
        }
    }
    let lowest = combined.iter().filter(|m| !m.is_zero()).map(|m| m.exp).min();
    let reach = lowest.map_or(order, |e| order.max(usize::try_from(e).unwrap_or(0)));
    poly(&combined, reach, scale)
}
