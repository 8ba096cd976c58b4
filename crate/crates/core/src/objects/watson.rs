//! Watson's transformation of a terminating very-well-poised `8φ7` into a
//! balanced `4φ3`, its limiting form, and the two specializations that turn
//! it into statements about the numerators of `H₁`.

use super::limits::{convergence_cap, h1_family_sum};
use super::{poly, require_nonnegative, require_unit_constant, running_sum, HParams};
use crate::arith::Scalar;
use crate::cfrac::{sequence_agreement, ConvergentIter};
use crate::error::{Error, Result};
use crate::series::{linear_product, pochhammer_infinite, sum_finite, Factored, Monomial, Series};

/// Parameters of the terminating transformation: the well-poised lead
/// parameter, the four remaining numerator parameters and the terminating
/// depth `n` (the sum stops at `q^{−n}`).
#[derive(Clone, Debug, PartialEq)]
pub struct WatsonParams<S: Scalar> {
    pub lead: Monomial<S>,
    pub others: [Monomial<S>; 4],
    pub depth: usize,
    pub scale: u32,
}

fn q<S: Scalar>(k: i64, scale: u32) -> Monomial<S> {
    Monomial::q_power(k, scale)
}

/// `(8φ7 side, prefactor · 4φ3 side)`.
pub fn watson_finite_sides<S: Scalar>(w: &WatsonParams<S>, order: usize) -> Result<(Series<S>, Series<S>)> {
    let s = w.scale;
    let n = w.depth as i64;
    let one = Monomial::<S>::one();
    let lead = &w.lead;
    let [b, c, d, e] = &w.others;
    for (m, name) in [(b, "second"), (c, "third"), (d, "fourth"), (e, "fifth")] {
        if m.is_zero() {
            return Err(Error::DegenerateSpecialization(format!("{name} parameter is zero")));
        }
    }
    let lead_q = lead.mul(&q(1, s));
    let quot = |m: &Monomial<S>| lead_q.try_div(m);
    let denoms = [quot(b)?, quot(c)?, quot(d)?, quot(e)?];
    let argument = lead.mul(lead).mul(&q(n + 2, s)).try_div(&b.mul(c).mul(d).mul(e))?;

    let mut state = Factored::one(order, s);
    let lhs = sum_finite(w.depth + 1, order, s, |r| {
        let r = r as i64;
        if r > 0 {
            let i = r - 1;
            for m in [lead, b, c, d, e] {
                state.mul_binomial(&one, &m.mul(&q(i, s)).neg());
            }
            state.mul_binomial(&one, &q(i - n, s).neg());
            for m in &denoms {
                state.div_binomial(&one, &m.mul(&q(i, s)).neg())?;
            }
            state.div_binomial(&one, &lead.mul(&q(n + 1 + i, s)).neg())?;
            state.div_binomial(&one, &q(1 + i, s).neg())?;
            state.mul_monomial(&argument);
        }
        let mut term = state.clone();
        term.mul_binomial(&one, &lead.mul(&q(2 * r, s)).neg());
        term.div_binomial(&one, &lead.neg())?;
        Ok(term)
    })?;

    let lead_over_bc = lead_q.try_div(&b.mul(c))?;
    let balanced = d.mul(e).mul(&q(-n, s)).try_div(lead)?;
    let mut state = Factored::one(order, s);
    let sum = sum_finite(w.depth + 1, order, s, |r| {
        if r > 0 {
            let i = r as i64 - 1;
            for m in [&lead_over_bc, d, e] {
                state.mul_binomial(&one, &m.mul(&q(i, s)).neg());
            }
            state.mul_binomial(&one, &q(i - n, s).neg());
            for m in [&denoms[0], &denoms[1], &balanced] {
                state.div_binomial(&one, &m.mul(&q(i, s)).neg())?;
            }
            state.div_binomial(&one, &q(1 + i, s).neg())?;
            state.mul_monomial(&q(1, s));
        }
        Ok(state.clone())
    })?;
    let base = i64::from(s);
    let pochhammer = |z: &Monomial<S>| linear_product(&one, &z.neg(), base, w.depth, order, s);
    let mut prefactor = pochhammer(&lead_q).mul(&pochhammer(&lead_q.try_div(&d.mul(e))?))?;
    prefactor = prefactor.div(&pochhammer(&denoms[2]).mul(&pochhammer(&denoms[3]))?)?;
    let rhs = prefactor.mul_series(&sum)?.to_series()?;
    Ok((lhs, rhs))
}

/// The limit `B, D, n → ∞` of [`watson_finite_sides`] with the remaining
/// parameters `lead`, `third`, `fifth`.
pub fn watson_limit_sides<S: Scalar>(
    lead: &Monomial<S>,
    third: &Monomial<S>,
    fifth: &Monomial<S>,
    order: usize,
    scale: u32,
) -> Result<(Series<S>, Series<S>)> {
    if third.is_zero() || fifth.is_zero() {
        return Err(Error::DegenerateSpecialization("third and fifth parameters must be nonzero".into()));
    }
    let s = scale;
    let one = Monomial::<S>::one();
    let argument = lead.mul(lead).try_div(&third.mul(fifth))?.neg();
    let over_third = lead.try_div(third)?;
    let over_fifth = lead.try_div(fifth)?;
    let mut state = Factored::one(order, s);
    let lhs = crate::series::sum_infinite(order, s, |r| {
        let r = r as i64;
        if r == 0 {
            return Ok(state.clone());
        }
        if r >= 2 {
            state.mul_binomial(&one, &lead.mul(&q(r - 1, s)).neg());
        }
        state.mul_binomial(&one, &third.mul(&q(r - 1, s)).neg());
        state.mul_binomial(&one, &fifth.mul(&q(r - 1, s)).neg());
        state.mul_monomial(&argument.mul(&q(3 * r - 1, s)));
        state.div_binomial(&one, &over_third.mul(&q(r, s)).neg())?;
        state.div_binomial(&one, &over_fifth.mul(&q(r, s)).neg())?;
        state.div_binomial(&one, &q(r, s).neg())?;
        let mut term = state.clone();
        term.mul_binomial(&one, &lead.mul(&q(2 * r, s)).neg());
        Ok(term)
    })?;

    let step = over_fifth.neg();
    let sum = running_sum(order, s, Factored::one(order, s), |state, r| {
        state.mul_binomial(&one, &fifth.mul(&q(r - 1, s)).neg());
        state.mul_monomial(&step.mul(&q(r, s)));
        state.div_binomial(&one, &q(r, s).neg())?;
        state.div_binomial(&one, &over_third.mul(&q(r, s)).neg())?;
        Ok(())
    })?;
    let numer = pochhammer_infinite(&lead.mul(&q(1, s)), order, s)?;
    let denom = pochhammer_infinite(&over_fifth.mul(&q(1, s)), order, s)?;
    let rhs = numer.div(&denom)?.mul(&sum)?;
    Ok((lhs, rhs))
}

/// Limits of `C_N/d^{N−1}` and `(D_N − C_N)/d^{N−1}` for `H₁` with `d` a
/// nonzero constant, read off the convergents.
pub fn numerator_limit_scaled<S: Scalar>(p: &HParams<S>, order: usize) -> Result<(Series<S>, Series<S>)> {
    require_unit_constant(&p.d, "d")?;
    let d_inv = p.d.coeff.try_inv()?;
    let cf = super::cf_h1(p, order);
    let mut it = ConvergentIter::new(&cf);
    it.step()?;
    let mut scale_factor = S::one();
    let mut prev: Option<(Series<S>, Series<S>)> = None;
    let mut streak = 0;
    let cap = convergence_cap(order);
    while it.index() < cap {
        let numer = it.numer().scale_by(&scale_factor);
        let gap = it.denom().sub(it.numer())?.scale_by(&scale_factor);
        if let Some((pn, pg)) = &prev {
            let sn = sequence_agreement(&numer, pn)?;
            let sg = sequence_agreement(&gap, pg)?;
            if sn.is_some_and(|v| v >= order) && sg.is_some_and(|v| v >= order) {
                streak += 1;
                if streak >= 2 {
                    return Ok((numer, gap));
                }
            } else {
                streak = 0;
            }
        }
        prev = Some((numer, gap));
        scale_factor = scale_factor.mul_ref(&d_inv);
        it.step()?;
    }
    Err(Error::NotStabilized { order, max_terms: cap })
}

/// Three expressions for one limit: from convergents, as the single sum the
/// closed forms give, and after Watson's transformation.
#[derive(Clone, Debug)]
pub struct WatsonForms<S: Scalar> {
    pub convergent: Series<S>,
    pub sum_form: Series<S>,
    pub watson_form: Series<S>,
}

/// `Σ_r (1 − L q^{2r}) (Lq)_{r−1} ∏_{i<r}[−q^{2x}(α + γq^i)(β + γq^i)]
///   q^{3r(r−1)/2+2r} / ((−αq^{1+x})_r (−βq^{1+x})_r (q)_r)`
/// with `L = γq^x`, times `(−αq^{1+x})_∞ (−βq^{1+x})_∞ / (Lq)_∞`.
fn transformed_side<S: Scalar>(
    alpha: &Monomial<S>,
    beta: &Monomial<S>,
    gamma: &Monomial<S>,
    extra: i64,
    order: usize,
    s: u32,
) -> Result<Series<S>> {
    let one = Monomial::<S>::one();
    let lead = gamma.mul(&q(extra, s));
    let mut state = Factored::one(order, s);
    let sum = crate::series::sum_infinite(order, s, |r| {
        let r = r as i64;
        if r == 0 {
            return Ok(state.clone());
        }
        if r >= 2 {
            state.mul_binomial(&one, &lead.mul(&q(r - 1, s)).neg());
        }
        let g = gamma.mul(&q(r - 1, s));
        state.mul_binomial(alpha, &g);
        state.mul_binomial(beta, &g);
        state.mul_monomial(&q(2 * extra + 3 * r - 1, s).neg());
        state.div_binomial(&one, &alpha.mul(&q(r + extra, s)))?;
        state.div_binomial(&one, &beta.mul(&q(r + extra, s)))?;
        state.div_binomial(&one, &q(r, s).neg())?;
        let mut term = state.clone();
        term.mul_binomial(&one, &lead.mul(&q(2 * r, s)).neg());
        Ok(term)
    })?;
    let prefactor = pochhammer_infinite(&alpha.mul(&q(1 + extra, s)).neg(), order, s)?
        .mul(&pochhammer_infinite(&beta.mul(&q(1 + extra, s)).neg(), order, s)?)?
        .div(&pochhammer_infinite(&lead.mul(&q(1, s)), order, s)?)?;
    prefactor.mul(&sum)
}

struct Normalized<S> {
    alpha: Monomial<S>,
    beta: Monomial<S>,
    gamma: Monomial<S>,
}

fn normalize<S: Scalar>(p: &HParams<S>) -> Result<Normalized<S>> {
    require_unit_constant(&p.d, "d")?;
    for (m, name) in [(&p.a, "a"), (&p.b, "b"), (&p.c, "c")] {
        require_nonnegative(m, name)?;
    }
    let d_inv = p.d.try_inv()?;
    Ok(Normalized {
        alpha: p.a.mul(&d_inv),
        beta: p.b.mul(&d_inv),
        gamma: p.c.mul(&d_inv).mul(&d_inv),
    })
}

/// The limit of `C_N/d^{N−1}` three ways.
pub fn wat1_forms<S: Scalar>(p: &HParams<S>, order: usize) -> Result<WatsonForms<S>> {
    let n = normalize(p)?;
    let s = p.scale;
    let (convergent, _) = numerator_limit_scaled(p, order)?;
    let sum_form = pochhammer_infinite(&n.alpha.mul(&q(1, s)).neg(), order, s)?
        .mul(&h1_family_sum(&n.alpha, &n.beta, &n.gamma, false, order, s)?)?;
    let watson_form = transformed_side(&n.alpha, &n.beta, &n.gamma, 0, order, s)?;
    Ok(WatsonForms { convergent, sum_form, watson_form })
}

/// The limit of `(D_N − C_N)/d^{N−1}` three ways.
pub fn wat2_forms<S: Scalar>(p: &HParams<S>, order: usize) -> Result<WatsonForms<S>> {
    let n = normalize(p)?;
    let s = p.scale;
    let (_, convergent) = numerator_limit_scaled(p, order)?;
    let lead = poly(&[p.c.clone(), p.a.mul(&p.b).mul(&q(1, s)).neg()], order, s)?
        .mul_monomial(&p.d.try_inv()?)?;
    let sum_form = lead
        .mul(&pochhammer_infinite(&n.alpha.mul(&q(2, s)).neg(), order, s)?)?
        .mul(&h1_family_sum(&n.alpha, &n.beta, &n.gamma, true, order, s)?)?;
    let watson_form = lead.mul(&transformed_side(&n.alpha, &n.beta, &n.gamma, 1, order, s)?)?;
    Ok(WatsonForms { convergent, sum_form, watson_form })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{EisRat, Rat};
    use crate::series::pochhammer_infinite_base;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn mono(s: &str, exp: i64) -> Monomial<Rat> {
        Monomial::from_rat(&r(s), exp)
    }

    #[test]
    fn finite_depth_zero_is_one() {
        let w = WatsonParams {
            lead: mono("3/5", 0),
            others: [mono("2", 0), mono("-1/3", 0), mono("5/7", 0), mono("4", 0)],
            depth: 0,
            scale: 1,
        };
        let (lhs, rhs) = watson_finite_sides(&w, 10).unwrap();
        assert_eq!(lhs, Series::one(10, 1));
        assert_eq!(rhs, Series::one(10, 1));
    }

    #[test]
    fn finite_sides_agree() {
        for depth in 1..=5 {
            let w = WatsonParams {
                lead: mono("3/5", 0),
                others: [mono("2", 0), mono("-1/3", 0), mono("5/7", 0), mono("4", 0)],
                depth,
                scale: 1,
            };
            let (lhs, rhs) = watson_finite_sides(&w, 30).unwrap();
            assert_eq!(lhs, rhs, "n = {depth}");
        }
    }

    #[test]
    fn limit_sides_agree() {
        let (lhs, rhs) = watson_limit_sides(&mono("2/3", 1), &mono("-3", 0), &mono("1/2", 0), 30, 1).unwrap();
        assert_eq!(lhs, rhs);
        // zero lead collapses the left side to 1
        let (lhs, rhs) = watson_limit_sides(&Monomial::zero(), &mono("-3", 0), &mono("1/2", 0), 20, 1).unwrap();
        assert_eq!(lhs, Series::one(20, 1));
        assert_eq!(rhs, Series::one(20, 1));
    }

    #[test]
    fn wat_forms_agree() {
        let p = HParams::<Rat>::constants(&r("2/3"), &r("-1/4"), &r("3/2"), &r("5/3"));
        let w1 = wat1_forms(&p, 25).unwrap();
        assert_eq!(w1.convergent, w1.sum_form);
        assert_eq!(w1.sum_form, w1.watson_form);
        let w2 = wat2_forms(&p, 25).unwrap();
        assert_eq!(w2.convergent, w2.sum_form);
        assert_eq!(w2.sum_form, w2.watson_form);
    }

    #[test]
    fn rogers_ramanujan_step() {
        // a = b = 0, c = d = 1: Σ q^{j²}/(q)_j = 1/((q;q⁵)(q⁴;q⁵))
        let zero = Monomial::zero();
        let p = HParams::new(zero.clone(), zero, mono("1", 0), mono("1", 0), 1);
        let order = 30;
        let w = wat1_forms(&p, order).unwrap();
        let expect = pochhammer_infinite_base(&mono("1", 1), 5, order, 1)
            .unwrap()
            .mul(&pochhammer_infinite_base(&mono("1", 4), 5, order, 1).unwrap())
            .unwrap()
            .inverse()
            .unwrap();
        assert_eq!(w.watson_form, expect);
        assert_eq!(w.convergent, expect);
    }

    #[test]
    fn eisenstein_specialization_is_rational() {
        let w = EisRat::omega();
        let p = HParams::new(
            Monomial::constant(w.neg_ref()),
            Monomial::constant(w.mul_ref(&w).neg_ref()),
            Monomial::zero(),
            Monomial::one(),
            1,
        );
        let order = 20;
        let forms = wat1_forms(&p, order).unwrap();
        let rational = forms.convergent.to_rational().unwrap();
        let expect = pochhammer_infinite_base(&mono("1", 1), 3, order, 1).unwrap().inverse().unwrap();
        assert_eq!(rational, expect);
        assert_eq!(forms.watson_form.to_rational().unwrap(), expect);
    }
}
