use std::sync::OnceLock;

use super::{Assignment, Check, ParamSpec};
use crate::arith::{EisRat, Rat, Scalar};
use crate::cfrac::{convergents, ratio_limit, separate_limits};
use crate::error::Result;
use crate::objects::{self, HParams, WatsonParams};
use crate::series::{
    gaussian_poly, jacobi_triple_product_sides, pochhammer_infinite, pochhammer_infinite_base,
    qbinomial_theorem_sides, Factored, Monomial, QBinomialForm, Series,
};

type Builder = fn(&Assignment, usize) -> Result<Vec<Check>>;

/// A registry row. `build` receives the truncation order in powers of `q`.
pub struct IdentityCase {
    pub id: &'static str,
    pub statement: &'static str,
    pub params: Vec<ParamSpec>,
    pub build: Builder,
}

impl IdentityCase {
    /// True when every parameter has a degree bound, so a tensor grid
    /// proves the identity through the requested order.
    pub fn is_complete(&self) -> bool {
        self.params.iter().all(|p| p.degree_bound.is_some())
    }
}

/// Largest index checked by the closed-form rows. Each `q`-coefficient of
/// `A_N, B_N, C_N, D_N` has degree at most `N − 1` in each parameter.
pub const EXPLICIT_MAX_INDEX: usize = 5;
/// Largest `N` checked by the finite q-binomial row; `(z;q)_N` has degree
/// `N` in `z`.
pub const QBIN_MAX_INDEX: usize = 8;
/// Largest terminating depth in the finite Watson row.
pub const WATSON_MAX_DEPTH: usize = 6;

const POSITIVE: &[i64] = &[1, 2];
const SMALL_POWERS: &[i64] = &[0, 1, 2];
const LAURENT: &[i64] = &[-1, 0, 1];

fn cap(order: usize) -> usize {
    4 * order + 20
}

fn q<S: Scalar>(k: i64, scale: u32) -> Monomial<S> {
    Monomial::q_power(k, scale)
}

/// `∏ (q^start; q^step)_∞` over `(start, step)` pairs, in powers of `q`.
fn products(factors: &[(i64, i64)], order: usize, scale: u32) -> Result<Series<Rat>> {
    let s = i64::from(scale);
    let mut acc = Series::one(order, scale);
    for &(start, step) in factors {
        acc = acc.mul(&pochhammer_infinite_base(&Monomial::t_power(start * s), step * s, order, scale)?)?;
    }
    Ok(acc)
}

fn rr_first(order: usize) -> Result<Series<Rat>> {
    products(&[(1, 5), (4, 5)], order, 1)?.inverse()
}

fn rr_second(order: usize) -> Result<Series<Rat>> {
    products(&[(2, 5), (3, 5)], order, 1)?.inverse()
}

/// Maps a scale-1 series in `q` to the same function of `q^power` at `scale`.
fn lift(s: &Series<Rat>, power: usize, scale: u32) -> Series<Rat> {
    s.substitute_power(power * scale as usize).with_scale(scale)
}

fn hparams(x: &Assignment, scale: u32) -> HParams<Rat> {
    HParams::new(x.mono("a", scale), x.mono("b", scale), x.mono("c", scale), x.mono("d", scale), scale)
}

fn rr_sum_product(_: &Assignment, order: usize) -> Result<Vec<Check>> {
    let one = Monomial::<Rat>::one();
    let sum = |extra: i64| {
        objects_sum(order, |state, r| {
            state.mul_monomial(&q(2 * r - 1 + extra, 1));
            state.div_binomial(&one, &q(r, 1).neg())
        })
    };
    Ok(vec![
        Check::new("Σ q^{n²}/(q)_n", sum(0)?, rr_first(order)?),
        Check::new("Σ q^{n²+n}/(q)_n", sum(1)?, rr_second(order)?),
    ])
}

fn objects_sum(
    order: usize,
    advance: impl FnMut(&mut Factored<Rat>, i64) -> Result<()>,
) -> Result<Series<Rat>> {
    objects::running_sum(order, 1, Factored::one(order, 1), advance)
}

fn rr_cf(_: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (numer, denom, _) = separate_limits(&objects::cf_rogers_ramanujan::<Rat>(order, 1), order, cap(order))?;
    let (first, second) = (rr_first(order)?, rr_second(order)?);
    let mut checks = vec![
        Check::new("numerators", numer, first.clone()),
        Check::new("denominators", denom, second.clone()),
    ];
    // H₁(0,0,1,1): numerators → first series, denominators − numerators → second
    let zero = Monomial::zero();
    let p = HParams::new(zero.clone(), zero, Monomial::one(), Monomial::one(), 1);
    let (c, d, _) = separate_limits(&objects::cf_h1(&p, order), order, cap(order))?;
    checks.push(Check::new("H₁(0,0,1,1) numerators", c.clone(), first.clone()));
    checks.push(Check::new("H₁(0,0,1,1) denominators − numerators", d.sub(&c)?, second.clone()));
    // −a = b = q^{1/2}, c = 0, d = 1 at scale 2
    let t_order = 2 * order;
    let p = HParams::new(Monomial::new(Rat::from(-1), 1), Monomial::t_power(1), Monomial::zero(), Monomial::one(), 2);
    let (c, d, _) = separate_limits(&objects::cf_h1(&p, t_order), t_order, cap(t_order))?;
    checks.push(Check::new("half-power path numerators", c, lift(&second, 2, 2)));
    checks.push(Check::new("half-power path denominators", d, lift(&first, 2, 2)));
    Ok(checks)
}

fn q2q3(_: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (numer, denom, _) = separate_limits(&objects::cf_q2q3::<Rat>(order), order, cap(order))?;
    let first = products(&[(1, 3)], order, 1)?;
    let second = products(&[(2, 3)], order, 1)?;
    let (first_inv, second_inv) = (first.inverse()?, second.inverse()?);
    let ratio = numer.div(&denom)?;
    let mut checks = vec![
        Check::new("numerators", numer, first_inv.clone()),
        Check::new("denominators", denom, second_inv.clone()),
        Check::new("value", ratio, second.div(&first)?),
    ];
    // closed form at a = −ω, b = −ω², c = 0, d = 1 over Q(ω)
    let w = EisRat::omega();
    let p = HParams::new(
        Monomial::constant(w.neg_ref()),
        Monomial::constant(w.mul_ref(&w).neg_ref()),
        Monomial::zero(),
        Monomial::one(),
        1,
    );
    let lim = objects::limit_h1_separate(&p, order)?;
    checks.push(Check::new("Eisenstein numerator series", lim.numer_series.to_rational()?, first_inv));
    checks.push(Check::new("Eisenstein denominator series", lim.denom_series.to_rational()?, second_inv));
    Ok(checks)
}

fn z3(_: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (value, _) = ratio_limit(&objects::cf_z3::<Rat>(order), order, cap(order))?;
    let odd = products(&[(1, 2)], order, 1)?;
    let cubes = products(&[(3, 6)], order, 1)?;
    let expect = odd.div(&cubes.pow(3)?)?;
    let mut checks = vec![Check::new("value", value, expect)];
    // a = −q^{−1/2}, b = q^{−1/2}, c = d = 1 at scale 2
    let t_order = 2 * order;
    let p = HParams::new(
        Monomial::new(Rat::from(-1), -1),
        Monomial::t_power(-1),
        Monomial::one(),
        Monomial::one(),
        2,
    );
    let (c, d, _) = separate_limits(&objects::cf_h1(&p, t_order), t_order, cap(t_order))?;
    let base = odd.div(&products(&[(1, 1)], order, 1)?)?.mul(&products(&[(3, 3)], order, 1)?)?;
    let minus = |start: i64| -> Result<Series<Rat>> {
        pochhammer_infinite_base(&Monomial::new(Rat::from(-1), start), 3, order, 1)
    };
    let c_expect = base.mul(&minus(1)?)?.mul(&minus(2)?)?;
    let gap_expect = base.mul(&minus(3)?.pow(2)?)?.scale_by(&Rat::from(2));
    checks.push(Check::new("half-power path numerators", c.clone(), lift(&c_expect, 1, 2)));
    checks.push(Check::new("half-power path denominators − numerators", d.sub(&c)?, lift(&gap_expect, 1, 2)));
    Ok(checks)
}

fn slater_a44(_: &Assignment, order: usize) -> Result<Vec<Check>> {
    let one = Monomial::<Rat>::one();
    let mut first = Factored::one(order, 1);
    first.div_binomial(&one, &q(1, 1).neg())?;
    let lhs = objects::running_sum(order, 1, first, |state, r| {
        state.mul_monomial(&q(3 * r, 1));
        state.div_binomial(&one, &q(2 * r + 1, 1).neg())?;
        state.div_binomial(&one, &q(r, 1).neg())
    })?;
    let rhs = products(&[(8, 10), (2, 10), (10, 10)], order, 1)?.div(&products(&[(1, 1)], order, 1)?)?;
    Ok(vec![Check::new("sum = product", lhs, rhs)])
}

fn slater_a62(_: &Assignment, order: usize) -> Result<Vec<Check>> {
    let one = Monomial::<Rat>::one();
    let mut first = Factored::one(order, 1);
    first.div_binomial(&one, &q(1, 1).neg())?;
    let lhs = objects::running_sum(order, 1, first, |state, r| {
        state.mul_binomial(&one, &q(r, 1));
        state.mul_monomial(&q(3 * r - 1, 1));
        state.div_binomial(&one, &q(2 * r, 1).neg())?;
        state.div_binomial(&one, &q(2 * r + 1, 1).neg())
    })?;
    let rhs = products(&[(6, 10), (4, 10), (10, 10)], order, 1)?.div(&products(&[(1, 1)], order, 1)?)?;
    Ok(vec![Check::new("sum = product", lhs, rhs)])
}

fn absym1(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (l, r) = objects::absym_sides(&x.mono("a", 1), &x.mono("b", 1), &x.mono("c", 1), order, 1)?;
    Ok(vec![Check::new("a ↔ b symmetry", l, r)])
}

fn rameq(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (l, r) = objects::rameq_sides(&x.mono("a", 1), &x.mono("b", 1), order, 1)?;
    Ok(vec![Check::new("sum = product quotient", l, r)])
}

fn amusing(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (a, b, d) = (x.mono::<Rat>("a", 1), x.mono("b", 1), x.mono("d", 1));
    let one_plus_b = Rat::one() + x.coeff("b");
    let (value, _) = ratio_limit(&objects::cf_amusing(&a, &b, &d, order, 1), order, cap(order))?;
    let expect = Series::constant(one_plus_b.recip()?, order, 1);
    let p = HParams::new(a.clone(), b.neg(), b.mul(&d), d.clone(), 1);
    let (numer, gap) = objects::numerator_limit_scaled(&p, order)?;
    let product = pochhammer_infinite(&a.mul(&q(1, 1)).try_div(&d)?.neg(), order, 1)?;
    Ok(vec![
        Check::new("value = 1/(1+b)", value, expect),
        Check::new("numerators/d^{N−1}", numer.clone(), product.clone()),
        Check::new("denominators/d^{N−1}", numer.add(&gap)?, product.scale_by(&one_plus_b)),
    ])
}

fn fraction_value(
    cf: &crate::cfrac::CfSpec<Rat>,
    numer: Series<Rat>,
    denom: Series<Rat>,
    order: usize,
) -> Result<Vec<Check>> {
    let (value, _) = ratio_limit(cf, order, cap(order))?;
    Ok(vec![Check::new("fraction = series quotient", value, numer.div(&denom)?)])
}

fn entry17(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (a, b) = (x.mono("a", 1), x.mono("b", 1));
    let cf = objects::cf_fg(&a, &b, &Monomial::zero(), order, 1);
    let numer = objects::entry17_phi(&a, &b, false, order, 1)?;
    let denom = objects::entry17_phi(&a, &b, true, order, 1)?;
    fraction_value(&cf, numer, denom, order)
}

fn fg_lost(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (a, b, l) = (x.mono("a", 1), x.mono("b", 1), x.mono("lambda", 1));
    let cf = objects::cf_fg(&a, &b, &l, order, 1);
    let numer = objects::fg_series(&a, &b, &l, false, order, 1)?;
    let denom = objects::fg_series(&a, &b, &l, true, order, 1)?;
    fraction_value(&cf, numer, denom, order)
}

fn h2_gen(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (a, b, e) = (x.mono::<Rat>("a", 1), x.mono("b", 1), x.mono("e", 1));
    let cf = objects::cf_h2(&a, &b, &e, order, 1);
    let numer = objects::h2_phi(&a, &a, &b, &e, order, 1)?;
    let denom = objects::h2_phi(&a.mul(&q(1, 1)), &a, &b, &e, order, 1)?;
    fraction_value(&cf, numer, denom, order)
}

fn h3_gen(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (a, b, e) = (x.mono::<Rat>("a", 1), x.mono("b", 1), x.mono("e", 1));
    let cf = objects::cf_h3(&a, &b, &e, order, 1);
    let numer = objects::h3_phi(&a, &b, &e, false, order, 1)?.scale_by(&(Rat::one() + x.coeff("e")));
    let denom = objects::h3_phi(&a, &b, &e, true, order, 1)?;
    fraction_value(&cf, numer, denom, order)
}

fn e644(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (a, b, l) = (x.mono("a", 1), x.mono("b", 1), x.mono("lambda", 1));
    let cf = objects::cf_e644(&a, &b, &l, order, 1);
    let numer = objects::e644_series(&a, &b, &l, true, order, 1)?;
    let denom = objects::e644_series(&a, &b, &l, false, order, 1)?;
    fraction_value(&cf, numer, denom, order)
}

fn watson_finite(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let others = ["second", "third", "fourth", "fifth"].map(|n| x.mono(n, 1));
    (0..=WATSON_MAX_DEPTH)
        .map(|depth| {
            let w = WatsonParams { lead: x.mono("lead", 1), others: others.clone(), depth, scale: 1 };
            let (l, r) = objects::watson_finite_sides(&w, order)?;
            Ok(Check::new(format!("n = {depth}"), l, r))
        })
        .collect()
}

fn watson_limit(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (l, r) = objects::watson_limit_sides(&x.mono("lead", 1), &x.mono("third", 1), &x.mono("fifth", 1), order, 1)?;
    Ok(vec![Check::new("limit form", l, r)])
}

fn wat1(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let f = objects::wat1_forms(&hparams(x, 1), order)?;
    Ok(vec![
        Check::new("convergents = transformed", f.convergent, f.watson_form.clone()),
        Check::new("single sum = transformed", f.sum_form, f.watson_form),
    ])
}

fn wat2(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let f = objects::wat2_forms(&hparams(x, 1), order)?;
    Ok(vec![
        Check::new("convergents = transformed", f.convergent, f.watson_form.clone()),
        Check::new("single sum = transformed", f.sum_form, f.watson_form),
    ])
}

fn h_lim(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (l, r) = objects::limit_h_sides(&hparams(x, 1), order)?;
    Ok(vec![Check::new("B/A − 1", l, r)])
}

fn h1_lim(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (l, r) = objects::limit_h1_sides(&hparams(x, 1), order)?;
    Ok(vec![Check::new("D/C − 1", l, r)])
}

fn an_bn_lim(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let p = HParams::new(x.mono("a", 1), Monomial::one(), x.mono("c", 1), x.mono("d", 1), 1);
    let lim = objects::limit_h_separate(&p, order)?;
    Ok(vec![
        Check::new("numerators", lim.numer_convergent, lim.numer_series),
        Check::new("denominators", lim.denom_convergent, lim.denom_series),
    ])
}

fn cn_dn_lim(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let p = HParams::new(x.mono("a", 1), x.mono("b", 1), x.mono("c", 1), Monomial::one(), 1);
    let lim = objects::limit_h1_separate(&p, order)?;
    Ok(vec![
        Check::new("numerators", lim.numer_convergent, lim.numer_series),
        Check::new("denominators", lim.denom_convergent, lim.denom_series),
    ])
}

fn qbin_finite(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 0..=QBIN_MAX_INDEX {
        for &e in SMALL_POWERS {
            let z = Monomial::from_rat(&x.coeff("z"), e);
            let (l, r) = qbinomial_theorem_sides(&z, n, QBinomialForm::Finite, order, 1)?;
            checks.push(Check::new(format!("N = {n}, z·q^{e}"), l, r));
        }
    }
    Ok(checks)
}

fn qbin_recip(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    (1..=6)
        .map(|n| {
            let (l, r) = qbinomial_theorem_sides(&x.mono("z", 1), n, QBinomialForm::Reciprocal, order, 1)?;
            Ok(Check::new(format!("N = {n}"), l, r))
        })
        .collect()
}

fn jtp(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let (l, r) = jacobi_triple_product_sides(&x.mono("z", 1), 1, order, 1)?;
    let mut checks = vec![Check::new("base q", l, r)];
    let (l, r) = jacobi_triple_product_sides(&Monomial::<Rat>::constant(Rat::from(-1)), 1, order, 1)?;
    checks.push(Check::new("z = −1", l, r));
    // z = q^{1/2} in base q^{3/2}, at scale 2
    let (l, r) = jacobi_triple_product_sides(&Monomial::<Rat>::t_power(1), 3, 2 * order, 2)?;
    checks.push(Check::new("z = q^{1/2}, base q^{3/2}", l, r));
    Ok(checks)
}

fn padded(coeffs: Vec<num_bigint::BigInt>, order: usize) -> Series<Rat> {
    let mut c: Vec<Rat> = coeffs.into_iter().map(Rat::from).collect();
    c.resize(order + 1, Rat::zero());
    Series::from_coeffs(c, 1)
}

fn gb_qinv(_: &Assignment, order: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 0..=12i64 {
        for m in 0..=n {
            let poly = gaussian_poly(n, m).to_vec();
            let mut reversed = poly.clone();
            reversed.reverse();
            let degree = poly.len().saturating_sub(1);
            if degree > order {
                continue;
            }
            checks.push(Check::new(format!("[{n} {m}] reversed"), padded(reversed, order), padded(poly, order)));
        }
    }
    Ok(checks)
}

fn an_bn_explicit(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let p = hparams(x, 1);
    let pairs = convergents(&objects::cf_h(&p, order).allowing_zero_numerators(), EXPLICIT_MAX_INDEX)?;
    let f = objects::genfunc_numerators(&p, EXPLICIT_MAX_INDEX, order)?;
    let g = objects::genfunc_denominators(&p, EXPLICIT_MAX_INDEX, order)?;
    let mut checks = Vec::new();
    for n in 1..=EXPLICIT_MAX_INDEX {
        let a = objects::h_numerator_closed_form(&p, n, order)?;
        let b = objects::h_denominator_closed_form(&p, n, order)?;
        checks.push(Check::new(format!("A_{n} recurrence"), pairs[n].numer.clone(), a.clone()));
        checks.push(Check::new(format!("B_{n} recurrence"), pairs[n].denom.clone(), b.clone()));
        checks.push(Check::new(format!("A_{n} generating function"), f[n].clone(), a));
        checks.push(Check::new(format!("B_{n} generating function"), g[n].clone(), b));
    }
    Ok(checks)
}

fn cn_dn_explicit(x: &Assignment, order: usize) -> Result<Vec<Check>> {
    let p = hparams(x, 1);
    let pairs = convergents(&objects::cf_h1(&p, order).allowing_zero_numerators(), EXPLICIT_MAX_INDEX)?;
    let mut checks = Vec::new();
    for n in 1..=EXPLICIT_MAX_INDEX {
        let c = objects::h1_numerator_closed_form(&p, n, order)?;
        let d = objects::h1_denominator_closed_form(&p, n, order)?;
        checks.push(Check::new(format!("C_{n} recurrence"), pairs[n].numer.clone(), c.clone()));
        checks.push(Check::new(format!("D_{n} recurrence"), pairs[n].denom.clone(), d));
        // C_N(q) = q^{N(N−1)/2} A_N(1/q)
        let degree = n * (n - 1) / 2;
        if degree <= order {
            let mut reversed = objects::h_numerator_closed_form(&p, n, degree)?.into_coeffs();
            reversed.reverse();
            reversed.resize(order + 1, Rat::zero());
            checks.push(Check::new(format!("C_{n} = reversed A_{n}"), Series::from_coeffs(reversed, 1), c));
        }
    }
    Ok(checks)
}

fn abcd(bound: Option<usize>) -> Vec<ParamSpec> {
    ["a", "b", "c", "d"]
        .into_iter()
        .map(|n| ParamSpec { degree_bound: bound, ..ParamSpec::constant(n) })
        .collect()
}

fn build_registry() -> Vec<IdentityCase> {
    let case = |id, statement, params, build| IdentityCase { id, statement, params, build };
    let explicit_bound = Some(EXPLICIT_MAX_INDEX - 1);
    let mut rows = vec![
        case("ABSYM1", "(−aq)_∞ Σ (bq)^j(−c/b)_j q^{j(j−1)/2}/((q)_j(−aq)_j) is symmetric in a, b",
            vec![ParamSpec::constant("a"), ParamSpec::constant("b"), ParamSpec::constant("c")], absym1 as Builder),
        case("AMUSING", "1/1 + (abq+bd)/((a−b)q+d) + … = 1/(1+b), numerators/d^{N−1} → (−aq/d)_∞",
            vec![ParamSpec::constant("a"), ParamSpec::constant("b"), ParamSpec::nonzero("d")], amusing),
        case("AN_BN_EXPLICIT", "triple-sum closed forms of A_N, B_N equal the recurrence and the generating-function oracle, N ≤ 5",
            abcd(explicit_bound), an_bn_explicit),
        case("AN_BN_LIM", "A_N, B_N of H(a,1,c,d,q) converge separately to their single-sum limits",
            vec![ParamSpec::constant("a").with_exponents(POSITIVE), ParamSpec::constant("c"), ParamSpec::constant("d")], an_bn_lim),
        case("CN_DN_EXPLICIT", "triple-sum closed forms of C_N, D_N equal the recurrence, and C_N(q) = q^{N(N−1)/2} A_N(1/q), N ≤ 5",
            abcd(explicit_bound), cn_dn_explicit),
        case("CN_DN_LIM", "C_N, D_N of H₁(a,b,c,1,q) converge separately to their single-sum limits",
            vec![ParamSpec::constant("a"), ParamSpec::constant("b"), ParamSpec::constant("c")], cn_dn_lim),
        case("E644", "G(aq,λq;b)/G(a,λ;b) = 1/(1+aq) + (λq−abq²)/(1+q(aq+b)) + …",
            vec![ParamSpec::constant("a"), ParamSpec::constant("b"), ParamSpec::constant("lambda").with_exponents(SMALL_POWERS)], e644),
        case("ENTRY17", "φ(a)/φ(aq) = 1 + aq/1 + bq/1 + aq²/1 + …",
            vec![ParamSpec::constant("a"), ParamSpec::constant("b")], entry17),
        case("FG_LOST", "F(a,b,λ) = G(a,b,λ)/G(aq,b,λq)",
            vec![ParamSpec::constant("a"), ParamSpec::constant("b"), ParamSpec::constant("lambda")], fg_lost),
        case("GB_QINV", "[n m] is palindromic of degree m(n−m), i.e. [n m]_{1/q} = q^{m(m−n)}[n m]_q, n ≤ 12",
            vec![], gb_qinv),
        case("H1_LIM", "D_N/C_N − 1 of H₁(a,b,c,d,q) tends to the quotient of two single sums",
            vec![ParamSpec::constant("a"), ParamSpec::constant("b"), ParamSpec::constant("c"), ParamSpec::nonzero("d")], h1_lim),
        case("H2_GEN", "1 + aq/1 + (bq+e)/1 + aq²/1 + … = φ(a)/φ(aq)",
            vec![ParamSpec::constant("a"), ParamSpec::constant("b"), ParamSpec::constant("e")], h2_gen),
        case("H3_GEN", "1 + (aq+e)/1 + bq/1 + (aq²+e)/1 + … = (e+1)φ(a)/φ(aq)",
            vec![ParamSpec::constant("a"), ParamSpec::constant("b"), ParamSpec::constant("e")], h3_gen),
        case("H_LIM", "B_N/A_N − 1 of H(a,b,c,d,q) tends to the quotient of two single sums (a of positive valuation)",
            vec![ParamSpec::constant("a").with_exponents(POSITIVE), ParamSpec::nonzero("b"), ParamSpec::constant("c"), ParamSpec::constant("d")], h_lim),
        case("JTP", "(−qz;q²)_∞(−q/z;q²)_∞(q²;q²)_∞ = Σ z^n q^{n²}",
            vec![ParamSpec::nonzero("z").with_exponents(LAURENT)], jtp),
        case("Q2Q3", "1/1 − q/(1+q) − q³/(1+q²) − … = (q²;q³)_∞/(q;q³)_∞, numerators → 1/(q;q³)_∞, denominators → 1/(q²;q³)_∞",
            vec![], q2q3),
        case("QBIN_FINITE", "(z;q)_N = Σ_j [N j](−1)^j z^j q^{j(j−1)/2}, N ≤ 8",
            vec![ParamSpec::constant("z").bounded(QBIN_MAX_INDEX)], qbin_finite),
        case("QBIN_RECIP", "1/(z;q)_N = Σ_j [N+j−1 j] z^j, N ≤ 6",
            vec![ParamSpec::constant("z").with_exponents(POSITIVE)], qbin_recip),
        case("RAMEQ", "Σ (−b/a)_j a^j q^{j(j+1)/2}/((q)_j(bq)_j) = (−aq)_∞/(bq)_∞",
            vec![ParamSpec::constant("a"), ParamSpec::constant("b")], rameq),
        case("RR_CF", "1 + q/1 + q²/1 + …: numerators → Σ q^{n²}/(q)_n, denominators → Σ q^{n²+n}/(q)_n",
            vec![], rr_cf),
        case("RR_SUM_PRODUCT", "Σ q^{n²}/(q)_n = 1/((q;q⁵)_∞(q⁴;q⁵)_∞) and Σ q^{n²+n}/(q)_n = 1/((q²;q⁵)_∞(q³;q⁵)_∞)",
            vec![], rr_sum_product),
        case("SLATER_A44", "Σ q^{3r(r+1)/2}/((q;q²)_{r+1}(q)_r) = (q⁸;q¹⁰)_∞(q²;q¹⁰)_∞(q¹⁰;q¹⁰)_∞/(q)_∞",
            vec![], slater_a44),
        case("SLATER_A62", "Σ (−q)_r q^{r(3r+1)/2}/(q)_{2r+1} = (q⁶;q¹⁰)_∞(q⁴;q¹⁰)_∞(q¹⁰;q¹⁰)_∞/(q)_∞",
            vec![], slater_a62),
        case("WAT1", "lim C_N/d^{N−1} of H₁ equals its Watson-transformed form",
            vec![ParamSpec::constant("a"), ParamSpec::constant("b"), ParamSpec::constant("c"), ParamSpec::nonzero("d")], wat1),
        case("WAT2", "lim (D_N − C_N)/d^{N−1} of H₁ equals its Watson-transformed form",
            vec![ParamSpec::constant("a"), ParamSpec::constant("b"), ParamSpec::constant("c"), ParamSpec::nonzero("d")], wat2),
        case("WATSON_FINITE", "terminating very-well-poised 8φ7 = prefactor × balanced 4φ3, n ≤ 6",
            ["lead", "second", "third", "fourth", "fifth"].into_iter().map(ParamSpec::nonzero).collect(), watson_finite),
        case("WATSON_LIMIT", "limit B, D, n → ∞ of the 8φ7 → 4φ3 transformation",
            vec![ParamSpec::constant("lead"), ParamSpec::nonzero("third"), ParamSpec::nonzero("fifth")], watson_limit),
        case("Z3", "1/1 + (q+q²)/1 + (q²+q⁴)/1 + … = (q;q²)_∞/(q³;q⁶)_∞³",
            vec![], z3),
    ];
    rows.sort_by_key(|c| c.id);
    rows
}

/// The registry, sorted by id.
pub fn registry() -> &'static [IdentityCase] {
    static REGISTRY: OnceLock<Vec<IdentityCase>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}
