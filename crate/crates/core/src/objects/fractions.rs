use std::collections::HashMap;

use super::{term_poly, HParams};
use crate::arith::{Rat, Scalar};
use crate::cfrac::CfSpec;
use crate::error::{Error, Result};
use crate::series::{Monomial, Series};

fn q<S: Scalar>(k: i64, scale: u32) -> Monomial<S> {
    Monomial::q_power(k, scale)
}

/// Leading `1/1`, then `(−ab + c·q^{k−1}) / (a + b + d·q^{k−1})` for `k ≥ 2`.
pub fn cf_h<S: Scalar>(p: &HParams<S>, order: usize) -> CfSpec<S> {
    let p = p.clone();
    let s = p.scale;
    CfSpec::new(Series::zero(order, s), order, move |k| {
        if k == 1 {
            return Ok((Series::one(order, s), Series::one(order, s)));
        }
        let shift = p.q(k as i64 - 1);
        let a = term_poly(&[p.a.mul(&p.b).neg(), p.c.mul(&shift)], order, s)?;
        let b = term_poly(&[p.a.clone(), p.b.clone(), p.d.mul(&shift)], order, s)?;
        Ok((a, b))
    })
}

/// Leading `1/1`, then `(−ab·q^{2k−3} + c·q^{k−2}) / ((a+b)·q^{k−1} + d)`.
pub fn cf_h1<S: Scalar>(p: &HParams<S>, order: usize) -> CfSpec<S> {
    let p = p.clone();
    let s = p.scale;
    CfSpec::new(Series::zero(order, s), order, move |k| {
        if k == 1 {
            return Ok((Series::one(order, s), Series::one(order, s)));
        }
        let k = k as i64;
        let ab = p.a.mul(&p.b).neg().mul(&p.q(2 * k - 3));
        let a = term_poly(&[ab, p.c.mul(&p.q(k - 2))], order, s)?;
        let shift = p.q(k - 1);
        let b = term_poly(&[p.a.mul(&shift), p.b.mul(&shift), p.d.clone()], order, s)?;
        Ok((a, b))
    })
}

/// `1/1 − q/(1+q) − q³/(1+q²) − …`
pub fn cf_q2q3<S: Scalar>(order: usize) -> CfSpec<S> {
    CfSpec::new(Series::zero(order, 1), order, move |k| {
        if k == 1 {
            return Ok((Series::one(order, 1), Series::one(order, 1)));
        }
        let k = k as i64;
        let a = term_poly(&[q::<S>(2 * k - 3, 1).neg()], order, 1)?;
        let b = term_poly(&[Monomial::one(), q(k - 1, 1)], order, 1)?;
        Ok((a, b))
    })
}

/// `1 + q/1 + q²/1 + q³/1 + …`
pub fn cf_rogers_ramanujan<S: Scalar>(order: usize, scale: u32) -> CfSpec<S> {
    CfSpec::new(Series::one(order, scale), order, move |n| {
        Ok((term_poly(&[q(n as i64, scale)], order, scale)?, Series::one(order, scale)))
    })
}

/// `1/1 + (q+q²)/1 + (q²+q⁴)/1 + …`
pub fn cf_z3<S: Scalar>(order: usize) -> CfSpec<S> {
    CfSpec::new(Series::zero(order, 1), order, move |k| {
        if k == 1 {
            return Ok((Series::one(order, 1), Series::one(order, 1)));
        }
        let k = k as i64;
        Ok((term_poly(&[q(k - 1, 1), q(2 * k - 2, 1)], order, 1)?, Series::one(order, 1)))
    })
}

/// `1 + (aq+λq)/1 + (bq+λq²)/1 + (aq²+λq³)/1 + (bq²+λq⁴)/1 + …`; with
/// `λ = 0` this is the two-parameter fraction of φ(a)/φ(aq).
pub fn cf_fg<S: Scalar>(
    a: &Monomial<S>,
    b: &Monomial<S>,
    lambda: &Monomial<S>,
    order: usize,
    scale: u32,
) -> CfSpec<S> {
    let (a, b, lambda) = (a.clone(), b.clone(), lambda.clone());
    CfSpec::new(Series::one(order, scale), order, move |n| {
        let k = n.div_ceil(2) as i64;
        let terms = if n % 2 == 1 {
            [a.mul(&q(k, scale)), lambda.mul(&q(2 * k - 1, scale))]
        } else {
            [b.mul(&q(k, scale)), lambda.mul(&q(2 * k, scale))]
        };
        Ok((term_poly(&terms, order, scale)?, Series::one(order, scale)))
    })
}

/// `1 + aq/1 + (bq+e)/1 + aq²/1 + (bq²+e)/1 + …`
pub fn cf_h2<S: Scalar>(
    a: &Monomial<S>,
    b: &Monomial<S>,
    e: &Monomial<S>,
    order: usize,
    scale: u32,
) -> CfSpec<S> {
    let (a, b, e) = (a.clone(), b.clone(), e.clone());
    CfSpec::new(Series::one(order, scale), order, move |n| {
        let k = n.div_ceil(2) as i64;
        let num = if n % 2 == 1 {
            term_poly(&[a.mul(&q(k, scale))], order, scale)?
        } else {
            term_poly(&[b.mul(&q(k, scale)), e.clone()], order, scale)?
        };
        Ok((num, Series::one(order, scale)))
    })
}

/// `1 + (aq+e)/1 + bq/1 + (aq²+e)/1 + bq²/1 + …`
pub fn cf_h3<S: Scalar>(
    a: &Monomial<S>,
    b: &Monomial<S>,
    e: &Monomial<S>,
    order: usize,
    scale: u32,
) -> CfSpec<S> {
    let (a, b, e) = (a.clone(), b.clone(), e.clone());
    CfSpec::new(Series::one(order, scale), order, move |n| {
        let k = n.div_ceil(2) as i64;
        let num = if n % 2 == 1 {
            term_poly(&[a.mul(&q(k, scale)), e.clone()], order, scale)?
        } else {
            term_poly(&[b.mul(&q(k, scale))], order, scale)?
        };
        Ok((num, Series::one(order, scale)))
    })
}

/// `1/(1+aq) + (λq − abq²)/(1 + q(aq+b)) + … + (λqⁿ − abq²ⁿ)/(1 + qⁿ(aq+b)) + …`
pub fn cf_e644<S: Scalar>(
    a: &Monomial<S>,
    b: &Monomial<S>,
    lambda: &Monomial<S>,
    order: usize,
    scale: u32,
) -> CfSpec<S> {
    let (a, b, lambda) = (a.clone(), b.clone(), lambda.clone());
    CfSpec::new(Series::zero(order, scale), order, move |n| {
        let one = Monomial::<S>::one();
        if n == 1 {
            let den = term_poly(&[one, a.mul(&q(1, scale))], order, scale)?;
            return Ok((Series::one(order, scale), den));
        }
        let m = n as i64 - 1;
        let num = term_poly(&[lambda.mul(&q(m, scale)), a.mul(&b).neg().mul(&q(2 * m, scale))], order, scale)?;
        let den = term_poly(&[one, a.mul(&q(m + 1, scale)), b.mul(&q(m, scale))], order, scale)?;
        Ok((num, den))
    })
}

/// `1/1 + (abq+bd)/((a−b)q+d) + … + (abq^{2n+1}+bdqⁿ)/((a−b)q^{n+1}+d) + …`
pub fn cf_amusing<S: Scalar>(
    a: &Monomial<S>,
    b: &Monomial<S>,
    d: &Monomial<S>,
    order: usize,
    scale: u32,
) -> CfSpec<S> {
    // H₁ with c = −bd, then b ↦ −b.
    let p = HParams::new(a.clone(), b.neg(), b.mul(d), d.clone(), scale);
    cf_h1(&p, order)
}

/// Fraction ids accepted by [`named_fraction`].
pub const FRACTION_IDS: &[&str] =
    &["H", "H1", "Q2Q3", "RR", "Z3", "AMUSING", "ENTRY17", "H2", "H3", "E644", "FG"];

/// Builds a fraction by id at scale 1 with constant parameters taken from
/// `params` (missing ones default to small distinct rationals).
pub fn named_fraction(id: &str, params: &HashMap<String, Rat>, order: usize) -> Result<CfSpec<Rat>> {
    let get = |name: &str, default: (i64, i64)| -> Monomial<Rat> {
        let r = params
            .get(name)
            .cloned()
            .unwrap_or_else(|| Rat::new(default.0, default.1).expect("nonzero default denominator"));
        Monomial::constant(r)
    };
    let abcd = || {
        HParams::new(get("a", (1, 2)), get("b", (1, 3)), get("c", (1, 5)), get("d", (1, 7)), 1)
    };
    let cf = match id.to_ascii_uppercase().as_str() {
        "H" => cf_h(&abcd(), order),
        "H1" => cf_h1(&abcd(), order),
        "Q2Q3" => cf_q2q3(order),
        "RR" => cf_rogers_ramanujan(order, 1),
        "Z3" => cf_z3(order),
        "AMUSING" => cf_amusing(&get("a", (1, 2)), &get("b", (1, 3)), &get("d", (1, 7)), order, 1),
        "ENTRY17" => cf_fg(&get("a", (1, 2)), &get("b", (1, 3)), &Monomial::zero(), order, 1),
        "FG" => cf_fg(&get("a", (1, 2)), &get("b", (1, 3)), &get("lambda", (1, 5)), order, 1),
        "H2" => cf_h2(&get("a", (1, 2)), &get("b", (1, 3)), &get("e", (1, 5)), order, 1),
        "H3" => cf_h3(&get("a", (1, 2)), &get("b", (1, 3)), &get("e", (1, 5)), order, 1),
        "E644" => cf_e644(&get("a", (1, 2)), &get("b", (1, 3)), &get("lambda", (1, 5)), order, 1),
        _ => return Err(Error::UnknownIdentity(id.to_string())),
    };
    Ok(cf)
}
