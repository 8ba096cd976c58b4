use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{Rat, Scalar};
use crate::series::Monomial;

/// Largest numerator and denominator used for specialization values.
const HEIGHT: i64 = 7;

/// Which rationals a parameter may take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValuePool {
    Any,
    NonZero,
}

impl ValuePool {
    /// All `p/q` with `|p|, q ≤ 7` in lowest terms, sorted.
    fn values(self) -> Vec<Rat> {
        let mut out = Vec::new();
        for den in 1..=HEIGHT {
            for num in -HEIGHT..=HEIGHT {
                if num == 0 && (self == ValuePool::NonZero || den > 1) {
                    continue;
                }
                if num != 0 && num_integer::gcd(num, den) != 1 {
                    continue;
                }
                out.push(Rat::new(num, den).expect("positive denominator"));
            }
        }
        out.sort();
        out
    }
}

/// A free parameter of a registry row: a rational coefficient times `q^e`
/// with `e` drawn from `exponents`.
#[derive(Debug, Clone)]
pub struct ParamSpec {
    pub name: &'static str,
    pub pool: ValuePool,
    pub exponents: &'static [i64],
    /// Bound on the degree of every `q`-coefficient in this parameter's
    /// coefficient, independent of the truncation order.
    pub degree_bound: Option<usize>,
}

impl ParamSpec {
    pub const fn constant(name: &'static str) -> Self {
        ParamSpec { name, pool: ValuePool::Any, exponents: &[0], degree_bound: None }
    }

    pub const fn nonzero(name: &'static str) -> Self {
        ParamSpec { name, pool: ValuePool::NonZero, exponents: &[0], degree_bound: None }
    }

    pub const fn with_exponents(mut self, exponents: &'static [i64]) -> Self {
        self.exponents = exponents;
        self
    }

    pub const fn bounded(mut self, degree: usize) -> Self {
        self.degree_bound = Some(degree);
        self
    }

    pub fn signature(&self) -> String {
        let mut s = self.name.to_string();
        if self.pool == ValuePool::NonZero {
            s.push_str("≠0");
        }
        if self.exponents != [0] {
            let exps: Vec<String> = self.exponents.iter().map(i64::to_string).collect();
            s.push_str(&format!("·q^{{{}}}", exps.join(",")));
        }
        if let Some(d) = self.degree_bound {
            s.push_str(&format!(" [deg ≤ {d}]"));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamValue {
    pub coeff: Rat,
    pub q_exp: i64,
}

/// Values for every parameter of a row, keyed by name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment(pub BTreeMap<String, ParamValue>);

impl Assignment {
    pub fn set(&mut self, name: &str, coeff: Rat, q_exp: i64) {
        self.0.insert(name.to_string(), ParamValue { coeff, q_exp });
    }

    /// The parameter as a monomial at the given scale.
    ///
    /// Panics if the row did not declare the parameter.
    pub fn mono<S: Scalar>(&self, name: &str, scale: u32) -> Monomial<S> {
        let v = self.0.get(name).unwrap_or_else(|| panic!("parameter `{name}` not assigned"));
        Monomial::from_rat(&v.coeff, v.q_exp * i64::from(scale))
    }

    pub fn coeff(&self, name: &str) -> Rat {
        self.0.get(name).map(|v| v.coeff.clone()).unwrap_or_else(|| panic!("parameter `{name}` not assigned"))
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(k, v)| match v.q_exp {
                0 => format!("{k}={}", v.coeff),
                e => format!("{k}={}·q^{e}", v.coeff),
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub(crate) fn random_assignment(params: &[ParamSpec], rng: &mut impl Rng) -> Assignment {
    let mut out = Assignment::default();
    for p in params {
        let values = p.pool.values();
        let coeff = values[rng.gen_range(0..values.len())].clone();
        let exp = p.exponents[rng.gen_range(0..p.exponents.len())];
        out.set(p.name, coeff, exp);
    }
    out
}

/// Tensor grid: `D + 1` distinct coefficients per parameter (the block at
/// `offset` of a seeded shuffle of the pool) times every allowed exponent.
pub(crate) fn tensor_grid(params: &[ParamSpec], rng: &mut impl Rng, offset: usize) -> Vec<Assignment> {
    let mut grid = vec![Assignment::default()];
    for p in params {
        let bound = p.degree_bound.expect("tensor grid needs degree bounds");
        let mut values = p.pool.values();
        values.shuffle(rng);
        let block: Vec<Rat> = values.into_iter().skip(offset * (bound + 1)).take(bound + 1).collect();
        assert_eq!(block.len(), bound + 1, "value pool too small for degree {bound}");
        let mut next = Vec::with_capacity(grid.len() * block.len() * p.exponents.len());
        for partial in &grid {
            for value in &block {
                for &exp in p.exponents {
                    let mut a = partial.clone();
                    a.set(p.name, value.clone(), exp);
                    next.push(a);
                }
            }
        }
        grid = next;
    }
    grid
}
