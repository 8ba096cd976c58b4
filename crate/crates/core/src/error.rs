use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scale mismatch: {0} vs {1}")]
    ScaleMismatch(u32, u32),
    #[error("series has zero constant term and cannot be inverted")]
    NonInvertibleConstantTerm,
    #[error("infinite product (z;q)_inf with z of t-valuation {0} does not converge formally")]
    NonconvergentFormalProduct(i64),
    #[error("zero factor in a denominator: {0}")]
    ZeroDenominatorFactor(String),
    #[error("partial numerator a_{0} is zero")]
    ZeroPartialNumerator(usize),
    #[error("odd partial denominator b_{0} is zero")]
    ZeroOddPartialDenominator(usize),
    #[error("equivalence multiplier r_{0} is zero")]
    ZeroMultiplier(usize),
    #[error("cannot normalize to unit denominators: b_{0} = 0")]
    NormalizationImpossible(usize),
    #[error("sequence violates the three-term recurrence at n = {0}")]
    RecurrenceViolation(i64),
    #[error("degenerate specialization: {0}")]
    DegenerateSpecialization(String),
    #[error("numeric overflow: {0}")]
    NumericOverflow(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("coefficient {0} is not rational")]
    NotRational(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("continued fraction did not stabilize to order {order} within {max_terms} terms")]
    NotStabilized { order: usize, max_terms: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
