use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use super::{Rat, Scalar, ScalarKind};
use crate::error::{Error, Result};

/// Double-precision complex number. Results computed with it are numeric,
/// never exact.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct CF64(pub Complex64);

impl CF64 {
    pub const fn new(re: f64, im: f64) -> Self {
        CF64(Complex64::new(re, im))
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    pub fn abs(self) -> f64 {
        self.0.norm()
    }

    pub fn conj(self) -> Self {
        CF64(self.0.conj())
    }

    pub fn is_finite(self) -> bool {
        self.0.re.is_finite() && self.0.im.is_finite()
    }

    /// Fails with `NumericOverflow` when either component is NaN or infinite.
    pub fn checked(self, what: &str) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::NumericOverflow(format!("{what} = {self}")))
        }
    }

    pub fn powi(self, n: i32) -> Self {
        CF64(self.0.powi(n))
    }

    /// Parses `re` or `re,im`, e.g. `0.2,0.1`.
    pub fn parse_pair(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid complex number `{s}`"));
        let cleaned = s.trim().replace('\u{2212}', "-");
        let (re, im) = match cleaned.split_once(',') {
            Some((re, im)) => (re.trim().parse::<f64>(), im.trim().parse::<f64>()),
            None => (cleaned.parse::<f64>(), Ok(0.0)),
        };
        let z = CF64::new(re.map_err(|_| bad())?, im.map_err(|_| bad())?);
        if z.is_finite() {
            Ok(z)
        } else {
            Err(bad())
        }
    }
}

/// `exp(2πi/m)`. Exact for m ∈ {1, 2, 4}.
pub fn primitive_root(m: u32) -> CF64 {
    match m {
        0 | 1 => CF64::new(1.0, 0.0),
        2 => CF64::new(-1.0, 0.0),
        4 => CF64::new(0.0, 1.0),
        _ => {
            let (s, c) = (2.0 * PI / f64::from(m)).sin_cos();
            CF64::new(c, s)
        }
    }
}

impl From<Complex64> for CF64 {
    fn from(z: Complex64) -> Self {
        CF64(z)
    }
}

impl From<f64> for CF64 {
    fn from(x: f64) -> Self {
        CF64::new(x, 0.0)
    }
}

impl fmt::Display for CF64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.im >= 0.0 {
            write!(f, "{}+{}i", self.0.re, self.0.im)
        } else {
            write!(f, "{}{}i", self.0.re, self.0.im)
        }
    }
}

impl fmt::Debug for CF64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for CF64 {
            type Output = CF64;
            fn $method(self, rhs: CF64) -> CF64 {
                CF64(self.0.$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for CF64 {
    type Output = CF64;
    fn neg(self) -> CF64 {
        CF64(-self.0)
    }
}

impl Scalar for CF64 {
    const KIND: ScalarKind = ScalarKind::Float;

    fn zero() -> Self {
        CF64::new(0.0, 0.0)
    }

    fn one() -> Self {
        CF64::new(1.0, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }

    fn from_rat(r: &Rat) -> Self {
        CF64::new(r.to_f64(), 0.0)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        *self + *rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        *self - *rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        *self * *rhs
    }

    fn neg_ref(&self) -> Self {
        -*self
    }

    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        CF64(self.0.inv()).checked("reciprocal")
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        self.0 += a.0 * b.0;
    }
}
