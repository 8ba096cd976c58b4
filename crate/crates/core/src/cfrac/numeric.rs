use std::sync::Arc;

use crate::arith::CF64;
use crate::error::{Error, Result};

type NumTermFn = dyn Fn(usize) -> (CF64, CF64) + Send + Sync;

/// A continued fraction evaluated in double precision. Used only for numeric
/// spot checks; nothing computed here is exact.
#[derive(Clone)]
pub struct NumericCf {
    b0: CF64,
    terms: Arc<NumTermFn>,
}

impl NumericCf {
    pub fn new(b0: CF64, terms: impl Fn(usize) -> (CF64, CF64) + Send + Sync + 'static) -> Self {
        NumericCf { b0, terms: Arc::new(terms) }
    }

    /// `(a_n, b_n)` for `n ≥ 1`.
    pub fn term(&self, n: usize) -> (CF64, CF64) {
        (self.terms)(n)
    }

    /// The `depth`-th approximant, evaluated from the tail inwards.
    pub fn evaluate(&self, depth: usize) -> Result<CF64> {
        let mut tail = CF64::new(0.0, 0.0);
        for n in (1..=depth).rev() {
            let (a, b) = self.term(n);
            let den = b + tail;
            if den.abs() == 0.0 {
                return Err(Error::DivisionByZero);
            }
            tail = (a / den).checked("approximant tail")?;
        }
        (self.b0 + tail).checked("approximant")
    }

    /// `(A_n, B_n)` for `n = −1 ..= depth`; index `n + 1` in the result.
    pub fn convergent_sequences(&self, depth: usize) -> Result<Vec<(CF64, CF64)>> {
        let mut out = Vec::with_capacity(depth + 2);
        out.push((CF64::new(1.0, 0.0), CF64::new(0.0, 0.0)));
        out.push((self.b0, CF64::new(1.0, 0.0)));
        for n in 1..=depth {
            let (a, b) = self.term(n);
            let (pa, pb) = out[n - 1];
            let (ca, cb) = out[n];
            let na = (b * ca + a * pa).checked("A_n")?;
            let nb = (b * cb + a * pb).checked("B_n")?;
            out.push((na, nb));
        }
        Ok(out)
    }

    /// Worpitzky's test on the fraction normalised to unit denominators:
    /// true iff every normalised partial numerator up to `depth` has modulus
    /// at most 1/4.
    pub fn worpitzky_check(&self, depth: usize) -> Result<bool> {
        let mut prev_b = CF64::new(1.0, 0.0);
        for n in 1..=depth {
            let (a, b) = self.term(n);
            if b.abs() == 0.0 {
                return Err(Error::NormalizationImpossible(n));
            }
            let normalised = (a / (prev_b * b)).checked("normalised numerator")?;
            if normalised.abs() > 0.25 {
                return Ok(false);
            }
            prev_b = b;
        }
        Ok(true)
    }

    /// Minimal solution of `G_n = a_n G_{n−2} + b_n G_{n−1}` by Miller's
    /// backward recurrence from `G_start = 0, G_{start−1} = 1`. Index `n + 1`
    /// of the result holds `G_n` for `n = −1 ..= start`.
    pub fn miller_minimal_solution(&self, start: usize) -> Result<Vec<CF64>> {
        assert!(start >= 1);
        let mut g = vec![CF64::new(0.0, 0.0); start + 2];
        g[start + 1] = CF64::new(0.0, 0.0);
        g[start] = CF64::new(1.0, 0.0);
        for n in (1..=start).rev() {
            let (a, b) = self.term(n);
            if a.abs() == 0.0 {
                return Err(Error::ZeroPartialNumerator(n));
            }
            // G_{n−2} = (G_n − b_n G_{n−1}) / a_n
            let val = (g[n + 1] - b * g[n]) / a;
            g[n - 1] = val.checked("backward recurrence")?;
            let mag = g[n - 1].abs();
            if mag > 1e150 {
                let s = CF64::new(1.0 / mag, 0.0);
                for x in g.iter_mut().skip(n - 1) {
                    *x = *x * s;
                }
            }
        }
        Ok(g)
    }

    /// Pincherle's criterion. `g[n + 1]` holds `G_n` for `n = −1 ..= depth`.
    /// Checks the recurrence to relative tolerance, that `|G_n/B_n|`
    /// (normalised by `max(|G_{−1}|, |G_0|)`) decreases strictly over the
    /// second half of the window and ends below `√tol`, and that the `depth`-th approximant is within `tol` of
    /// `b0 − G_0/G_{−1}`.
    pub fn pincherle_limit_check(&self, g: &[CF64], depth: usize, tol: f64) -> Result<bool> {
        assert!(g.len() >= depth + 2, "need G_n for n = −1 ..= depth");
        for n in 1..=depth {
            let (a, b) = self.term(n);
            let lhs = g[n + 1];
            let rhs = a * g[n - 1] + b * g[n];
            let scale = lhs.abs().max((a * g[n - 1]).abs()).max((b * g[n]).abs()).max(f64::MIN_POSITIVE);
            if (lhs - rhs).abs() > 1e-9 * scale {
                return Err(Error::RecurrenceViolation(n as i64));
            }
        }
        let seq = self.convergent_sequences(depth)?;
        let norm = g[0].abs().max(g[1].abs());
        if norm == 0.0 {
            return Err(Error::DivisionByZero);
        }
        let ratios: Vec<f64> =
            (depth / 2..=depth).map(|n| (g[n + 1] / seq[n + 1].1).abs() / norm).collect();
        let decreasing = ratios.windows(2).all(|w| w[1] < w[0]);
        let small = ratios.last().is_some_and(|r| *r < tol.sqrt());
        if !(decreasing && small) {
            return Ok(false);
        }
        if g[0].abs() == 0.0 {
            return Err(Error::DivisionByZero);
        }
        let limit = self.b0 - g[1] / g[0];
        let (a_n, b_n) = seq[depth + 1];
        let approx = (a_n / b_n).checked("approximant")?;
        Ok((approx - limit).abs() < tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn constant(a: f64, b: f64) -> NumericCf {
        NumericCf::new(CF64::new(0.0, 0.0), move |_| (CF64::new(a, 0.0), CF64::new(b, 0.0)))
    }

    #[test]
    fn worpitzky_examples() {
        assert!(constant(0.2, 1.0).worpitzky_check(100).unwrap());
        let first_big = NumericCf::new(CF64::new(0.0, 0.0), |n| {
            (CF64::new(if n == 1 { 1.0 } else { 0.1 }, 0.0), CF64::new(1.0, 0.0))
        });
        assert!(!first_big.worpitzky_check(10).unwrap());
        assert_eq!(constant(0.2, 0.0).worpitzky_check(3), Err(Error::NormalizationImpossible(1)));
    }

    #[test]
    fn constant_fraction_fixed_point() {
        // w = a/(b + w)  ⇒  w² + b·w − a = 0
        let (a, b) = (2.0f64, 3.0f64);
        let w = (-b + (b * b + 4.0 * a).sqrt()) / 2.0;
        let cf = constant(a, b);
        assert!((cf.evaluate(60).unwrap().re() - w).abs() < 1e-14);
        // minimal solution x^n with x² − b·x − a = 0, the small root
        let x = (b - (b * b + 4.0 * a).sqrt()) / 2.0;
        let g: Vec<CF64> = (-1..=40).map(|n: i32| CF64::new(x.powi(n), 0.0)).collect();
        assert!(cf.pincherle_limit_check(&g, 40, 1e-10).unwrap());
        let miller = cf.miller_minimal_solution(120).unwrap();
        assert!(cf.pincherle_limit_check(&miller, 40, 1e-10).unwrap());
    }

    #[test]
    fn dominant_solution_fails() {
        let cf = constant(2.0, 3.0);
        let seq = cf.convergent_sequences(40).unwrap();
        let g: Vec<CF64> = seq.iter().map(|p| p.1).collect();
        assert!(!cf.pincherle_limit_check(&g, 40, 1e-10).unwrap());
    }

    #[test]
    fn recurrence_violation_detected() {
        let cf = constant(2.0, 3.0);
        let g = vec![CF64::new(1.0, 0.0); 42];
        assert_eq!(cf.pincherle_limit_check(&g, 40, 1e-10), Err(Error::RecurrenceViolation(1)));
    }
}
