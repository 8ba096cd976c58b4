use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::Series;
use crate::arith::{Rat, Scalar};

type Poly = Arc<Vec<BigInt>>;

fn cache() -> &'static Mutex<HashMap<(i64, i64), Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of the Gaussian polynomial `[n m]` in `q`, of degree
/// `m(n−m)`. Empty when `(n, m)` is out of range.
pub fn gaussian_poly(n: i64, m: i64) -> Poly {
    if n < 0 || m < 0 || m > n {
        return Arc::new(Vec::new());
    }
    if m == 0 || m == n {
        return Arc::new(vec![BigInt::from(1)]);
    }
    // [n m] is symmetric in m ↔ n−m; cache the smaller index only.
    let key = (n, m.min(n - m));
    if let Some(p) = cache().lock().expect("gaussian cache poisoned").get(&key) {
        return p.clone();
    }
    // Pascal: [n m] = [n−1 m] + q^{n−m} [n−1 m−1]
    let (n, m) = key;
    let left = gaussian_poly(n - 1, m);
    let right = gaussian_poly(n - 1, m - 1);
    let shift = (n - m) as usize;
    let degree = (m * (n - m)) as usize;
    let mut out = vec![BigInt::zero(); degree + 1];
    for (k, c) in left.iter().enumerate() {
        out[k] += c;
    }
    for (k, c) in right.iter().enumerate() {
        out[k + shift] += c;
    }
    let p = Arc::new(out);
    cache().lock().expect("gaussian cache poisoned").insert(key, p.clone());
    p
}

/// Product of several Gaussian polynomials as an integer polynomial; empty
/// if any factor is out of range.
pub fn gaussian_product(factors: &[(i64, i64)]) -> Vec<BigInt> {
    let mut acc = vec![BigInt::from(1)];
    for &(n, m) in factors {
        let p = gaussian_poly(n, m);
        if p.is_empty() {
            return Vec::new();
        }
        if p.len() == 1 {
            continue;
        }
        let mut out = vec![BigInt::zero(); acc.len() + p.len() - 1];
        for (i, x) in acc.iter().enumerate() {
            for (j, y) in p.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        acc = out;
    }
    acc
}

/// `[n m]` as a truncated series in `q = t^scale`; zero out of range.
pub fn gaussian_binomial<S: Scalar>(n: i64, m: i64, order: usize, scale: u32) -> Series<S> {
    let poly = gaussian_poly(n, m);
    let mut coeffs = vec![S::zero(); order + 1];
    let step = scale as usize;
    for (k, c) in poly.iter().enumerate() {
        let idx = k * step;
        if idx > order {
            break;
        }
        if !c.is_zero() {
            coeffs[idx] = S::from_rat(&Rat::from(c.clone()));
        }
    }
    Series::from_coeffs(coeffs, scale)
}

/// Checks `[n m]_{1/q} = q^{m(m−n)} [n m]_q` through `order`. Substituting
/// `1/q` reverses the coefficient list, so this is the statement that the
/// reversed polynomial, shifted by the degree, matches the original.
pub fn gaussian_binomial_qinv_check(n: i64, m: i64, order: usize) -> bool {
    let poly = gaussian_poly(n, m);
    if poly.is_empty() {
        return true;
    }
    let degree = poly.len() - 1;
    // q^{degree} · [n m]_{1/q} has coefficient poly[degree − k] at q^k, and
    // q^{degree} · q^{m(m−n)} [n m]_q = [n m]_q since degree = m(n−m).
    (0..=order.min(degree)).all(|k| poly[degree - k] == poly[k])
}
