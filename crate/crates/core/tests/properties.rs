//! Property tests for the algebraic invariants.

use proptest::prelude::*;
use qcf_core::arith::{EisRat, Rat, Scalar};
use qcf_core::cfrac::{convergents, equivalence_transform, odd_part, CfSpec};
use qcf_core::series::{gaussian_poly, pochhammer_infinite, Monomial, Series};

fn rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| Rat::new(p, q).unwrap())
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn eis() -> impl Strategy<Value = EisRat> {
    (rat(), rat()).prop_map(|(u, v)| EisRat::new(u, v))
}

const ORDER: usize = 8;

fn series() -> impl Strategy<Value = Series<Rat>> {
    prop::collection::vec(rat(), ORDER + 1).prop_map(|c| Series::from_coeffs(c, 1))
}

fn unit_series() -> impl Strategy<Value = Series<Rat>> {
    (nonzero_rat(), prop::collection::vec(rat(), ORDER)).prop_map(|(head, tail)| {
        let mut c = vec![head];
        c.extend(tail);
        Series::from_coeffs(c, 1)
    })
}

/// A fraction with polynomial partial numerators of nonzero constant term.
fn fraction(seed: Vec<(Rat, Rat, Rat, Rat)>, order: usize) -> CfSpec<Rat> {
    CfSpec::new(Series::one(order, 1), order, move |n| {
        let (a0, a1, b0, b1) = seed[(n - 1) % seed.len()].clone();
        let a = Series::from_coeffs(vec![a0, a1], 1).truncate(order);
        let b = Series::from_coeffs(vec![b0, b1], 1).truncate(order);
        Ok((a, b))
    })
}

fn fraction_seed() -> impl Strategy<Value = Vec<(Rat, Rat, Rat, Rat)>> {
    prop::collection::vec((nonzero_rat(), rat(), nonzero_rat(), rat()), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rat_field_axioms(x in rat(), y in rat(), z in nonzero_rat()) {
        prop_assert_eq!(x.add_ref(&y), y.add_ref(&x));
        prop_assert_eq!(x.mul_ref(&y.add_ref(&z)), x.mul_ref(&y).add_ref(&x.mul_ref(&z)));
        prop_assert_eq!(x.mul_ref(&z).try_div(&z).unwrap(), x.clone());
        prop_assert_eq!(x.sub_ref(&x), Rat::zero());
    }

    #[test]
    fn eisenstein_ring_and_norm(x in eis(), y in eis(), z in eis()) {
        prop_assert_eq!(x.mul_ref(&y).mul_ref(&z), x.mul_ref(&y.mul_ref(&z)));
        prop_assert_eq!(x.mul_ref(&y.add_ref(&z)), x.mul_ref(&y).add_ref(&x.mul_ref(&z)));
        prop_assert_eq!(x.mul_ref(&y).norm(), x.norm() * y.norm());
        prop_assert_eq!(x.mul_ref(&x.conj()), EisRat::from(x.norm()));
        if !x.is_zero() {
            prop_assert_eq!(x.mul_ref(&x.try_inv().unwrap()), EisRat::one());
        }
        let embedded = x.mul_ref(&y).to_cf64();
        let product = x.to_cf64() * y.to_cf64();
        prop_assert!((embedded - product).abs() <= 1e-9 * (1.0 + product.abs()));
    }

    #[test]
    fn series_ring_axioms(x in series(), y in series(), z in series()) {
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
    }

    #[test]
    fn series_inverse(u in unit_series(), x in series()) {
        prop_assert_eq!(u.mul(&u.inverse().unwrap()).unwrap(), Series::one(ORDER, 1));
        prop_assert_eq!(x.mul(&u).unwrap().div(&u).unwrap(), x);
    }

    #[test]
    fn gaussian_pascal_and_symmetry(n in 1i64..=12, m in 0i64..=12) {
        prop_assume!(m <= n);
        let poly = gaussian_poly(n, m);
        let mirror = gaussian_poly(n, n - m);
        prop_assert_eq!(&poly[..], &mirror[..]);
        // [n m] = [n−1 m−1] + q^m [n−1 m]
        let mut sum = vec![num_bigint::BigInt::from(0); poly.len()];
        for (k, c) in gaussian_poly(n - 1, m - 1).iter().enumerate() {
            sum[k] += c;
        }
        for (k, c) in gaussian_poly(n - 1, m).iter().enumerate() {
            sum[k + m as usize] += c;
        }
        prop_assert_eq!(&poly[..], &sum[..]);
        let mut reversed = poly.to_vec();
        reversed.reverse();
        prop_assert_eq!(&poly[..], &reversed[..]);
    }

    #[test]
    fn determinant_formula(seed in fraction_seed()) {
        // A_N B_{N−1} − A_{N−1} B_N = (−1)^{N−1} a_1 ⋯ a_N
        let order = 6;
        let cf = fraction(seed, order);
        let pairs = convergents(&cf, 20).unwrap();
        let mut product = Series::one(order, 1);
        for n in 1..=20 {
            product = product.mul(&cf.term(n).unwrap().0).unwrap();
            let lhs = pairs[n].numer.mul(&pairs[n - 1].denom).unwrap()
                .sub(&pairs[n - 1].numer.mul(&pairs[n].denom).unwrap()).unwrap();
            let rhs = if n % 2 == 1 { product.clone() } else { product.neg() };
            prop_assert_eq!(lhs, rhs, "N = {}", n);
        }
    }

    #[test]
    fn odd_part_reproduces_odd_convergents(seed in fraction_seed()) {
        let order = 5;
        let cf = fraction(seed, order);
        let orig = convergents(&cf, 13).unwrap();
        let odd = convergents(&odd_part(&cf).unwrap(), 6).unwrap();
        for k in 1..=6 {
            prop_assert_eq!(&odd[k].numer, &orig[2 * k + 1].numer);
            prop_assert_eq!(&odd[k].denom, &orig[2 * k + 1].denom);
        }
    }

    #[test]
    fn equivalence_preserves_approximants(seed in fraction_seed(), mults in prop::collection::vec(nonzero_rat(), 1..4)) {
        let order = 5;
        let cf = fraction(seed, order);
        let scaled = equivalence_transform(&cf, move |n| Monomial::constant(mults[n % mults.len()].clone())).unwrap();
        let orig = convergents(&cf, 10).unwrap();
        let other = convergents(&scaled, 10).unwrap();
        for n in 1..=10 {
            // A/B = A'/B' as cross products
            prop_assert_eq!(
                orig[n].numer.mul(&other[n].denom).unwrap(),
                other[n].numer.mul(&orig[n].denom).unwrap()
            );
        }
    }

    #[test]
    fn pochhammer_truncation_is_stable(c in nonzero_rat(), e in 1i64..=3, k in 5usize..=30) {
        let z = Monomial::<Rat>::from_rat(&c, e);
        let short = pochhammer_infinite(&z, k, 1).unwrap();
        let long = pochhammer_infinite(&z, k + 3, 1).unwrap();
        prop_assert_eq!(long.truncate(k), short);
    }

    #[test]
    fn substitute_power_is_a_ring_map(x in series(), y in series(), k in 1usize..=3) {
        let lhs = x.mul(&y).unwrap().substitute_power(k);
        let rhs = x.substitute_power(k).mul(&y.substitute_power(k)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn rogers_ramanujan_survives_substitution() {
    // Σ q^{2n²}/(q²;q²)_n = 1/((q²;q¹⁰)(q⁸;q¹⁰)) obtained from the q-version by q ↦ q²
    let order = 60;
    let mut sum = Series::<Rat>::zero(order, 1);
    let mut denom = Series::one(order, 1);
    for n in 0..8usize {
        if n > 0 {
            denom = denom.mul(&Series::one(order, 1).sub(&Series::q_power(n, order, 1)).unwrap()).unwrap();
        }
        sum = sum.add(&Series::q_power(n * n, order, 1).div(&denom).unwrap()).unwrap();
    }
    let doubled = sum.truncate(order / 2).substitute_power(2);
    let mut product = Series::<Rat>::one(order, 1);
    for start in [2i64, 8] {
        product = product
            .mul(&qcf_core::series::pochhammer_infinite_base(&Monomial::t_power(start), 10, order, 1).unwrap())
            .unwrap();
    }
    assert_eq!(doubled, product.inverse().unwrap());
}
