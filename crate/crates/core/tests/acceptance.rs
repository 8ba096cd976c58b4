//! End-to-end acceptance run, one test per criterion.

use std::sync::{Mutex, MutexGuard};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use qcf_core::arith::{EisRat, Rat, Scalar, CF64};
use qcf_core::cfrac::{convergents, ratio_limit, sequence_agreement, CfSpec, NumericCf};
use qcf_core::objects::{self, HParams, WatsonParams};
use qcf_core::series::{pochhammer_finite, pochhammer_infinite_base, Monomial, Series};
use qcf_core::verifier::{self, registry, Certificate, VerifyOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_261_016;

/// Criteria run one at a time so the wall-clock budgets measure the work,
/// not contention with each other.
static SERIAL: Mutex<()> = Mutex::new(());

fn serial() -> MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

fn small_rat(rng: &mut impl Rng) -> Rat {
    loop {
        let r = Rat::new(rng.gen_range(-7..=7), rng.gen_range(1..=7)).unwrap();
        if !r.is_zero() {
            return r;
        }
    }
}

fn random_hparams(rng: &mut impl Rng) -> HParams<Rat> {
    HParams::<Rat>::constants(&small_rat(rng), &small_rat(rng), &small_rat(rng), &small_rat(rng))
}

fn within(elapsed: Duration, secs: u64, what: &str) {
    assert!(elapsed < Duration::from_secs(secs), "{what} took {elapsed:?}, budget {secs} s");
}

/// 1. Triple-sum closed forms equal the recurrence for N ≤ 12.
#[test]
fn criterion_01_closed_forms_match_recurrence() {
    let _serial = serial();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    // every A_N, …, D_N with N ≤ 12 is a polynomial in q of degree below 80
    let order = 80;
    for _ in 0..5 {
        let p = random_hparams(&mut rng);
        let h = convergents(&objects::cf_h(&p, order).allowing_zero_numerators(), 12).unwrap();
        let h1 = convergents(&objects::cf_h1(&p, order).allowing_zero_numerators(), 12).unwrap();
        for n in 0..=12 {
            assert_eq!(objects::h_numerator_closed_form(&p, n, order).unwrap(), h[n].numer, "A_{n}");
            assert_eq!(objects::h_denominator_closed_form(&p, n, order).unwrap(), h[n].denom, "B_{n}");
            assert_eq!(objects::h1_numerator_closed_form(&p, n, order).unwrap(), h1[n].numer, "C_{n}");
            assert_eq!(objects::h1_denominator_closed_form(&p, n, order).unwrap(), h1[n].denom, "D_{n}");
        }
    }
    within(start.elapsed(), 10, "closed forms");
}

/// 2. The generating-function oracle reproduces A_N, B_N for N ≤ 10.
#[test]
fn criterion_02_genfunc_matches_closed_forms() {
    let _serial = serial();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let order = 60;
    for _ in 0..5 {
        let p = random_hparams(&mut rng);
        let f = objects::genfunc_numerators(&p, 10, order).unwrap();
        let g = objects::genfunc_denominators(&p, 10, order).unwrap();
        for n in 1..=10 {
            assert_eq!(f[n], objects::h_numerator_closed_form(&p, n, order).unwrap(), "A_{n}");
            assert_eq!(g[n], objects::h_denominator_closed_form(&p, n, order).unwrap(), "B_{n}");
        }
    }
    within(start.elapsed(), 5, "generating functions");
}

/// 3. Every registry row passes at order 50 within a minute.
#[test]
fn criterion_03_identity_suite() {
    let _serial = serial();
    let start = Instant::now();
    let rows = registry();
    assert!(rows.len() >= 26, "only {} rows", rows.len());
    let mut failures = Vec::new();
    for case in rows {
        let report = verifier::verify(case.id, 50, 5, 0).unwrap();
        if !report.passed() {
            failures.push(format!("{}: {:?} {:?}", case.id, report.first_mismatch, report.error));
        }
        if case.is_complete() {
            assert_eq!(report.certificate, Certificate::DegreeBoundComplete, "{}", case.id);
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
    within(start.elapsed(), 60, "identity suite");
}

/// Partitions of each n ≤ limit into parts congruent to ±r mod 5.
fn partition_counts(r: u64, limit: usize) -> Vec<BigInt> {
    let mut ways = vec![BigInt::from(0); limit + 1];
    ways[0] = BigInt::from(1);
    for part in (1..=limit).filter(|p| [r, 5 - r].contains(&(*p as u64 % 5))) {
        for n in part..=limit {
            let prev = ways[n - part].clone();
            ways[n] += prev;
        }
    }
    ways
}

/// 4. Rogers–Ramanujan coefficients against a partition DP, n ≤ 100.
#[test]
fn criterion_04_rogers_ramanujan_partitions() {
    let _serial = serial();
    let order = 100;
    for (shift, r) in [(0usize, 1u64), (1, 2)] {
        let mut sum = Series::zero(order, 1);
        for n in 0..=10usize {
            let top = n * n + shift * n;
            if top > order {
                break;
            }
            let term = Series::q_power(top, order, 1).div(&pochhammer_finite(&Monomial::t_power(1), n, order, 1).unwrap());
            sum = sum.add(&term.unwrap()).unwrap();
        }
        let (first, second) = (r as i64, 5 - r as i64);
        let product = pochhammer_infinite_base(&Monomial::t_power(first), 5, order, 1)
            .unwrap()
            .mul(&pochhammer_infinite_base(&Monomial::t_power(second), 5, order, 1).unwrap())
            .unwrap()
            .inverse()
            .unwrap();
        let expect: Vec<Rat> = partition_counts(r, order).into_iter().map(Rat::from).collect();
        let expect = Series::from_coeffs(expect, 1);
        assert_eq!(sum, expect, "sum side, parts ±{r} mod 5");
        assert_eq!(product, expect, "product side, parts ±{r} mod 5");
    }
    let report = verifier::verify("RR_SUM_PRODUCT", 100, 1, 0).unwrap();
    assert!(report.passed(), "{report:?}");
}

/// Numerators and denominators at N = 40 against their targets, through the
/// order certified by agreement of N = 39 and N = 40.
fn check_separate(cf: &CfSpec<Rat>, numer_target: &Series<Rat>, denom_target: &Series<Rat>) {
    let pairs = convergents(cf, 40).unwrap();
    let (prev, last) = (&pairs[39], &pairs[40]);
    let certified = sequence_agreement(&prev.numer, &last.numer)
        .unwrap()
        .min(sequence_agreement(&prev.denom, &last.denom).unwrap())
        .expect("no agreement between N = 39 and N = 40");
    assert!(certified >= 20, "certified order {certified} below 20");
    assert_eq!(last.numer.truncate(certified), numer_target.truncate(certified));
    assert_eq!(last.denom.truncate(certified), denom_target.truncate(certified));
}

fn products_inverse(factors: &[(i64, i64)], order: usize) -> Series<Rat> {
    let mut acc = Series::one(order, 1);
    for &(start, step) in factors {
        acc = acc.mul(&pochhammer_infinite_base(&Monomial::t_power(start), step, order, 1).unwrap()).unwrap();
    }
    acc.inverse().unwrap()
}

/// 5. Separate limits of the Q2Q3 and Rogers–Ramanujan fractions at N = 40.
#[test]
fn criterion_05_separate_limits() {
    let _serial = serial();
    let order = 60;
    check_separate(
        &objects::cf_q2q3(order),
        &products_inverse(&[(1, 3)], order),
        &products_inverse(&[(2, 3)], order),
    );
    check_separate(
        &objects::cf_rogers_ramanujan(order, 1),
        &products_inverse(&[(1, 5), (4, 5)], order),
        &products_inverse(&[(2, 5), (3, 5)], order),
    );
}

/// 6. Watson's finite transformation for n ≤ 6 over 10 draws at order 40.
#[test]
fn criterion_06_watson_finite() {
    let _serial = serial();
    let report = verifier::verify("WATSON_FINITE", 40, 10, 0).unwrap();
    assert!(report.passed(), "{report:?}");
    assert!(report.assignments.len() >= 10);
    // and directly, outside the registry, with lead of positive valuation
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    for _ in 0..10 {
        let mut draw = |exp| Monomial::<Rat>::from_rat(&small_rat(&mut rng), exp);
        let lead = draw(1);
        let others = [draw(0), draw(0), draw(1), draw(0)];
        for depth in 0..=6 {
            let w = WatsonParams { lead: lead.clone(), others: others.clone(), depth, scale: 1 };
            match objects::watson_finite_sides(&w, 40) {
                Ok((l, r)) => assert_eq!(l, r, "n = {depth}"),
                Err(e) => assert!(verifier::is_degenerate(&e), "{e}"),
            }
        }
    }
}

/// 7. The amusing identity exactly, and numerically through Pincherle.
#[test]
fn criterion_07_amusing_identity() {
    let _serial = serial();
    let report = verifier::verify("AMUSING", 30, 5, 0).unwrap();
    assert!(report.passed(), "{report:?}");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut accepted = 0;
    while accepted < 5 {
        let (a, b, d) = (small_rat(&mut rng), small_rat(&mut rng), small_rat(&mut rng));
        let one_plus_b = Rat::one() + b.clone();
        if one_plus_b.is_zero() {
            continue;
        }
        let m = |r: &Rat| Monomial::from_rat(r, 0);
        let cf = objects::cf_amusing(&m(&a), &m(&b), &m(&d), 30, 1);
        match ratio_limit(&cf, 30, 200) {
            Ok((value, _)) => {
                assert_eq!(value, Series::constant(one_plus_b.recip().unwrap(), 30, 1));
                accepted += 1;
            }
            Err(e) => assert!(verifier::is_degenerate(&e), "{e}"),
        }
    }
    // numerically: a = 1/2, b = 1/3, d = 1, q = 1/2. The minimal solution
    // decays like q^{n²/2}, so the window is kept short enough for f64.
    let (a, b, d, q) = (0.5, 1.0 / 3.0, 1.0, 0.5f64);
    let cf = NumericCf::new(CF64::from(0.0), move |n| {
        if n == 1 {
            return (CF64::from(1.0), CF64::from(1.0));
        }
        let k = n as i32;
        let num = a * b * q.powi(2 * k - 3) + b * d * q.powi(k - 2);
        let den = (a - b) * q.powi(k - 1) + d;
        (CF64::from(num), CF64::from(den))
    });
    let g = cf.miller_minimal_solution(45).unwrap();
    assert!(cf.pincherle_limit_check(&g, 30, 1e-10).unwrap());
    assert!((cf.evaluate(30).unwrap().re() - 1.0 / (1.0 + b)).abs() < 1e-10);
}

/// 8. The root-of-unity limit numerically for m ∈ {3, 5}.
#[test]
fn criterion_08_root_of_unity_numeric() {
    let _serial = serial();
    for q in [CF64::from(0.3), CF64::new(0.2, 0.1)] {
        for m in [3u32, 5] {
            for i in 1..=m {
                assert!(objects::root_of_unity_limit_check(m, i, q, 40, 1e-9).unwrap(), "m = {m}, i = {i}, q = {q:?}");
            }
        }
    }
}

/// 9. The (−ω, −ω²) specialization over Q(ω) lands in Q[[q]].
#[test]
fn criterion_09_eisenstein_path() {
    let _serial = serial();
    let order = 40;
    let w = EisRat::omega();
    let p = HParams::new(
        Monomial::constant(w.neg_ref()),
        Monomial::constant(EisRat::omega_sq().neg_ref()),
        Monomial::zero(),
        Monomial::one(),
        1,
    );
    let lim = objects::limit_h1_separate(&p, order).unwrap();
    for s in [&lim.numer_series, &lim.denom_series, &lim.numer_convergent, &lim.denom_convergent] {
        assert!(s.coeffs().iter().all(EisRat::is_rational));
    }
    let first = products_inverse(&[(1, 3)], order);
    let second = products_inverse(&[(2, 3)], order);
    assert_eq!(lim.numer_series.to_rational().unwrap(), first);
    assert_eq!(lim.denom_series.to_rational().unwrap(), second);
    assert_eq!(lim.numer_convergent.to_rational().unwrap(), first);
    assert_eq!(lim.denom_convergent.to_rational().unwrap(), second);
}

/// 10. A +q^17 perturbation of any right-hand side is caught at q^17.
#[test]
fn criterion_10_mutation_sensitivity() {
    let _serial = serial();
    for case in registry() {
        let opts = VerifyOptions { mutate: Some(17), ..VerifyOptions::new(50) };
        let report = verifier::verify_with(case.id, &opts).unwrap();
        assert!(!report.passed(), "{} survived the mutation", case.id);
        let at = report.first_mismatch.as_ref().map(|m| m.coefficient);
        assert_eq!(at, Some(17), "{}: {:?}", case.id, report.error);
    }
}
