mod common;

use common::oracle::{self, q, qs, Q};
use corank_core::jacobian::{build_t, evaluate_t, numeric_t, principal_minor_det, proposition_constant};
use corank_core::lab::{build_m, enumerate_minors, numeric_m};
use corank_core::matrix::rational_rank;
use corank_core::roots::trial_seed;
use corank_core::{sample_distinct_roots, Execution, Matrix, MultiplicityProfile, Rational, RootVector};

fn to_q(m: &Matrix<Rational>) -> Vec<Vec<Q>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.as_big().clone()).collect()).collect()
}

fn roots_q(roots: &RootVector) -> Vec<Q> {
    roots.values().iter().map(|x| x.as_big().clone()).collect()
}

fn point(vals: &[i64]) -> RootVector {
    RootVector::distinct(vals.iter().map(|&v| Rational::from(v)).collect()).unwrap()
}

#[test]
fn oracle_anchor_values() {
    let roots = qs(&[0, 1, 3]);
    let t = oracle::jacobian_at(&[1, 1, 1], &roots);
    let d3 = oracle::leibniz_det(&oracle::select(&t, &[0, 1], &[0, 1]));
    let d1 = oracle::leibniz_det(&oracle::select(&t, &[1, 2], &[1, 2]));
    assert_eq!(d3, q(-2));
    assert_eq!(d1, q(-8));

    let m = oracle::jacobian_at(&[2, 1, 1], &roots);
    assert_eq!(oracle::leibniz_det(&oracle::select(&m, &[1, 2], &[1, 2])), q(-72));

    let m = oracle::jacobian_at(&[2, 1], &qs(&[0, 1]));
    assert_eq!(m, vec![qs(&[0, 0]), qs(&[-2, 2])]);
    assert_eq!(oracle::gauss_rank(&m), 1);
}

#[test]
fn crate_reproduces_anchor_values() {
    let t = build_t(3).unwrap();
    // x = 0, then the roots
    let pt = [0, 0, 1, 3].map(Rational::from);
    let at = |p: &corank_core::Poly| p.evaluate(&pt).unwrap();
    assert_eq!(at(&principal_minor_det(&t, 3, false).unwrap()), Rational::from(-2));
    assert_eq!(at(&principal_minor_det(&t, 1, false).unwrap()), Rational::from(-8));

    let profile: MultiplicityProfile = "2,1,1".parse().unwrap();
    let minors = enumerate_minors(&profile, false, Execution::Sequential).unwrap();
    let principal = minors.iter().find(|m| m.columns == [2, 3]).unwrap();
    assert_eq!(at(&principal.det), Rational::from(-72));

    let profile: MultiplicityProfile = "2,1".parse().unwrap();
    let m = build_m(&profile).unwrap().evaluate(&point(&[0, 1])).unwrap();
    assert_eq!(m, Matrix::from_integers(&[&[0, 0], &[-2, 2]]).unwrap());
    assert_eq!(rational_rank(&m), 1);
}

#[test]
fn t_matches_oracle_at_seeded_points() {
    for n in 2..=7 {
        for trial in 0..5 {
            let roots = sample_distinct_roots(n, trial_seed(3, trial), 16).unwrap();
            let expected = oracle::jacobian_at(&vec![1; n], &roots_q(&roots));
            assert_eq!(to_q(&numeric_t(&roots).unwrap()), expected, "n = {n}");
            if n <= 5 {
                let symbolic = evaluate_t(&build_t(n).unwrap(), &roots).unwrap();
                assert_eq!(to_q(&symbolic), expected, "n = {n}");
            }
        }
    }
}

#[test]
fn proposition_against_leibniz() {
    for n in 2..=6 {
        let constant = proposition_constant(n);
        for trial in 0..4 {
            let roots = roots_q(&sample_distinct_roots(n, trial_seed(5, trial), 12).unwrap());
            let t = oracle::jacobian_at(&vec![1; n], &roots);
            for k in 0..n {
                let keep: Vec<usize> = (0..n).filter(|&i| i != k).collect();
                let left = oracle::leibniz_det(&oracle::select(&t, &keep, &keep));
                let right = constant.as_big() * oracle::discriminant_without(&roots, k);
                assert_eq!(left, right, "n = {n}, k = {}", k + 1);
            }
            assert_eq!(oracle::gauss_rank(&t), n - 1);
        }
    }
    // the constant itself, independently
    for n in 2..=8 {
        let pairs = (n - 1) * (n - 2) / 2;
        let sign = if pairs % 2 == 0 { q(1) } else { q(-1) };
        assert_eq!(proposition_constant(n).as_big(), &(sign * oracle::factorial(n - 1)));
    }
}

#[test]
fn m_matches_oracle_for_all_small_profiles() {
    for n in 2..=6 {
        for profile in MultiplicityProfile::all_of_degree(n) {
            let r = profile.r();
            for trial in 0..3 {
                let roots = sample_distinct_roots(r, trial_seed(9, trial), 10).unwrap();
                let expected = oracle::jacobian_at(profile.multiplicities(), &roots_q(&roots));
                let numeric = numeric_m(&profile, &roots).unwrap();
                assert_eq!(to_q(&numeric), expected, "profile {profile}");
                assert_eq!(rational_rank(&numeric), oracle::gauss_rank(&expected));
            }
        }
    }
}
