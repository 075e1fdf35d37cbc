use corank_core::jacobian::{build_t, numeric_t, principal_minor_det};
use corank_core::lab::{build_m, enumerate_minors, numeric_m};
use corank_core::matrix::{bareiss, cofactor_expansion, minor_expansion, rational_rank};
use corank_core::poly::{deleted_product, discriminant_square_product, divide_linear_difference};
use corank_core::roots::trial_seed;
use corank_core::{sample_distinct_roots, Execution, Matrix, MultiplicityProfile, Poly, Rational, RootVector};
use proptest::prelude::*;

const NVARS: usize = 4;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

/// Sparse polynomials in `x, α₁, α₂, α₃` with small exponents.
fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((small_rational(), prop::array::uniform4(0u32..3)), 0..6).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(NVARS), |acc, (c, exps)| {
            let mono =
                (0..NVARS).fold(Poly::constant(NVARS, c), |m, v| &m * &Poly::var(NVARS, v).unwrap().pow(exps[v]));
            &acc + &mono
        })
    })
}

fn rational_matrix(max: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(-4i64..=4, n * n)
            .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(Rational::from).collect()).unwrap())
    })
}

fn poly_matrix(max: usize) -> impl Strategy<Value = Matrix<Poly>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(poly(), n * n).prop_map(move |v| Matrix::new(n, n, v).unwrap()))
}

fn distinct_roots(n: usize) -> impl Strategy<Value = RootVector> {
    any::<u64>().prop_map(move |seed| sample_distinct_roots(n, seed, 12).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mixed_partials_commute(p in poly(), u in 0..NVARS, v in 0..NVARS) {
        let uv = p.partial_derivative(u).unwrap().partial_derivative(v).unwrap();
        let vu = p.partial_derivative(v).unwrap().partial_derivative(u).unwrap();
        prop_assert_eq!(uv, vu);
    }

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_form_is_stable(p in poly()) {
        let q = p.clone();
        prop_assert_eq!(p.to_string(), q.to_string());
        prop_assert_eq!(p.is_zero(), p.to_string() == "0");
    }

    #[test]
    fn linear_division_round_trips(p in poly(), a in 1usize..NVARS, b in 1usize..NVARS) {
        prop_assume!(a != b);
        let d = Poly::difference(NVARS, a, b).unwrap();
        let (q, divisible) = divide_linear_difference(&(&p * &d), a, b).unwrap();
        prop_assert!(divisible);
        prop_assert_eq!(q, p.clone());
        // divisibility agrees with vanishing under αₐ := α_b
        let (_, divisible) = divide_linear_difference(&p, a, b).unwrap();
        let collapsed = p.substitute(a, &Poly::var(NVARS, b).unwrap()).unwrap();
        prop_assert_eq!(divisible, collapsed.is_zero());
    }

    #[test]
    fn exact_division_inverts_product(p in poly(), d in poly()) {
        prop_assume!(!d.is_zero());
        prop_assert_eq!((&p * &d).div_exact(&d), Some(p));
    }

    #[test]
    fn discriminant_product_is_permutation_invariant(perm in Just(vec![1usize, 2, 3, 4]).prop_shuffle(), roots in distinct_roots(4)) {
        let ordered = discriminant_square_product(5, &[1, 2, 3, 4]).unwrap();
        let shuffled = discriminant_square_product(5, &perm).unwrap();
        prop_assert_eq!(&ordered, &shuffled);
        let point = roots.point_with_x(Rational::zero());
        prop_assert!(!ordered.evaluate(&point).unwrap().is_zero());
    }

    #[test]
    fn sampler_is_deterministic(seed in any::<u64>(), n in 1usize..10) {
        let a = sample_distinct_roots(n, seed, 8).unwrap();
        let b = sample_distinct_roots(n, seed, 8).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.check_distinct().is_ok());
        prop_assert_eq!(trial_seed(seed, n as u64), trial_seed(seed, n as u64));
    }

    #[test]
    fn determinant_algorithms_agree_on_rationals(m in rational_matrix(4)) {
        let reference = cofactor_expansion(&m).unwrap();
        prop_assert_eq!(&bareiss(&m).unwrap(), &reference);
        prop_assert_eq!(&minor_expansion(&m).unwrap(), &reference);
        prop_assert_eq!(reference.is_zero(), rational_rank(&m) < m.rows());
    }

    #[test]
    fn determinant_algorithms_agree_on_polynomials(m in poly_matrix(3)) {
        let reference = cofactor_expansion(&m).unwrap();
        prop_assert_eq!(&bareiss(&m).unwrap(), &reference);
        prop_assert_eq!(&minor_expansion(&m).unwrap(), &reference);
    }

    #[test]
    fn row_swap_negates(m in rational_matrix(5), a in 0usize..5, b in 0usize..5) {
        let n = m.rows();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let mut swapped = m.clone();
        swapped.swap_rows(a, b);
        prop_assert_eq!(minor_expansion(&swapped).unwrap(), -&minor_expansion(&m).unwrap());
    }

    #[test]
    fn rank_is_transpose_invariant(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
        let roots = sample_distinct_roots(rows * cols, seed, 6).unwrap();
        let mut m = Matrix::new(rows, cols, roots.values().to_vec()).unwrap();
        // force some dependence
        if rows > 1 {
            let first = m.row(0).to_vec();
            for (j, x) in first.into_iter().enumerate() {
                *m.get_mut(rows - 1, j) = &x * &Rational::from(2);
            }
        }
        prop_assert_eq!(rational_rank(&m), rational_rank(&m.transpose()));
    }

    #[test]
    fn t_rows_sum_to_zero_and_rank_is_corank_one(roots in (2usize..=9).prop_flat_map(distinct_roots)) {
        let t = numeric_t(&roots).unwrap();
        for i in 0..t.rows() {
            let sum = t.row(i).iter().fold(Rational::zero(), |acc, x| &acc + x);
            prop_assert!(sum.is_zero());
        }
        prop_assert_eq!(rational_rank(&t), roots.len() - 1);
    }

    #[test]
    fn m_zero_rows_and_rank_bound(profile in (2u32..=8).prop_flat_map(|n| prop::sample::select(MultiplicityProfile::all_of_degree(n))), seed in any::<u64>()) {
        let roots = sample_distinct_roots(profile.r(), seed, 12).unwrap();
        let m = numeric_m(&profile, &roots).unwrap();
        for i in 1..=profile.r() {
            if profile.k(i) >= 2 {
                prop_assert!(m.row(i - 1).iter().all(Rational::is_zero));
            }
        }
        prop_assert!(rational_rank(&m) <= profile.s());
    }
}

/// `f_k = −∂f/∂α_k` for the simple-root polynomial.
#[test]
fn deleted_factor_is_minus_the_partial() {
    for n in 1..=6 {
        let ks = vec![1; n];
        let f = deleted_product(&ks, &[]).unwrap();
        for k in 1..=n {
            let f_k = deleted_product(&ks, &[k]).unwrap();
            assert_eq!(f_k, -&f.partial_derivative(k).unwrap(), "n = {n}, k = {k}");
        }
    }
}

/// Swapping two roots conjugates `T`, so `D_k` at `α` equals `D_{σ(k)}` at
/// `σ(α)`; and `D_k` vanishes when two of the remaining roots collide.
#[test]
fn principal_minor_symmetry_and_collisions() {
    for n in 3..=5 {
        let t = build_t(n).unwrap();
        let nvars = n + 1;
        for k in 1..=n {
            let d_k = principal_minor_det(&t, k, false).unwrap();
            for a in 1..=n {
                for b in a + 1..=n {
                    let swapped = d_k.swap_vars(a, b).unwrap();
                    let image = if k == a {
                        b
                    } else if k == b {
                        a
                    } else {
                        k
                    };
                    assert_eq!(swapped, principal_minor_det(&t, image, false).unwrap());
                    let collided = d_k.substitute(a, &Poly::var(nvars, b).unwrap()).unwrap();
                    assert_eq!(collided.is_zero(), a != k && b != k, "n = {n}, k = {k}, ({a}, {b})");
                }
            }
            // homogeneous of degree (n−1)(n−2) in the roots, free of x
            assert_eq!(d_k.total_degree(), Some(((n - 1) * (n - 2)) as u32));
            assert_eq!(d_k.degree_in(0).unwrap(), Some(0));
        }
    }
}

#[test]
fn m_reduces_to_t_for_simple_roots() {
    for n in 2..=6 {
        let profile = MultiplicityProfile::simple(n).unwrap();
        assert_eq!(build_m(&profile).unwrap().matrix(), build_t(n).unwrap().matrix());
    }
}

/// At pairwise-distinct points some `s × s` minor is nonzero, while each
/// minor vanishes under some collision `αₐ := α_b`.
#[test]
fn distinct_roots_force_a_nonzero_minor() {
    for text in ["2,1", "2,1,1", "3,1,1", "2,2,1"] {
        let profile: MultiplicityProfile = text.parse().unwrap();
        let r = profile.r();
        let minors = enumerate_minors(&profile, false, Execution::Sequential).unwrap();
        for minor in &minors {
            let collapses = (1..=r).any(|a| {
                (1..=r).any(|b| a != b && minor.det.substitute(a, &Poly::var(r + 1, b).unwrap()).unwrap().is_zero())
            });
            assert!(collapses, "{text} columns {:?}", minor.columns);
        }
        for trial in 0..20 {
            let roots = sample_distinct_roots(r, trial_seed(17, trial), 16).unwrap();
            let point = roots.point_with_x(Rational::zero());
            assert!(
                minors.iter().any(|m| !m.det.evaluate(&point).unwrap().is_zero()),
                "{text}: all minors vanish at {roots:?}"
            );
        }
    }
}
