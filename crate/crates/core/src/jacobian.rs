//! The Jacobian `T` of `(α₁, …, α_n) ↦ (f'(α₁), …, f'(α_n))` for
//! `f = ∏ (x − αᵢ)` with simple roots.
//!
//! Entries, with `f_{ij}` the deleted product `f / ((x − αᵢ)(x − αⱼ))`:
//!
//! * `T_ij = −f_{ij}(αᵢ)` for `i ≠ j`,
//! * `T_ii = Σ_{j ≠ i} f_{ij}(αᵢ)`,
//!
//! so every row sums to zero and `rank T ≤ n − 1`. The principal minors satisfy
//! `D_k = (−1)^{C(n−1,2)} (n−1)! Δ(f_k)`, which forces the rank to be exactly
//! `n − 1` at distinct roots. This module builds `T` symbolically and
//! numerically and checks that identity together with the degree,
//! leading-coefficient and recursion facts its induction uses.

use serde::Serialize;

use crate::exec::Execution;
use crate::matrix::{determinant, rational_rank, symbolic_determinant, SYMBOLIC_GUARD};
use crate::poly::{deleted_product, discriminant_square_product, MAX_VARS};
use crate::roots::{sample_distinct_roots, trial_seed};
use crate::{Error, Matrix, Poly, Rational, Result, RootVector};

/// Symbolic `T` for `n` simple roots, over the context `x, α₁ … α_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobianT {
    n: usize,
    matrix: Matrix<Poly>,
}

impl JacobianT {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<Poly> {
        &self.matrix
    }

    /// Entry `(i, j)`, one-based.
    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        self.matrix.get(i - 1, j - 1)
    }
}

fn check_size(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Argument(format!("need at least 2 roots, got {n}")));
    }
    if n + 1 > MAX_VARS {
        return Err(Error::Argument(format!("{n} roots exceed the supported {}", MAX_VARS - 1)));
    }
    Ok(())
}

fn check_guard(size: usize, override_guard: bool) -> Result<()> {
    if size > SYMBOLIC_GUARD && !override_guard {
        return Err(Error::Guard { size, guard: SYMBOLIC_GUARD });
    }
    Ok(())
}

/// `T` restricted to the roots `active` (one-based), as if `f` had only those
/// roots. With `active = 1..=n` this is `T` itself; with `2..=n` it is the
/// matrix of the same type built from `f₁`.
pub(crate) fn closed_form_over(active: &[usize], nvars: usize) -> Result<Matrix<Poly>> {
    let size = active.len();
    let mut m = Matrix::from_fn(size, size, |_, _| Poly::zero(nvars));
    for (p, &i) in active.iter().enumerate() {
        let mut diagonal = Poly::zero(nvars);
        for (q, &j) in active.iter().enumerate() {
            if i == j {
                continue;
            }
            let factors = active
                .iter()
                .filter(|&&m| m != i && m != j)
                .map(|&m| Poly::difference(nvars, i, m))
                .collect::<Result<Vec<_>>>()?;
            let f_ij = Poly::product(nvars, &factors);
            diagonal = &diagonal + &f_ij;
            *m.get_mut(p, q) = -f_ij;
        }
        *m.get_mut(p, p) = diagonal;
    }
    Ok(m)
}

pub fn build_t(n: usize) -> Result<JacobianT> {
    check_size(n)?;
    let active: Vec<usize> = (1..=n).collect();
    Ok(JacobianT { n, matrix: closed_form_over(&active, n + 1)? })
}

/// Entrywise evaluation of the symbolic matrix at distinct roots.
pub fn evaluate_t(t: &JacobianT, roots: &RootVector) -> Result<Matrix<Rational>> {
    if roots.len() != t.n {
        return Err(Error::Argument(format!("{} roots for a {}x{} matrix", roots.len(), t.n, t.n)));
    }
    roots.check_distinct()?;
    t.matrix.evaluate(&roots.point_with_x(Rational::zero()))
}

/// `T` at distinct roots straight from the closed form, without building the
/// symbolic matrix. Agrees with [`evaluate_t`].
pub fn numeric_t(roots: &RootVector) -> Result<Matrix<Rational>> {
    check_size(roots.len())?;
    roots.check_distinct()?;
    let a = roots.values();
    let n = a.len();
    let mut m = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            return Rational::zero();
        }
        let prod = (0..n).filter(|&m| m != i && m != j).fold(Rational::one(), |acc, m| &acc * &(&a[i] - &a[m]));
        -prod
    });
    for i in 0..n {
        let diagonal = m.row(i).iter().fold(Rational::zero(), |acc, e| &acc - e);
        *m.get_mut(i, i) = diagonal;
    }
    Ok(m)
}

/// `D_k`, the determinant of `T` with row and column `k` (one-based) removed.
pub fn principal_minor_det(t: &JacobianT, k: usize, override_guard: bool) -> Result<Poly> {
    if k == 0 || k > t.n {
        return Err(Error::Index(format!("k = {k} outside 1..={}", t.n)));
    }
    let minor = t.matrix.submatrix(&[k - 1], &[k - 1])?;
    symbolic_determinant(&minor, override_guard)
}

/// `(−1)^{C(n−1,2)} (n−1)!`
pub fn proposition_constant(n: usize) -> Rational {
    let factorial = (1..n as i64).fold(Rational::one(), |acc, i| &acc * &Rational::from(i));
    let pairs = (n - 1) * n.saturating_sub(2) / 2;
    if pairs % 2 == 1 {
        -factorial
    } else {
        factorial
    }
}

/// `Δ(f_k) = ∏_{i<j; i,j ≠ k} (αᵢ − αⱼ)²` evaluated at concrete roots.
pub fn numeric_discriminant_without(roots: &[Rational], k: usize) -> Rational {
    let idx: Vec<usize> = (0..roots.len()).filter(|&i| i + 1 != k).collect();
    let mut acc = Rational::one();
    for (p, &i) in idx.iter().enumerate() {
        for &j in &idx[p + 1..] {
            let d = &roots[i] - &roots[j];
            acc = &acc * &(&d * &d);
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProofMode {
    Symbolic,
    NumericExact,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymbolicOutcome {
    pub k: usize,
    /// Number of terms of `D_k`.
    pub terms: usize,
    pub equal: bool,
    /// `D_k − (−1)^{C(n−1,2)} (n−1)! Δ(f_k)` when it is not zero.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub difference: Option<Poly>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericMismatch {
    pub k: usize,
    pub left: Rational,
    pub right: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialOutcome {
    pub trial: u64,
    pub seed: u64,
    pub roots: RootVector,
    pub comparisons: usize,
    pub mismatches: Vec<NumericMismatch>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropositionReport {
    pub n: usize,
    pub mode: ProofMode,
    /// `(−1)^{C(n−1,2)} (n−1)!`
    pub constant: Rational,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub per_k: Vec<SymbolicOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trials: Vec<TrialOutcome>,
    pub comparisons: usize,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub override_guard: bool,
    pub execution: Execution,
    pub root_bound: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { override_guard: false, execution: Execution::default(), root_bound: crate::DEFAULT_ROOT_BOUND }
    }
}

/// Checks `D_k = (−1)^{C(n−1,2)} (n−1)! Δ(f_k)` for every `k`, either as a
/// polynomial identity or at `trials` seeded rational points.
pub fn verify_proposition(
    n: usize,
    mode: ProofMode,
    trials: u64,
    seed: u64,
    opts: RunOptions,
) -> Result<PropositionReport> {
    check_size(n)?;
    let constant = proposition_constant(n);
    match mode {
        ProofMode::Symbolic => {
            check_guard(n, opts.override_guard)?;
            let t = build_t(n)?;
            let per_k = opts.execution.try_map(1..=n, |k| {
                let left = principal_minor_det(&t, k, true)?;
                let others: Vec<usize> = (1..=n).filter(|&i| i != k).collect();
                let right = discriminant_square_product(n + 1, &others)?.scale(&constant);
                let difference = &left - &right;
                let equal = difference.is_zero();
                Ok::<_, Error>(SymbolicOutcome {
                    k,
                    terms: left.num_terms(),
                    equal,
                    difference: (!equal).then_some(difference),
                })
            })?;
            let holds = per_k.iter().all(|o| o.equal);
            Ok(PropositionReport {
                n,
                mode,
                constant,
                comparisons: per_k.len(),
                per_k,
                seed: None,
                trials: vec![],
                holds,
            })
        }
        ProofMode::NumericExact => {
            if trials == 0 {
                return Err(Error::Argument("numeric mode needs at least one trial".into()));
            }
            let outcomes = opts.execution.try_map(0..trials, |trial| {
                let sub = trial_seed(seed, trial);
                let roots = sample_distinct_roots(n, sub, opts.root_bound.max(n as u64))?;
                let t = numeric_t(&roots)?;
                let mut mismatches = Vec::new();
                for k in 1..=n {
                    let left = determinant(&t.submatrix(&[k - 1], &[k - 1])?)?;
                    let right = &constant * &numeric_discriminant_without(roots.values(), k);
                    if left != right {
                        mismatches.push(NumericMismatch { k, left, right });
                    }
                }
                Ok::<_, Error>(TrialOutcome { trial, seed: sub, roots, comparisons: n, mismatches })
            })?;
            let holds = outcomes.iter().all(|o| o.mismatches.is_empty());
            let comparisons = outcomes.iter().map(|o| o.comparisons).sum();
            Ok(PropositionReport {
                n,
                mode,
                constant,
                per_k: vec![],
                seed: Some(seed),
                trials: outcomes,
                comparisons,
                holds,
            })
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub n: usize,
    /// Every row of `T` sums to the zero polynomial.
    pub row_sums_zero: bool,
    /// `deg_{α₁} T_ij` is `n − 2` in row 1, `0` in column 1 below it, and `1`
    /// elsewhere (`0` when `n = 2`, where `T` is constant).
    pub alpha1_degrees: bool,
    /// The `α₁^{n−2}` coefficient is `−1` in `T_1j` (`j > 1`) and `n − 1` in `T_11`.
    pub alpha1_leading_coefficients: bool,
    /// `∂T/∂α₁` on rows and columns `2 … n` equals `−T'`, `T'` built from the
    /// roots `α₂ … α_n`.
    pub alpha1_recursion: bool,
    /// Whether `T_ij = +f_ij(αᵢ)` (no sign) would also match the defining
    /// derivative. Expected `false`: the signed form is the correct one.
    pub unsigned_offdiagonal_consistent: bool,
    pub failures: Vec<String>,
    pub holds: bool,
}

/// The exact structural facts about `T` used by the induction on `n`.
pub fn structural_checks(n: usize, override_guard: bool) -> Result<StructureReport> {
    check_size(n)?;
    check_guard(n, override_guard)?;
    let t = build_t(n)?;
    let nvars = n + 1;
    let mut failures = Vec::new();

    let mut row_sums_zero = true;
    for i in 1..=n {
        let sum = (1..=n).fold(Poly::zero(nvars), |acc, j| &acc + t.entry(i, j));
        if !sum.is_zero() {
            row_sums_zero = false;
            failures.push(format!("row {i} sums to {sum}"));
        }
    }

    let mut alpha1_degrees = true;
    for i in 1..=n {
        for j in 1..=n {
            let expected = match (i, j) {
                (1, _) => n as u32 - 2,
                (_, 1) => 0,
                _ => u32::from(n >= 3),
            };
            let got = t.entry(i, j).degree_in(1)?;
            if got != Some(expected) {
                alpha1_degrees = false;
                failures.push(format!("deg_a1 T[{i},{j}] = {got:?}, expected {expected}"));
            }
        }
    }

    let mut alpha1_leading_coefficients = true;
    for j in 1..=n {
        let expected = if j == 1 { Rational::from(n as i64 - 1) } else { Rational::from(-1) };
        let coeff = t.entry(1, j).coefficient_in(1, n as u32 - 2)?;
        if coeff.as_constant() != Some(expected.clone()) {
            alpha1_leading_coefficients = false;
            failures.push(format!("coefficient of a1^{} in T[1,{j}] is {coeff}, expected {expected}", n - 2));
        }
    }

    let derivative = t.matrix.map_poly(|p| p.partial_derivative(1))?;
    let inner_idx: Vec<usize> = (1..n).collect();
    let inner = derivative.select(&inner_idx, &inner_idx);
    let reduced: Vec<usize> = (2..=n).collect();
    let t_prime = closed_form_over(&reduced, nvars)?;
    let mut alpha1_recursion = true;
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            if inner.get(i, j) != &-t_prime.get(i, j) {
                alpha1_recursion = false;
                failures.push(format!(
                    "d/da1 T[{},{}] = {} but -T'[{},{}] = {}",
                    i + 2,
                    j + 2,
                    inner.get(i, j),
                    i + 1,
                    j + 1,
                    -t_prime.get(i, j)
                ));
            }
        }
    }

    let defined = definition_matrix(n)?;
    let unsigned_offdiagonal_consistent =
        (1..=n).all(|i| (1..=n).filter(|&j| j != i).all(|j| defined.get(i - 1, j - 1) == &-t.entry(i, j)));

    let holds = row_sums_zero && alpha1_degrees && alpha1_leading_coefficients && alpha1_recursion;
    Ok(StructureReport {
        n,
        row_sums_zero,
        alpha1_degrees,
        alpha1_leading_coefficients,
        alpha1_recursion,
        unsigned_offdiagonal_consistent,
        failures,
        holds,
    })
}

/// `∂/∂αⱼ [f'(αᵢ)]` computed from scratch: expand `f`, differentiate in `x`,
/// substitute `x := αᵢ`, differentiate in `αⱼ`.
pub fn definition_matrix(n: usize) -> Result<Matrix<Poly>> {
    check_size(n)?;
    let ones = vec![1; n];
    let f = deleted_product(&ones, &[])?;
    derivative_matrix_of(&f, n)
}

pub(crate) fn derivative_matrix_of(f: &Poly, r: usize) -> Result<Matrix<Poly>> {
    let nvars = f.nvars();
    let fp = f.partial_derivative(0)?;
    let mut data = Vec::with_capacity(r * r);
    for i in 1..=r {
        let at_root = fp.substitute(0, &Poly::var(nvars, i)?)?;
        for j in 1..=r {
            data.push(at_root.partial_derivative(j)?);
        }
    }
    Matrix::new(r, r, data)
}

/// `true` iff the closed-form `T` equals the from-scratch derivative matrix.
pub fn definition_crosscheck(n: usize, override_guard: bool) -> Result<bool> {
    check_size(n)?;
    check_guard(n, override_guard)?;
    Ok(build_t(n)?.matrix == definition_matrix(n)?)
}

/// Exact rank of `T` at distinct roots; the expected value is `n − 1`.
pub fn corank_check(roots: &RootVector) -> Result<usize> {
    Ok(rational_rank(&numeric_t(roots)?))
}
