//! Brute-force reference computations over plain `BigRational`, sharing no
//! code with the crate under test.
//!
//! The Jacobian oracle never forms a polynomial: `f'(x)` is evaluated by the
//! product rule, and `∂/∂αⱼ` of the polynomial `t ↦ f'(αᵢ)|_{αⱼ = t}` is read
//! off exactly from forward differences at integer steps. Determinants use the
//! Leibniz sum over permutations, rank uses plain Gaussian elimination.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn qs(vs: &[i64]) -> Vec<Q> {
    vs.iter().map(|&v| q(v)).collect()
}

fn pow(b: &Q, e: u32) -> Q {
    (0..e).fold(Q::one(), |acc, _| acc * b)
}

/// `f'(x)` for `f = ∏ (x − β_m)^{k_m}`.
pub fn fprime_at(ks: &[u32], betas: &[Q], x: &Q) -> Q {
    let mut total = Q::zero();
    for m in 0..betas.len() {
        let mut term = q(ks[m] as i64) * pow(&(x - &betas[m]), ks[m] - 1);
        for l in (0..betas.len()).filter(|&l| l != m) {
            term *= pow(&(x - &betas[l]), ks[l]);
        }
        total += term;
    }
    total
}

/// `p'(t₀)` for a polynomial `p` of degree at most `deg`, from its values at
/// `t₀, t₀ + 1, …, t₀ + deg`: `p' = Σ_{m ≥ 1} (−1)^{m+1} Δᵐp / m`.
fn derivative_from_samples(samples: &[Q]) -> Q {
    let mut diffs = samples.to_vec();
    let mut total = Q::zero();
    for m in 1..samples.len() {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        let term = &diffs[0] / q(m as i64);
        if m % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `∂ f'(αᵢ) / ∂αⱼ` at `roots`, all indices zero-based.
pub fn jacobian_at(ks: &[u32], roots: &[Q]) -> Vec<Vec<Q>> {
    let r = roots.len();
    let degree: u32 = ks.iter().sum();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let samples: Vec<Q> = (0..=degree as i64)
                        .map(|step| {
                            let mut moved = roots.to_vec();
                            moved[j] = &roots[j] + q(step);
                            fprime_at(ks, &moved, &moved[i].clone())
                        })
                        .collect();
                    derivative_from_samples(&samples)
                })
                .collect()
        })
        .collect()
}

/// Determinant as the signed sum over all permutations.
pub fn leibniz_det(m: &[Vec<Q>]) -> Q {
    fn rec(m: &[Vec<Q>], row: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>, acc: &mut Q) {
        let n = m.len();
        if row == n {
            let inversions =
                (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| perm[a] > perm[b]).count();
            let term = (0..n).fold(Q::one(), |p, i| p * &m[i][perm[i]]);
            if inversions % 2 == 0 {
                *acc += term;
            } else {
                *acc -= term;
            }
            return;
        }
        for c in 0..n {
            if !used[c] {
                used[c] = true;
                perm.push(c);
                rec(m, row + 1, used, perm, acc);
                perm.pop();
                used[c] = false;
            }
        }
    }
    let mut acc = Q::zero();
    rec(m, 0, &mut vec![false; m.len()], &mut Vec::new(), &mut acc);
    acc
}

pub fn gauss_rank(m: &[Vec<Q>]) -> usize {
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let factor = &a[i][c] / &a[rank][c];
                let pivot_row = a[rank].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rows and columns kept, zero-based.
pub fn select(m: &[Vec<Q>], rows: &[usize], cols: &[usize]) -> Vec<Vec<Q>> {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

/// `∏_{a<b, a,b ≠ k} (β_a − β_b)²`, `k` zero-based.
pub fn discriminant_without(roots: &[Q], k: usize) -> Q {
    let mut acc = Q::one();
    for a in 0..roots.len() {
        for b in a + 1..roots.len() {
            if a != k && b != k {
                let d = &roots[a] - &roots[b];
                acc *= &d * &d;
            }
        }
    }
    acc
}

pub fn factorial(n: usize) -> Q {
    (1..=n as i64).fold(Q::one(), |acc, i| acc * q(i))
}
