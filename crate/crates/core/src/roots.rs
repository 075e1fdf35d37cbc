//! Root vectors and the seeded sampler used by every randomized suite.
//!
//! Draws come from SplitMix64. A numerator in `[-bound, bound]` and a
//! denominator in `[1, bound]` are each taken from one 64-bit output by
//! widening multiply (`(u · span) >> 64`), which is platform independent.
//! A candidate equal to an earlier root is rejected and redrawn.

use std::collections::HashSet;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use crate::{Error, Rational, Result};

/// Redraws allowed per root before giving up on distinctness.
pub const MAX_REDRAWS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RootVector(Vec<Rational>);

impl RootVector {
    /// Wraps values without checking distinctness.
    pub fn new(values: Vec<Rational>) -> Self {
        RootVector(values)
    }

    /// Wraps values, rejecting any repeated root.
    pub fn distinct(values: Vec<Rational>) -> Result<Self> {
        let v = RootVector(values);
        v.check_distinct()?;
        Ok(v)
    }

    pub fn check_distinct(&self) -> Result<()> {
        let mut seen = HashSet::with_capacity(self.0.len());
        for (i, r) in self.0.iter().enumerate() {
            if !seen.insert(r) {
                return Err(Error::RepeatedRoot(format!("value {r} repeats at position {}", i + 1)));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// Evaluation point `(x, α₁, …, α_n)` with the given `x`.
    pub fn point_with_x(&self, x: Rational) -> Vec<Rational> {
        std::iter::once(x).chain(self.0.iter().cloned()).collect()
    }
}

impl std::ops::Index<usize> for RootVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

fn draw_below(rng: &mut SplitMix64, span: u64) -> u64 {
    ((rng.next_u64() as u128 * span as u128) >> 64) as u64
}

/// `n` pairwise-distinct rationals with numerators in `[-bound, bound]` and
/// denominators in `[1, bound]`, fully determined by `(n, seed, bound)`.
pub fn sample_distinct_roots(n: usize, seed: u64, bound: u64) -> Result<RootVector> {
    if n == 0 {
        return Err(Error::Argument("need at least one root".into()));
    }
    if bound == 0 || bound > i64::MAX as u64 / 2 {
        return Err(Error::Argument(format!("bound {bound} out of range")));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut seen = HashSet::with_capacity(n);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut accepted = false;
        for _ in 0..MAX_REDRAWS {
            let num = draw_below(&mut rng, 2 * bound + 1) as i64 - bound as i64;
            let den = draw_below(&mut rng, bound) as i64 + 1;
            let r = Rational::new(num, den)?;
            if seen.insert(r.clone()) {
                out.push(r);
                accepted = true;
                break;
            }
        }
        if !accepted {
            return Err(Error::Argument(format!(
                "bound {bound} too small to draw root {} of {n} distinct values",
                i + 1
            )));
        }
    }
    Ok(RootVector(out))
}

/// Seed for trial `index` of a run seeded with `seed`. Depends only on the
/// pair, so trials can be evaluated in any order.
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    let mut rng = SplitMix64::seed_from_u64(seed ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03));
    rng.next_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = sample_distinct_roots(6, 42, 10).unwrap();
        let b = sample_distinct_roots(6, 42, 10).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_distinct_roots(6, 43, 10).unwrap());
    }

    #[test]
    fn range_contract() {
        for seed in 0..50 {
            let roots = sample_distinct_roots(5, seed, 10).unwrap();
            roots.check_distinct().unwrap();
            for r in roots.values() {
                assert!(r.numer().magnitude() <= &10u32.into());
                assert!(r.denom() >= &1.into() && r.denom() <= &10.into());
            }
        }
    }

    #[test]
    fn impossible_bound_errors() {
        // bound 1 admits only {-1, 0, 1}
        assert!(sample_distinct_roots(3, 1, 1).is_ok());
        assert!(matches!(sample_distinct_roots(4, 1, 1), Err(Error::Argument(_))));
        assert!(sample_distinct_roots(0, 1, 10).is_err());
        assert!(sample_distinct_roots(2, 1, 0).is_err());
    }

    #[test]
    fn repeated_roots_rejected() {
        let v = vec![Rational::from(0), Rational::from(1), Rational::from(0)];
        assert!(matches!(RootVector::distinct(v), Err(Error::RepeatedRoot(_))));
    }

    #[test]
    fn trial_seeds_differ() {
        let seeds: HashSet<u64> = (0..1000).map(|i| trial_seed(7, i)).collect();
        assert_eq!(seeds.len(), 1000);
        assert_eq!(trial_seed(7, 3), trial_seed(7, 3));
    }
}
