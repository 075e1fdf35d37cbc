use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::poly::MAX_VARS;
use crate::{Error, Result};

/// Root multiplicities `k₁ ≥ k₂ ≥ … ≥ k_r ≥ 1`.
///
/// Because of the ordering, the simple roots are exactly the last `s`
/// indices `r − s + 1 ..= r` (one-based, matching `α` variable indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicityProfile {
    multiplicities: Vec<u32>,
}

impl MultiplicityProfile {
    pub fn new(multiplicities: Vec<u32>) -> Result<Self> {
        if multiplicities.is_empty() {
            return Err(Error::Profile("no roots".into()));
        }
        if multiplicities.contains(&0) {
            return Err(Error::Profile("multiplicities must be at least 1".into()));
        }
        if multiplicities.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Profile(format!("{multiplicities:?} is not in decreasing order")));
        }
        if multiplicities.len() + 1 > MAX_VARS {
            return Err(Error::Profile(format!(
                "{} roots exceed the supported {}",
                multiplicities.len(),
                MAX_VARS - 1
            )));
        }
        Ok(MultiplicityProfile { multiplicities })
    }

    /// The all-simple profile `(1, …, 1)` of size `n`.
    pub fn simple(n: usize) -> Result<Self> {
        MultiplicityProfile::new(vec![1; n])
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// Multiplicity of root `i` (one-based).
    pub fn k(&self, i: usize) -> u32 {
        self.multiplicities[i - 1]
    }

    /// Degree of `f`.
    pub fn n(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    /// Number of distinct roots.
    pub fn r(&self) -> usize {
        self.multiplicities.len()
    }

    /// Number of simple roots.
    pub fn s(&self) -> usize {
        self.multiplicities.iter().filter(|&&k| k == 1).count()
    }

    /// One-based indices of the simple roots.
    pub fn simple_indices(&self) -> Vec<usize> {
        (self.r() - self.s() + 1..=self.r()).collect()
    }

    /// One-based indices of roots with multiplicity exactly `k`.
    pub fn roots_with_multiplicity(&self, k: u32) -> Vec<usize> {
        (1..=self.r()).filter(|&i| self.k(i) == k).collect()
    }

    pub fn is_all_simple(&self) -> bool {
        self.s() == self.r()
    }

    /// Every profile with `n(profile) = n`, in reverse lexicographic order.
    pub fn all_of_degree(n: u32) -> Vec<MultiplicityProfile> {
        fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if remaining == 0 {
                out.push(prefix.clone());
                return;
            }
            for k in (1..=max.min(remaining)).rev() {
                prefix.push(k);
                rec(remaining - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.into_iter().filter_map(|m| MultiplicityProfile::new(m).ok()).collect()
    }
}

impl fmt::Display for MultiplicityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.multiplicities.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Comma-separated decreasing multiplicities, e.g. `2,1,1`.
impl FromStr for MultiplicityProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let ks = s
            .split(',')
            .map(|t| {
                if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse(format!("bad multiplicity {t:?} in {s:?}")));
                }
                t.parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiplicityProfile::new(ks)
    }
}

impl Serialize for MultiplicityProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.multiplicities.serialize(serializer)
    }
}
