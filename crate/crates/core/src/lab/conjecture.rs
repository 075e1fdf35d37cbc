use serde::Serialize;

use super::numeric_m;
use crate::jacobian::RunOptions;
use crate::matrix::rational_rank;
use crate::roots::{sample_distinct_roots, trial_seed};
use crate::{Error, Matrix, MultiplicityProfile, Rational, Result, RootVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Every trial reached the expected rank.
    Holds,
    /// Some trial fell short; see the witness.
    Violated,
    /// No simple roots: `M = 0` and the claim is empty.
    Vacuous,
}

/// Everything needed to re-check a rank deficit independently.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub profile: MultiplicityProfile,
    pub trial: u64,
    pub seed: u64,
    pub roots: RootVector,
    pub matrix: Matrix<Rational>,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub profile: MultiplicityProfile,
    pub n: u32,
    pub r: usize,
    pub s: usize,
    /// `s` when some root is repeated; `n − 1` for the all-simple profile.
    pub expected_rank: usize,
    pub trials: u64,
    pub seed: u64,
    pub ranks: Vec<usize>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Evaluates `M` at `trials` seeded distinct rational points and compares
/// the exact rank with the number of simple roots.
pub fn conjecture_check(
    profile: &MultiplicityProfile,
    trials: u64,
    seed: u64,
    opts: RunOptions,
) -> Result<ConjectureReport> {
    if trials == 0 {
        return Err(Error::Argument("need at least one trial".into()));
    }
    let (r, s) = (profile.r(), profile.s());
    let expected_rank = if profile.is_all_simple() { s - 1 } else { s };
    let bound = opts.root_bound.max(r as u64);

    let outcomes = opts.execution.try_map(0..trials, |trial| {
        let sub = trial_seed(seed, trial);
        let roots = sample_distinct_roots(r, sub, bound)?;
        let m = numeric_m(profile, &roots)?;
        let rank = rational_rank(&m);
        if rank > s {
            return Err(Error::Kernel(format!("rank {rank} exceeds s = {s} for {profile}")));
        }
        Ok((trial, sub, roots, m, rank))
    })?;

    let ranks: Vec<usize> = outcomes.iter().map(|o| o.4).collect();
    let witness = outcomes.into_iter().find(|o| o.4 != expected_rank).map(|(trial, seed, roots, matrix, rank)| {
        Witness { profile: profile.clone(), trial, seed, roots, matrix, rank }
    });
    let verdict = match (&witness, s) {
        (Some(_), _) => Verdict::Violated,
        (None, 0) => Verdict::Vacuous,
        (None, _) => Verdict::Holds,
    };
    Ok(ConjectureReport {
        profile: profile.clone(),
        n: profile.n(),
        r,
        s,
        expected_rank,
        trials,
        seed,
        ranks,
        verdict,
        witness,
    })
}
