use std::collections::BTreeMap;

use corank_core::jacobian::{
    corank_check, definition_crosscheck, structural_checks, verify_proposition, ProofMode, RunOptions,
};
use corank_core::lab::{
    bullet_checks, conjecture_check, enumerate_minors, factor_minor, has_bullet_family, minor_for, Minor, Verdict,
};
use corank_core::matrix::SYMBOLIC_GUARD;
use corank_core::roots::trial_seed;
use corank_core::{sample_distinct_roots, Error, Execution, MultiplicityProfile, Rational, RootVector};
use serde::Serialize;
use serde_json::{json, Value};

use crate::record::Status;

/// What a command produced, before timing and bookkeeping are attached.
pub struct Outcome {
    pub status: Status,
    pub results: Value,
}

pub type Parameters = BTreeMap<String, Value>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// Whether a core error is the caller's fault (exit 2) or ours (exit 1).
pub fn is_usage_error(e: &Error) -> bool {
    !matches!(e, Error::Kernel(_) | Error::Context(_) | Error::Shape(_) | Error::Kind(_))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Symbolic,
    Numeric,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Columns {
    All,
    Principal,
    List(Vec<usize>),
}

impl std::fmt::Display for Columns {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Columns::All => f.write_str("all"),
            Columns::Principal => f.write_str("principal"),
            Columns::List(cols) => {
                let parts: Vec<String> = cols.iter().map(usize::to_string).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

pub fn parse_columns(s: &str) -> Result<Columns, String> {
    match s {
        "all" => Ok(Columns::All),
        "principal" => Ok(Columns::Principal),
        _ => s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad column index {t:?}")))
            .collect::<Result<Vec<_>, _>>()
            .map(Columns::List),
    }
}

pub fn parse_roots(s: &str) -> Result<Vec<Rational>, Error> {
    s.split(',').map(|t| t.trim().parse()).collect()
}

pub struct Settings {
    pub seed: u64,
    pub trials: Option<u64>,
    pub override_guard: bool,
    pub execution: Execution,
}

impl Settings {
    fn options(&self) -> RunOptions {
        RunOptions { override_guard: self.override_guard, execution: self.execution, ..RunOptions::default() }
    }
}

pub const DEFAULT_TRIALS: u64 = 20;

pub fn verify(n: usize, mode: Mode, cfg: &Settings) -> Result<Outcome, Error> {
    let trials = cfg.trials.unwrap_or(DEFAULT_TRIALS);
    if trials == 0 {
        return Err(Error::Argument("--trials must be at least 1".into()));
    }
    let proof_mode = match mode {
        Mode::Symbolic => ProofMode::Symbolic,
        Mode::Numeric => ProofMode::NumericExact,
    };
    let proposition = verify_proposition(n, proof_mode, trials, cfg.seed, cfg.options())?;

    // the structural suite is symbolic in n × n; above the guard it is skipped
    // unless explicitly requested
    let mut skipped = Vec::new();
    let (structure, crosscheck) = if n <= SYMBOLIC_GUARD || cfg.override_guard {
        (Some(structural_checks(n, cfg.override_guard)?), Some(definition_crosscheck(n, cfg.override_guard)?))
    } else {
        skipped.push(format!("structure: n = {n} exceeds the symbolic guard {SYMBOLIC_GUARD}"));
        skipped.push(format!("definition-crosscheck: n = {n} exceeds the symbolic guard {SYMBOLIC_GUARD}"));
        (None, None)
    };

    let bound = corank_core::DEFAULT_ROOT_BOUND.max(n as u64);
    let ranks = cfg.execution.try_map(0..trials, |trial| {
        let roots = sample_distinct_roots(n, trial_seed(cfg.seed, trial), bound)?;
        corank_check(&roots)
    })?;
    let corank_holds = ranks.iter().all(|&r| r == n - 1);

    let holds =
        proposition.holds && structure.as_ref().is_none_or(|s| s.holds) && crosscheck.unwrap_or(true) && corank_holds;
    let results = json!({
        "proposition": to_value(&proposition),
        "structure": to_value(&structure),
        "definition_crosscheck": crosscheck,
        "corank": { "expected": n - 1, "ranks": ranks, "holds": corank_holds },
        "skipped": skipped,
        "holds": holds,
    });
    Ok(Outcome { status: if holds { Status::Pass } else { Status::Fail }, results })
}

pub fn conjecture(profile: &MultiplicityProfile, cfg: &Settings) -> Result<Outcome, Error> {
    let trials = cfg.trials.unwrap_or(DEFAULT_TRIALS);
    let report = conjecture_check(profile, trials, cfg.seed, cfg.options())?;
    let status = match report.verdict {
        Verdict::Holds | Verdict::Vacuous => Status::Pass,
        Verdict::Violated => Status::Fail,
    };
    Ok(Outcome { status, results: to_value(&report) })
}

#[derive(Serialize)]
struct MinorEntry<'a> {
    columns: &'a [usize],
    det: &'a corank_core::Poly,
    #[serde(skip_serializing_if = "Option::is_none")]
    factorization: Option<corank_core::lab::FactorizationReport>,
}

pub fn factor(profile: &MultiplicityProfile, columns: &Columns, cfg: &Settings) -> Result<Outcome, Error> {
    if profile.s() == 0 {
        return Err(Error::Argument(format!("profile {profile} has no simple roots, so no minors to factor")));
    }
    let minors: Vec<Minor> = match columns {
        Columns::All => enumerate_minors(profile, cfg.override_guard, cfg.execution)?,
        Columns::Principal => vec![minor_for(profile, &profile.simple_indices(), cfg.override_guard)?],
        Columns::List(cols) => vec![minor_for(profile, cols, cfg.override_guard)?],
    };
    let mut roundtrips_ok = true;
    let mut entries = Vec::with_capacity(minors.len());
    for minor in &minors {
        let factorization = if minor.det.is_zero() { None } else { Some(factor_minor(&minor.det)?) };
        if let Some(f) = &factorization {
            roundtrips_ok &= f.roundtrip_ok && f.residual_coprime;
        }
        entries.push(MinorEntry { columns: &minor.columns, det: &minor.det, factorization });
    }
    let bullets = if has_bullet_family(profile) { bullet_checks(profile, cfg.execution)? } else { Vec::new() };
    roundtrips_ok &= bullets.iter().all(|b| b.roundtrips_ok());
    let findings: Vec<&str> = bullets.iter().filter_map(|b| b.finding()).collect();

    let status = if !roundtrips_ok {
        Status::Fail
    } else if findings.is_empty() {
        Status::Pass
    } else {
        Status::Finding
    };
    let results = json!({
        "profile": to_value(profile),
        "minors": to_value(&entries),
        "bullets": to_value(&bullets),
        "findings": findings,
        "roundtrips_ok": roundtrips_ok,
    });
    Ok(Outcome { status, results })
}

pub fn rank(roots: Vec<Rational>) -> Result<Outcome, Error> {
    if roots.len() < 2 {
        return Err(Error::Argument("need at least two roots".into()));
    }
    let roots = RootVector::distinct(roots)?;
    let rank = corank_check(&roots)?;
    let expected = roots.len() - 1;
    let results = json!({ "roots": to_value(&roots), "n": roots.len(), "rank": rank, "expected": expected });
    Ok(Outcome { status: if rank == expected { Status::Pass } else { Status::Fail }, results })
}
