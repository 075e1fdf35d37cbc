//! `corank`: runs the exact verification suites from the command line and
//! appends one JSONL record per run.
//!
//! Exit codes: 0 when every asserted check passes (findings included),
//! 1 on a violated identity, a kernel fault or an I/O failure, 2 on bad input.

mod commands;
mod record;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Instant, SystemTime};

use clap::{Args, Parser, Subcommand};
use corank_core::{Execution, MultiplicityProfile};
use serde_json::Value;

use commands::{Columns, Mode, Outcome, Parameters, Settings};
use record::{RunRecord, Status, Timing, SCHEMA_VERSION};

#[derive(Parser, Debug)]
#[command(name = "corank", version, about = "Exact checks for the Jacobian of the critical-value map")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Append a JSONL run record to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Seeded evaluation points per check (default 20).
    #[arg(long, global = true)]
    trials: Option<u64>,
    /// Allow symbolic determinants above the size guard.
    #[arg(long, global = true)]
    override_guard: bool,
    /// Run batches on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Principal-minor identity, structure of T and its corank for one n.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=15))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Mode::Symbolic)]
        mode: Mode,
    },
    /// Rank of M against the number of simple roots at seeded points.
    Conjecture {
        #[arg(long)]
        profile: MultiplicityProfile,
    },
    /// Factor the s × s minors of M into root differences.
    Factor {
        #[arg(long)]
        profile: MultiplicityProfile,
        /// `all`, `principal`, or a comma-separated list of one-based columns.
        #[arg(long, default_value = "principal", value_parser = commands::parse_columns)]
        columns: Columns,
    },
    /// Exact rank of T at the given roots.
    Rank {
        /// Comma-separated integers or `p/q` rationals, pairwise distinct.
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Conjecture { .. } => "conjecture",
            Command::Factor { .. } => "factor",
            Command::Rank { .. } => "rank",
        }
    }

    fn parameters(&self, common: &Common) -> Parameters {
        let mut p = Parameters::new();
        match self {
            Command::Verify { n, mode } => {
                p.insert("n".into(), Value::from(*n));
                p.insert("mode".into(), Value::from(format!("{mode:?}").to_lowercase()));
            }
            Command::Conjecture { profile } => {
                p.insert("profile".into(), Value::from(profile.to_string()));
            }
            Command::Factor { profile, columns } => {
                p.insert("profile".into(), Value::from(profile.to_string()));
                p.insert("columns".into(), Value::from(columns.to_string()));
            }
            Command::Rank { roots } => {
                p.insert("roots".into(), Value::from(roots.clone()));
            }
        }
        if let Some(t) = common.trials {
            p.insert("trials".into(), Value::from(t));
        }
        p.insert("override_guard".into(), Value::from(common.override_guard));
        p
    }

    fn run(&self, cfg: &Settings) -> Result<Outcome, corank_core::Error> {
        match self {
            Command::Verify { n, mode } => commands::verify(*n as usize, *mode, cfg),
            Command::Conjecture { profile } => commands::conjecture(profile, cfg),
            Command::Factor { profile, columns } => commands::factor(profile, columns, cfg),
            Command::Rank { roots } => commands::rank(commands::parse_roots(roots)?),
        }
    }
}

fn summary(command: &str, outcome: &Outcome) -> String {
    let r = &outcome.results;
    let detail = match command {
        "verify" => format!("holds={}", r["holds"]),
        "conjecture" => format!("verdict={} ranks={}", r["verdict"], r["ranks"]),
        "factor" => format!("minors={} findings={}", r["minors"].as_array().map_or(0, Vec::len), r["findings"]),
        "rank" => format!("rank={} expected={}", r["rank"], r["expected"]),
        _ => String::new(),
    };
    format!("{command}: {:?} {detail}", outcome.status).to_lowercase()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let cfg = Settings {
        seed: cli.common.seed,
        trials: cli.common.trials,
        override_guard: cli.common.override_guard,
        execution: if cli.common.sequential { Execution::Sequential } else { Execution::Parallel },
    };
    let command = cli.command.name();
    let started = SystemTime::now();
    let clock = Instant::now();

    let outcome = match cli.command.run(&cfg) {
        Ok(outcome) => {
            println!("{}", summary(command, &outcome));
            outcome
        }
        Err(e) => {
            eprintln!("corank {command}: {e}");
            let status = if commands::is_usage_error(&e) { Status::Error } else { Status::Fail };
            Outcome { status, results: serde_json::json!({ "error": e.to_string() }) }
        }
    };
    if outcome.status == Status::Fail {
        if let Some(w) = outcome.results.get("witness") {
            eprintln!("witness: {w}");
        }
    }

    if let Some(path) = &cli.common.json {
        let record = RunRecord {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            parameters: cli.command.parameters(&cli.common),
            seed: cfg.seed,
            status: outcome.status,
            results: outcome.results,
            timing: Timing {
                started_unix_ms: record::unix_ms(started),
                elapsed_ms: clock.elapsed().as_millis() as u64,
            },
        };
        if let Err(e) = record::report_append(&record, path) {
            eprintln!("corank: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    ExitCode::from(outcome.status.exit_code())
}
