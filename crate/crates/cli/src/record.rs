use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Finding,
    Error,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass | Status::Finding => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Timing {
    pub started_unix_ms: u64,
    pub elapsed_ms: u64,
}

/// One JSONL line. Everything before `timing` depends only on the command,
/// its parameters and the seed, so two runs agree byte for byte up to there.
#[derive(Clone, Debug, Serialize)]
pub struct RunRecord {
    pub schema_version: u32,
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub seed: u64,
    pub status: Status,
    pub results: Value,
    pub timing: Timing,
}

pub fn unix_ms(t: SystemTime) -> u64 {
    t.duration_since(UNIX_EPOCH).map_or(0, |d| d.as_millis() as u64)
}

/// Appends `record` as a single line, creating the file if needed.
pub fn report_append(record: &RunRecord, path: &Path) -> std::io::Result<()> {
    let mut line = serde_json::to_string(record)?;
    line.push('\n');
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    file.write_all(line.as_bytes())?;
    file.flush()
}
