//! Report records and their CSV and JSON-lines encodings.
//!
//! Numbers are written in Rust's shortest round-trip form, so two runs with
//! identical inputs and `report.timings = false` produce identical bytes.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use mwc_magfield::FieldKind;

use crate::config::GridConfig;
use crate::HarnessError;

pub const CSV_NAME: &str = "report.csv";
pub const JSONL_NAME: &str = "report.jsonl";
pub const CSV_HEADER: [&str; 5] = ["id", "residual", "tolerance", "pass", "seconds"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    /// SHA-256 of the canonical JSON of every input the check reads.
    pub inputs_digest: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub seconds: f64,
    pub grid: GridConfig,
    pub field: FieldKind,
    pub details: BTreeMap<String, f64>,
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> HarnessError {
    HarnessError::Io { path: path.display().to_string(), message: e.to_string() }
}

pub fn csv_string(reports: &[CheckReport]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in reports {
        w.write_record([
            r.id.clone(),
            format!("{:e}", r.residual),
            format!("{:e}", r.tolerance),
            r.pass.to_string(),
            format!("{:.6}", r.seconds),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn jsonl_string(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("report serializes"));
        out.push('\n');
    }
    out
}

/// One CSV row as read back.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct CsvRow {
    pub id: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub seconds: f64,
}

pub fn parse_csv(text: &str) -> Result<Vec<CsvRow>, HarnessError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize().collect::<Result<_, _>>().map_err(|e| HarnessError::Parse(e.to_string()))
}

pub fn parse_jsonl(text: &str) -> Result<Vec<CheckReport>, HarnessError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| HarnessError::Parse(e.to_string())))
        .collect()
}

pub fn write_csv(path: &Path, reports: &[CheckReport]) -> Result<(), HarnessError> {
    std::fs::write(path, csv_string(reports)).map_err(|e| io_err(path, e))
}

pub fn write_jsonl(path: &Path, reports: &[CheckReport]) -> Result<(), HarnessError> {
    std::fs::write(path, jsonl_string(reports)).map_err(|e| io_err(path, e))
}

/// Writes both encodings into `dir`, creating it if needed.
pub fn write_reports(dir: &Path, reports: &[CheckReport]) -> Result<(PathBuf, PathBuf), HarnessError> {
    std::fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let (csv_path, jsonl_path) = (dir.join(CSV_NAME), dir.join(JSONL_NAME));
    write_csv(&csv_path, reports)?;
    write_jsonl(&jsonl_path, reports)?;
    Ok((csv_path, jsonl_path))
}

/// Human-readable one-line summary.
pub fn summary_line(r: &CheckReport) -> String {
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    format!("{verdict} {:<28} residual {:>10.3e}  tolerance {:>8.1e}  {:>8.3}s", r.id, r.residual, r.tolerance, r.seconds)
}
