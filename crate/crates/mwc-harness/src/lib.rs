//! Verification harness for the magnetic Weyl calculus crates.
//!
//! A scenario (TOML) names a grid, a field, a gauge, optional fixtures and a
//! list of checks. [`run_scenario`] validates the scenario, runs each check on
//! a bounded thread pool and returns one [`CheckReport`] per check in the
//! order the scenario lists them.

pub mod calibrate;
pub mod catalog;
mod checks;
pub mod config;
pub mod report;
mod run;

pub use calibrate::{calibrate, Calibration};
pub use catalog::{catalog, decreased, find, CheckSpec, Requirement};
pub use config::ScenarioConfig;
pub use report::{write_csv, write_jsonl, CheckReport};
pub use run::{run_scenario, RunOptions};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("could not parse scenario: {0}")]
    Parse(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("invalid scenario: {0}")]
    InvalidConfig(String),
    #[error("predicted peak memory {predicted} bytes exceeds the limit of {limit} bytes (largest check: {largest})")]
    MemoryGuard { predicted: u64, limit: u64, largest: String },
    #[error(transparent)]
    Grid(#[from] mwc_phasespace::GridError),
    #[error(transparent)]
    Field(#[from] mwc_magfield::FieldError),
    #[error(transparent)]
    Calculus(#[from] mwc_calculus::CalculusError),
    #[error(transparent)]
    Modulation(#[from] mwc_modulation::ModulationError),
    #[error(transparent)]
    Bargmann(#[from] mwc_bargmann::BargmannError),
}

impl HarnessError {
    /// True for errors raised before any numerics run.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Self::Parse(_) | Self::UnknownCheck(_) | Self::InvalidConfig(_) | Self::MemoryGuard { .. } | Self::Field(_)
        )
    }
}
