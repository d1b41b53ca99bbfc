use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::catalog::{find, CheckSpec};
use crate::checks::{resolve_fixture, Context};
use crate::config::ScenarioConfig;
use crate::report::CheckReport;
use crate::HarnessError;

#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Replaces the scenario seed when set.
    pub seed: Option<u64>,
    /// Multiplies every tolerance.
    pub tolerance_scale: f64,
    /// Worker threads; 0 means one per available core.
    pub jobs: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { seed: None, tolerance_scale: 1.0, jobs: 0 }
    }
}

impl RunOptions {
    pub fn threads(&self) -> usize {
        if self.jobs > 0 {
            self.jobs
        } else {
            std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
        }
    }
}

/// The scenario after command-line overrides.
pub fn effective_config(cfg: &ScenarioConfig, opts: &RunOptions) -> ScenarioConfig {
    let mut c = cfg.clone();
    if let Some(s) = opts.seed {
        c.seed = s;
    }
    c
}

pub(crate) fn digest(cfg: &ScenarioConfig, spec: &CheckSpec, tolerance: f64) -> String {
    let fixtures: BTreeMap<&str, _> = spec.fixtures.iter().map(|n| (*n, resolve_fixture(cfg, n))).collect();
    let canonical = serde_json::json!({
        "id": spec.id,
        "grid": cfg.grid,
        "field": cfg.field,
        "gauge": cfg.gauge,
        "seed": cfg.seed,
        "tolerance": tolerance,
        "fixtures": fixtures,
    });
    let bytes = serde_json::to_vec(&canonical).expect("canonical inputs serialize");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Validates the scenario, then runs its checks in order on a pool of
/// `opts.jobs` threads. Validation failures return before any numerics.
pub fn run_scenario(cfg: &ScenarioConfig, opts: &RunOptions) -> Result<Vec<CheckReport>, HarnessError> {
    if !(opts.tolerance_scale.is_finite() && opts.tolerance_scale > 0.0) {
        return Err(HarnessError::InvalidConfig(format!(
            "tolerance scale must be positive and finite, got {}",
            opts.tolerance_scale
        )));
    }
    let cfg = effective_config(cfg, opts);
    let threads = opts.threads();
    cfg.validate(threads)?;
    if cfg.checks.is_empty() {
        return Ok(Vec::new());
    }
    let specs: Vec<&CheckSpec> = cfg.checks.iter().map(|id| find(id).expect("validated")).collect();
    let ctx = Context::new(&cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| HarnessError::InvalidConfig(format!("thread pool: {e}")))?;
    pool.install(|| {
        specs
            .par_iter()
            .map(|spec| {
                let tolerance = cfg.tolerance(spec.id).expect("known id") * opts.tolerance_scale;
                let start = Instant::now();
                let m = spec.measure(&ctx)?;
                let seconds = if cfg.report.timings { start.elapsed().as_secs_f64() } else { 0.0 };
                Ok(CheckReport {
                    id: spec.id.to_string(),
                    inputs_digest: digest(&cfg, spec, tolerance),
                    residual: m.residual,
                    tolerance,
                    pass: m.residual.is_finite() && m.residual <= tolerance,
                    seconds,
                    grid: cfg.grid.clone(),
                    field: cfg.field.clone(),
                    details: m.details,
                })
            })
            .collect()
    })
}
