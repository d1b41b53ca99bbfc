use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mwc_harness::report::{summary_line, write_reports};
use mwc_harness::{calibrate, catalog, run_scenario, RunOptions, ScenarioConfig};

/// Verification runner for the magnetic Weyl calculus crates.
#[derive(Parser)]
#[command(name = "mwc-verify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Scenario file (TOML).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Directory for report.csv and report.jsonl.
    #[arg(long, global = true, default_value = "mwc-report")]
    out: PathBuf,
    /// Overrides the scenario seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Multiplies every tolerance.
    #[arg(long, global = true, default_value_t = 1.0)]
    tolerance_scale: f64,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks listed in the scenario.
    Verify,
    /// Print every known check with its default tolerance.
    ListChecks,
    /// Measure the normalization constants on the scenario grid.
    Calibrate {
        /// Number of random symbols.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

/// Exit codes: 0 all checks pass, 1 some check fails, 2 invalid input.
fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(cli: &Cli) -> Result<ScenarioConfig, mwc_harness::HarnessError> {
    match &cli.config {
        Some(p) => ScenarioConfig::load(p),
        None => Err(mwc_harness::HarnessError::InvalidConfig("--config <path> is required".into())),
    }
}

fn run(cli: &Cli) -> Result<bool, mwc_harness::HarnessError> {
    let opts = RunOptions { seed: cli.seed, tolerance_scale: cli.tolerance_scale, jobs: cli.jobs };
    match &cli.command {
        Command::ListChecks => {
            for c in catalog() {
                let kind = if c.decreasing { "decreasing" } else { "" };
                println!("{:<28} {:>8.1e}  {:<14} {}", c.id, c.tolerance, kind, c.summary);
                if !c.fixtures.is_empty() {
                    println!("{:<28} fixtures: {}", "", c.fixtures.join(", "));
                }
            }
            Ok(true)
        }
        Command::Verify => {
            let cfg = load(cli)?;
            let reports = run_scenario(&cfg, &opts)?;
            for r in &reports {
                println!("{}", summary_line(r));
            }
            let (csv, jsonl) = write_reports(&cli.out, &reports)?;
            let failed = reports.iter().filter(|r| !r.pass).count();
            println!("{} checks, {} failed; wrote {} and {}", reports.len(), failed, csv.display(), jsonl.display());
            Ok(failed == 0)
        }
        Command::Calibrate { samples } => {
            let mut cfg = load(cli)?;
            if let Some(s) = cli.seed {
                cfg.seed = s;
            }
            cfg.checks.clear();
            cfg.validate(1)?;
            let c = calibrate(&cfg, *samples)?;
            println!("{}", serde_json::to_string_pretty(&c).expect("calibration serializes"));
            Ok(true)
        }
    }
}
