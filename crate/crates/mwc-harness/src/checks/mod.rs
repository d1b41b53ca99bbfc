//! Check bodies. Every check returns a nonnegative residual; the runner
//! compares it with the tolerance.

use std::collections::BTreeMap;

use mwc_magfield::{FieldSpec, PotentialSpec};
use mwc_phasespace::{
    band_limit, gaussian_symbol, gaussian_wave, hermite_wave, random_bandlimited, PhaseGrid, PhasePoint, Symbol,
    WaveFunction,
};

use crate::config::{FixtureConfig, ScenarioConfig};
use crate::HarnessError;

pub(crate) mod bargmann;
pub(crate) mod calculus;
pub(crate) mod modulation;

pub(crate) type CheckResult = Result<Measurement, HarnessError>;

/// Residual of one check plus named auxiliary numbers for the JSON report.
#[derive(Debug, Clone)]
pub struct Measurement {
    pub residual: f64,
    pub details: BTreeMap<String, f64>,
}

impl Measurement {
    pub(crate) fn new(residual: f64) -> Self {
        Self { residual, details: BTreeMap::new() }
    }

    pub(crate) fn with(mut self, key: &str, value: f64) -> Self {
        self.details.insert(key.to_string(), value);
        self
    }

    /// The largest of several named parts, each also kept as a detail.
    pub(crate) fn max_of(parts: &[(&str, f64)]) -> Self {
        let mut m = Self::new(0.0);
        for (k, v) in parts {
            m.residual = m.residual.max(*v);
            m.details.insert(k.to_string(), *v);
        }
        m
    }
}

pub(crate) struct Context<'a> {
    pub cfg: &'a ScenarioConfig,
    pub grid: PhaseGrid,
    pub field: FieldSpec,
    pub potential: PotentialSpec,
}

impl<'a> Context<'a> {
    pub fn new(cfg: &'a ScenarioConfig) -> Result<Self, HarnessError> {
        Ok(Self { cfg, grid: cfg.phase_grid()?, field: cfg.field_spec()?, potential: cfg.potential()? })
    }

    /// A seed derived from the scenario seed and a per-use salt.
    pub fn seed(&self, salt: u64) -> u64 {
        self.cfg.seed.wrapping_mul(0x0000_0100_0000_01b3).wrapping_add(salt)
    }

    pub fn fixture(&self, name: &str) -> FixtureConfig {
        resolve_fixture(self.cfg, name)
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol, HarnessError> {
        let g = &self.grid;
        match self.fixture(name) {
            FixtureConfig::Gaussian { center, widths, band_limited } => {
                let d = g.dim();
                let s = gaussian_symbol(g, &PhasePoint::new(center[..d].to_vec(), center[d..].to_vec()), widths[0], widths[1]);
                Ok(if band_limited { band_limit(&s) } else { s })
            }
            FixtureConfig::RandomBandlimited { seed } => Ok(random_bandlimited(g, self.seed(seed))),
            _ => Err(HarnessError::InvalidConfig(format!("fixture `{name}` must be a symbol"))),
        }
    }

    pub fn wave(&self, name: &str) -> Result<WaveFunction, HarnessError> {
        let g = &self.grid;
        match self.fixture(name) {
            FixtureConfig::GaussianWave { center, momentum, width } => Ok(gaussian_wave(g, &center, &momentum, width)),
            FixtureConfig::Hermite { orders } => Ok(hermite_wave(g, &orders)),
            _ => Err(HarnessError::InvalidConfig(format!("fixture `{name}` must be a wave function"))),
        }
    }
}

/// The scenario's fixture of that name, or the built-in default.
pub(crate) fn resolve_fixture(cfg: &ScenarioConfig, name: &str) -> FixtureConfig {
    cfg.fixtures.get(name).cloned().unwrap_or_else(|| default_fixture(name, cfg.grid.dim))
}

fn pick(dim: usize, c: [f64; 4]) -> Vec<f64> {
    if dim == 2 {
        c.to_vec()
    } else {
        vec![c[0], c[2]]
    }
}

/// Built-in fixtures. Random fixtures are salted with the scenario seed.
pub fn default_fixture(name: &str, dim: usize) -> FixtureConfig {
    let gauss = |c: [f64; 4], sz: f64, sk: f64, band_limited: bool| FixtureConfig::Gaussian {
        center: pick(dim, c),
        widths: [sz, sk],
        band_limited,
    };
    match name {
        "f" => gauss([0.5, -0.2, 0.1, 0.3], 1.16, 0.61, true),
        "g" => gauss([-0.3, 0.4, -0.2, 0.0], 1.16, 0.61, true),
        "h" => gauss([0.0, 0.2, 0.3, -0.1], 1.4, 0.72, true),
        "k" => gauss([0.2, 0.0, -0.1, 0.2], 1.4, 0.72, true),
        "moyal_f" => gauss([0.5, -0.2, 0.1, 0.3], 1.8, 0.9, false),
        "moyal_g" => gauss([-0.3, 0.4, -0.2, 0.0], 1.8, 0.9, false),
        "bump" => gauss([0.5, -0.2, 0.1, 0.3], 1.1, 0.8, false),
        "window" => FixtureConfig::GaussianWave { center: vec![0.0; dim], momentum: vec![0.0; dim], width: 1.0 },
        _ => FixtureConfig::RandomBandlimited { seed: salt_of(name) },
    }
}

fn salt_of(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

pub(crate) fn op_bytes(g: &PhaseGrid) -> u64 {
    (g.npos() * g.npos()) as u64 * 16
}

pub(crate) fn sym_bytes(g: &PhaseGrid) -> u64 {
    g.nsym() as u64 * 16
}
