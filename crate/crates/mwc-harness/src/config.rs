use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use mwc_magfield::{gauge_shift, transversal_gauge, FieldKind, FieldSpec, GaugeScalar, PotentialSpec};
use mwc_phasespace::PhaseGrid;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{self, Requirement};
use crate::HarnessError;

/// Default ceiling for the predicted peak allocation of a run.
pub const DEFAULT_MEMORY_BYTES: u64 = 2 << 30;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub dim: usize,
    pub n: usize,
    pub half_extent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialTerm {
    pub coeff: f64,
    pub powers: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RhoConfig {
    Sine { amp: f64, wave: Vec<f64> },
    Polynomial { terms: Vec<PolynomialTerm> },
    /// All monomials up to `degree`, coefficients drawn from the scenario seed.
    RandomPolynomial { degree: u32 },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GaugeConfig {
    #[default]
    Transversal,
    /// `A = (b/2)(−x₂, x₁)`; only for constant fields, where it equals the transversal gauge.
    Symmetric,
    /// Transversal gauge plus `dρ`.
    Custom { rho: RhoConfig },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FixtureConfig {
    /// Symbol `exp(−|z−z₀|²/(2 sz²) − |ζ−ζ₀|²/(2 sk²))`; `center` lists `z₀` then `ζ₀`.
    Gaussian {
        center: Vec<f64>,
        widths: [f64; 2],
        #[serde(default)]
        band_limited: bool,
    },
    RandomBandlimited { seed: u64 },
    GaussianWave { center: Vec<f64>, momentum: Vec<f64>, width: f64 },
    Hermite { orders: Vec<usize> },
}

impl FixtureConfig {
    pub fn is_wave(&self) -> bool {
        matches!(self, Self::GaussianWave { .. } | Self::Hermite { .. })
    }

    fn validate(&self, name: &str, dim: usize) -> Result<(), HarnessError> {
        let bad = |what: &str| Err(HarnessError::InvalidConfig(format!("fixture `{name}`: {what}")));
        match self {
            Self::Gaussian { center, widths, .. } => {
                if center.len() != 2 * dim {
                    return bad(&format!("center needs {} entries", 2 * dim));
                }
                if widths.iter().any(|w| !(*w > 0.0)) {
                    return bad("widths must be positive");
                }
            }
            Self::RandomBandlimited { .. } => {}
            Self::GaussianWave { center, momentum, width } => {
                if center.len() != dim || momentum.len() != dim {
                    return bad(&format!("center and momentum need {dim} entries"));
                }
                if !(*width > 0.0) {
                    return bad("width must be positive");
                }
            }
            Self::Hermite { orders } => {
                if orders.len() != dim {
                    return bad(&format!("orders need {dim} entries"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Limits {
    pub memory_bytes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self { memory_bytes: DEFAULT_MEMORY_BYTES }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportConfig {
    /// When false, wall times are written as 0 so that reports are byte-identical across runs.
    pub timings: bool,
}

impl Default for ReportConfig {
    fn default() -> Self {
        Self { timings: true }
    }
}

/// A verification scenario as read from TOML.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub seed: u64,
    pub grid: GridConfig,
    pub field: FieldKind,
    #[serde(default)]
    pub gauge: GaugeConfig,
    #[serde(default)]
    pub fixtures: BTreeMap<String, FixtureConfig>,
    pub checks: Vec<String>,
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
    #[serde(default)]
    pub limits: Limits,
    #[serde(default)]
    pub report: ReportConfig,
}

impl ScenarioConfig {
    pub fn from_toml(text: &str) -> Result<Self, HarnessError> {
        toml::from_str(text).map_err(|e| HarnessError::Parse(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HarnessError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("scenario config serializes")
    }

    pub fn phase_grid(&self) -> Result<PhaseGrid, HarnessError> {
        Ok(PhaseGrid::new(self.grid.dim, self.grid.n, self.grid.half_extent)?)
    }

    pub fn field_spec(&self) -> Result<FieldSpec, HarnessError> {
        Ok(FieldSpec::from_kind(self.grid.dim, self.field.clone())?)
    }

    pub fn potential(&self) -> Result<PotentialSpec, HarnessError> {
        let field = self.field_spec()?;
        let base = transversal_gauge(&field)?;
        Ok(match &self.gauge {
            GaugeConfig::Transversal | GaugeConfig::Symmetric => base,
            GaugeConfig::Custom { rho } => gauge_shift(&base, self.rho(rho)),
        })
    }

    /// The gauge scalar of a custom gauge, with random coefficients drawn from the seed.
    pub fn rho(&self, rho: &RhoConfig) -> GaugeScalar {
        match rho {
            RhoConfig::Sine { amp, wave } => GaugeScalar::Sine { amp: *amp, wave: wave.clone() },
            RhoConfig::Polynomial { terms } => {
                GaugeScalar::Polynomial(terms.iter().map(|t| (t.coeff, t.powers.clone())).collect())
            }
            RhoConfig::RandomPolynomial { degree } => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ 0x9e37_79b9);
                GaugeScalar::random_polynomial(&mut rng, self.grid.dim, *degree)
            }
        }
    }

    pub fn tolerance(&self, id: &str) -> Option<f64> {
        let base = self.tolerances.get(id).copied();
        base.or_else(|| catalog::find(id).map(|c| c.tolerance))
    }

    /// Checks every structural rule and the memory guard; no numerics run here.
    pub fn validate(&self, jobs: usize) -> Result<(), HarnessError> {
        let g = &self.grid;
        if !(1..=2).contains(&g.dim) {
            return Err(HarnessError::InvalidConfig(format!("grid.dim must be 1 or 2, got {}", g.dim)));
        }
        if g.n % 2 != 0 || !(4..=32).contains(&g.n) {
            return Err(HarnessError::InvalidConfig(format!("grid.n must be even and in 4..=32, got {}", g.n)));
        }
        if !(g.half_extent > 0.0) {
            return Err(HarnessError::InvalidConfig("grid.half_extent must be positive".into()));
        }
        let field = self.field_spec()?;
        if self.gauge == GaugeConfig::Symmetric && !matches!(field.kind(), FieldKind::Zero | FieldKind::Constant { .. }) {
            return Err(HarnessError::InvalidConfig("the symmetric gauge needs a constant field".into()));
        }
        if let GaugeConfig::Custom { rho } = &self.gauge {
            let ok = match rho {
                RhoConfig::Sine { wave, .. } => wave.len() == g.dim,
                RhoConfig::Polynomial { terms } => terms.iter().all(|t| t.powers.len() == g.dim),
                RhoConfig::RandomPolynomial { degree } => *degree >= 1,
            };
            if !ok {
                return Err(HarnessError::InvalidConfig("gauge.rho does not match grid.dim".into()));
            }
        }
        for (name, f) in &self.fixtures {
            f.validate(name, g.dim)?;
        }
        let mut specs = Vec::new();
        for id in &self.checks {
            let spec = catalog::find(id).ok_or_else(|| HarnessError::UnknownCheck(id.clone()))?;
            if spec.requires == Requirement::ConstantField
                && !matches!(field.kind(), FieldKind::Zero | FieldKind::Constant { .. })
            {
                return Err(HarnessError::InvalidConfig(format!("check `{id}` needs a constant field")));
            }
            specs.push(spec);
        }
        for (id, tol) in &self.tolerances {
            if catalog::find(id).is_none() {
                return Err(HarnessError::UnknownCheck(id.clone()));
            }
            if !(*tol > 0.0) {
                return Err(HarnessError::InvalidConfig(format!("tolerance for `{id}` must be positive")));
            }
        }
        let grid = self.phase_grid()?;
        let mut sizes: Vec<(u64, &str)> = specs.iter().map(|s| ((s.memory)(&grid), s.id)).collect();
        sizes.sort_by(|a, b| b.0.cmp(&a.0));
        let concurrent = jobs.max(1).min(sizes.len().max(1));
        let predicted: u64 = sizes.iter().take(concurrent).map(|s| s.0).sum();
        if predicted > self.limits.memory_bytes {
            return Err(HarnessError::MemoryGuard {
                predicted,
                limit: self.limits.memory_bytes,
                largest: sizes.first().map(|s| s.1.to_string()).unwrap_or_default(),
            });
        }
        Ok(())
    }
}
