use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::field::{FieldKind, FieldSpec};
use crate::{quad, FieldError};

/// A smooth scalar `ρ` with exact gradient, used for gauge shifts `A → A + dρ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GaugeScalar {
    Constant(f64),
    Linear(Vec<f64>),
    /// `Σ c · Π_j x_j^{p_j}`.
    Polynomial(Vec<(f64, Vec<u32>)>),
    /// `amp · sin(wave · x)`.
    Sine { amp: f64, wave: Vec<f64> },
}

impl GaugeScalar {
    pub fn value(&self, x: &[f64]) -> f64 {
        match self {
            Self::Constant(c) => *c,
            Self::Linear(c) => c.iter().zip(x).map(|(a, b)| a * b).sum(),
            Self::Polynomial(terms) => terms
                .iter()
                .map(|(c, p)| c * p.iter().zip(x).map(|(&e, &v)| v.powi(e as i32)).product::<f64>())
                .sum(),
            Self::Sine { amp, wave } => amp * wave.iter().zip(x).map(|(k, v)| k * v).sum::<f64>().sin(),
        }
    }

    pub fn gradient(&self, x: &[f64]) -> Vec<f64> {
        let dim = x.len();
        match self {
            Self::Constant(_) => vec![0.0; dim],
            Self::Linear(c) => c.clone(),
            Self::Polynomial(terms) => (0..dim)
                .map(|d| {
                    terms
                        .iter()
                        .filter(|(_, p)| p[d] > 0)
                        .map(|(c, p)| {
                            let mut v = c * p[d] as f64;
                            for (j, (&e, &xv)) in p.iter().zip(x).enumerate() {
                                v *= xv.powi(if j == d { e as i32 - 1 } else { e as i32 });
                            }
                            v
                        })
                        .sum()
                })
                .collect(),
            Self::Sine { amp, wave } => {
                let c = wave.iter().zip(x).map(|(k, v)| k * v).sum::<f64>().cos();
                wave.iter().map(|k| amp * k * c).collect()
            }
        }
    }

    /// Random polynomial with every monomial of total degree `1..=degree`.
    pub fn random_polynomial(rng: &mut impl Rng, dim: usize, degree: u32) -> Self {
        let mut terms = Vec::new();
        for total in 1..=degree {
            if dim == 1 {
                terms.push((rng.gen_range(-0.5..0.5), vec![total]));
            } else {
                for e0 in 0..=total {
                    terms.push((rng.gen_range(-0.5..0.5), vec![e0, total - e0]));
                }
            }
        }
        Self::Polynomial(terms)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PotentialBase {
    Zero,
    Constant { a: Vec<f64> },
    /// `A_j(x) = −Σ_k ∫_0^1 s B_jk(s x) x_k ds`.
    Transversal { field: FieldSpec },
}

/// A vector potential: a base 1-form plus a list of exact gauge terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    dim: usize,
    base: PotentialBase,
    gauges: Vec<GaugeScalar>,
}

impl PotentialSpec {
    pub fn zero(dim: usize) -> Self {
        Self { dim, base: PotentialBase::Zero, gauges: Vec::new() }
    }
    pub fn constant(a: Vec<f64>) -> Self {
        Self { dim: a.len(), base: PotentialBase::Constant { a }, gauges: Vec::new() }
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn base(&self) -> &PotentialBase {
        &self.base
    }
    pub fn gauges(&self) -> &[GaugeScalar] {
        &self.gauges
    }
    /// The field this potential was built from, when known.
    pub fn field(&self) -> Option<&FieldSpec> {
        match &self.base {
            PotentialBase::Transversal { field } => Some(field),
            _ => None,
        }
    }

    /// `∫_0^1 s B_12(s x) ds`, the radial moment entering the transversal gauge.
    fn radial_moment(field: &FieldSpec, x: &[f64]) -> f64 {
        match *field.kind() {
            FieldKind::Zero => 0.0,
            FieldKind::Constant { b } => 0.5 * b,
            FieldKind::Linear { b0, b1, b2 } => 0.5 * b0 + (b1 * x[0] + b2 * x[1]) / 3.0,
            FieldKind::Bump { .. } => quad::high().integrate(0.0, 1.0, |s| s * field.b12(&[s * x[0], s * x[1]])),
        }
    }

    fn base_eval(&self, x: &[f64]) -> Vec<f64> {
        match &self.base {
            PotentialBase::Zero => vec![0.0; self.dim],
            PotentialBase::Constant { a } => a.clone(),
            PotentialBase::Transversal { field } => {
                if self.dim < 2 {
                    return vec![0.0; self.dim];
                }
                let m = Self::radial_moment(field, x);
                vec![-m * x[1], m * x[0]]
            }
        }
    }

    /// Components `A_j(x)`.
    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        let mut a = self.base_eval(x);
        for g in &self.gauges {
            for (ai, gi) in a.iter_mut().zip(g.gradient(x)) {
                *ai += gi;
            }
        }
        a
    }
}

/// `Γ^A([x, y]) = ∫_0^1 A(x + t(y − x))·(y − x) dt`, traversed from `x` to `y`.
///
/// Gauge terms contribute `ρ(y) − ρ(x)` exactly.
pub fn circulation(a: &PotentialSpec, x: &[f64], y: &[f64]) -> f64 {
    let d: Vec<f64> = x.iter().zip(y).map(|(p, q)| q - p).collect();
    let rule = match &a.base {
        PotentialBase::Transversal { field } if !field.is_polynomial() => quad::high(),
        _ => quad::low(),
    };
    let base = match &a.base {
        PotentialBase::Zero => 0.0,
        PotentialBase::Constant { a: c } => c.iter().zip(&d).map(|(u, v)| u * v).sum(),
        PotentialBase::Transversal { .. } => rule.integrate(0.0, 1.0, |t| {
            let p: Vec<f64> = x.iter().zip(&d).map(|(xi, di)| xi + t * di).collect();
            a.base_eval(&p).iter().zip(&d).map(|(u, v)| u * v).sum()
        }),
    };
    base + a.gauges.iter().map(|g| g.value(y) - g.value(x)).sum::<f64>()
}

/// The transversal (Poincaré) gauge of a field; for constant fields this is
/// the symmetric gauge `A = (b/2)(−x_2, x_1)`.
pub fn transversal_gauge(field: &FieldSpec) -> Result<PotentialSpec, FieldError> {
    if field.dim() == 1 && !field.is_zero() {
        return Err(FieldError::NonzeroFieldInOneDimension);
    }
    Ok(PotentialSpec { dim: field.dim(), base: PotentialBase::Transversal { field: field.clone() }, gauges: Vec::new() })
}

/// `A' = A + dρ`.
pub fn gauge_shift(a: &PotentialSpec, rho: GaugeScalar) -> PotentialSpec {
    let mut out = a.clone();
    out.gauges.push(rho);
    out
}

/// Central-difference `∂_1 A_2 − ∂_2 A_1`; zero in one dimension.
pub fn curl(a: &PotentialSpec, x: &[f64]) -> f64 {
    if a.dim < 2 {
        return 0.0;
    }
    let h = 1e-5;
    let at = |dx: f64, dy: f64| a.eval(&[x[0] + dx, x[1] + dy]);
    let d1a2 = (at(h, 0.0)[1] - at(-h, 0.0)[1]) / (2.0 * h);
    let d2a1 = (at(0.0, h)[0] - at(0.0, -h)[0]) / (2.0 * h);
    d1a2 - d2a1
}
