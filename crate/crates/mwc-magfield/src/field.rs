use serde::{Deserialize, Serialize};

use crate::quad;

/// Closed-form profile of the single independent component `B_12`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldKind {
    Zero,
    Constant { b: f64 },
    /// `B_12(x) = b0 + b1 x_1 + b2 x_2`.
    Linear { b0: f64, b1: f64, b2: f64 },
    /// `B_12(x) = amp · exp(−|x − center|² / (2 width²))`.
    Bump { amp: f64, center: [f64; 2], width: f64 },
}

/// A magnetic 2-form on `R^N`. For `N = 1` only the zero field exists.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldSpec {
    dim: usize,
    kind: FieldKind,
}

impl FieldSpec {
    pub fn zero(dim: usize) -> Self {
        Self { dim, kind: FieldKind::Zero }
    }
    pub fn constant(b: f64) -> Self {
        Self { dim: 2, kind: FieldKind::Constant { b } }
    }
    pub fn linear(b0: f64, b1: f64, b2: f64) -> Self {
        Self { dim: 2, kind: FieldKind::Linear { b0, b1, b2 } }
    }
    pub fn bump(amp: f64, center: [f64; 2], width: f64) -> Self {
        Self { dim: 2, kind: FieldKind::Bump { amp, center, width } }
    }

    /// Validating constructor used by configuration loaders.
    pub fn from_kind(dim: usize, kind: FieldKind) -> Result<Self, crate::FieldError> {
        if dim == 1 && kind != FieldKind::Zero {
            return Err(crate::FieldError::NonzeroFieldInOneDimension);
        }
        if let FieldKind::Bump { width, .. } = kind {
            if !(width > 0.0) {
                return Err(crate::FieldError::BadParameter("bump width must be positive"));
            }
        }
        Ok(Self { dim, kind })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }
    pub fn is_zero(&self) -> bool {
        self.kind == FieldKind::Zero
    }

    /// Whether `B_12` is a polynomial, so that low-order rules are exact.
    pub(crate) fn is_polynomial(&self) -> bool {
        !matches!(self.kind, FieldKind::Bump { .. })
    }

    pub fn b12(&self, x: &[f64]) -> f64 {
        match self.kind {
            FieldKind::Zero => 0.0,
            FieldKind::Constant { b } => b,
            FieldKind::Linear { b0, b1, b2 } => b0 + b1 * x[0] + b2 * x[1],
            FieldKind::Bump { amp, center, width } => {
                let r2 = (x[0] - center[0]).powi(2) + (x[1] - center[1]).powi(2);
                amp * (-r2 / (2.0 * width * width)).exp()
            }
        }
    }

    /// `B_jk(x)`, antisymmetric in `(j, k)`.
    pub fn component(&self, j: usize, k: usize, x: &[f64]) -> f64 {
        match (j, k) {
            (0, 1) => self.b12(x),
            (1, 0) => -self.b12(x),
            _ => 0.0,
        }
    }
}

fn cross(u: &[f64], v: &[f64]) -> f64 {
    u[0] * v[1] - u[1] * v[0]
}

/// Flux `Γ^B(<a, b, c>)` through the oriented simplex `a + s(b−a) + t(c−a)`.
pub fn flux_triangle(field: &FieldSpec, a: &[f64], b: &[f64], c: &[f64]) -> f64 {
    if field.dim < 2 {
        return 0.0;
    }
    let u = [b[0] - a[0], b[1] - a[1]];
    let v = [c[0] - a[0], c[1] - a[1]];
    let jac = cross(&u, &v);
    match field.kind {
        FieldKind::Zero => 0.0,
        FieldKind::Constant { b } => 0.5 * b * jac,
        FieldKind::Linear { .. } => {
            let centroid = [(a[0] + b[0] + c[0]) / 3.0, (a[1] + b[1] + c[1]) / 3.0];
            0.5 * field.b12(&centroid) * jac
        }
        FieldKind::Bump { .. } => {
            // collapsed-square map of the simplex: s = p, t = (1 − p) q
            let r = quad::high();
            let mut acc = 0.0;
            for (&p, &wp) in r.nodes.iter().zip(&r.weights) {
                for (&q, &wq) in r.nodes.iter().zip(&r.weights) {
                    let t = (1.0 - p) * q;
                    let x = [a[0] + p * u[0] + t * v[0], a[1] + p * u[1] + t * v[1]];
                    acc += wp * wq * (1.0 - p) * field.b12(&x);
                }
            }
            acc * jac
        }
    }
}

/// `Γ^B[P(x; y, z)] = Σ_jk y_j z_k ∫_{−1/2}^{1/2} ds ∫_{−1}^{0} dt B_jk(x + s y + t z)`.
pub fn flux_parallelogram(field: &FieldSpec, x: &[f64], y: &[f64], z: &[f64]) -> f64 {
    if field.dim < 2 {
        return 0.0;
    }
    let jac = cross(y, z);
    match field.kind {
        FieldKind::Zero => 0.0,
        FieldKind::Constant { b } => b * jac,
        FieldKind::Linear { .. } => field.b12(&[x[0] - 0.5 * z[0], x[1] - 0.5 * z[1]]) * jac,
        FieldKind::Bump { .. } => {
            let r = quad::high();
            let mut acc = 0.0;
            for (&s, &ws) in r.nodes.iter().zip(&r.weights) {
                for (&t, &wt) in r.nodes.iter().zip(&r.weights) {
                    let (s, t) = (s - 0.5, t - 1.0);
                    let p = [x[0] + s * y[0] + t * z[0], x[1] + s * y[1] + t * z[1]];
                    acc += ws * wt * field.b12(&p);
                }
            }
            acc * jac
        }
    }
}
