use std::f64::consts::PI;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GridError {
    #[error("dimension {0} is not supported (use 1 or 2)")]
    InvalidDimension(usize),
    #[error("points per axis must be even and at least 4, got {0}")]
    InvalidSize(usize),
    #[error("half-extent must be positive and finite, got {0}")]
    InvalidExtent(f64),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("operands live on different grids")]
    GridMismatch,
    #[error("coordinate {coord} is not a multiple of the grid step")]
    OffGrid { coord: f64 },
    #[error("double symbol has no quadrature grid")]
    NotQuadrature,
}

/// Uniform periodic discretization of Ξ = X × X*.
///
/// Positions are `x_j = (j - n/2) dx` with `dx = 2L/n`; momenta are
/// `ξ_k = (k - n/2) dξ` with `dξ = π/L`, so `dx·dξ = 2π/n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseGrid {
    dim: usize,
    n: usize,
    half_extent: f64,
}

impl PhaseGrid {
    pub fn new(dim: usize, n: usize, half_extent: f64) -> Result<Self, GridError> {
        if dim != 1 && dim != 2 {
            return Err(GridError::InvalidDimension(dim));
        }
        if n < 4 || n % 2 != 0 {
            return Err(GridError::InvalidSize(n));
        }
        if !(half_extent.is_finite() && half_extent > 0.0) {
            return Err(GridError::InvalidExtent(half_extent));
        }
        Ok(Self { dim, n, half_extent })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn half_extent(&self) -> f64 {
        self.half_extent
    }
    pub fn dx(&self) -> f64 {
        2.0 * self.half_extent / self.n as f64
    }
    pub fn dxi(&self) -> f64 {
        PI / self.half_extent
    }
    /// Number of configuration-space samples, `n^N`.
    pub fn npos(&self) -> usize {
        self.n.pow(self.dim as u32)
    }
    /// Number of phase-space samples, `n^{2N}`.
    pub fn nsym(&self) -> usize {
        self.npos() * self.npos()
    }
    pub fn weight_x(&self) -> f64 {
        self.dx().powi(self.dim as i32)
    }
    pub fn weight_xi(&self) -> f64 {
        self.dxi().powi(self.dim as i32)
    }
    pub fn weight_phase(&self) -> f64 {
        self.weight_x() * self.weight_xi()
    }

    pub fn x_coord(&self, j: usize) -> f64 {
        (j as f64 - (self.n / 2) as f64) * self.dx()
    }
    pub fn xi_coord(&self, k: usize) -> f64 {
        (k as f64 - (self.n / 2) as f64) * self.dxi()
    }

    /// Per-axis digits of a flat configuration index (first axis slowest).
    pub fn pos_digits(&self, flat: usize) -> [usize; 2] {
        if self.dim == 1 {
            [flat, 0]
        } else {
            [flat / self.n, flat % self.n]
        }
    }

    pub fn pos_flat(&self, digits: &[usize]) -> usize {
        digits[..self.dim].iter().fold(0, |acc, &d| acc * self.n + d)
    }

    pub fn position(&self, flat: usize) -> Vec<f64> {
        let d = self.pos_digits(flat);
        (0..self.dim).map(|a| self.x_coord(d[a])).collect()
    }

    pub fn momentum(&self, flat: usize) -> Vec<f64> {
        let d = self.pos_digits(flat);
        (0..self.dim).map(|a| self.xi_coord(d[a])).collect()
    }

    pub fn phase_point(&self, idx: usize) -> PhasePoint {
        PhasePoint::new(self.position(idx / self.npos()), self.momentum(idx % self.npos()))
    }

    pub fn lattice(&self, pos: &[i64], mom: &[i64]) -> Lattice {
        assert_eq!(pos.len(), self.dim);
        assert_eq!(mom.len(), self.dim);
        Lattice { pos: pos.to_vec(), mom: mom.to_vec() }
    }

    /// Centered lattice label of a flat phase-space index.
    pub fn lattice_of_index(&self, idx: usize) -> Lattice {
        let h = (self.n / 2) as i64;
        let p = self.pos_digits(idx / self.npos());
        let m = self.pos_digits(idx % self.npos());
        Lattice {
            pos: (0..self.dim).map(|a| p[a] as i64 - h).collect(),
            mom: (0..self.dim).map(|a| m[a] as i64 - h).collect(),
        }
    }

    /// Flat index of a lattice label, reduced periodically.
    pub fn index_of(&self, l: &Lattice) -> usize {
        let n = self.n as i64;
        let h = n / 2;
        let dig = |v: i64| (v + h).rem_euclid(n) as usize;
        let p = l.pos.iter().fold(0, |acc, &v| acc * self.n + dig(v));
        let m = l.mom.iter().fold(0, |acc, &v| acc * self.n + dig(v));
        p * self.npos() + m
    }

    /// Lattice label of an on-grid point, or an error naming the first off-grid coordinate.
    pub fn snap(&self, p: &PhasePoint) -> Result<Lattice, GridError> {
        if p.dim() != self.dim {
            return Err(GridError::DimensionMismatch { left: p.dim(), right: self.dim });
        }
        let to_int = |c: f64, step: f64| {
            let r = (c / step).round();
            if (c / step - r).abs() > 1e-9 {
                Err(GridError::OffGrid { coord: c })
            } else {
                Ok(r as i64)
            }
        };
        let pos = p.x.iter().map(|&c| to_int(c, self.dx())).collect::<Result<Vec<_>, _>>()?;
        let mom = p.xi.iter().map(|&c| to_int(c, self.dxi())).collect::<Result<Vec<_>, _>>()?;
        Ok(Lattice { pos, mom })
    }
}

/// A point `X = (x, ξ)` of phase space.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasePoint {
    pub x: Vec<f64>,
    pub xi: Vec<f64>,
}

impl PhasePoint {
    pub fn new(x: Vec<f64>, xi: Vec<f64>) -> Self {
        assert_eq!(x.len(), xi.len(), "position and momentum lengths differ");
        Self { x, xi }
    }
    pub fn zero(dim: usize) -> Self {
        Self::new(vec![0.0; dim], vec![0.0; dim])
    }
    pub fn dim(&self) -> usize {
        self.x.len()
    }
    pub fn neg(&self) -> Self {
        Self::new(self.x.iter().map(|v| -v).collect(), self.xi.iter().map(|v| -v).collect())
    }
    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.x.iter().zip(&o.x).map(|(a, b)| a + b).collect(),
            self.xi.iter().zip(&o.xi).map(|(a, b)| a + b).collect(),
        )
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
}

/// Integer label of a grid point, centered so that `(0, 0)` is the origin.
/// Components are not reduced; `PhaseGrid::index_of` wraps them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    pub pos: Vec<i64>,
    pub mom: Vec<i64>,
}

impl Lattice {
    pub fn zero(dim: usize) -> Self {
        Self { pos: vec![0; dim], mom: vec![0; dim] }
    }
    pub fn to_point(&self, g: &PhaseGrid) -> PhasePoint {
        PhasePoint::new(
            self.pos.iter().map(|&a| a as f64 * g.dx()).collect(),
            self.mom.iter().map(|&b| b as f64 * g.dxi()).collect(),
        )
    }
    pub fn neg(&self) -> Self {
        Self { pos: self.pos.iter().map(|v| -v).collect(), mom: self.mom.iter().map(|v| -v).collect() }
    }
    pub fn add(&self, o: &Self) -> Self {
        Self {
            pos: self.pos.iter().zip(&o.pos).map(|(a, b)| a + b).collect(),
            mom: self.mom.iter().zip(&o.mom).map(|(a, b)| a + b).collect(),
        }
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    /// Whether any component reduces to the Nyquist label `-n/2`.
    pub fn touches_nyquist(&self, n: usize) -> bool {
        let n = n as i64;
        self.pos.iter().chain(&self.mom).any(|&v| (v + n / 2).rem_euclid(n) == 0)
    }
}

/// Symplectic form `σ(X, Y) = y·ξ − x·η`.
pub fn sigma(a: &PhasePoint, b: &PhasePoint) -> Result<f64, GridError> {
    if a.dim() != b.dim() {
        return Err(GridError::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    let mut s = 0.0;
    for j in 0..a.dim() {
        s += b.x[j] * a.xi[j] - a.x[j] * b.xi[j];
    }
    Ok(s)
}
