use num_complex::Complex64 as C64;

use crate::fourier::Interpolator;
use crate::grid::{GridError, Lattice, PhaseGrid, PhasePoint};

/// Samples of a function on the Ξ grid, position index slowest.
#[derive(Debug, Clone, PartialEq)]
pub struct Symbol {
    grid: PhaseGrid,
    values: Vec<C64>,
}

impl Symbol {
    pub fn new(grid: &PhaseGrid, values: Vec<C64>) -> Self {
        assert_eq!(values.len(), grid.nsym(), "symbol sample count");
        Self { grid: *grid, values }
    }

    pub fn zeros(grid: &PhaseGrid) -> Self {
        Self::new(grid, vec![C64::new(0.0, 0.0); grid.nsym()])
    }

    pub fn constant(grid: &PhaseGrid, c: C64) -> Self {
        Self::new(grid, vec![c; grid.nsym()])
    }

    pub fn from_fn(grid: &PhaseGrid, mut f: impl FnMut(&[f64], &[f64]) -> C64) -> Self {
        let np = grid.npos();
        let mut values = Vec::with_capacity(grid.nsym());
        for ix in 0..np {
            let x = grid.position(ix);
            for ik in 0..np {
                values.push(f(&x, &grid.momentum(ik)));
            }
        }
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &PhaseGrid {
        &self.grid
    }
    pub fn values(&self) -> &[C64] {
        &self.values
    }
    pub fn values_mut(&mut self) -> &mut [C64] {
        &mut self.values
    }
    pub fn into_values(self) -> Vec<C64> {
        self.values
    }

    pub fn at_lattice(&self, l: &Lattice) -> C64 {
        self.values[self.grid.index_of(l)]
    }

    /// Trigonometric interpolation at an arbitrary point.
    pub fn eval(&self, p: &PhasePoint) -> C64 {
        Interpolator::new(self).eval(p)
    }

    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }
    pub fn scale(&self, c: C64) -> Self {
        self.map(|v| v * c)
    }
    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        Self::new(&self.grid, self.values.iter().map(|&v| f(v)).collect())
    }
    pub fn zip_with(&self, o: &Self, f: impl Fn(C64, C64) -> C64) -> Self {
        assert_eq!(self.grid, o.grid, "grid mismatch");
        Self::new(&self.grid, self.values.iter().zip(&o.values).map(|(&a, &b)| f(a, b)).collect())
    }
    pub fn add(&self, o: &Self) -> Self {
        self.zip_with(o, |a, b| a + b)
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.zip_with(o, |a, b| a - b)
    }
    pub fn mul(&self, o: &Self) -> Self {
        self.zip_with(o, |a, b| a * b)
    }

    /// Quadrature L² norm on Ξ.
    pub fn norm_l2(&self) -> f64 {
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.grid.weight_phase()).sqrt()
    }

    /// Quadrature integral over Ξ.
    pub fn integral(&self) -> C64 {
        self.values.iter().sum::<C64>() * self.grid.weight_phase()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// `‖self − reference‖ / ‖reference‖` in the quadrature L² norm.
    pub fn rel_l2_diff(&self, reference: &Self) -> f64 {
        self.sub(reference).norm_l2() / reference.norm_l2()
    }
}

/// Bilinear pairing `⟨f, g⟩ = ∫ f g` with no conjugation.
pub fn pair_bilinear(f: &Symbol, g: &Symbol) -> Result<C64, GridError> {
    if f.grid != g.grid {
        return Err(GridError::GridMismatch);
    }
    Ok(f.values.iter().zip(&g.values).map(|(a, b)| a * b).sum::<C64>() * f.grid.weight_phase())
}

/// Samples of a state vector on the X grid.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveFunction {
    grid: PhaseGrid,
    values: Vec<C64>,
}

impl WaveFunction {
    pub fn new(grid: &PhaseGrid, values: Vec<C64>) -> Self {
        assert_eq!(values.len(), grid.npos(), "wave function sample count");
        Self { grid: *grid, values }
    }

    pub fn from_fn(grid: &PhaseGrid, mut f: impl FnMut(&[f64]) -> C64) -> Self {
        Self::new(grid, (0..grid.npos()).map(|i| f(&grid.position(i))).collect())
    }

    pub fn grid(&self) -> &PhaseGrid {
        &self.grid
    }
    pub fn values(&self) -> &[C64] {
        &self.values
    }
    pub fn values_mut(&mut self) -> &mut [C64] {
        &mut self.values
    }

    /// Sesquilinear `⟨self, o⟩ = ∫ conj(self) o`.
    pub fn inner(&self, o: &Self) -> C64 {
        self.values.iter().zip(&o.values).map(|(a, b)| a.conj() * b).sum::<C64>() * self.grid.weight_x()
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    pub fn normalized(&self) -> Self {
        let s = 1.0 / self.norm();
        Self::new(&self.grid, self.values.iter().map(|v| v * s).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.grid, self.values.iter().zip(&o.values).map(|(a, b)| a - b).collect())
    }
}
