use std::f64::consts::PI;

use nalgebra::DMatrix;

use mwc_magfield::{circulation, PotentialSpec};
use mwc_phasespace::{
    apply_axis, coefficients, dft_table, from_coefficients, Lattice, PhaseGrid, PhasePoint, Symbol, WaveFunction, C64,
};

use crate::matrix::{OperatorMatrix, ShiftOp};
use crate::CalculusError;

/// Quantization `Op^A` on a fixed grid, with the magnetic phase matrix
/// `Φ_ij = exp(−iΓ^A([x_i, x_j]))` computed once.
///
/// The non-magnetic part expands a symbol as `f = Σ_X c_X e_X` and sums the
/// corresponding shift operators; `Op^A(f)` is the entrywise product of that
/// matrix with `Φ`. Half-step midpoints are handled implicitly by the
/// trigonometric expansion.
#[derive(Debug, Clone)]
pub struct Quantizer {
    grid: PhaseGrid,
    potential: PotentialSpec,
    phase: DMatrix<C64>,
    pos: Vec<[f64; 2]>,
    /// `shift[ia · np + i]` is the column reached from row `i` by the label `ia`.
    shift: Vec<usize>,
}

fn centered(g: &PhaseGrid, flat: usize) -> [i64; 2] {
    let d = g.pos_digits(flat);
    let h = (g.n() / 2) as i64;
    [d[0] as i64 - h, d[1] as i64 - h]
}

/// Row-and-shift column index with periodic wraparound.
fn shifted(g: &PhaseGrid, i: usize, by: &[i64]) -> usize {
    let n = g.n() as i64;
    let d = g.pos_digits(i);
    let mut out = [0usize; 2];
    for a in 0..g.dim() {
        out[a] = (d[a] as i64 + by[a]).rem_euclid(n) as usize;
    }
    g.pos_flat(&out)
}

impl Quantizer {
    pub fn new(grid: &PhaseGrid, potential: &PotentialSpec) -> Result<Self, CalculusError> {
        if potential.dim() != grid.dim() {
            return Err(CalculusError::DimensionMismatch { grid: grid.dim(), other: potential.dim() });
        }
        let np = grid.npos();
        let pos: Vec<Vec<f64>> = (0..np).map(|i| grid.position(i)).collect();
        let mut phase = DMatrix::from_element(np, np, C64::new(1.0, 0.0));
        for i in 0..np {
            for j in (i + 1)..np {
                let p = C64::from_polar(1.0, -circulation(potential, &pos[i], &pos[j]));
                phase[(i, j)] = p;
                phase[(j, i)] = p.conj();
            }
        }
        let mut shift = vec![0; np * np];
        for ia in 0..np {
            let a = centered(grid, ia);
            for i in 0..np {
                shift[ia * np + i] = shifted(grid, i, &a[..grid.dim()]);
            }
        }
        let pos = pos.iter().map(|p| [p[0], p.get(1).copied().unwrap_or(0.0)]).collect();
        Ok(Self { grid: *grid, potential: potential.clone(), phase, pos, shift })
    }

    pub fn grid(&self) -> &PhaseGrid {
        &self.grid
    }
    pub fn potential(&self) -> &PotentialSpec {
        &self.potential
    }
    pub fn phase_matrix(&self) -> &DMatrix<C64> {
        &self.phase
    }

    /// `exp(∓iπ a·b/n)`: the half-shift phase `e^{∓i y_a·η_b/2}` in lattice units.
    fn half_shift(&self, ia: usize, ib: usize, sign: f64) -> C64 {
        let (a, b) = (centered(&self.grid, ia), centered(&self.grid, ib));
        let dot: i64 = (0..self.grid.dim()).map(|d| a[d] * b[d]).sum();
        C64::from_polar(1.0, sign * PI * dot as f64 / self.grid.n() as f64)
    }

    /// `Op^A(f)`.
    pub fn op(&self, f: &Symbol) -> OperatorMatrix {
        let g = &self.grid;
        let (n, dim, np) = (g.n(), g.dim(), g.npos());
        let mut c = coefficients(f).into_values();
        for ia in 0..np {
            for ib in 0..np {
                c[ia * np + ib] *= self.half_shift(ia, ib, -1.0);
            }
        }
        let minus = dft_table(n, -1.0);
        for axis in dim..2 * dim {
            apply_axis(&mut c, n, 2 * dim, axis, &minus);
        }
        let mut t = DMatrix::zeros(np, np);
        for ia in 0..np {
            for i in 0..np {
                let j = self.shift[ia * np + i];
                t[(i, j)] = c[ia * np + i] * self.phase[(i, j)];
            }
        }
        OperatorMatrix::from_matrix(g, t)
    }

    /// The unique symbol with `Op^A(f) = T`.
    pub fn symbol_of(&self, t: &OperatorMatrix) -> Symbol {
        let g = &self.grid;
        let (n, dim, np) = (g.n(), g.dim(), g.npos());
        let m = t.matrix();
        let mut c = vec![C64::new(0.0, 0.0); np * np];
        for ia in 0..np {
            for i in 0..np {
                let j = self.shift[ia * np + i];
                c[ia * np + i] = m[(i, j)] * self.phase[(i, j)].conj();
            }
        }
        let plus = dft_table(n, 1.0);
        for axis in dim..2 * dim {
            apply_axis(&mut c, n, 2 * dim, axis, &plus);
        }
        let scale = 1.0 / np as f64;
        for ia in 0..np {
            for ib in 0..np {
                c[ia * np + ib] *= self.half_shift(ia, ib, 1.0) * scale;
            }
        }
        from_coefficients(&Symbol::new(g, c))
    }

    /// Weyl system `op^A(Y)` in monomial form; `Y` may be any lattice label.
    pub fn weyl_shift(&self, y: &Lattice) -> ShiftOp {
        let g = &self.grid;
        let yp = y.to_point(g);
        let np = g.npos();
        let mut col = Vec::with_capacity(np);
        let mut phase = Vec::with_capacity(np);
        for i in 0..np {
            let j = shifted(g, i, &y.pos);
            let x = &self.pos[i];
            let ph: f64 = (0..g.dim()).map(|d| (x[d] + 0.5 * yp.x[d]) * yp.xi[d]).sum();
            col.push(j);
            phase.push(C64::from_polar(1.0, -ph) * self.phase[(i, j)]);
        }
        ShiftOp { col, phase }
    }

    /// `[op^A(y, η)u](x) = e^{−i(x + y/2)·η} e^{−iΓ^A([x, x + y])} u(x + y)`.
    pub fn weyl_system(&self, y: &Lattice) -> OperatorMatrix {
        self.weyl_shift(y).to_dense(&self.grid)
    }

    /// `f #^B g` through the representation property.
    pub fn product(&self, f: &Symbol, g: &Symbol) -> Symbol {
        self.symbol_of(&self.op(f).mul(&self.op(g)))
    }

    /// Symbol of the rank-one operator `|u⟩⟨v|`.
    pub fn wigner(&self, u: &WaveFunction, v: &WaveFunction) -> Symbol {
        self.symbol_of(&OperatorMatrix::rank_one(u, v))
    }

    /// `Θ^B_Z(f) = e_Z #^B f #^B e_{−Z}`.
    pub fn mag_translate(&self, z: &Lattice, f: &Symbol) -> Symbol {
        let m = self.op(f).into_matrix();
        let left = self.weyl_shift(z).left_mul(&m);
        let both = self.weyl_shift(&z.neg()).right_mul(&left);
        self.symbol_of(&OperatorMatrix::from_matrix(&self.grid, both))
    }

    /// `Θ^B_{Y,Z}(f) = e_{−Y} #^B f #^B e_{Y−Z}`.
    pub fn mag_translate_pair(&self, y: &Lattice, z: &Lattice, f: &Symbol) -> Symbol {
        let m = self.op(f).into_matrix();
        let left = self.weyl_shift(&y.neg()).left_mul(&m);
        let both = self.weyl_shift(&y.sub(z)).right_mul(&left);
        self.symbol_of(&OperatorMatrix::from_matrix(&self.grid, both))
    }
}

fn check_grid(a: &Symbol, b: &Symbol) -> Result<(), CalculusError> {
    if a.grid() != b.grid() {
        return Err(CalculusError::Grid(mwc_phasespace::GridError::GridMismatch));
    }
    Ok(())
}

/// `Op^A(f)` without keeping the quantizer.
pub fn op_weyl(a: &PotentialSpec, f: &Symbol) -> Result<OperatorMatrix, CalculusError> {
    Ok(Quantizer::new(f.grid(), a)?.op(f))
}

pub fn symbol_of(a: &PotentialSpec, t: &OperatorMatrix) -> Result<Symbol, CalculusError> {
    Ok(Quantizer::new(t.grid(), a)?.symbol_of(t))
}

/// `op^A(Y)` for an on-grid phase-space point.
pub fn weyl_system(a: &PotentialSpec, grid: &PhaseGrid, y: &PhasePoint) -> Result<OperatorMatrix, CalculusError> {
    let l = grid.snap(y)?;
    Ok(Quantizer::new(grid, a)?.weyl_system(&l))
}

pub fn moyal_kernel_route(f: &Symbol, g: &Symbol, a: &PotentialSpec) -> Result<Symbol, CalculusError> {
    check_grid(f, g)?;
    Ok(Quantizer::new(f.grid(), a)?.product(f, g))
}

/// Magnetic Wigner transform: the symbol of `|u⟩⟨v|`, so that
/// `⟨v, Op^A(f) u⟩ = (2π)^{−N} ∫ f · wigner(u, v)`.
pub fn wigner(a: &PotentialSpec, u: &WaveFunction, v: &WaveFunction) -> Result<Symbol, CalculusError> {
    Ok(Quantizer::new(u.grid(), a)?.wigner(u, v))
}

pub fn mag_translate(z: &PhasePoint, f: &Symbol, a: &PotentialSpec) -> Result<Symbol, CalculusError> {
    let l = f.grid().snap(z)?;
    Ok(Quantizer::new(f.grid(), a)?.mag_translate(&l, f))
}

pub fn mag_translate_pair(
    y: &PhasePoint,
    z: &PhasePoint,
    f: &Symbol,
    a: &PotentialSpec,
) -> Result<Symbol, CalculusError> {
    let (ly, lz) = (f.grid().snap(y)?, f.grid().snap(z)?);
    Ok(Quantizer::new(f.grid(), a)?.mag_translate_pair(&ly, &lz, f))
}
