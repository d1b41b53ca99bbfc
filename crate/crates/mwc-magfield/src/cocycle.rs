use std::f64::consts::PI;

use mwc_phasespace::{apply_axis, dft_table, sigma, PhaseGrid, PhasePoint, Symbol, C64};

use crate::field::{flux_parallelogram, flux_triangle, FieldSpec};

/// `ω^B(X, Y; z) = exp[−iΓ^B(<z, z + x, z + x + y>)]`.
pub fn cocycle_small(field: &FieldSpec, x: &PhasePoint, y: &PhasePoint, z: &[f64]) -> C64 {
    let p: Vec<f64> = z.iter().zip(&x.x).map(|(a, b)| a + b).collect();
    let q: Vec<f64> = p.iter().zip(&y.x).map(|(a, b)| a + b).collect();
    C64::from_polar(1.0, -flux_triangle(field, z, &p, &q))
}

/// `Ω^B(X, Y; z) = exp[(i/2)σ(X, Y)] · ω^B(X, Y; z)`.
pub fn cocycle_big(field: &FieldSpec, x: &PhasePoint, y: &PhasePoint, z: &[f64]) -> C64 {
    let s = sigma(x, y).expect("cocycle dimension");
    C64::from_polar(1.0, 0.5 * s) * cocycle_small(field, x, y, z)
}

/// Partial Fourier transform in `y` of `exp(−iΓ^B[P(x; y, z)])`,
/// `(2π)^{−N} ∫ dy e^{−iy·ξ} Ω^B[P(x; y, z)]`, sampled on the grid.
pub fn omega_tilde(field: &FieldSpec, grid: &PhaseGrid, z: &[f64]) -> Symbol {
    let (n, dim, np) = (grid.n(), grid.dim(), grid.npos());
    let table = dft_table(n, -1.0);
    let scale = grid.weight_x() / (2.0 * PI).powi(dim as i32);
    let mut out = Vec::with_capacity(grid.nsym());
    for ix in 0..np {
        let x = grid.position(ix);
        let mut row: Vec<C64> = (0..np)
            .map(|ia| C64::from_polar(1.0, -flux_parallelogram(field, &x, &grid.position(ia), z)))
            .collect();
        for axis in 0..dim {
            apply_axis(&mut row, n, dim, axis, &table);
        }
        out.extend(row.into_iter().map(|v| v * scale));
    }
    Symbol::new(grid, out)
}
