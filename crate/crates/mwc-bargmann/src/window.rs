
use rayon::prelude::*;

use mwc_calculus::Quantizer;
use mwc_magfield::{flux_triangle, transversal_gauge, FieldSpec, PotentialSpec};
use mwc_phasespace::{PhaseGrid, PhasePoint, Symbol, WaveFunction, C64};

use crate::coherent::Bargmann;
use crate::BargmannError;

impl Bargmann {
    /// `h(B, v) = V^A_{v^A, v^A}`, the symbol of the projection onto `v^A`.
    pub fn window(&self) -> Symbol {
        self.quantizer().wigner(self.fiducial(), self.fiducial())
    }
}

/// `h(B, v)` computed in the transversal gauge of `field`.
pub fn wigner_window(field: &FieldSpec, grid: &PhaseGrid, v: &WaveFunction) -> Result<Symbol, BargmannError> {
    let a = transversal_gauge(field).map_err(|_| mwc_calculus::CalculusError::DimensionMismatch {
        grid: grid.dim(),
        other: field.dim(),
    })?;
    Ok(Bargmann::new(grid, &a, v)?.window())
}

/// `h(B, v)(z, ζ) = ∫ dy e^{−iy·ζ} e^{iΓ^B(<0, z+y/2, z−y/2>)} v(z+y/2) conj v(z−y/2)`
/// by the trapezoidal rule on `[−reach, reach]^N` with `steps` intervals per axis.
/// The Fourier sign follows the plane-wave convention `e_X(Z) = e^{−iσ(X, Z)}`
/// used by the quantization.
pub fn wigner_window_explicit(
    field: &FieldSpec,
    v: impl Fn(&[f64]) -> C64 + Sync,
    points: &[PhasePoint],
    reach: f64,
    steps: usize,
) -> Vec<C64> {
    let dim = field.dim();
    let h = 2.0 * reach / steps as f64;
    let nodes: Vec<f64> = (0..=steps).map(|k| -reach + k as f64 * h).collect();
    let total = nodes.len().pow(dim as u32);
    let origin = vec![0.0; dim];
    points
        .par_iter()
        .map(|p| {
            let mut acc = C64::new(0.0, 0.0);
            for idx in 0..total {
                let (i0, i1) = if dim == 1 { (idx, 0) } else { (idx / nodes.len(), idx % nodes.len()) };
                let y: Vec<f64> = [nodes[i0], nodes[i1]][..dim].to_vec();
                let a: Vec<f64> = (0..dim).map(|j| p.x[j] + y[j] / 2.0).collect();
                let b: Vec<f64> = (0..dim).map(|j| p.x[j] - y[j] / 2.0).collect();
                let ph: f64 = -(0..dim).map(|j| y[j] * p.xi[j]).sum::<f64>() + flux_triangle(field, &origin, &a, &b);
                let edge = [i0, i1][..dim].iter().filter(|&&k| k == 0 || k == steps).count();
                acc += C64::from_polar(0.5f64.powi(edge as i32), ph) * v(&a) * v(&b).conj();
            }
            acc * h.powi(dim as i32)
        })
        .collect()
}

/// `𝔳^B(Z)(f)` through the flux form
/// `(2π)^{−N} ∭ dx dy dξ e^{i(x−y)·(ξ−ζ)} f((x+y)/2, ξ) e^{iΦ} conj v(x−z) v(y−z)`,
/// `Φ = Γ^B(<y, x, x−z>) + Γ^B(<y, x−z, 0>) + Γ^B(<y, 0, y−z>)`.
///
/// The momentum integral is the non-magnetic Weyl kernel of `f`; the fluxes and
/// the fiducial vector are evaluated off the grid, so no magnetic phase matrix
/// is involved.
pub fn coherent_functional_explicit(
    field: &FieldSpec,
    v: impl Fn(&[f64]) -> C64,
    z: &PhasePoint,
    f: &Symbol,
) -> Result<C64, BargmannError> {
    let g = *f.grid();
    let plain = Quantizer::new(&g, &PotentialSpec::zero(g.dim()))?.op(f);
    let np = g.npos();
    let pos: Vec<Vec<f64>> = (0..np).map(|i| g.position(i)).collect();
    let shifted: Vec<Vec<f64>> = pos.iter().map(|x| x.iter().zip(&z.x).map(|(a, b)| a - b).collect()).collect();
    let vs: Vec<C64> = shifted.iter().map(|d| v(d)).collect();
    let origin = vec![0.0; g.dim()];
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..np {
        for j in 0..np {
            let (x, y) = (&pos[i], &pos[j]);
            let kin: f64 = (0..g.dim()).map(|k| (x[k] - y[k]) * z.xi[k]).sum();
            let flux = flux_triangle(field, y, x, &shifted[i])
                + flux_triangle(field, y, &shifted[i], &origin)
                + flux_triangle(field, y, &origin, &shifted[j]);
            acc += plain.get(i, j) * C64::from_polar(1.0, flux - kin) * vs[i].conj() * vs[j];
        }
    }
    Ok(acc * g.weight_x())
}
