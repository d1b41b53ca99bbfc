use nalgebra::DMatrix;

use mwc_calculus::{OperatorMatrix, Quantizer};
use mwc_phasespace::{apply_axis, dft_table, Symbol, C64};

use crate::map::{liouville, pairing};
use crate::ModulationError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaResiduals {
    /// `⟨f₁ # f₂, f₃⟩ = ⟨f₁, f₂ # f₃⟩ = ⟨f₂, f₃ # f₁⟩`.
    pub cyclicity: f64,
    /// `∫ dZ/(2π)^N ⟨f, e_Z⟩⟨e_{−Z}, g⟩ = ⟨f, g⟩`.
    pub plane_waves: f64,
    /// `∬ dY dZ/(2π)^{2N} Θ_Z(f)(Y) g(Y) = ⟨1, f⟩⟨1, g⟩`.
    pub translation_average: f64,
}

/// `Z ↦ ⟨f, e_{sZ}⟩` on the grid, `s = ±1`.
fn plane_wave_pairings(f: &Symbol, s: f64) -> Vec<C64> {
    let g = f.grid();
    let (n, dim, np) = (g.n(), g.dim(), g.npos());
    let mut data = f.values().to_vec();
    let (tp, tm) = (dft_table(n, -s), dft_table(n, s));
    for axis in 0..dim {
        apply_axis(&mut data, n, 2 * dim, axis, &tp);
        apply_axis(&mut data, n, 2 * dim, dim + axis, &tm);
    }
    // data is indexed by (ζ slot, z slot); return it in (z, ζ) order
    let w = g.weight_phase() * liouville(g);
    let mut out = vec![C64::new(0.0, 0.0); data.len()];
    for b in 0..np {
        for a in 0..np {
            out[a * np + b] = data[b * np + a] * w;
        }
    }
    out
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

pub fn lemma_identities(
    q: &Quantizer,
    f: [&Symbol; 3],
    g: &Symbol,
) -> Result<LemmaResiduals, ModulationError> {
    let grid = *q.grid();
    let p1 = pairing(&q.product(f[0], f[1]), f[2])?;
    let p2 = pairing(f[0], &q.product(f[1], f[2]))?;
    let p3 = pairing(f[1], &q.product(f[2], f[0]))?;
    let cyclicity = rel(p2, p1).max(rel(p3, p1));

    let wz = grid.weight_phase() * liouville(&grid);
    let a = plane_wave_pairings(f[0], 1.0);
    let b = plane_wave_pairings(g, -1.0);
    let lhs: C64 = a.iter().zip(&b).map(|(x, y)| x * y).sum::<C64>() * wz;
    let plane_waves = rel(lhs, pairing(f[0], g)?);

    let np = grid.npos();
    let op = q.op(f[0]).into_matrix();
    let mut acc = DMatrix::zeros(np, np);
    for iz in 0..grid.nsym() {
        let z = grid.lattice_of_index(iz);
        acc += q.weyl_shift(&z.neg()).right_mul(&q.weyl_shift(&z).left_mul(&op));
    }
    let avg = q.symbol_of(&OperatorMatrix::from_matrix(&grid, acc));
    let lhs = pairing(&avg, g)? * wz;
    let one = Symbol::constant(&grid, C64::new(1.0, 0.0));
    let translation_average = rel(lhs, pairing(&one, f[0])? * pairing(&one, g)?);

    Ok(LemmaResiduals { cyclicity, plane_waves, translation_average })
}
