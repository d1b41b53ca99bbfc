use mwc_magfield::{omega_tilde, FieldSpec};
use mwc_phasespace::{translate, Lattice, PhaseGrid, Symbol, C64};

use crate::CalculusError;

/// Momentum convolution at fixed position,
/// `(w ⋆ f)(x, ξ) = ∫ dη w(x, ξ − η) f(x, η)`, with periodic momentum labels.
pub fn mixed_product(w: &Symbol, f: &Symbol) -> Result<Symbol, CalculusError> {
    if w.grid() != f.grid() {
        return Err(CalculusError::Grid(mwc_phasespace::GridError::GridMismatch));
    }
    let g: PhaseGrid = *f.grid();
    let (n, dim, np) = (g.n(), g.dim(), g.npos());
    let weight = g.weight_xi();
    let diff = |k: usize, j: usize| -> usize {
        let (dk, dj) = (g.pos_digits(k), g.pos_digits(j));
        let mut d = [0usize; 2];
        for a in 0..dim {
            d[a] = (dk[a] + n + n / 2 - dj[a]) % n;
        }
        g.pos_flat(&d[..dim])
    };
    let mut out = vec![C64::new(0.0, 0.0); g.nsym()];
    for ix in 0..np {
        let wr = &w.values()[ix * np..(ix + 1) * np];
        let fr = &f.values()[ix * np..(ix + 1) * np];
        for k in 0..np {
            let mut acc = C64::new(0.0, 0.0);
            for (j, fv) in fr.iter().enumerate() {
                acc += wr[diff(k, j)] * fv;
            }
            out[ix * np + k] = acc * weight;
        }
    }
    Ok(Symbol::new(&g, out))
}

/// Magnetic translation assembled from the partially Fourier-transformed
/// cocycle: `Θ^B_Z(f) = ω̃^B(·; z) ⋆ f(· + Z)`.
pub fn mag_translate_explicit(field: &FieldSpec, z: &Lattice, f: &Symbol) -> Result<Symbol, CalculusError> {
    let g = f.grid();
    let zp = z.to_point(g);
    let shifted = translate(&zp, f)?;
    let w = omega_tilde(field, g, &zp.x);
    mixed_product(&w, &shifted)
}
