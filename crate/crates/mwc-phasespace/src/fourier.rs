//! Centered discrete Fourier machinery on the phase-space grid.
//!
//! Every symbol on the grid expands exactly as `f = Σ_X c_X e_X` over lattice
//! labels `X`; the coefficient array `c` is stored in the same layout as the
//! symbol itself. The symplectic Fourier transform is `n^N c`.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::grid::{GridError, PhaseGrid, PhasePoint};
use crate::symbol::Symbol;

/// Matrix `T[k][j] = exp(sign · 2πi · (k − n/2)(j − n/2) / n)`, row-major.
pub fn dft_table(n: usize, sign: f64) -> Vec<C64> {
    let h = (n / 2) as f64;
    let mut t = Vec::with_capacity(n * n);
    for k in 0..n {
        for j in 0..n {
            let ph = sign * 2.0 * PI * (k as f64 - h) * (j as f64 - h) / n as f64;
            t.push(C64::from_polar(1.0, ph));
        }
    }
    t
}

/// Applies an `n×n` table along one axis of an array with `naxes` axes of length `n`.
pub fn apply_axis(data: &mut [C64], n: usize, naxes: usize, axis: usize, table: &[C64]) {
    let inner = n.pow((naxes - 1 - axis) as u32);
    let outer = data.len() / (n * inner);
    let mut buf = vec![C64::new(0.0, 0.0); n];
    for o in 0..outer {
        let base = o * n * inner;
        for i in 0..inner {
            for (j, b) in buf.iter_mut().enumerate() {
                *b = data[base + j * inner + i];
            }
            for k in 0..n {
                let row = &table[k * n..(k + 1) * n];
                let mut acc = C64::new(0.0, 0.0);
                for j in 0..n {
                    acc += row[j] * buf[j];
                }
                data[base + k * inner + i] = acc;
            }
        }
    }
}

/// Exchanges the position and momentum halves of a phase-space array.
fn swap_halves(v: &[C64], np: usize) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); v.len()];
    for p in 0..np {
        for m in 0..np {
            out[m * np + p] = v[p * np + m];
        }
    }
    out
}

/// Expansion coefficients `c_X` with `f = Σ_X c_X e_X`.
pub fn coefficients(f: &Symbol) -> Symbol {
    let g = *f.grid();
    let (n, dim) = (g.n(), g.dim());
    let plus = dft_table(n, 1.0);
    let minus = dft_table(n, -1.0);
    let mut v = f.values().to_vec();
    for a in 0..dim {
        apply_axis(&mut v, n, 2 * dim, a, &plus);
        apply_axis(&mut v, n, 2 * dim, dim + a, &minus);
    }
    let scale = 1.0 / g.nsym() as f64;
    let out = swap_halves(&v, g.npos()).into_iter().map(|c| c * scale).collect();
    Symbol::new(&g, out)
}

/// Inverse of [`coefficients`].
pub fn from_coefficients(c: &Symbol) -> Symbol {
    let g = *c.grid();
    let (n, dim) = (g.n(), g.dim());
    let plus = dft_table(n, 1.0);
    let minus = dft_table(n, -1.0);
    let mut v = swap_halves(c.values(), g.npos());
    for a in 0..dim {
        apply_axis(&mut v, n, 2 * dim, a, &minus);
        apply_axis(&mut v, n, 2 * dim, dim + a, &plus);
    }
    Symbol::new(&g, v)
}

/// `(𝔉f)(X) = (2π)^{-N} ∫ dY e^{iσ(X,Y)} f(Y)`; exactly involutive on the grid.
pub fn symplectic_fourier(f: &Symbol) -> Symbol {
    let s = f.grid().npos() as f64;
    coefficients(f).scale(C64::new(s, 0.0))
}

/// Removes every expansion mode whose label touches the Nyquist frequency.
pub fn band_limit(f: &Symbol) -> Symbol {
    let g = *f.grid();
    let mut c = coefficients(f);
    for idx in 0..g.nsym() {
        if g.lattice_of_index(idx).touches_nyquist(g.n()) {
            c.values_mut()[idx] = C64::new(0.0, 0.0);
        }
    }
    from_coefficients(&c)
}

/// `e_X(Z) = exp(−iσ(X, Z))`.
pub fn plane_wave_at(x: &PhasePoint, z: &PhasePoint) -> C64 {
    let s = crate::grid::sigma(x, z).expect("plane wave dimension");
    C64::from_polar(1.0, -s)
}

pub fn plane_wave(x: &PhasePoint, g: &PhaseGrid) -> Symbol {
    Symbol::from_fn(g, |z, zeta| {
        let mut s = 0.0;
        for j in 0..g.dim() {
            s += z[j] * x.xi[j] - x.x[j] * zeta[j];
        }
        C64::from_polar(1.0, -s)
    })
}

/// `(Θ_Z f)(X) = f(X + Z)` with periodic wraparound; `Z` must be on the grid.
pub fn translate(z: &PhasePoint, f: &Symbol) -> Result<Symbol, GridError> {
    let g = *f.grid();
    let zl = g.snap(z)?;
    let out = (0..g.nsym()).map(|i| f.at_lattice(&g.lattice_of_index(i).add(&zl))).collect();
    Ok(Symbol::new(&g, out))
}

/// Cached expansion coefficients for repeated off-grid evaluation.
pub struct Interpolator {
    grid: PhaseGrid,
    coeffs: Vec<C64>,
}

impl Interpolator {
    pub fn new(f: &Symbol) -> Self {
        Self { grid: *f.grid(), coeffs: coefficients(f).into_values() }
    }

    pub fn eval(&self, p: &PhasePoint) -> C64 {
        let g = &self.grid;
        let (n, dim, np) = (g.n(), g.dim(), g.npos());
        // per-axis factors e^{i y_a ζ_d} and e^{-i z_d η_b}
        let mut fa = vec![vec![C64::new(0.0, 0.0); n]; dim];
        let mut fb = vec![vec![C64::new(0.0, 0.0); n]; dim];
        for d in 0..dim {
            for j in 0..n {
                fa[d][j] = C64::from_polar(1.0, g.x_coord(j) * p.xi[d]);
                fb[d][j] = C64::from_polar(1.0, -p.x[d] * g.xi_coord(j));
            }
        }
        let weight = |digits: [usize; 2], tab: &Vec<Vec<C64>>| {
            (0..dim).fold(C64::new(1.0, 0.0), |acc, d| acc * tab[d][digits[d]])
        };
        let wa: Vec<C64> = (0..np).map(|ia| weight(g.pos_digits(ia), &fa)).collect();
        let wb: Vec<C64> = (0..np).map(|ib| weight(g.pos_digits(ib), &fb)).collect();
        let mut acc = C64::new(0.0, 0.0);
        for ia in 0..np {
            let row = &self.coeffs[ia * np..(ia + 1) * np];
            let s: C64 = row.iter().zip(&wb).map(|(c, w)| c * w).sum();
            acc += s * wa[ia];
        }
        acc
    }
}
