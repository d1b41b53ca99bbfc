//! Discretized phase space `Ξ = X × X*` on a periodic box.
//!
//! The grid carries `n` points per axis on `[−L, L)` in position and the
//! reciprocal momentum grid, so the discrete Fourier transform is an exact
//! quadrature for band-limited data. Symbols are sampled on `Ξ`, wave
//! functions on `X`.

mod double;
pub mod fixtures;
mod fourier;
mod grid;
mod symbol;

pub use double::{pair_bilinear_double, CoarseLattice, DoubleSymbol, PairFn};
pub use fixtures::{central_points, gaussian_symbol, gaussian_wave, hermite_wave, random_bandlimited, random_wave};
pub use fourier::{
    apply_axis, band_limit, coefficients, dft_table, from_coefficients, plane_wave, plane_wave_at,
    symplectic_fourier, translate, Interpolator,
};
pub use grid::{sigma, GridError, Lattice, PhaseGrid, PhasePoint};
pub use symbol::{pair_bilinear, Symbol, WaveFunction};

pub use num_complex::Complex64 as C64;
