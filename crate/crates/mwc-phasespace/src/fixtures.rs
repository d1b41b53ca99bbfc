//! Deterministic test inputs: Gaussians, Hermite functions and seeded random data.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fourier::from_coefficients;
use crate::grid::{PhaseGrid, PhasePoint};
use crate::symbol::{Symbol, WaveFunction};

/// `exp(−|z − z0|²/(2 sz²) − |ζ − ζ0|²/(2 sk²))`.
pub fn gaussian_symbol(g: &PhaseGrid, center: &PhasePoint, sz: f64, sk: f64) -> Symbol {
    Symbol::from_fn(g, |x, xi| {
        let mut e = 0.0;
        for j in 0..g.dim() {
            e += (x[j] - center.x[j]).powi(2) / (2.0 * sz * sz);
            e += (xi[j] - center.xi[j]).powi(2) / (2.0 * sk * sk);
        }
        C64::new((-e).exp(), 0.0)
    })
}

/// Random symbol with no Nyquist content, unit quadrature L² norm.
pub fn random_bandlimited(g: &PhaseGrid, seed: u64) -> Symbol {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Symbol::zeros(g);
    for idx in 0..g.nsym() {
        let re: f64 = rng.gen_range(-1.0..1.0);
        let im: f64 = rng.gen_range(-1.0..1.0);
        if !g.lattice_of_index(idx).touches_nyquist(g.n()) {
            c.values_mut()[idx] = C64::new(re, im);
        }
    }
    let f = from_coefficients(&c);
    let s = 1.0 / f.norm_l2();
    f.scale(C64::new(s, 0.0))
}

/// Discretely normalized `exp(−|x − c|²/(2w²) + i p·x)`.
pub fn gaussian_wave(g: &PhaseGrid, center: &[f64], momentum: &[f64], width: f64) -> WaveFunction {
    WaveFunction::from_fn(g, |x| {
        let mut e = 0.0;
        let mut ph = 0.0;
        for j in 0..g.dim() {
            e += (x[j] - center[j]).powi(2) / (2.0 * width * width);
            ph += momentum[j] * x[j];
        }
        C64::from_polar((-e).exp(), ph)
    })
    .normalized()
}

/// Discretely normalized tensor Hermite function `Π_j H_{k_j}(x_j) e^{−x_j²/2}`.
pub fn hermite_wave(g: &PhaseGrid, orders: &[usize]) -> WaveFunction {
    fn hermite(k: usize, x: f64) -> f64 {
        let (mut h0, mut h1) = (1.0, 2.0 * x);
        if k == 0 {
            return h0;
        }
        for m in 1..k {
            let h2 = 2.0 * x * h1 - 2.0 * m as f64 * h0;
            h0 = h1;
            h1 = h2;
        }
        h1
    }
    WaveFunction::from_fn(g, |x| {
        let v: f64 = (0..g.dim()).map(|j| hermite(orders[j], x[j]) * (-x[j] * x[j] / 2.0).exp()).product();
        C64::new(v * PI.powf(-0.25 * g.dim() as f64), 0.0)
    })
    .normalized()
}

/// Random unit vector on the X grid.
pub fn random_wave(g: &PhaseGrid, seed: u64) -> WaveFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vals = (0..g.npos()).map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    WaveFunction::new(g, vals).normalized()
}

/// Seeded lattice points with every label in `[−n/6, n/6]`, away from the box edge.
pub fn central_points(g: &PhaseGrid, count: usize, seed: u64) -> Vec<crate::grid::Lattice> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = (g.n() / 6) as i64;
    (0..count)
        .map(|_| {
            let pos: Vec<i64> = (0..g.dim()).map(|_| rng.gen_range(-r..=r)).collect();
            let mom: Vec<i64> = (0..g.dim()).map(|_| rng.gen_range(-r..=r)).collect();
            g.lattice(&pos, &mom)
        })
        .collect()
}
