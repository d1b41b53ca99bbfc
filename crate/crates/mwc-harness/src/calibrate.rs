//! Measured normalization constants of the discrete calculus.
//!
//! * `kappa` is `Tr(Op f · Op g) / ∫ dX f g`, the link between the trace and
//!   the plain phase-space bilinear form.
//! * `kappa_prime` is `‖Op f‖_HS / ‖f‖_{L²(dX)}`.
//! * `fourier` is `‖𝔉 f‖ / ‖f‖` for the symplectic Fourier transform.
//!
//! Each is averaged over random band-limited symbols; the spreads are the
//! largest relative deviation from that average.

use serde::Serialize;

use mwc_calculus::Quantizer;
use mwc_magfield::PotentialSpec;
use mwc_phasespace::{pair_bilinear, random_bandlimited, symplectic_fourier, PhaseGrid, C64};

use crate::HarnessError;

#[derive(Debug, Clone, Serialize)]
pub struct Calibration {
    pub samples: usize,
    pub kappa: f64,
    pub kappa_imag: f64,
    pub kappa_spread: f64,
    pub kappa_prime: f64,
    pub kappa_prime_spread: f64,
    pub fourier: f64,
    pub fourier_spread: f64,
    pub fourier_involution: f64,
}

fn spread(values: &[C64]) -> (C64, f64) {
    let mean = values.iter().sum::<C64>() / values.len() as f64;
    let dev = values.iter().map(|v| (v - mean).norm()).fold(0.0, f64::max);
    (mean, dev / mean.norm())
}

pub fn measure(g: &PhaseGrid, a: &PotentialSpec, seed: u64, samples: usize) -> Result<Calibration, HarnessError> {
    let samples = samples.max(1);
    let q = Quantizer::new(g, a)?;
    let (mut k, mut kp, mut fr) = (Vec::new(), Vec::new(), Vec::new());
    let mut involution = 0.0f64;
    for s in 0..samples as u64 {
        let f = random_bandlimited(g, seed.wrapping_add(2 * s));
        let h = random_bandlimited(g, seed.wrapping_add(2 * s + 1));
        let of = q.op(&f);
        k.push(of.mul(&q.op(&h)).trace() / pair_bilinear(&f, &h)?);
        kp.push(C64::new(of.hs_norm() / f.norm_l2(), 0.0));
        let ff = symplectic_fourier(&f);
        fr.push(C64::new(ff.norm_l2() / f.norm_l2(), 0.0));
        involution = involution.max(symplectic_fourier(&ff).rel_l2_diff(&f));
    }
    let (km, ks) = spread(&k);
    let (kpm, kps) = spread(&kp);
    let (fm, fs) = spread(&fr);
    Ok(Calibration {
        samples,
        kappa: km.re,
        kappa_imag: km.im,
        kappa_spread: ks,
        kappa_prime: kpm.re,
        kappa_prime_spread: kps,
        fourier: fm.re,
        fourier_spread: fs,
        fourier_involution: involution,
    })
}

/// Calibration on the scenario's grid and gauge.
pub fn calibrate(cfg: &crate::ScenarioConfig, samples: usize) -> Result<Calibration, HarnessError> {
    measure(&cfg.phase_grid()?, &cfg.potential()?, cfg.seed, samples)
}
