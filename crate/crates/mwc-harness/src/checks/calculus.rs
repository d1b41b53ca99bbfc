use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use mwc_calculus::{
    interior_rows, mag_translate_explicit, moyal_direct, moyal_kernel_route, rel_l2_vec, weyl_product_fourier,
    OperatorMatrix, Quantizer,
};
use mwc_magfield::{cocycle_big, gauge_shift, FieldKind, FieldSpec, GaugeScalar, PotentialSpec};
use mwc_phasespace::{
    central_points, gaussian_wave, plane_wave, sigma, translate, Lattice, PhaseGrid, Symbol, C64,
};

use super::{op_bytes, sym_bytes, CheckResult, Context, Measurement};
use crate::config::GaugeConfig;

fn pairs(ctx: &Context, count: usize, salt: u64) -> Vec<(Lattice, Lattice)> {
    let g = &ctx.grid;
    central_points(g, count, ctx.seed(salt)).into_iter().zip(central_points(g, count, ctx.seed(salt + 1))).collect()
}

fn constant_b(ctx: &Context) -> f64 {
    match ctx.field.kind() {
        FieldKind::Constant { b } => *b,
        _ => 0.0,
    }
}

pub(crate) fn gauge_covariance(ctx: &Context) -> CheckResult {
    let g = &ctx.grid;
    let rho = match &ctx.cfg.gauge {
        GaugeConfig::Custom { rho } => ctx.cfg.rho(rho),
        _ => GaugeScalar::random_polynomial(&mut ChaCha8Rng::seed_from_u64(ctx.seed(1)), g.dim(), 3),
    };
    let shifted = gauge_shift(&ctx.potential, rho.clone());
    let f = ctx.symbol("probe")?;
    let t1 = Quantizer::new(g, &ctx.potential)?.op(&f);
    let t2 = Quantizer::new(g, &shifted)?.op(&f);
    let e = OperatorMatrix::multiplication(g, |x| C64::from_polar(1.0, rho.value(x)));
    Ok(Measurement::new(t2.rel_diff(&e.mul(&t1).mul(&e.adjoint()))))
}

pub(crate) fn gauge_covariance_memory(g: &PhaseGrid) -> u64 {
    8 * op_bytes(g) + 2 * sym_bytes(g)
}

pub(crate) fn weyl_product_rule(ctx: &Context) -> CheckResult {
    let g = &ctx.grid;
    let q = Quantizer::new(g, &ctx.potential)?;
    let mut worst: f64 = 0.0;
    let mut rows_used = 0usize;
    for (x, y) in pairs(ctx, 20, 10) {
        let rows = interior_rows(g, &[&x, &y]);
        if rows.is_empty() {
            continue;
        }
        rows_used += rows.len();
        let lhs = q.weyl_shift(&x).to_dense(g).mul(&q.weyl_system(&y));
        let (px, py) = (x.to_point(g), y.to_point(g));
        let om = OperatorMatrix::multiplication(g, |z| cocycle_big(&ctx.field, &px, &py, z));
        let rhs = om.mul(&q.weyl_system(&x.add(&y)));
        worst = worst.max(lhs.max_row_diff(&rhs, &rows));
    }
    Ok(Measurement::new(worst).with("rows", rows_used as f64))
}

pub(crate) fn weyl_product_rule_memory(g: &PhaseGrid) -> u64 {
    7 * op_bytes(g)
}

/// Even position labels keep every midpoint on the grid.
fn even(l: &Lattice, g: &PhaseGrid) -> Lattice {
    let pos: Vec<i64> = l.pos.iter().map(|v| 2 * (v / 2)).collect();
    g.lattice(&pos, &l.mom)
}

pub(crate) fn cocycle_factorization(ctx: &Context) -> CheckResult {
    let g = &ctx.grid;
    let q = Quantizer::new(g, &ctx.potential)?;
    let half = g.half_extent() / 2.0;
    let window: Vec<usize> = (0..g.nsym())
        .filter(|&i| g.phase_point(i).x.iter().all(|v| v.abs() <= half + 1e-12))
        .collect();
    let mut worst: f64 = 0.0;
    for (x, y) in pairs(ctx, 20, 20) {
        let (x, y) = (even(&x, g), even(&y, g));
        let (px, py) = (x.to_point(g), y.to_point(g));
        let lhs = q.product(&plane_wave(&px, g), &plane_wave(&py, g));
        let exy = plane_wave(&px.add(&py), g);
        for &i in &window {
            let z = g.phase_point(i);
            let want = cocycle_big(&ctx.field, &px, &py, &z.x) * exy.values()[i];
            worst = worst.max((lhs.values()[i] - want).norm());
        }
    }
    Ok(Measurement::new(worst).with("window_points", window.len() as f64))
}

pub(crate) fn cocycle_factorization_memory(g: &PhaseGrid) -> u64 {
    5 * op_bytes(g) + 4 * sym_bytes(g)
}

const MOYAL_REFINE: usize = 2;

pub(crate) fn moyal_routes(ctx: &Context) -> CheckResult {
    let g = &ctx.grid;
    let (f, h) = (ctx.symbol("moyal_f")?, ctx.symbol("moyal_g")?);
    let pts = central_points(g, 6, ctx.seed(30));
    let direct = moyal_direct(&f, &h, &ctx.field, &pts, MOYAL_REFINE)?;
    let kernel = moyal_kernel_route(&f, &h, &ctx.potential)?;
    let kv: Vec<C64> = pts.iter().map(|p| kernel.at_lattice(p)).collect();
    Ok(Measurement::new(rel_l2_vec(&direct, &kv)))
}

pub(crate) fn moyal_routes_memory(g: &PhaseGrid) -> u64 {
    let fine = ((MOYAL_REFINE * g.n()) as u64).pow(2 * g.dim() as u32) * 16;
    6 * fine + 5 * op_bytes(g)
}

pub(crate) fn moyal_nonmagnetic_oracle(ctx: &Context) -> CheckResult {
    let (f, h) = (ctx.symbol("moyal_f")?, ctx.symbol("moyal_g")?);
    let k = moyal_kernel_route(&f, &h, &PotentialSpec::zero(ctx.grid.dim()))?;
    Ok(Measurement::new(k.rel_l2_diff(&weyl_product_fourier(&f, &h))))
}

pub(crate) fn moyal_nonmagnetic_oracle_memory(g: &PhaseGrid) -> u64 {
    5 * op_bytes(g) + 16 * sym_bytes(g)
}

/// Shifts whose momentum label cancels the drift `B·(z₂, −z₁)` of a constant field.
fn compensated(g: &PhaseGrid, b: f64, pos: &[i64]) -> Lattice {
    let mom: Vec<i64> = if g.dim() == 2 {
        let z = [pos[0] as f64 * g.dx(), pos[1] as f64 * g.dx()];
        vec![(-b * z[1] / g.dxi()).round() as i64, (b * z[0] / g.dxi()).round() as i64]
    } else {
        vec![0]
    };
    g.lattice(pos, &mom)
}

fn translation_shifts(dim: usize) -> Vec<Vec<i64>> {
    if dim == 2 {
        vec![vec![1, 0], vec![0, -1], vec![1, 1]]
    } else {
        vec![vec![1], vec![-1], vec![2]]
    }
}

pub(crate) fn magnetic_translation(ctx: &Context) -> CheckResult {
    let g = &ctx.grid;
    let q = Quantizer::new(g, &ctx.potential)?;
    let f = ctx.symbol("bump")?;
    let b = constant_b(ctx);
    let shifts = translation_shifts(g.dim());
    let errs: Result<Vec<f64>, crate::HarnessError> = shifts
        .par_iter()
        .map(|pos| {
            let z = compensated(g, b, pos);
            let e = mag_translate_explicit(&ctx.field, &z, &f)?;
            Ok(e.rel_l2_diff(&q.mag_translate(&z, &f)))
        })
        .collect();
    let errs = errs?;
    let named: Vec<(String, f64)> = shifts.iter().zip(&errs).map(|(p, e)| (format!("shift_{p:?}"), *e)).collect();
    let parts: Vec<(&str, f64)> = named.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    Ok(Measurement::max_of(&parts))
}

pub(crate) fn magnetic_translation_memory(g: &PhaseGrid) -> u64 {
    3 * (6 * op_bytes(g) + 6 * sym_bytes(g))
}

/// Field-free identities: plane-wave products, plain translations and the
/// Gaussian Wigner function on a fine one-dimensional grid.
pub(crate) fn nonmagnetic_regression(ctx: &Context) -> CheckResult {
    let g = &ctx.grid;
    let zero = PotentialSpec::zero(g.dim());
    let q = Quantizer::new(g, &zero)?;

    let mut plane: f64 = 0.0;
    for (x, y) in pairs(ctx, 5, 40) {
        let (px, py) = (x.to_point(g), y.to_point(g));
        let lhs = moyal_kernel_route(&plane_wave(&px, g), &plane_wave(&py, g), &zero)?;
        let rhs = plane_wave(&px.add(&py), g).scale(C64::from_polar(1.0, 0.5 * sigma(&px, &py)?));
        plane = plane.max(lhs.rel_l2_diff(&rhs));
    }

    let f = ctx.symbol("probe")?;
    let mut shift: f64 = 0.0;
    for (z, _) in pairs(ctx, 3, 50) {
        let want = translate(&z.to_point(g), &f)?;
        shift = shift.max(q.mag_translate(&z, &f).rel_l2_diff(&want));
        shift = shift.max(mag_translate_explicit(&FieldSpec::zero(g.dim()), &z, &f)?.rel_l2_diff(&want));
    }

    let fine = PhaseGrid::new(1, 64, 10.0)?;
    let qf = Quantizer::new(&fine, &PotentialSpec::zero(1))?;
    let v = gaussian_wave(&fine, &[0.0], &[0.0], 1.0);
    let want = Symbol::from_fn(&fine, |z, k| C64::new(2.0 * (-z[0] * z[0] - k[0] * k[0]).exp(), 0.0));
    let wigner = qf.wigner(&v, &v).sub(&want).max_abs();

    Ok(Measurement::max_of(&[("plane_waves", plane), ("translation", shift), ("gaussian_wigner", wigner)]))
}

pub(crate) fn nonmagnetic_regression_memory(g: &PhaseGrid) -> u64 {
    6 * op_bytes(g) + 8 * sym_bytes(g) + 64 * 64 * 16 * 6
}

pub(crate) fn calibration_stability(ctx: &Context) -> CheckResult {
    let c = crate::calibrate::measure(&ctx.grid, &ctx.potential, ctx.seed(60), 20)?;
    Ok(Measurement::max_of(&[("kappa_spread", c.kappa_spread), ("kappa_prime_spread", c.kappa_prime_spread)])
        .with("kappa", c.kappa)
        .with("kappa_prime", c.kappa_prime))
}

pub(crate) fn calibration_stability_memory(g: &PhaseGrid) -> u64 {
    6 * op_bytes(g) + 4 * sym_bytes(g)
}
