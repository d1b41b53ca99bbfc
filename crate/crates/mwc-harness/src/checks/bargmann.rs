use std::sync::Arc;

use mwc_bargmann::{rep_modulated, Bargmann};
use mwc_calculus::{rel_l2_vec, OperatorMatrix, Quantizer};
use mwc_modulation::Modulator;
use mwc_phasespace::{central_points, random_bandlimited, random_wave, PhaseGrid, C64};

use super::{op_bytes, sym_bytes, CheckResult, Context, Measurement};

fn bargmann(ctx: &Context) -> Result<Bargmann, crate::HarnessError> {
    let q = Arc::new(Quantizer::new(&ctx.grid, &ctx.potential)?);
    Ok(Bargmann::with_quantizer(q, &ctx.wave("window")?.normalized())?)
}

pub(crate) fn bargmann_isometry(ctx: &Context) -> CheckResult {
    let g = &ctx.grid;
    let b = bargmann(ctx)?;
    let (mut norm, mut back) = (0.0f64, 0.0f64);
    for s in 0..10 {
        let u = random_wave(g, ctx.seed(80 + s));
        let phi = b.transform(&u);
        norm = norm.max((phi.norm() - u.norm()).abs() / u.norm());
        back = back.max(b.adjoint(&phi).sub(&u).norm() / u.norm());
    }
    let resolution = b.resolution().rel_diff(&OperatorMatrix::identity(g));
    Ok(Measurement::max_of(&[("norm", norm), ("inverse", back), ("resolution", resolution)]))
}

pub(crate) fn bargmann_isometry_memory(g: &PhaseGrid) -> u64 {
    6 * op_bytes(g) + 8 * sym_bytes(g)
}

pub(crate) fn reproducing_kernel(ctx: &Context) -> CheckResult {
    let g = &ctx.grid;
    let b = bargmann(ctx)?;
    let phi = b.transform(&random_wave(g, ctx.seed(90)));
    let pts = central_points(g, 20, ctx.seed(91));
    let got = b.reproduce(&phi, &pts);
    let want: Vec<C64> = pts.iter().map(|x| phi.values()[g.index_of(x)]).collect();
    let projection = b.membership_residual(&phi);
    Ok(Measurement::max_of(&[("pointwise", rel_l2_vec(&got, &want)), ("projection", projection)]))
}

pub(crate) fn reproducing_kernel_memory(g: &PhaseGrid) -> u64 {
    g.nsym() as u64 * g.npos() as u64 * 16 + 4 * op_bytes(g) + 8 * sym_bytes(g)
}

pub(crate) fn intertwining(ctx: &Context) -> CheckResult {
    let g = &ctx.grid;
    let b = bargmann(ctx)?;
    let m = Modulator::new(g, &ctx.potential)?;
    let h = b.window();
    let q = b.quantizer();
    let phi = b.transform(&random_wave(g, ctx.seed(100)));
    let mut worst = 0.0f64;
    for s in 0..10 {
        let f = random_bandlimited(g, ctx.seed(110 + s));
        let mf = m.modulated(&h, &f)?;
        let want = b.transform(&q.op(&f).apply(&b.adjoint(&phi)));
        let got = rep_modulated(&mf, &phi, true)?;
        worst = worst.max(got.sub(&want).norm() / phi.norm());
    }
    Ok(Measurement::new(worst))
}

pub(crate) fn intertwining_memory(g: &PhaseGrid) -> u64 {
    12 * op_bytes(g) + 10 * sym_bytes(g)
}
