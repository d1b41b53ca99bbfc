use mwc_modulation::{double_pairing, lemma_identities, pairing, LemmaResiduals, Modulator};
use mwc_phasespace::{central_points, CoarseLattice, DoubleSymbol, PhaseGrid, C64};

use super::{op_bytes, sym_bytes, CheckResult, Context, Measurement};

fn lemma(ctx: &Context) -> Result<LemmaResiduals, crate::HarnessError> {
    let q = mwc_calculus::Quantizer::new(&ctx.grid, &ctx.potential)?;
    let (f1, f2, f3, h) = (ctx.symbol("f")?, ctx.symbol("g")?, ctx.symbol("k")?, ctx.symbol("h")?);
    Ok(lemma_identities(&q, [&f1, &f2, &f3], &h)?)
}

pub(crate) fn trace_cyclicity(ctx: &Context) -> CheckResult {
    Ok(Measurement::new(lemma(ctx)?.cyclicity))
}

pub(crate) fn trace_plane_waves(ctx: &Context) -> CheckResult {
    Ok(Measurement::new(lemma(ctx)?.plane_waves))
}

pub(crate) fn trace_translation_average(ctx: &Context) -> CheckResult {
    Ok(Measurement::new(lemma(ctx)?.translation_average))
}

pub(crate) fn lemma_memory(g: &PhaseGrid) -> u64 {
    8 * op_bytes(g) + 12 * sym_bytes(g)
}

/// At most six points per axis, spread over the central part of the box.
pub(crate) fn coarse_lattice(g: &PhaseGrid) -> Result<CoarseLattice, crate::HarnessError> {
    let count = COARSE_COUNT.min(g.n());
    let stride = (g.n() / COARSE_COUNT).max(1);
    Ok(CoarseLattice::new(g, stride, count)?)
}

const COARSE_COUNT: usize = 6;

fn conj_dense(d: DoubleSymbol) -> DoubleSymbol {
    match d {
        DoubleSymbol::Dense { grid, lattice, values } => {
            DoubleSymbol::dense(&grid, lattice, values.iter().map(|v| v.conj()).collect())
        }
        lazy => lazy,
    }
}

pub(crate) fn orthogonality(ctx: &Context) -> CheckResult {
    let m = Modulator::new(&ctx.grid, &ctx.potential)?;
    let lat = coarse_lattice(&ctx.grid)?;
    let (f, g, h, k) = (ctx.symbol("f")?, ctx.symbol("g")?, ctx.symbol("h")?, ctx.symbol("k")?);
    let mf = conj_dense(m.modulated(&h, &f)?.dense(&lat));
    let mg = m.modulated(&k, &g)?.dense(&lat);
    let lhs = double_pairing(&mf, &mg)?;
    let rhs = pairing(&h.conj(), &k)? * pairing(&f.conj(), &g)?;
    Ok(Measurement::new((lhs - rhs).norm() / rhs.norm())
        .with("lattice_points", lat.len() as f64)
        .with("stride", lat.stride() as f64))
}

pub(crate) fn inversion(ctx: &Context) -> CheckResult {
    let m = Modulator::new(&ctx.grid, &ctx.potential)?;
    let lat = coarse_lattice(&ctx.grid)?;
    let (f, h, k) = (ctx.symbol("f")?, ctx.symbol("h")?, ctx.symbol("k")?);
    let back = m.adjoint(&k, &m.modulated(&h, &f)?.dense(&lat))?;
    let want = f.scale(pairing(&h, &k.conj())?);
    Ok(Measurement::new(back.rel_l2_diff(&want)).with("lattice_points", lat.len() as f64))
}

pub(crate) fn coarse_memory(g: &PhaseGrid) -> u64 {
    let count = COARSE_COUNT.min(g.n()) as u64;
    let dense = count.pow(4 * g.dim() as u32) * 16;
    let diffs = (2 * count - 1).pow(2 * g.dim() as u32) * g.npos() as u64 * 24;
    3 * dense + diffs + 24 * op_bytes(g) + 8 * sym_bytes(g)
}

pub(crate) fn morphism(ctx: &Context) -> CheckResult {
    let g = &ctx.grid;
    let m = Modulator::new(g, &ctx.potential)?;
    let q = m.quantizer();
    let w = ctx.wave("window")?.normalized();
    let h = q.wigner(&w, &w);
    let (f, gg) = (ctx.symbol("f")?, ctx.symbol("g")?);
    let (mf, mg) = (m.modulated(&h, &f)?, m.modulated(&h, &gg)?);
    let mfg = m.modulated(&q.product(&h, &h), &q.product(&f, &gg))?;
    let pts = central_points(g, 20, ctx.seed(70)).into_iter().zip(central_points(g, 20, ctx.seed(71)));
    let (mut diff, mut peak) = (0.0f64, 0.0f64);
    for (x, y) in pts {
        let (l, r): (C64, C64) = (mf.crossed_at(&mg, &x, &y), mfg.at(&x, &y));
        diff = diff.max((l - r).norm());
        peak = peak.max(r.norm());
    }
    Ok(Measurement::new(diff / peak.max(f64::MIN_POSITIVE)).with("peak", peak))
}

pub(crate) fn morphism_memory(g: &PhaseGrid) -> u64 {
    14 * op_bytes(g) + 10 * sym_bytes(g)
}

pub(crate) fn window_idempotency(ctx: &Context) -> CheckResult {
    let q = mwc_calculus::Quantizer::new(&ctx.grid, &ctx.potential)?;
    let w = ctx.wave("window")?.normalized();
    let h = q.wigner(&w, &w);
    Ok(Measurement::new(q.product(&h, &h).rel_l2_diff(&h)))
}

pub(crate) fn window_memory(g: &PhaseGrid) -> u64 {
    6 * op_bytes(g) + 4 * sym_bytes(g)
}
