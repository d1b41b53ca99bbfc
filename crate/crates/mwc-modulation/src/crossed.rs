use mwc_phasespace::{DoubleSymbol, PhasePoint, Symbol, C64};

use crate::map::liouville;
use crate::ModulationError;

fn require_lazy(f: &DoubleSymbol) -> Result<(), ModulationError> {
    match f {
        DoubleSymbol::Lazy { .. } => Ok(()),
        DoubleSymbol::Dense { .. } => Err(ModulationError::NotEvaluable),
    }
}

fn nan() -> C64 {
    C64::new(f64::NAN, f64::NAN)
}

/// `(F ⋄ G)(X, Y) = ∫ dZ/(2π)^N F(X, Z) G(X − Z, Y − Z)`, summed over every grid
/// point `Z`. Both operands must be evaluable everywhere, so dense coarse
/// samples are rejected. The result is lazy and keeps the samples of `F`.
pub fn crossed_product(f: &DoubleSymbol, g: &DoubleSymbol) -> Result<DoubleSymbol, ModulationError> {
    require_lazy(f)?;
    require_lazy(g)?;
    let grid = *f.grid();
    let (fc, gc) = (f.clone(), g.clone());
    let samples = match f {
        DoubleSymbol::Lazy { samples, .. } => samples.clone(),
        DoubleSymbol::Dense { .. } => unreachable!(),
    };
    let w = grid.weight_phase() * liouville(&grid);
    Ok(DoubleSymbol::lazy(
        &grid,
        move |x, y| {
            let mut acc = C64::new(0.0, 0.0);
            for iz in 0..grid.nsym() {
                let z = grid.phase_point(iz);
                let a = fc.eval(x, &z).unwrap_or_else(nan);
                let b = gc.eval(&x.sub(&z), &y.sub(&z)).unwrap_or_else(nan);
                acc += a * b;
            }
            acc * w
        },
        samples,
    ))
}

/// `F^*(X, Y) = conj F(X − Y, −Y)`.
pub fn crossed_involution(f: &DoubleSymbol) -> Result<DoubleSymbol, ModulationError> {
    require_lazy(f)?;
    let fc = f.clone();
    let samples = match f {
        DoubleSymbol::Lazy { samples, .. } => samples.clone(),
        DoubleSymbol::Dense { .. } => unreachable!(),
    };
    Ok(DoubleSymbol::lazy(
        f.grid(),
        move |x, y| fc.eval(&x.sub(y), &y.neg()).unwrap_or_else(nan).conj(),
        samples,
    ))
}

/// `[REP(F)Φ](X) = ∫ dY/(2π)^N F(X, X − Y) Φ(Y)` for a lazily evaluable `F`,
/// with `Φ` sampled on the phase-space grid.
pub fn rep_quadrature(f: &DoubleSymbol, phi: &Symbol) -> Result<Symbol, ModulationError> {
    require_lazy(f)?;
    let g = *phi.grid();
    let w = g.weight_phase() * liouville(&g);
    let pts: Vec<PhasePoint> = (0..g.nsym()).map(|i| g.phase_point(i)).collect();
    let out = pts
        .iter()
        .map(|x| {
            let mut acc = C64::new(0.0, 0.0);
            for (y, p) in pts.iter().zip(phi.values()) {
                acc += f.eval(x, &x.sub(y)).unwrap_or_else(nan) * p;
            }
            acc * w
        })
        .collect();
    Ok(Symbol::new(&g, out))
}
