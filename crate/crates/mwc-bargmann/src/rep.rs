use nalgebra::DMatrix;
use rayon::prelude::*;

use mwc_calculus::complex_matmul;
use mwc_modulation::{liouville, Modulated};
use mwc_phasespace::{symplectic_fourier, DoubleSymbol, PhaseGrid, PhasePoint, Symbol, C64};

use crate::coherent::BargmannFunction;
use crate::BargmannError;

/// Largest `nsym²` table that [`kohn_nirenberg`] will build.
pub const KOHN_NIRENBERG_LIMIT: usize = 1 << 22;

fn quadrature(
    f: &DoubleSymbol,
    phi: &BargmannFunction,
    args: impl Fn(&PhasePoint, &PhasePoint) -> (PhasePoint, PhasePoint) + Sync,
) -> Result<BargmannFunction, BargmannError> {
    if matches!(f, DoubleSymbol::Dense { .. }) {
        return Err(mwc_modulation::ModulationError::NotEvaluable.into());
    }
    let g = *phi.grid();
    let pts: Vec<PhasePoint> = (0..g.nsym()).map(|i| g.phase_point(i)).collect();
    let w = phi.weight();
    let out = pts
        .par_iter()
        .map(|x| {
            let mut acc = C64::new(0.0, 0.0);
            for (y, p) in pts.iter().zip(phi.values()) {
                let (a, b) = args(x, y);
                acc += f.eval(&a, &b).unwrap_or(C64::new(f64::NAN, f64::NAN)) * p;
            }
            acc * w
        })
        .collect();
    Ok(BargmannFunction::new(&g, out))
}

/// `[REP(F)Φ](X) = ∫ dY/(2π)^N F(X, X − Y) Φ(Y)` by direct quadrature.
pub fn rep_apply(f: &DoubleSymbol, phi: &BargmannFunction) -> Result<BargmannFunction, BargmannError> {
    quadrature(f, phi, |x, y| (x.clone(), x.sub(y)))
}

/// `R REP(F) R` with `(RΦ)(X) = Φ(−X)`, i.e. `∫ dY/(2π)^N F(−X, Y − X) Φ(Y)`.
pub fn rep_apply_reflected(f: &DoubleSymbol, phi: &BargmannFunction) -> Result<BargmannFunction, BargmannError> {
    quadrature(f, phi, |x, y| (x.neg(), y.sub(x)))
}

/// [`rep_apply`] or [`rep_apply_reflected`] for a modulated symbol.
///
/// In trace form `M(X, X−Y) = Tr(op(−X) F op(Y) H)`, so the `Y` sum collapses to
/// `Q = Σ_Y Φ(Y) op(Y)` and each output value is one trace against `F Q H`.
/// The reflected version uses `op(X)` and `op(−Y)` instead.
pub fn rep_modulated(m: &Modulated, phi: &BargmannFunction, reflected: bool) -> Result<BargmannFunction, BargmannError> {
    let g = *m.grid();
    if *phi.grid() != g {
        return Err(mwc_phasespace::GridError::GridMismatch.into());
    }
    let q = m.quantizer();
    let s = if reflected { -1 } else { 1 };
    let flip = |l: mwc_phasespace::Lattice| if s < 0 { l.neg() } else { l };
    let np = g.npos();
    let mut big_q = DMatrix::zeros(np, np);
    for (iy, c) in phi.values().iter().enumerate() {
        let sh = q.weyl_shift(&flip(g.lattice_of_index(iy)));
        for (i, (&j, &p)) in sh.col.iter().zip(&sh.phase).enumerate() {
            big_q[(i, j)] += c * p;
        }
    }
    let (h, f) = m.operators();
    let p = complex_matmul(&complex_matmul(f, &big_q), h);
    let w = phi.weight();
    let out = (0..g.nsym())
        .into_par_iter()
        .map(|ix| q.weyl_shift(&flip(g.lattice_of_index(ix)).neg()).trace_with(&p) * w)
        .collect();
    Ok(BargmannFunction::new(&g, out))
}

/// Kohn–Nirenberg form of a double symbol on the periodic grid: the symbol
/// `s = (1 ⊗ 𝔉) F` together with the operator `OP(s) = REP((1 ⊗ 𝔉) s)`.
#[derive(Debug, Clone)]
pub struct KohnNirenberg {
    grid: PhaseGrid,
    /// `s[ix · nsym + iw]`.
    symbol: Vec<C64>,
}

impl KohnNirenberg {
    pub fn grid(&self) -> &PhaseGrid {
        &self.grid
    }

    pub fn symbol(&self) -> &[C64] {
        &self.symbol
    }

    pub fn symbol_at(&self, ix: usize, iw: usize) -> C64 {
        self.symbol[ix * self.grid.nsym() + iw]
    }

    /// `OP(s)Φ`, with `X − Y` reduced periodically.
    pub fn apply(&self, phi: &BargmannFunction) -> BargmannFunction {
        let g = self.grid;
        let ns = g.nsym();
        let w = g.weight_phase() * liouville(&g);
        let out = (0..ns)
            .into_par_iter()
            .map(|ix| {
                let row = symplectic_fourier(&Symbol::new(&g, self.symbol[ix * ns..(ix + 1) * ns].to_vec()));
                let x = g.lattice_of_index(ix);
                let mut acc = C64::new(0.0, 0.0);
                for (iy, p) in phi.values().iter().enumerate() {
                    acc += row.at_lattice(&x.sub(&g.lattice_of_index(iy))) * p;
                }
                acc * w
            })
            .collect();
        BargmannFunction::new(&g, out)
    }
}

/// Samples `F` on the grid and applies the symplectic Fourier transform in the
/// second slot. Only small grids fit; the table has `nsym²` entries.
pub fn kohn_nirenberg(f: &DoubleSymbol) -> Result<KohnNirenberg, BargmannError> {
    let g = *f.grid();
    let ns = g.nsym();
    let entries = ns * ns;
    if entries > KOHN_NIRENBERG_LIMIT {
        return Err(BargmannError::TooLarge { entries, limit: KOHN_NIRENBERG_LIMIT });
    }
    let pts: Vec<PhasePoint> = (0..ns).map(|i| g.phase_point(i)).collect();
    let rows: Vec<Vec<C64>> = pts
        .par_iter()
        .map(|x| {
            let vals: Option<Vec<C64>> = pts.iter().map(|y| f.eval(x, y)).collect();
            vals.map(|v| symplectic_fourier(&Symbol::new(&g, v)).into_values())
        })
        .collect::<Option<Vec<_>>>()
        .ok_or(mwc_modulation::ModulationError::NotEvaluable)?;
    Ok(KohnNirenberg { grid: g, symbol: rows.concat() })
}
