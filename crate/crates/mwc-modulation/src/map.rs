use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::DMatrix;
use rayon::prelude::*;

use mwc_calculus::{complex_matmul, OperatorMatrix, Quantizer, ShiftOp};
use mwc_magfield::PotentialSpec;
use mwc_phasespace::{
    pair_bilinear, CoarseLattice, DoubleSymbol, GridError, Lattice, PhaseGrid, PhasePoint, Symbol, C64,
};

use crate::ModulationError;

/// `(2π)^{−N}`, the Liouville normalization applied to every phase-space integral.
pub fn liouville(g: &PhaseGrid) -> f64 {
    (2.0 * PI).powi(-(g.dim() as i32))
}

/// `⟨f, g⟩ = ∫ dX/(2π)^N f(X) g(X)`.
pub fn pairing(f: &Symbol, g: &Symbol) -> Result<C64, GridError> {
    Ok(pair_bilinear(f, g)? * liouville(f.grid()))
}

/// `⟨⟨F, G⟩⟩ = ∬ dX dY/(2π)^{2N} F G` on the coarse lattice of a dense operand.
pub fn double_pairing(f: &DoubleSymbol, g: &DoubleSymbol) -> Result<C64, GridError> {
    let l = liouville(f.grid());
    Ok(mwc_phasespace::pair_bilinear_double(f, g)? * l * l)
}

/// `Tr(S₁ F S₂ H)` for monomial `S₁, S₂`, in `O(n^{2N})`.
pub(crate) fn trace4(s1: &ShiftOp, f: &DMatrix<C64>, s2: &ShiftOp, h: &DMatrix<C64>) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for (i, (&c1, &p1)) in s1.col.iter().zip(&s1.phase).enumerate() {
        let mut row = C64::new(0.0, 0.0);
        for (k, (&c2, &p2)) in s2.col.iter().zip(&s2.phase).enumerate() {
            row += f[(c1, k)] * p2 * h[(c2, i)];
        }
        acc += p1 * row;
    }
    acc
}

/// Weyl shifts for every difference `X − Y` of coarse lattice points.
pub(crate) struct DifferenceShifts {
    labels: Vec<i64>,
    count: usize,
    dim: usize,
    ops: Vec<ShiftOp>,
}

impl DifferenceShifts {
    pub(crate) fn new(q: &Quantizer, lattice: &CoarseLattice) -> Self {
        let axis = lattice.axis_labels();
        let (lo, hi) = (axis[0] - axis[axis.len() - 1], axis[axis.len() - 1] - axis[0]);
        let step = lattice.stride() as i64;
        let labels: Vec<i64> = (0..).map(|t| lo + t * step).take_while(|&v| v <= hi).collect();
        let count = labels.len();
        let dim = q.grid().dim();
        let total = count.pow(2 * dim as u32);
        let ops = (0..total)
            .into_par_iter()
            .map(|idx| {
                let mut rest = idx;
                let mut d = vec![0i64; 2 * dim];
                for slot in d.iter_mut().rev() {
                    *slot = labels[rest % count];
                    rest /= count;
                }
                q.weyl_shift(&Lattice { pos: d[..dim].to_vec(), mom: d[dim..].to_vec() })
            })
            .collect();
        Self { labels, count, dim, ops }
    }

    pub(crate) fn get(&self, w: &Lattice) -> &ShiftOp {
        let lo = self.labels[0];
        let step = if self.count > 1 { self.labels[1] - lo } else { 1 };
        let idx = w.pos.iter().chain(&w.mom).fold(0, |acc, &v| acc * self.count + ((v - lo) / step) as usize);
        debug_assert_eq!(w.pos.len(), self.dim);
        &self.ops[idx]
    }
}

/// Modulation mapping on a fixed grid and vector potential.
#[derive(Debug, Clone)]
pub struct Modulator {
    q: Arc<Quantizer>,
}

impl Modulator {
    pub fn new(grid: &PhaseGrid, potential: &PotentialSpec) -> Result<Self, ModulationError> {
        Ok(Self { q: Arc::new(Quantizer::new(grid, potential)?) })
    }

    pub fn quantizer(&self) -> &Quantizer {
        &self.q
    }

    pub fn grid(&self) -> &PhaseGrid {
        self.q.grid()
    }

    /// `M^B_h(f)` as an evaluable object.
    pub fn modulated(&self, h: &Symbol, f: &Symbol) -> Result<Modulated, ModulationError> {
        if h.grid() != f.grid() || f.grid() != self.grid() {
            return Err(GridError::GridMismatch.into());
        }
        Ok(Modulated {
            q: Arc::clone(&self.q),
            f: self.q.op(f).into_matrix(),
            h: self.q.op(h).into_matrix(),
        })
    }

    /// `⟨e_{−X} #^B f #^B e_{X−Y}, h⟩` through symbol-level products.
    pub fn literal(&self, h: &Symbol, f: &Symbol, x: &Lattice, y: &Lattice) -> Result<C64, ModulationError> {
        let t = self.q.mag_translate_pair(x, y, f);
        Ok(pairing(&t, h)?)
    }

    /// `(M^B_k)^*(G) = ∬ dX dY/(2π)^{2N} G(X, Y) · e_X #^B k̄ #^B e_{Y−X}`,
    /// by quadrature over the coarse lattice of a dense `G`.
    pub fn adjoint(&self, k: &Symbol, big: &DoubleSymbol) -> Result<Symbol, ModulationError> {
        let (lat, vals) = match big {
            DoubleSymbol::Dense { lattice, values, .. } => (lattice, values),
            DoubleSymbol::Lazy { .. } => return Err(ModulationError::NotDense),
        };
        let g = *self.grid();
        let np = g.npos();
        let kbar = self.q.op(&k.conj()).into_matrix();
        let pts = lat.points();
        let m = pts.len();
        let l = liouville(&g);
        let w = (lat.weight(&g) * l).powi(2);
        let diffs = DifferenceShifts::new(&self.q, lat);
        let partials: Vec<DMatrix<C64>> = pts
            .par_iter()
            .enumerate()
            .map(|(ix, x)| {
                let mut s = DMatrix::zeros(np, np);
                for (iy, y) in pts.iter().enumerate() {
                    let c = vals[ix * m + iy];
                    let sh = diffs.get(&y.sub(x));
                    for (i, (&j, &p)) in sh.col.iter().zip(&sh.phase).enumerate() {
                        s[(i, j)] += c * p;
                    }
                }
                complex_matmul(&self.q.weyl_shift(x).left_mul(&kbar), &s)
            })
            .collect();
        let mut acc = DMatrix::zeros(np, np);
        for p in partials {
            acc += p;
        }
        Ok(self.q.symbol_of(&OperatorMatrix::from_matrix(&g, acc * C64::new(w, 0.0))))
    }
}

/// `M^B_h(f)(X, Y) = Tr(op^A(−X) Op^A(f) op^A(X−Y) Op^A(h))`.
#[derive(Debug, Clone)]
pub struct Modulated {
    q: Arc<Quantizer>,
    f: DMatrix<C64>,
    h: DMatrix<C64>,
}

impl Modulated {
    pub fn grid(&self) -> &PhaseGrid {
        self.q.grid()
    }

    pub fn at(&self, x: &Lattice, y: &Lattice) -> C64 {
        trace4(&self.q.weyl_shift(&x.neg()), &self.f, &self.q.weyl_shift(&x.sub(y)), &self.h)
    }

    /// `K_X = Op(h) op(−X) Op(f)`, so that the value at `(X, Y)` is `Tr(op(X−Y) K_X)`.
    pub fn slice(&self, x: &Lattice) -> DMatrix<C64> {
        complex_matmul(&self.h, &self.q.weyl_shift(&x.neg()).left_mul(&self.f))
    }

    /// Dense samples on `lattice × lattice`.
    pub fn dense(&self, lattice: &CoarseLattice) -> DoubleSymbol {
        let pts = lattice.points();
        let diffs = DifferenceShifts::new(&self.q, lattice);
        let rows: Vec<Vec<C64>> = pts
            .par_iter()
            .map(|x| {
                let k = self.slice(x);
                pts.iter().map(|y| diffs.get(&x.sub(y)).trace_with(&k)).collect()
            })
            .collect();
        DoubleSymbol::dense(self.grid(), lattice.clone(), rows.concat())
    }

    /// On-demand evaluation; off-grid arguments give `NaN`.
    pub fn lazy(&self, samples: Vec<(PhasePoint, PhasePoint)>) -> DoubleSymbol {
        let me = self.clone();
        let g = *self.grid();
        DoubleSymbol::lazy(
            &g,
            move |x, y| match (g.snap(x), g.snap(y)) {
                (Ok(a), Ok(b)) => me.at(&a, &b),
                _ => C64::new(f64::NAN, f64::NAN),
            },
            samples,
        )
    }

    /// `(self ⋄ other)(X, Y) = ∫ dZ/(2π)^N self(X, Z) other(X − Z, Y − Z)`
    /// over the full grid, using the trace form of both factors.
    pub fn crossed_at(&self, other: &Modulated, x: &Lattice, y: &Lattice) -> C64 {
        let g = self.grid();
        let kx = self.slice(x);
        // other(X−Z, Y−Z) = Tr(op(Z−X) · Op(g) op(X−Y) Op(k))
        let m = complex_matmul(&other.f, &self.q.weyl_shift(&x.sub(y)).left_mul(&other.h));
        let mut acc = C64::new(0.0, 0.0);
        for iz in 0..g.nsym() {
            let z = g.lattice_of_index(iz);
            let v = x.sub(&z);
            acc += self.q.weyl_shift(&v).trace_with(&kx) * self.q.weyl_shift(&v.neg()).trace_with(&m);
        }
        acc * g.weight_phase() * liouville(g)
    }

    pub fn quantizer(&self) -> &Quantizer {
        &self.q
    }

    /// `Op(h)` and `Op(f)` as stored.
    pub fn operators(&self) -> (&DMatrix<C64>, &DMatrix<C64>) {
        (&self.h, &self.f)
    }
}

/// Dense `M^B_h(f)` on a coarse lattice.
pub fn modulation(
    h: &Symbol,
    f: &Symbol,
    potential: &PotentialSpec,
    lattice: &CoarseLattice,
) -> Result<DoubleSymbol, ModulationError> {
    Ok(Modulator::new(f.grid(), potential)?.modulated(h, f)?.dense(lattice))
}

pub fn modulation_adjoint(
    k: &Symbol,
    big: &DoubleSymbol,
    potential: &PotentialSpec,
) -> Result<Symbol, ModulationError> {
    Modulator::new(k.grid(), potential)?.adjoint(k, big)
}
