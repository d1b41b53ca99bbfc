use std::sync::Arc;

use rayon::prelude::*;

use mwc_calculus::{OperatorMatrix, Quantizer};
use mwc_magfield::{circulation, PotentialSpec};
use mwc_modulation::liouville;
use mwc_phasespace::{Lattice, PhaseGrid, PhasePoint, Symbol, WaveFunction, C64};

use crate::BargmannError;

/// A function on the phase-space grid, normed with `dX/(2π)^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct BargmannFunction {
    grid: PhaseGrid,
    values: Vec<C64>,
}

impl BargmannFunction {
    pub fn new(grid: &PhaseGrid, values: Vec<C64>) -> Self {
        assert_eq!(values.len(), grid.nsym(), "phase-space sample count");
        Self { grid: *grid, values }
    }

    pub fn grid(&self) -> &PhaseGrid {
        &self.grid
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    /// Weight of one grid point under `dX/(2π)^N`.
    pub fn weight(&self) -> f64 {
        self.grid.weight_phase() * liouville(&self.grid)
    }

    pub fn inner(&self, o: &Self) -> C64 {
        self.values.iter().zip(&o.values).map(|(a, b)| a.conj() * b).sum::<C64>() * self.weight()
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.grid, self.values.iter().zip(&o.values).map(|(a, b)| a - b).collect())
    }

    pub fn from_symbol(s: &Symbol) -> Self {
        Self::new(s.grid(), s.values().to_vec())
    }

    pub fn to_symbol(&self) -> Symbol {
        Symbol::new(&self.grid, self.values.clone())
    }
}

fn check_unit(v: &WaveFunction) -> Result<(), BargmannError> {
    let norm = v.norm();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(BargmannError::NotNormalized { norm });
    }
    Ok(())
}

/// The coherent family `v^A(Y) = op^A(−Y) e^{iΓ^A([0, Q])} v` over the grid.
#[derive(Debug, Clone)]
pub struct Bargmann {
    q: Arc<Quantizer>,
    fiducial: WaveFunction,
}

impl Bargmann {
    pub fn new(grid: &PhaseGrid, potential: &PotentialSpec, v: &WaveFunction) -> Result<Self, BargmannError> {
        Self::with_quantizer(Arc::new(Quantizer::new(grid, potential)?), v)
    }

    pub fn with_quantizer(q: Arc<Quantizer>, v: &WaveFunction) -> Result<Self, BargmannError> {
        check_unit(v)?;
        let g = *q.grid();
        let origin = vec![0.0; g.dim()];
        let a = q.potential();
        let vals = v
            .values()
            .iter()
            .enumerate()
            .map(|(i, &c)| c * C64::from_polar(1.0, circulation(a, &origin, &g.position(i))))
            .collect();
        Ok(Self { fiducial: WaveFunction::new(&g, vals), q })
    }

    pub fn grid(&self) -> &PhaseGrid {
        self.q.grid()
    }

    pub fn quantizer(&self) -> &Quantizer {
        &self.q
    }

    /// `v^A = v^A(0)`.
    pub fn fiducial(&self) -> &WaveFunction {
        &self.fiducial
    }

    pub fn coherent(&self, y: &Lattice) -> WaveFunction {
        self.q.weyl_shift(&y.neg()).apply(&self.fiducial)
    }

    /// `(U u)(X) = ⟨v^A(X), u⟩` on every grid point.
    pub fn transform(&self, u: &WaveFunction) -> BargmannFunction {
        let g = *self.grid();
        let w = g.weight_x();
        let values = (0..g.nsym())
            .into_par_iter()
            .map(|ix| {
                let s = self.q.weyl_shift(&g.lattice_of_index(ix).neg());
                let mut acc = C64::new(0.0, 0.0);
                for (i, (&j, &p)) in s.col.iter().zip(&s.phase).enumerate() {
                    acc += (p * self.fiducial.values()[j]).conj() * u.values()[i];
                }
                acc * w
            })
            .collect();
        BargmannFunction::new(&g, values)
    }

    /// `U^* Φ = ∫ dX/(2π)^N Φ(X) v^A(X)`.
    pub fn adjoint(&self, phi: &BargmannFunction) -> WaveFunction {
        let g = *self.grid();
        let np = g.npos();
        let partials: Vec<Vec<C64>> = (0..g.nsym())
            .collect::<Vec<_>>()
            .par_chunks(np)
            .map(|xs| {
                let mut out = vec![C64::new(0.0, 0.0); np];
                for &ix in xs {
                    let c = phi.values()[ix];
                    let s = self.q.weyl_shift(&g.lattice_of_index(ix).neg());
                    for (i, (&j, &p)) in s.col.iter().zip(&s.phase).enumerate() {
                        out[i] += c * p * self.fiducial.values()[j];
                    }
                }
                out
            })
            .collect();
        let mut total = vec![C64::new(0.0, 0.0); np];
        for p in partials {
            for (t, v) in total.iter_mut().zip(p) {
                *t += v;
            }
        }
        let w = phi.weight();
        WaveFunction::new(&g, total.into_iter().map(|v| v * w).collect())
    }

    /// `K(X, Y) = ⟨v^A(X), v^A(Y)⟩`.
    pub fn kernel(&self, x: &Lattice, y: &Lattice) -> C64 {
        self.coherent(x).inner(&self.coherent(y))
    }

    /// `P Φ = U U^* Φ`.
    pub fn project(&self, phi: &BargmannFunction) -> BargmannFunction {
        self.transform(&self.adjoint(phi))
    }

    /// `‖P Φ − Φ‖ / ‖Φ‖`.
    pub fn membership_residual(&self, phi: &BargmannFunction) -> f64 {
        self.project(phi).sub(phi).norm() / phi.norm()
    }

    /// `∫ dY/(2π)^N K(X, Y) Φ(Y)` at the given points, with the kernel
    /// evaluated entry by entry.
    pub fn reproduce(&self, phi: &BargmannFunction, points: &[Lattice]) -> Vec<C64> {
        let g = *self.grid();
        let all: Vec<WaveFunction> = (0..g.nsym()).into_par_iter().map(|iy| self.coherent(&g.lattice_of_index(iy))).collect();
        points
            .par_iter()
            .map(|x| {
                let vx = self.coherent(x);
                let mut acc = C64::new(0.0, 0.0);
                for (vy, c) in all.iter().zip(phi.values()) {
                    acc += vx.inner(vy) * c;
                }
                acc * phi.weight()
            })
            .collect()
    }

    /// `Σ_X w |v^A(X)⟩⟨v^A(X)|`, which should be the identity.
    pub fn resolution(&self) -> OperatorMatrix {
        let g = *self.grid();
        let np = g.npos();
        let mut m = nalgebra::DMatrix::zeros(np, np);
        let w = g.weight_phase() * liouville(&g) * g.weight_x();
        for ix in 0..g.nsym() {
            let v = self.coherent(&g.lattice_of_index(ix));
            for i in 0..np {
                for j in 0..np {
                    m[(i, j)] += v.values()[i] * v.values()[j].conj() * w;
                }
            }
        }
        OperatorMatrix::from_matrix(&g, m)
    }

    /// `𝔳(Z)(f) = ⟨v^A(Z), Op^A(f) v^A(Z)⟩`.
    pub fn functional(&self, z: &Lattice, f: &Symbol) -> C64 {
        let vz = self.coherent(z);
        vz.inner(&self.q.op(f).apply(&vz))
    }
}

/// `v^A(Y)` for an on-grid `Y`.
pub fn coherent_vector(a: &PotentialSpec, v: &WaveFunction, y: &PhasePoint) -> Result<WaveFunction, BargmannError> {
    let g = *v.grid();
    let label = g.snap(y)?;
    Ok(Bargmann::new(&g, a, v)?.coherent(&label))
}

/// `[v^A(Y)](x) = e^{i(x − y/2)·η} e^{−iΓ^A([x, x−y])} e^{iΓ^A([0, x−y])} v(x − y)`
/// with `v` given as a function, so that no grid wrap is involved.
pub fn coherent_vector_explicit(
    a: &PotentialSpec,
    grid: &PhaseGrid,
    v: impl Fn(&[f64]) -> C64,
    y: &PhasePoint,
) -> WaveFunction {
    let origin = vec![0.0; grid.dim()];
    WaveFunction::from_fn(grid, |x| {
        let d: Vec<f64> = x.iter().zip(&y.x).map(|(p, q)| p - q).collect();
        let kin: f64 = x.iter().zip(&y.x).zip(&y.xi).map(|((p, q), e)| (p - q / 2.0) * e).sum();
        let ph = kin - circulation(a, x, &d) + circulation(a, &origin, &d);
        C64::from_polar(1.0, ph) * v(&d)
    })
}
