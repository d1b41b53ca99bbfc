//! Magnetic fields on configuration space and the geometric quantities built
//! from them: triangle fluxes, segment circulations, gauges and cocycles.
//!
//! Orientation conventions: segments run from the first point to the second,
//! and simplices are parametrized from their first vertex, so that
//! `Γ^A([a,b]) + Γ^A([b,c]) + Γ^A([c,a]) = Γ^B(<a,b,c>)` whenever `dA = B`.

mod cocycle;
mod field;
mod potential;
mod quad;

pub use cocycle::{cocycle_big, cocycle_small, omega_tilde};
pub use field::{flux_parallelogram, flux_triangle, FieldKind, FieldSpec};
pub use potential::{circulation, curl, gauge_shift, transversal_gauge, GaugeScalar, PotentialBase, PotentialSpec};

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum FieldError {
    #[error("a nonzero magnetic field needs N = 2")]
    NonzeroFieldInOneDimension,
    #[error("invalid field parameter: {0}")]
    BadParameter(&'static str),
}
