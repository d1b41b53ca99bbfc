//! Magnetic coherent states and the Bargmann transform built on them.

mod coherent;
mod rep;
mod window;

pub use coherent::{coherent_vector, coherent_vector_explicit, Bargmann, BargmannFunction};
pub use rep::{kohn_nirenberg, rep_apply, rep_apply_reflected, rep_modulated, KohnNirenberg};
pub use window::{coherent_functional_explicit, wigner_window, wigner_window_explicit};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BargmannError {
    #[error(transparent)]
    Calculus(#[from] mwc_calculus::CalculusError),
    #[error(transparent)]
    Modulation(#[from] mwc_modulation::ModulationError),
    #[error(transparent)]
    Grid(#[from] mwc_phasespace::GridError),
    #[error("fiducial vector has norm {norm}, expected 1")]
    NotNormalized { norm: f64 },
    #[error("{entries} table entries exceed the limit of {limit}")]
    TooLarge { entries: usize, limit: usize },
}
