//! Magnetic Weyl quantization on a periodic phase-space grid.
//!
//! Operators are dense matrices on the position grid. The composition law is
//! available through the operator kernel (exact up to roundoff) and through a
//! direct refined quadrature of the integral formula.

mod matrix;
mod moyal;
mod quantize;
mod translate;

pub use matrix::{complex_matmul, OperatorMatrix, ShiftOp};
pub use moyal::{interior_rows, moyal_direct, rel_l2_vec, weyl_product_fourier};
pub use quantize::{
    mag_translate, mag_translate_pair, moyal_kernel_route, op_weyl, symbol_of, weyl_system, wigner, Quantizer,
};
pub use translate::{mag_translate_explicit, mixed_product};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CalculusError {
    #[error(transparent)]
    Grid(#[from] mwc_phasespace::GridError),
    #[error("potential has dimension {other}, grid has dimension {grid}")]
    DimensionMismatch { grid: usize, other: usize },
}
