//! The magnetic modulation mapping `M^B_h` and the crossed-product algebra it
//! lands in.
//!
//! All phase-space integrals here use the Liouville measure `dX/(2π)^N`, and
//! `⟨f, g⟩` denotes the bilinear pairing for that measure. With this choice
//! `⟨f, g⟩ = Tr(Op f · Op g)` and the orthogonality, inversion and morphism
//! identities carry no extra constants.

mod crossed;
mod lemma;
mod map;
mod tensor;

pub use crossed::{crossed_involution, crossed_product, rep_quadrature};
pub use lemma::{lemma_identities, LemmaResiduals};
pub use map::{double_pairing, liouville, modulation, modulation_adjoint, pairing, Modulated, Modulator};
pub use tensor::{box_product, j_adjoint, j_embed, modulation_tensor, ModulatedSum, TensorSum};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModulationError {
    #[error(transparent)]
    Calculus(#[from] mwc_calculus::CalculusError),
    #[error(transparent)]
    Grid(#[from] mwc_phasespace::GridError),
    #[error("operation needs dense coarse samples")]
    NotDense,
    #[error("operation needs an everywhere-evaluable double symbol")]
    NotEvaluable,
}
