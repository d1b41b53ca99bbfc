//! The fixed list of checks, their default tolerances and memory models.

use mwc_phasespace::PhaseGrid;

use crate::checks::{bargmann as bg, calculus as ca, modulation as mo, CheckResult, Context};
pub use crate::checks::{default_fixture, Measurement};

/// Scenario restrictions a check needs beyond a valid grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Requirement {
    None,
    /// Zero or constant magnetic field.
    ConstantField,
}

pub struct CheckSpec {
    pub id: &'static str,
    pub summary: &'static str,
    /// Default tolerance; a scenario may override it.
    pub tolerance: f64,
    /// Whether the residual must strictly decrease when the grid is refined.
    /// Residuals already at the roundoff floor on both grids are exempt.
    pub decreasing: bool,
    pub requires: Requirement,
    /// Fixture names the check reads; each has a built-in default.
    pub fixtures: &'static [&'static str],
    pub(crate) run: fn(&Context) -> CheckResult,
    /// Predicted peak allocation in bytes.
    pub memory: fn(&PhaseGrid) -> u64,
}

impl std::fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckSpec").field("id", &self.id).field("tolerance", &self.tolerance).finish()
    }
}

macro_rules! check {
    ($id:literal, $summary:literal, $tol:expr, $decreasing:expr, $req:ident, [$($fx:literal),*], $run:path, $mem:path) => {
        CheckSpec {
            id: $id,
            summary: $summary,
            tolerance: $tol,
            decreasing: $decreasing,
            requires: Requirement::$req,
            fixtures: &[$($fx),*],
            run: $run,
            memory: $mem,
        }
    };
}

static CATALOG: [CheckSpec; 18] = [
    check!("gauge_covariance", "Op under A + dρ equals e^{iρ} Op e^{−iρ}",
        1e-10, false, None, ["probe"], ca::gauge_covariance, ca::gauge_covariance_memory),
    check!("weyl_product_rule", "W(X)W(Y) = Ω(X,Y;Q) W(X+Y) on rows without wraparound",
        1e-8, false, None, [], ca::weyl_product_rule, ca::weyl_product_rule_memory),
    check!("cocycle_factorization", "e_X # e_Y = Ω(X,Y;·) e_{X+Y} on the central window, even position shifts",
        1e-6, true, ConstantField, [], ca::cocycle_factorization, ca::cocycle_factorization_memory),
    check!("moyal_routes", "direct flux quadrature of f # g against the operator route",
        1e-3, true, None, ["moyal_f", "moyal_g"], ca::moyal_routes, ca::moyal_routes_memory),
    check!("moyal_nonmagnetic_oracle", "operator route with A = 0 against the Fourier Moyal product",
        1e-8, false, None, ["moyal_f", "moyal_g"], ca::moyal_nonmagnetic_oracle, ca::moyal_nonmagnetic_oracle_memory),
    check!("magnetic_translation", "cocycle-transform formula for Θ_Z against e_Z # f # e_{−Z}",
        1e-3, true, ConstantField, ["bump"], ca::magnetic_translation, ca::magnetic_translation_memory),
    check!("trace_cyclicity", "⟨f₁ # f₂, f₃⟩ = ⟨f₁, f₂ # f₃⟩ = ⟨f₂, f₃ # f₁⟩",
        1e-6, false, None, ["f", "g", "k", "h"], mo::trace_cyclicity, mo::lemma_memory),
    check!("trace_plane_waves", "∫ dZ ⟨f, e_Z⟩⟨e_{−Z}, g⟩ = ⟨f, g⟩",
        1e-3, true, None, ["f", "g", "k", "h"], mo::trace_plane_waves, mo::lemma_memory),
    check!("trace_translation_average", "∬ dY dZ Θ_Z(f)(Y) g(Y) = ⟨1, f⟩⟨1, g⟩",
        1e-3, true, None, ["f", "g", "k", "h"], mo::trace_translation_average, mo::lemma_memory),
    check!("orthogonality", "⟨⟨conj M_h f, M_k g⟩⟩ = ⟨h̄, k⟩⟨f̄, g⟩ on a coarse lattice",
        5e-3, true, None, ["f", "g", "h", "k"], mo::orthogonality, mo::coarse_memory),
    check!("inversion", "M_k^* M_h f = ⟨h, k̄⟩ f on a coarse lattice",
        5e-3, true, None, ["f", "h", "k"], mo::inversion, mo::coarse_memory),
    check!("morphism", "M_h f ⋄ M_h g = M_{h#h}(f # g) for a Wigner window",
        5e-3, false, None, ["window", "f", "g"], mo::morphism, mo::morphism_memory),
    check!("window_idempotency", "the Wigner window h of a unit vector satisfies h # h = h",
        1e-8, false, None, ["window"], mo::window_idempotency, mo::window_memory),
    check!("bargmann_isometry", "‖U u‖ = ‖u‖, U^*U = 1 and the coherent resolution of identity",
        1e-3, true, None, ["window"], bg::bargmann_isometry, bg::bargmann_isometry_memory),
    check!("reproducing_kernel", "U u is reproduced by its kernel and fixed by the projection",
        1e-3, false, None, ["window"], bg::reproducing_kernel, bg::reproducing_kernel_memory),
    check!("intertwining", "reflected REP(M_h f) equals U Op(f) U^* on the range",
        5e-3, true, None, ["window"], bg::intertwining, bg::intertwining_memory),
    check!("calibration_stability", "spread of the trace and Hilbert-Schmidt constants over random symbols",
        1e-6, false, None, [], ca::calibration_stability, ca::calibration_stability_memory),
    check!("nonmagnetic_regression", "plane-wave products, translations and the Gaussian Wigner function without field",
        1e-6, false, None, ["probe"], ca::nonmagnetic_regression, ca::nonmagnetic_regression_memory),
];

pub fn catalog() -> &'static [CheckSpec] {
    &CATALOG
}

pub fn find(id: &str) -> Option<&'static CheckSpec> {
    CATALOG.iter().find(|c| c.id == id)
}

impl CheckSpec {
    pub(crate) fn measure(&self, ctx: &Context) -> CheckResult {
        (self.run)(ctx)
    }
}


/// Residuals at or below this level count as roundoff.
pub const ROUNDOFF_FLOOR: f64 = 1e-11;

/// The refinement rule: the finer residual is strictly smaller, or both sit
/// at the roundoff floor.
pub fn decreased(coarse: f64, fine: f64) -> bool {
    fine < coarse || (coarse <= ROUNDOFF_FLOOR && fine <= ROUNDOFF_FLOOR)
}
