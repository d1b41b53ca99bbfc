use std::num::NonZeroUsize;
use std::sync::OnceLock;

use gauss_quad::legendre::GaussLegendre;

/// Gauss–Legendre nodes and weights mapped to `[0, 1]`.
pub(crate) struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule {
    fn new(degree: usize) -> Self {
        let gl = GaussLegendre::new(NonZeroUsize::new(degree).expect("positive degree"));
        let (nodes, weights) = gl.as_node_weight_pairs().iter().map(|&(x, w)| (0.5 * (x + 1.0), 0.5 * w)).unzip();
        Self { nodes, weights }
    }

    /// `∫_a^b f`.
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let len = b - a;
        self.nodes.iter().zip(&self.weights).map(|(&t, &w)| w * f(a + len * t)).sum::<f64>() * len
    }
}

/// Eight nodes: exact for the polynomial field kinds.
pub(crate) fn low() -> &'static Rule {
    static R: OnceLock<Rule> = OnceLock::new();
    R.get_or_init(|| Rule::new(8))
}

/// Twenty-four nodes for smooth non-polynomial fields.
pub(crate) fn high() -> &'static Rule {
    static R: OnceLock<Rule> = OnceLock::new();
    R.get_or_init(|| Rule::new(24))
}
