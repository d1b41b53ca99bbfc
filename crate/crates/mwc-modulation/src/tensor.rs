use mwc_calculus::Quantizer;
use mwc_phasespace::{DoubleSymbol, Lattice, PhasePoint, Symbol, C64};

use crate::map::{liouville, Modulated, Modulator};
use crate::ModulationError;

/// A finite sum `Σ f_i ⊗ h_i` of simple tensors on Ξ × Ξ.
#[derive(Debug, Clone)]
pub struct TensorSum {
    pub terms: Vec<(Symbol, Symbol)>,
}

impl TensorSum {
    pub fn simple(f: &Symbol, h: &Symbol) -> Self {
        Self { terms: vec![(f.clone(), h.clone())] }
    }
}

/// `J_h(f) = f ⊗ h`, evaluated at grid points.
pub fn j_embed(h: &Symbol, f: &Symbol) -> DoubleSymbol {
    let (hc, fc) = (h.clone(), f.clone());
    let g = *f.grid();
    DoubleSymbol::lazy(
        &g,
        move |x, y| match (g.snap(x), g.snap(y)) {
            (Ok(a), Ok(b)) => fc.at_lattice(&a) * hc.at_lattice(&b),
            _ => C64::new(f64::NAN, f64::NAN),
        },
        Vec::new(),
    )
}

/// `[J_h^* F](X) = ⟨F(X, ·), h⟩`.
pub fn j_adjoint(h: &Symbol, big: &DoubleSymbol) -> Result<Symbol, ModulationError> {
    if let DoubleSymbol::Dense { .. } = big {
        return Err(ModulationError::NotEvaluable);
    }
    let g = *h.grid();
    let w = g.weight_phase() * liouville(&g);
    let pts: Vec<PhasePoint> = (0..g.nsym()).map(|i| g.phase_point(i)).collect();
    let out = pts
        .iter()
        .map(|x| {
            let s: C64 = pts
                .iter()
                .zip(h.values())
                .map(|(y, hv)| big.eval(x, y).unwrap_or(C64::new(f64::NAN, 0.0)) * hv)
                .sum();
            s * w
        })
        .collect();
    Ok(Symbol::new(&g, out))
}

/// `(f ⊗ h) □^B (g ⊗ k) = (f #^B g) ⊗ (k #^B h)`, extended bilinearly.
pub fn box_product(q: &Quantizer, a: &TensorSum, b: &TensorSum) -> TensorSum {
    let mut terms = Vec::with_capacity(a.terms.len() * b.terms.len());
    for (f, h) in &a.terms {
        for (g, k) in &b.terms {
            terms.push((q.product(f, g), q.product(k, h)));
        }
    }
    TensorSum { terms }
}

/// `M^B(Σ f_i ⊗ h_i) = Σ M^B_{h_i}(f_i)`.
#[derive(Debug, Clone)]
pub struct ModulatedSum {
    parts: Vec<Modulated>,
}

impl ModulatedSum {
    pub fn at(&self, x: &Lattice, y: &Lattice) -> C64 {
        self.parts.iter().map(|m| m.at(x, y)).sum()
    }

    pub fn crossed_at(&self, other: &ModulatedSum, x: &Lattice, y: &Lattice) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for a in &self.parts {
            for b in &other.parts {
                acc += a.crossed_at(b, x, y);
            }
        }
        acc
    }
}

pub fn modulation_tensor(m: &Modulator, t: &TensorSum) -> Result<ModulatedSum, ModulationError> {
    let parts = t.terms.iter().map(|(f, h)| m.modulated(h, f)).collect::<Result<_, _>>()?;
    Ok(ModulatedSum { parts })
}
