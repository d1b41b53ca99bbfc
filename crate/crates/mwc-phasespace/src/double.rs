use std::sync::Arc;

use num_complex::Complex64 as C64;

use crate::grid::{GridError, Lattice, PhaseGrid, PhasePoint};

/// A centered sub-lattice of Ξ used as a coarse quadrature grid.
///
/// Along every one of the `2N` axes the labels are `stride · (t − count/2)`
/// for `t = 0..count`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoarseLattice {
    dim: usize,
    stride: i64,
    count: usize,
}

impl CoarseLattice {
    pub fn new(g: &PhaseGrid, stride: usize, count: usize) -> Result<Self, GridError> {
        if stride == 0 || count == 0 || stride * count > g.n() {
            return Err(GridError::InvalidSize(stride * count));
        }
        Ok(Self { dim: g.dim(), stride: stride as i64, count })
    }

    pub fn stride(&self) -> usize {
        self.stride as usize
    }
    pub fn count(&self) -> usize {
        self.count
    }

    /// Number of coarse Ξ points, `count^{2N}`.
    pub fn len(&self) -> usize {
        self.count.pow(2 * self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn axis_labels(&self) -> Vec<i64> {
        let h = (self.count / 2) as i64;
        (0..self.count as i64).map(|t| self.stride * (t - h)).collect()
    }

    pub fn point(&self, idx: usize) -> Lattice {
        let labels = self.axis_labels();
        let mut rest = idx;
        let mut digits = vec![0i64; 2 * self.dim];
        for d in (0..2 * self.dim).rev() {
            digits[d] = labels[rest % self.count];
            rest /= self.count;
        }
        Lattice { pos: digits[..self.dim].to_vec(), mom: digits[self.dim..].to_vec() }
    }

    pub fn points(&self) -> Vec<Lattice> {
        (0..self.len()).map(|i| self.point(i)).collect()
    }

    /// Inverse of [`point`](Self::point) for labels on this lattice.
    pub fn index_of(&self, l: &Lattice) -> Option<usize> {
        let h = (self.count / 2) as i64;
        let mut idx = 0;
        for &v in l.pos.iter().chain(&l.mom) {
            if v % self.stride != 0 {
                return None;
            }
            let t = v / self.stride + h;
            if t < 0 || t >= self.count as i64 {
                return None;
            }
            idx = idx * self.count + t as usize;
        }
        Some(idx)
    }

    /// Quadrature weight of one coarse Ξ point.
    pub fn weight(&self, g: &PhaseGrid) -> f64 {
        g.weight_phase() * (self.stride as f64).powi(2 * self.dim as i32)
    }

    pub fn pairs_lattice(&self) -> Vec<(Lattice, Lattice)> {
        let pts = self.points();
        let mut out = Vec::with_capacity(pts.len() * pts.len());
        for x in &pts {
            for y in &pts {
                out.push((x.clone(), y.clone()));
            }
        }
        out
    }

    pub fn pairs(&self, g: &PhaseGrid) -> Vec<(PhasePoint, PhasePoint)> {
        self.pairs_lattice().iter().map(|(x, y)| (x.to_point(g), y.to_point(g))).collect()
    }
}

pub type PairFn = Arc<dyn Fn(&PhasePoint, &PhasePoint) -> C64 + Send + Sync>;

/// A function on Ξ × Ξ, either tabulated on a coarse product lattice or
/// evaluated on demand.
#[derive(Clone)]
pub enum DoubleSymbol {
    Dense { grid: PhaseGrid, lattice: CoarseLattice, values: Vec<C64> },
    Lazy { grid: PhaseGrid, eval: PairFn, samples: Vec<(PhasePoint, PhasePoint)> },
}

impl std::fmt::Debug for DoubleSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Dense { lattice, values, .. } => {
                write!(f, "DoubleSymbol::Dense({lattice:?}, {} values)", values.len())
            }
            Self::Lazy { samples, .. } => write!(f, "DoubleSymbol::Lazy({} samples)", samples.len()),
        }
    }
}

impl DoubleSymbol {
    /// Dense storage; `values` is indexed `ix · len + iy` over lattice points.
    pub fn dense(grid: &PhaseGrid, lattice: CoarseLattice, values: Vec<C64>) -> Self {
        assert_eq!(values.len(), lattice.len() * lattice.len(), "double symbol sample count");
        Self::Dense { grid: *grid, lattice, values }
    }

    pub fn dense_from_fn(
        grid: &PhaseGrid,
        lattice: CoarseLattice,
        f: impl Fn(&PhasePoint, &PhasePoint) -> C64,
    ) -> Self {
        let values = lattice.pairs(grid).iter().map(|(x, y)| f(x, y)).collect();
        Self::dense(grid, lattice, values)
    }

    pub fn lazy(
        grid: &PhaseGrid,
        f: impl Fn(&PhasePoint, &PhasePoint) -> C64 + Send + Sync + 'static,
        samples: Vec<(PhasePoint, PhasePoint)>,
    ) -> Self {
        Self::Lazy { grid: *grid, eval: Arc::new(f), samples }
    }

    pub fn grid(&self) -> &PhaseGrid {
        match self {
            Self::Dense { grid, .. } | Self::Lazy { grid, .. } => grid,
        }
    }

    /// Value at a pair; dense symbols answer only on their own lattice.
    pub fn eval(&self, x: &PhasePoint, y: &PhasePoint) -> Option<C64> {
        match self {
            Self::Lazy { eval, .. } => Some(eval(x, y)),
            Self::Dense { grid, lattice, values } => {
                let ix = lattice.index_of(&grid.snap(x).ok()?)?;
                let iy = lattice.index_of(&grid.snap(y).ok()?)?;
                Some(values[ix * lattice.len() + iy])
            }
        }
    }

    pub fn lattice(&self) -> Option<&CoarseLattice> {
        match self {
            Self::Dense { lattice, .. } => Some(lattice),
            Self::Lazy { .. } => None,
        }
    }

    pub fn dense_values(&self) -> Option<&[C64]> {
        match self {
            Self::Dense { values, .. } => Some(values),
            Self::Lazy { .. } => None,
        }
    }

    /// Maximum discrepancy at shared points is within `tol`.
    pub fn agrees_with(&self, other: &Self, tol: f64) -> bool {
        let samples: Vec<(PhasePoint, PhasePoint)> = match (self, other) {
            (Self::Dense { lattice, grid, .. }, _) => lattice.pairs(grid),
            (_, Self::Dense { lattice, grid, .. }) => lattice.pairs(grid),
            (Self::Lazy { samples, .. }, _) => samples.clone(),
        };
        samples.iter().all(|(x, y)| match (self.eval(x, y), other.eval(x, y)) {
            (Some(a), Some(b)) => (a - b).norm() <= tol,
            _ => true,
        })
    }
}

/// `⟨⟨F, G⟩⟩ = ∬ F G` by quadrature on the coarse lattice of a dense operand.
pub fn pair_bilinear_double(f: &DoubleSymbol, g: &DoubleSymbol) -> Result<C64, GridError> {
    if f.grid() != g.grid() {
        return Err(GridError::GridMismatch);
    }
    if let (
        DoubleSymbol::Dense { lattice: la, values: va, grid },
        DoubleSymbol::Dense { lattice: lb, values: vb, .. },
    ) = (f, g)
    {
        if la == lb {
            let w = la.weight(grid).powi(2);
            return Ok(va.iter().zip(vb).map(|(a, b)| a * b).sum::<C64>() * w);
        }
    }
    let (dense, other) = match (f, g) {
        (DoubleSymbol::Dense { .. }, _) => (f, g),
        (_, DoubleSymbol::Dense { .. }) => (g, f),
        _ => return Err(GridError::NotQuadrature),
    };
    let DoubleSymbol::Dense { grid, lattice, values } = dense else { unreachable!() };
    let w = lattice.weight(grid).powi(2);
    let pairs = lattice.pairs(grid);
    let mut acc = C64::new(0.0, 0.0);
    for (v, (x, y)) in values.iter().zip(&pairs) {
        let o = other.eval(x, y).ok_or(GridError::NotQuadrature)?;
        acc += v * o;
    }
    Ok(acc * w)
}
