use nalgebra::DMatrix;

use mwc_phasespace::{PhaseGrid, WaveFunction, C64};

/// Complex matrix product through four real products, which use the
/// blocked real kernel instead of the generic scalar loop.
pub fn complex_matmul(a: &DMatrix<C64>, b: &DMatrix<C64>) -> DMatrix<C64> {
    let (ar, ai) = (a.map(|z| z.re), a.map(|z| z.im));
    let (br, bi) = (b.map(|z| z.re), b.map(|z| z.im));
    let re = &ar * &br - &ai * &bi;
    let im = &ar * &bi + &ai * &br;
    re.zip_map(&im, C64::new)
}

/// Dense operator on the discretized state space.
///
/// Entries are kernel values times the configuration weight `dx^N`, so the
/// matrix acts on sample vectors directly, the trace is the operator trace
/// and the Frobenius norm is the Hilbert–Schmidt norm.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    grid: PhaseGrid,
    mat: DMatrix<C64>,
}

impl OperatorMatrix {
    pub fn from_matrix(grid: &PhaseGrid, mat: DMatrix<C64>) -> Self {
        assert_eq!(mat.nrows(), grid.npos());
        assert_eq!(mat.ncols(), grid.npos());
        Self { grid: *grid, mat }
    }

    pub fn zeros(grid: &PhaseGrid) -> Self {
        Self::from_matrix(grid, DMatrix::zeros(grid.npos(), grid.npos()))
    }

    pub fn identity(grid: &PhaseGrid) -> Self {
        Self::from_matrix(grid, DMatrix::identity(grid.npos(), grid.npos()))
    }

    /// Multiplication by `φ(Q)`.
    pub fn multiplication(grid: &PhaseGrid, phi: impl Fn(&[f64]) -> C64) -> Self {
        let d: Vec<C64> = (0..grid.npos()).map(|i| phi(&grid.position(i))).collect();
        Self::from_matrix(grid, DMatrix::from_diagonal(&nalgebra::DVector::from_vec(d)))
    }

    /// `|u⟩⟨v|`.
    pub fn rank_one(u: &WaveFunction, v: &WaveFunction) -> Self {
        let g = *u.grid();
        let w = g.weight_x();
        let np = g.npos();
        let mat = DMatrix::from_fn(np, np, |i, j| u.values()[i] * v.values()[j].conj() * w);
        Self::from_matrix(&g, mat)
    }

    pub fn grid(&self) -> &PhaseGrid {
        &self.grid
    }
    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.mat
    }
    pub fn into_matrix(self) -> DMatrix<C64> {
        self.mat
    }
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.mat[(i, j)]
    }
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.mat[(i, j)] = v;
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self { grid: self.grid, mat: complex_matmul(&self.mat, &o.mat) }
    }
    pub fn add(&self, o: &Self) -> Self {
        Self { grid: self.grid, mat: &self.mat + &o.mat }
    }
    pub fn sub(&self, o: &Self) -> Self {
        Self { grid: self.grid, mat: &self.mat - &o.mat }
    }
    pub fn scale(&self, c: C64) -> Self {
        Self { grid: self.grid, mat: &self.mat * c }
    }
    pub fn adjoint(&self) -> Self {
        Self { grid: self.grid, mat: self.mat.adjoint() }
    }
    pub fn trace(&self) -> C64 {
        self.mat.trace()
    }
    pub fn hs_norm(&self) -> f64 {
        self.mat.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn apply(&self, u: &WaveFunction) -> WaveFunction {
        let v = nalgebra::DVector::from_column_slice(u.values());
        WaveFunction::new(&self.grid, (&self.mat * v).as_slice().to_vec())
    }

    /// `‖self − reference‖_HS / ‖reference‖_HS`.
    pub fn rel_diff(&self, reference: &Self) -> f64 {
        self.sub(reference).hs_norm() / reference.hs_norm()
    }

    /// Largest entrywise discrepancy restricted to the given rows.
    pub fn max_row_diff(&self, o: &Self, rows: &[usize]) -> f64 {
        let mut m = 0.0f64;
        for &i in rows {
            for j in 0..self.mat.ncols() {
                m = m.max((self.mat[(i, j)] - o.mat[(i, j)]).norm());
            }
        }
        m
    }
}

/// A monomial operator `(S u)_i = phase_i · u_{col_i}`, the shape of every
/// Weyl-system element.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftOp {
    pub col: Vec<usize>,
    pub phase: Vec<C64>,
}

impl ShiftOp {
    pub fn to_dense(&self, g: &PhaseGrid) -> OperatorMatrix {
        let mut m = DMatrix::zeros(self.col.len(), self.col.len());
        for (i, (&j, &p)) in self.col.iter().zip(&self.phase).enumerate() {
            m[(i, j)] = p;
        }
        OperatorMatrix::from_matrix(g, m)
    }

    pub fn apply(&self, u: &WaveFunction) -> WaveFunction {
        let v = self.col.iter().zip(&self.phase).map(|(&j, &p)| p * u.values()[j]).collect();
        WaveFunction::new(u.grid(), v)
    }

    /// `S · M`.
    pub fn left_mul(&self, m: &DMatrix<C64>) -> DMatrix<C64> {
        let mut out = DMatrix::zeros(m.nrows(), m.ncols());
        for (i, (&j, &p)) in self.col.iter().zip(&self.phase).enumerate() {
            for c in 0..m.ncols() {
                out[(i, c)] = p * m[(j, c)];
            }
        }
        out
    }

    /// `M · S`.
    pub fn right_mul(&self, m: &DMatrix<C64>) -> DMatrix<C64> {
        let mut out = DMatrix::zeros(m.nrows(), m.ncols());
        for (i, (&j, &p)) in self.col.iter().zip(&self.phase).enumerate() {
            for r in 0..m.nrows() {
                out[(r, j)] = m[(r, i)] * p;
            }
        }
        out
    }

    /// `Tr(S · M) = Σ_i phase_i M[col_i, i]`.
    pub fn trace_with(&self, m: &DMatrix<C64>) -> C64 {
        self.col.iter().zip(&self.phase).enumerate().map(|(i, (&j, &p))| p * m[(j, i)]).sum()
    }
}
