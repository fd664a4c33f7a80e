//! Finite-dimensional complex Hilbert space primitives: normalized state
//! vectors, density operators, Hermitian eigendecomposition, tensor
//! products, and overlaps.
//!
//! States are rays: global phase carries no meaning, and ray comparisons
//! go through [`transition_probability`] rather than raw amplitudes.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::{Error, Result};

pub type C64 = Complex64;

/// Tolerance on the squared norm of a state vector.
pub const NORM_TOL: f64 = 1e-9;
/// Entrywise tolerance for Hermiticity of a density matrix.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Tolerance on the trace of a density matrix.
pub const TRACE_TOL: f64 = 1e-9;
/// Eigenvalues below `-PSD_TOL` are a positivity violation; values in
/// `[-PSD_TOL, 0)` are clamped to zero during decomposition.
pub const PSD_TOL: f64 = 1e-8;
/// Default cutoff for counting Gram-matrix singular values in span ranks.
pub const DEFAULT_SPAN_TOL: f64 = 1e-8;

/// A normalized pure state: `dim` complex amplitudes with unit squared norm.
#[derive(Clone, Debug)]
pub struct PureState {
    amplitudes: DVector<C64>,
}

impl PureState {
    /// Builds a state from amplitudes, requiring the squared norm to be
    /// within [`NORM_TOL`] of 1. No renormalization is applied.
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::ZeroDimension);
        }
        let v = DVector::from_vec(amplitudes);
        let norm_sq: f64 = v.iter().map(|a| a.norm_sqr()).sum();
        let deviation = (norm_sq - 1.0).abs();
        // NaN deviation (non-finite amplitudes) must also reject.
        if deviation > NORM_TOL || deviation.is_nan() {
            return Err(Error::NotNormalized {
                norm_sq,
                tol: NORM_TOL,
            });
        }
        Ok(Self { amplitudes: v })
    }

    /// Builds a state by rescaling the amplitudes to unit norm.
    pub fn normalized(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::ZeroDimension);
        }
        let v = DVector::from_vec(amplitudes);
        let norm_sq: f64 = v.iter().map(|a| a.norm_sqr()).sum();
        if !(norm_sq.is_finite() && norm_sq > 0.0) {
            return Err(Error::ZeroVector);
        }
        let scale = C64::new(1.0 / norm_sq.sqrt(), 0.0);
        Ok(Self {
            amplitudes: v * scale,
        })
    }

    /// The computational basis state `|index>` in dimension `dim`.
    pub fn basis_state(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range for dim {dim}");
        let mut v = DVector::from_element(dim, C64::new(0.0, 0.0));
        v[index] = C64::new(1.0, 0.0);
        Self { amplitudes: v }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        self.amplitudes.as_slice()
    }

    pub(crate) fn vector(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self.amplitudes.dotc(&other.amplitudes))
    }

    /// The rank-1 projector `|self><self|`, scaled by the squared norm
    /// so the trace is exactly one even for amplitudes at the edge of
    /// the normalization tolerance.
    pub fn projector(&self) -> DensityMatrix {
        let norm_sq: f64 = self.amplitudes.iter().map(|a| a.norm_sqr()).sum();
        let m = (&self.amplitudes * self.amplitudes.adjoint()) / C64::new(norm_sq, 0.0);
        DensityMatrix::new(m).expect("projector of a normalized state is a valid density matrix")
    }

    /// Kronecker product `self (x) other`, ordered with `self` as the
    /// slow index: amplitude `i * other.dim() + j` is `a_i * b_j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (da, db) = (self.dim(), other.dim());
        let mut out = DVector::from_element(da * db, C64::new(0.0, 0.0));
        for i in 0..da {
            for j in 0..db {
                out[i * db + j] = self.amplitudes[i] * other.amplitudes[j];
            }
        }
        Self { amplitudes: out }
    }

    /// Fixes the global phase so the first non-negligible amplitude is
    /// real and positive. Cosmetic only: ray comparisons never look at
    /// raw amplitudes.
    pub fn canonicalized(&self) -> Self {
        let lead = self.amplitudes.iter().find(|a| a.norm() > 1e-12);
        match lead {
            Some(a) => {
                let phase = a / a.norm();
                Self {
                    amplitudes: &self.amplitudes * phase.conj(),
                }
            }
            None => self.clone(),
        }
    }
}

/// Transition probability `p = |<a|b>|^2`, clamped into `[0, 1]`.
///
/// Symmetric in its arguments and invariant under a global phase of
/// either one.
pub fn transition_probability(a: &PureState, b: &PureState) -> Result<f64> {
    let overlap = a.inner(b)?;
    Ok(overlap.norm_sqr().clamp(0.0, 1.0))
}

/// A Hermitian, positive semidefinite, unit-trace operator.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    entries: DMatrix<C64>,
}

impl DensityMatrix {
    /// Validates Hermiticity (entrywise within [`HERMITIAN_TOL`]), unit
    /// trace (within [`TRACE_TOL`]), and positivity: any eigenvalue below
    /// `-PSD_TOL` is rejected; eigenvalues in `[-PSD_TOL, 0)` are treated
    /// as zero by the decomposition.
    pub fn new(entries: DMatrix<C64>) -> Result<Self> {
        if entries.nrows() != entries.ncols() {
            return Err(Error::NotSquare {
                rows: entries.nrows(),
                cols: entries.ncols(),
            });
        }
        if entries.is_empty() {
            return Err(Error::ZeroDimension);
        }
        let mut herm_dev: f64 = 0.0;
        for i in 0..entries.nrows() {
            for j in i..entries.ncols() {
                let d = (entries[(i, j)] - entries[(j, i)].conj()).norm();
                // f64::max would swallow a NaN from a non-finite entry.
                if d > herm_dev || d.is_nan() {
                    herm_dev = d;
                }
            }
        }
        if herm_dev > HERMITIAN_TOL || herm_dev.is_nan() {
            return Err(Error::NotHermitian {
                deviation: herm_dev,
                tol: HERMITIAN_TOL,
            });
        }
        let trace = entries.trace().re;
        let trace_dev = (trace - 1.0).abs();
        if trace_dev > TRACE_TOL || trace_dev.is_nan() {
            return Err(Error::TraceNotOne {
                trace,
                tol: TRACE_TOL,
            });
        }
        let min_eig = entries
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        if min_eig < -PSD_TOL || min_eig.is_nan() {
            return Err(Error::PositivityViolation {
                eigenvalue: min_eig,
                tol: PSD_TOL,
            });
        }
        Ok(Self { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<C64> {
        &self.entries
    }

    pub fn trace_real(&self) -> f64 {
        self.entries.trace().re
    }

    /// Full eigendecomposition with eigenvalues sorted descending.
    ///
    /// Eigenvalues in `[-PSD_TOL, 0)` are clamped to zero; anything lower
    /// is a positivity violation.
    pub fn eigendecompose(&self) -> Result<Spectrum> {
        let eig = nalgebra::SymmetricEigen::new(self.entries.clone());
        let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
        order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));

        let mut eigenvalues = Vec::with_capacity(order.len());
        let mut eigenvectors = Vec::with_capacity(order.len());
        for &k in &order {
            let mut lambda = eig.eigenvalues[k];
            if lambda < 0.0 {
                if lambda < -PSD_TOL {
                    return Err(Error::PositivityViolation {
                        eigenvalue: lambda,
                        tol: PSD_TOL,
                    });
                }
                lambda = 0.0;
            }
            eigenvalues.push(lambda);
            let col: Vec<C64> = eig.eigenvectors.column(k).iter().copied().collect();
            eigenvectors.push(
                PureState::new(col).expect("eigenvector of a Hermitian matrix is normalized"),
            );
        }
        Ok(Spectrum {
            eigenvalues,
            eigenvectors,
        })
    }
}

/// Eigenvalues (descending) and orthonormal eigenvectors of a density
/// matrix.
#[derive(Clone, Debug)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<PureState>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &[PureState] {
        &self.eigenvectors
    }

    /// Rebuilds `sum_i lambda_i |v_i><v_i|` by direct matrix arithmetic.
    pub fn reconstruct(&self) -> DMatrix<C64> {
        let dim = self.eigenvectors[0].dim();
        let mut m = DMatrix::from_element(dim, dim, C64::new(0.0, 0.0));
        for (lambda, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            m += (v.vector() * v.vector().adjoint()) * C64::new(*lambda, 0.0);
        }
        m
    }
}

/// Dimension of the span of a set of states: the rank of their Gram
/// matrix, counting singular values above `tol` (use
/// [`DEFAULT_SPAN_TOL`] unless there is a reason not to).
pub fn span_dimension(states: &[PureState], tol: f64) -> Result<usize> {
    if states.is_empty() {
        return Err(Error::EmptyStateSet);
    }
    let dim = states[0].dim();
    for s in states {
        if s.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: s.dim(),
            });
        }
    }
    let n = states.len();
    let gram = DMatrix::from_fn(n, n, |i, j| {
        states[i]
            .inner(&states[j])
            .expect("dims checked above")
    });
    // Hermitian PSD, so singular values coincide with eigenvalues.
    let count = gram
        .symmetric_eigenvalues()
        .iter()
        .filter(|&&lambda| lambda > tol)
        .count();
    Ok(count)
}

/// Largest entrywise modulus of the difference of two matrices.
pub fn max_entry_diff(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
