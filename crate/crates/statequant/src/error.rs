use thiserror::Error;

/// Errors raised by state, operator, and measure construction or evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("state is not normalized: squared norm {norm_sq} deviates from 1 by more than {tol}")]
    NotNormalized { norm_sq: f64, tol: f64 },

    #[error("zero-dimensional state")]
    ZeroDimension,

    #[error("zero vector cannot be normalized")]
    ZeroVector,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: max |M - M^H| entry = {deviation:e} exceeds {tol:e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("trace must be 1: got {trace} (tolerance {tol:e})")]
    TraceNotOne { trace: f64, tol: f64 },

    #[error("positivity violation: eigenvalue {eigenvalue:e} below -{tol:e}")]
    PositivityViolation { eigenvalue: f64, tol: f64 },

    #[error("state set must be nonempty")]
    EmptyStateSet,

    #[error("{what} = {value} outside [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("cap axis must be a unit vector: norm = {norm}")]
    CapAxisNotUnit { norm: f64 },

    #[error("quadrature grid too coarse: {name} = {got}, minimum {min}")]
    GridTooCoarse {
        name: &'static str,
        got: usize,
        min: usize,
    },

    #[error("sample count too small: {got}, minimum {min}")]
    TooFewSamples { got: usize, min: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
