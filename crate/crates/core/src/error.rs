use thiserror::Error;

/// Errors produced by validation and numeric operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("entry count {len} does not match dim {dim} squared")]
    BadShape { dim: usize, len: usize },

    #[error("matrix contains a non-finite entry at ({row},{col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("matrix is not Hermitian (max |A - A^dag| entry = {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("eigensolver failed to converge within {sweeps} sweeps (off-diagonal norm {offdiag:.3e})")]
    ConvergenceFailure { sweeps: usize, offdiag: f64 },

    #[error("norm order p = {p} is invalid (p >= 1 required)")]
    InvalidP { p: f64 },

    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {dim} is not supported (d >= 2 required)")]
    InvalidDimension { dim: usize },

    #[error("matrix is not a valid density matrix: {reason}")]
    NotAState { reason: String },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eig:.3e})")]
    NotPsd { min_eig: f64 },

    #[error("matrix has non-positive trace {trace:.3e}")]
    ZeroTrace { trace: f64 },

    #[error("Bloch vector has length {norm} > 1")]
    BlochOutOfBall { norm: f64 },

    #[error("dimension {dim} is not a power of two")]
    NotPowerOfTwo { dim: usize },

    #[error("rank {rank} is invalid for dimension {dim}")]
    InvalidRank { rank: usize, dim: usize },

    #[error("support of the first state is not contained in the support of the second (divergence is infinite)")]
    SupportViolation,

    #[error("alpha = {alpha} is outside (0,1) union (1,inf)")]
    InvalidAlpha { alpha: f64 },

    #[error("basis is not orthonormal (max |B^dag B - I| entry = {defect:.3e})")]
    BasisNotOrthonormal { defect: f64 },

    #[error("Kraus operators are not trace preserving (residual {residual:.3e})")]
    NotTracePreserving { residual: f64 },

    #[error("matrix is not unitary (residual {residual:.3e})")]
    NotUnitary { residual: f64 },

    #[error("channel parameter {value} is outside [0,1]")]
    ParameterOutOfRange { value: f64 },

    #[error("channel is not unital (residual {residual:.3e})")]
    NotUnital { residual: f64 },

    #[error("angle {value} is outside [{lo}, {hi}]")]
    AngleOutOfRange { value: f64, lo: f64, hi: f64 },

    #[error("tensor quadrature grid needs {evaluations} evaluations (cap {cap}); use Monte Carlo instead")]
    GridTooLarge { evaluations: u128, cap: u128 },

    #[error("integration needs at least one sample and one node per angle")]
    EmptyIntegrationGrid,
}

pub type Result<T> = std::result::Result<T, Error>;
