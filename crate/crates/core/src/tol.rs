//! Central tolerance configuration.
//!
//! Every validation threshold lives in one record so test suites can
//! tighten or loosen all of them uniformly instead of sprinkling
//! magic numbers through the modules.

/// Validation and convergence tolerances used across the crate.
#[derive(Debug, Clone)]
pub struct Tolerances {
    /// Max allowed entry of |A - A^dag| when a Hermitian input is required.
    pub hermiticity: f64,
    /// Max allowed |Tr rho - 1| for density matrices.
    pub trace: f64,
    /// Most negative eigenvalue allowed for positive-semidefinite inputs.
    pub psd: f64,
    /// Max allowed residual of B^dag B - I for orthonormal bases.
    pub basis: f64,
    /// Orthonormality and unbiasedness tolerance for MUB sets.
    pub mub: f64,
    /// Kraus trace-preservation residual bound.
    pub trace_preservation: f64,
    /// Default unitality threshold reported by `is_unital`.
    pub unitality: f64,
    /// Unitality precondition for spectral gaps and entropy production.
    pub unital_precondition: f64,
    /// Eigenvalues of sigma below this count as outside its support.
    pub support_cutoff: f64,
    /// Rho-weight above this on a null direction of sigma signals infinity.
    pub support_weight: f64,
    /// Eigenvalues below this are treated as exact zeros in entropies.
    pub entropy_cutoff: f64,
    /// Determinant-1 and unitarity tolerance for SU(2) matrices.
    pub su2: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        hermiticity: 1e-10,
        trace: 1e-10,
        psd: 1e-10,
        basis: 1e-10,
        mub: 1e-12,
        trace_preservation: 1e-10,
        unitality: 1e-10,
        unital_precondition: 1e-8,
        support_cutoff: 1e-12,
        support_weight: 1e-10,
        entropy_cutoff: 1e-14,
        su2: 1e-12,
    };

    /// Replace every input-validation threshold with `tol`, keeping the
    /// numeric cutoffs (support, entropy) at their defaults.
    pub fn with_validation(tol: f64) -> Tolerances {
        Tolerances {
            hermiticity: tol,
            trace: tol,
            psd: tol,
            basis: tol,
            trace_preservation: tol,
            unitality: tol,
            ..Tolerances::DEFAULT
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances::DEFAULT
    }
}
