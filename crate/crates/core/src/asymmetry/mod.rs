//! Asymmetry and symmetry of states under SU(2) product groups:
//! group-averaged commutator norms, twirling, closed forms for one and
//! many qubits, and the exact single/pair/triple integral tables for
//! Pauli transfer functions.

mod integrate;
mod su2;

pub use integrate::{
    gauss_legendre, integrate, integrate_matrix, IntegralEstimate, IntegrationMethod,
};
pub use su2::{haar_sample, invert_omega_cdf, Su2Element};

use crate::error::{Error, Result};
use crate::linalg::{anticommutator, commutator, pauli, ComplexMatrix};
use crate::states::{bloch_vector, correlation_tensor, von_neumann_entropy, DensityMatrix, LogBase};

/// Which product group a state is averaged over: one SU(2) on a qubit,
/// independent per-qubit rotations R_1 x ... x R_N, or a collective
/// rotation R x ... x R.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSpec {
    SingleSu2,
    IndependentProduct(usize),
    Collective(usize),
}

impl GroupSpec {
    /// Dimension of the acted space (2^N).
    pub fn dim(&self) -> usize {
        match *self {
            GroupSpec::SingleSu2 => 2,
            GroupSpec::IndependentProduct(n) | GroupSpec::Collective(n) => 1usize << n,
        }
    }

    /// Number of independent SU(2) factors in the Haar average.
    pub fn factor_count(&self) -> usize {
        match *self {
            GroupSpec::SingleSu2 | GroupSpec::Collective(_) => 1,
            GroupSpec::IndependentProduct(n) => n,
        }
    }

    /// The unitary acting on the full space for one tuple of factors.
    fn representation(&self, elements: &[Su2Element]) -> ComplexMatrix {
        match *self {
            GroupSpec::SingleSu2 => elements[0].matrix(),
            GroupSpec::Collective(n) => {
                let r = elements[0].matrix();
                let mut u = ComplexMatrix::identity(1);
                for _ in 0..n {
                    u = u.kron(&r);
                }
                u
            }
            GroupSpec::IndependentProduct(_) => {
                let mut u = ComplexMatrix::identity(1);
                for g in elements {
                    u = u.kron(&g.matrix());
                }
                u
            }
        }
    }

    fn check_dim(&self, rho: &DensityMatrix) -> Result<()> {
        if rho.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: rho.dim(),
                right: self.dim(),
            });
        }
        Ok(())
    }
}

/// Pauli transfer function P_{i,j}(g) = Tr(sigma_i R sigma_j R^dag).
pub fn pauli_transfer(i: usize, j: usize, g: &Su2Element) -> Result<f64> {
    let si = pauli(i)?;
    let sj = pauli(j)?;
    let r = g.matrix();
    Ok((&si * &(&(&r * &sj) * &r.adjoint())).trace().re)
}

/// Haar average of P_{i,j}: 2 when both indices vanish, 0 otherwise.
pub fn single_integral(i: usize, j: usize) -> Result<f64> {
    if i > 3 || j > 3 {
        return Err(Error::IndexOutOfRange { index: i.max(j), max: 3 });
    }
    Ok(if i == 0 && j == 0 { 2.0 } else { 0.0 })
}

/// Haar average of P_{x1,y1} P_{x2,y2}: 4 when all indices vanish, 4/3
/// when x1 = x2 != 0 and y1 = y2 != 0, zero otherwise.
pub fn pair_integral(x1: usize, y1: usize, x2: usize, y2: usize) -> Result<f64> {
    for &idx in &[x1, y1, x2, y2] {
        if idx > 3 {
            return Err(Error::IndexOutOfRange { index: idx, max: 3 });
        }
    }
    if x1 == 0 && y1 == 0 && x2 == 0 && y2 == 0 {
        return Ok(4.0);
    }
    if x1 == 0 || y1 == 0 || x2 == 0 || y2 == 0 {
        return Ok(0.0);
    }
    if x1 == x2 && y1 == y2 {
        return Ok(4.0 / 3.0);
    }
    Ok(0.0)
}

/// Levi-Civita symbol on indices 1..3 (zero when any index is 0 or repeated).
fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1.0,
        _ => 0.0,
    }
}

/// Haar average of P_{x1,y1} P_{x2,y2} P_{x3,y3}: the three one-zero-pair
/// terms with weight 8/3, the all-zero term 8, and the Levi-Civita term
/// (4/3) eps_{x1 x2 x3} eps_{y1 y2 y3}.
pub fn triple_integral(
    x1: usize,
    y1: usize,
    x2: usize,
    y2: usize,
    x3: usize,
    y3: usize,
) -> Result<f64> {
    for &idx in &[x1, y1, x2, y2, x3, y3] {
        if idx > 3 {
            return Err(Error::IndexOutOfRange { index: idx, max: 3 });
        }
    }
    let eq_nonzero = |a: usize, b: usize| a == b && a != 0;
    let mut total = 0.0;
    if x1 == 0 && y1 == 0 && eq_nonzero(x2, x3) && eq_nonzero(y2, y3) {
        total += 8.0 / 3.0;
    }
    if x2 == 0 && y2 == 0 && eq_nonzero(x1, x3) && eq_nonzero(y1, y3) {
        total += 8.0 / 3.0;
    }
    if x3 == 0 && y3 == 0 && eq_nonzero(x1, x2) && eq_nonzero(y1, y2) {
        total += 8.0 / 3.0;
    }
    if x1 == 0 && x2 == 0 && x3 == 0 && y1 == 0 && y2 == 0 && y3 == 0 {
        total += 8.0;
    }
    total += (4.0 / 3.0) * levi_civita(x1, x2, x3) * levi_civita(y1, y2, y3);
    Ok(total)
}

/// Group-averaged normalized commutator norm
/// A(G, rho) = (1 / 4 Tr rho^2) integral ||[U(g), rho]||_F^2 dg, in [0,1].
pub fn asymmetry(
    rho: &DensityMatrix,
    spec: GroupSpec,
    method: IntegrationMethod,
) -> Result<IntegralEstimate> {
    spec.check_dim(rho)?;
    let purity = rho.purity();
    let est = integrate(
        |elements| {
            let u = spec.representation(elements);
            commutator(&u, rho.matrix()).frobenius_norm().powi(2)
        },
        spec.factor_count(),
        method,
    )?;
    Ok(IntegralEstimate {
        value: est.value / (4.0 * purity),
        std_error: est.std_error.map(|e| e / (4.0 * purity)),
    })
}

/// Symmetry S(G, rho) = 1 - A(G, rho), evaluated through the
/// anticommutator integrand.
pub fn symmetry(
    rho: &DensityMatrix,
    spec: GroupSpec,
    method: IntegrationMethod,
) -> Result<IntegralEstimate> {
    spec.check_dim(rho)?;
    let purity = rho.purity();
    let est = integrate(
        |elements| {
            let u = spec.representation(elements);
            anticommutator(&u, rho.matrix()).frobenius_norm().powi(2)
        },
        spec.factor_count(),
        method,
    )?;
    Ok(IntegralEstimate {
        value: est.value / (4.0 * purity),
        std_error: est.std_error.map(|e| e / (4.0 * purity)),
    })
}

/// Closed form for a single qubit:
/// A(SU(2), rho) = 1/2 - 1/(2 (1 + |s|^2)) = 1/2 - 1/(4 Tr rho^2).
pub fn asymmetry_analytic_qubit(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: 2,
        });
    }
    Ok(0.5 - 1.0 / (4.0 * rho.purity()))
}

/// Closed form for N qubits under independent rotations:
/// A = 1/2 - 1/(2^{N+1} Tr rho^2), independent of all correlations.
pub fn asymmetry_independent_closed(rho: &DensityMatrix) -> Result<f64> {
    let d = rho.dim();
    if d < 2 || !d.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { dim: d });
    }
    let n = d.trailing_zeros() as usize;
    Ok(0.5 - 1.0 / (2f64.powi(n as i32 + 1) * rho.purity()))
}

/// Closed form for two qubits under collective rotations:
/// A = 1/2 - (1 + (sum_i T_ii)^2 / 3) / (8 Tr rho^2).
pub fn asymmetry_collective_2q_closed(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: 4,
        });
    }
    let t = correlation_tensor(rho)?;
    let diag = t.diagonal_sum();
    Ok(0.5 - (1.0 + diag * diag / 3.0) / (8.0 * rho.purity()))
}

/// Closed trigonometric form of the fidelity functional
/// F(g) = Tr[rho R rho R^dag] for a qubit, in terms of the Bloch length
/// and orientation (theta_0, phi_0) and the group angles.
pub fn f_functional(rho: &DensityMatrix, g: &Su2Element) -> Result<f64> {
    let s = bloch_vector(rho)?;
    let len = s.norm();
    let (theta0, phi0) = if len > 1e-15 {
        ((s.s[2] / len).clamp(-1.0, 1.0).acos(), s.s[1].atan2(s.s[0]))
    } else {
        (0.0, 0.0)
    };
    let s2 = len * len;
    let half_sq = (g.omega / 2.0).sin().powi(2);
    let value = 8.0
        + 3.0 * s2
        + s2 * (5.0 * g.omega.cos()
            + 2.0 * half_sq
                * ((2.0 * theta0).cos()
                    + (2.0 * g.theta).cos()
                    + 3.0 * (2.0 * g.theta).cos() * (2.0 * theta0).cos()))
        + 8.0 * s2
            * half_sq
            * ((2.0 * (g.phi - phi0)).cos() * g.theta.sin().powi(2) * theta0.sin().powi(2)
                + (g.phi - phi0).cos() * (2.0 * g.theta).sin() * (2.0 * theta0).sin());
    Ok(value / 16.0)
}

/// Direct trace route for the same functional, Tr[rho R rho R^dag].
pub fn f_functional_direct(rho: &DensityMatrix, g: &Su2Element) -> Result<f64> {
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: 2,
        });
    }
    let r = g.matrix();
    let rotated = rho.matrix().conjugate_by(&r);
    Ok(rho.matrix().hs_inner(&rotated).re)
}

/// Haar average of U(g) rho U(g)^dag over the group: the projection onto
/// G-invariant states, a fixed point of every group unitary.
pub fn twirl(
    rho: &DensityMatrix,
    spec: GroupSpec,
    method: IntegrationMethod,
) -> Result<DensityMatrix> {
    spec.check_dim(rho)?;
    let averaged = integrate_matrix(
        |elements| rho.matrix().conjugate_by(&spec.representation(elements)),
        spec.factor_count(),
        rho.dim(),
        method,
    )?;
    // Averages of Hermitian PSD unit-trace matrices stay in the state
    // set; symmetrize away the matmul rounding before validating.
    DensityMatrix::new(averaged.hermitian_part())
}

/// Entropy gained by twirling: S(G(rho)) - S(rho) in natural log.
pub fn entropic_asymmetry(
    rho: &DensityMatrix,
    spec: GroupSpec,
    method: IntegrationMethod,
) -> Result<f64> {
    let averaged = twirl(rho, spec, method)?;
    Ok(von_neumann_entropy(&averaged, LogBase::E) - von_neumann_entropy(rho, LogBase::E))
}
