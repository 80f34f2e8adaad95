//! Hermitian eigendecomposition by cyclic Jacobi rotations.
//!
//! The matrices in this crate stay small (d <= 64), where Jacobi is
//! unconditionally stable and needs no pivoting or deflation logic.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::tol::Tolerances;

/// Result of a Hermitian eigendecomposition: `A = V diag(lambda) V^dag`
/// with real eigenvalues sorted ascending and unitary `V` (eigenvectors
/// as columns, phase-fixed so the first significant component of each
/// column is real and positive).
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    /// Rebuild V diag(lambda) V^dag.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.eigenvalues.len();
        let v = &self.eigenvectors;
        ComplexMatrix::from_fn(d, |i, j| {
            (0..d)
                .map(|k| v[(i, k)] * self.eigenvalues[k] * v[(j, k)].conj())
                .sum()
        })
    }

    /// Apply a real function to the spectrum: V diag(f(lambda)) V^dag.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let d = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let mapped: Vec<f64> = self.eigenvalues.iter().map(|&x| f(x)).collect();
        ComplexMatrix::from_fn(d, |i, j| {
            (0..d)
                .map(|k| v[(i, k)] * mapped[k] * v[(j, k)].conj())
                .sum()
        })
    }
}

/// Eigendecompose a Hermitian matrix.
///
/// Fails with `NotHermitian` when the input deviates from Hermiticity by
/// more than the configured tolerance, and `ConvergenceFailure` if the
/// sweep cap (100 * d^2) is ever hit.
pub fn hermitian_eig(a: &ComplexMatrix) -> Result<EigenDecomposition> {
    hermitian_eig_with(a, &Tolerances::DEFAULT)
}

pub fn hermitian_eig_with(a: &ComplexMatrix, tol: &Tolerances) -> Result<EigenDecomposition> {
    let d = a.dim();
    let defect = a.hermiticity_defect();
    if defect > tol.hermiticity {
        return Err(Error::NotHermitian { defect });
    }
    // Iterate on the exactly-Hermitian part so rounding in the input
    // cannot push the rotations off the real axis.
    let mut m = a.hermitian_part();
    let mut v = ComplexMatrix::identity(d);

    let scale = m.frobenius_norm().max(1.0);
    let stop = 1e-14 * scale;
    let max_sweeps = 100 * d * d;

    let mut converged = false;
    let mut sweeps = 0;
    while sweeps < max_sweeps {
        if off_diagonal_norm(&m) <= stop {
            converged = true;
            break;
        }
        for p in 0..d {
            for q in (p + 1)..d {
                rotate(&mut m, &mut v, p, q);
            }
        }
        sweeps += 1;
    }
    if !converged && off_diagonal_norm(&m) > stop {
        return Err(Error::ConvergenceFailure {
            sweeps,
            offdiag: off_diagonal_norm(&m),
        });
    }

    let mut eigenvalues: Vec<f64> = (0..d).map(|i| m[(i, i)].re).collect();
    let mut columns: Vec<Vec<Complex64>> = (0..d).map(|j| v.column(j)).collect();
    for col in columns.iter_mut() {
        normalize_phase(col);
    }

    // Ascending eigenvalues; exact ties broken by descending magnitude of
    // the first significant component, which is real after phase fixing.
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| {
        eigenvalues[i]
            .partial_cmp(&eigenvalues[j])
            .unwrap()
            .then_with(|| {
                let fi = first_significant(&columns[i]);
                let fj = first_significant(&columns[j]);
                fj.partial_cmp(&fi).unwrap()
            })
    });
    eigenvalues = order.iter().map(|&k| eigenvalues[k]).collect();
    let eigenvectors = ComplexMatrix::from_fn(d, |i, j| columns[order[j]][i]);

    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let d = m.dim();
    let mut sum = 0.0;
    for i in 0..d {
        for j in 0..d {
            if i != j {
                sum += m[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// One Jacobi rotation zeroing the (p,q) entry of the Hermitian working
/// matrix `m`, accumulated into `v`.
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{i alpha}
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // The plane rotation is V = diag(1, e^{-i alpha}) * [[c, s], [-s, c]],
    // i.e. V_pp = c, V_pq = s, V_qp = -s e^{-i alpha}, V_qq = c e^{-i alpha}.
    let d = m.dim();
    let phase_conj = phase.conj();

    // Row update: M <- V^dag M.
    for k in 0..d {
        let mp = m[(p, k)];
        let mq = m[(q, k)];
        m[(p, k)] = mp * c - mq * (phase * s);
        m[(q, k)] = mp * s + mq * (phase * c);
    }
    // Column update: M <- M V.
    for k in 0..d {
        let mp = m[(k, p)];
        let mq = m[(k, q)];
        m[(k, p)] = mp * c - mq * (phase_conj * s);
        m[(k, q)] = mp * s + mq * (phase_conj * c);
    }
    // Kill the rounding residue at the target entry.
    m[(p, q)] = Complex64::new(0.0, 0.0);
    m[(q, p)] = Complex64::new(0.0, 0.0);
    m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);

    // Accumulate eigenvectors: V_acc <- V_acc * V.
    for k in 0..d {
        let vp = v[(k, p)];
        let vq = v[(k, q)];
        v[(k, p)] = vp * c - vq * (phase_conj * s);
        v[(k, q)] = vp * s + vq * (phase_conj * c);
    }
}

/// Rotate the global phase so the first component with magnitude above
/// 1e-12 becomes real and positive.
fn normalize_phase(col: &mut [Complex64]) {
    if let Some(z) = col.iter().find(|z| z.norm() > 1e-12) {
        let phase = z.conj() / z.norm();
        for entry in col.iter_mut() {
            *entry *= phase;
        }
    }
}

fn first_significant(col: &[Complex64]) -> f64 {
    col.iter()
        .find(|z| z.norm() > 1e-12)
        .map(|z| z.norm())
        .unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli;

    #[test]
    fn diagonal_input_sorted_ascending() {
        let a = ComplexMatrix::from_real(2, &[2.0, 0.0, 0.0, -1.0]).unwrap();
        let eig = hermitian_eig(&a).unwrap();
        assert!((eig.eigenvalues[0] - (-1.0)).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn pauli_x_spectrum() {
        let eig = hermitian_eig(&pauli(1).unwrap()).unwrap();
        assert!((eig.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            hermitian_eig(&a),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn random_hermitian_reconstruction() {
        // Deterministic pseudo-random Hermitian 6x6 built from a simple LCG,
        // reconstructed through the decomposition (oracle: A = V L V^dag).
        let mut state = 0x12345678u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        let d = 6;
        let mut a = ComplexMatrix::zeros(d);
        for i in 0..d {
            for j in i..d {
                if i == j {
                    a[(i, j)] = Complex64::new(next(), 0.0);
                } else {
                    let z = Complex64::new(next(), next());
                    a[(i, j)] = z;
                    a[(j, i)] = z.conj();
                }
            }
        }
        let eig = hermitian_eig(&a).unwrap();
        let resid = (&eig.reconstruct() - &a).frobenius_norm();
        assert!(resid < 1e-10 * a.frobenius_norm().max(1.0), "residual {resid}");
        let unit = &eig.eigenvectors.adjoint() * &eig.eigenvectors;
        let defect = (&unit - &ComplexMatrix::identity(d)).frobenius_norm();
        assert!(defect < 1e-10, "unitarity defect {defect}");
        for w in eig.eigenvalues.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }
}
