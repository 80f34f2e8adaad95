//! Validated density matrices, Bloch and Pauli-tensor representations,
//! entropies, and seeded random generation of states and unitaries.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig_with, pauli, pauli_string, ComplexMatrix};
use crate::rng::stream;
use crate::tol::Tolerances;

/// Logarithm base for entropic quantities. Entropy-production bounds use
/// the natural log; information-theoretic bounds use base 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBase {
    E,
    Two,
}

impl LogBase {
    pub fn log(self, x: f64) -> f64 {
        match self {
            LogBase::E => x.ln(),
            LogBase::Two => x.log2(),
        }
    }
}

/// A validated quantum state: Hermitian, unit trace, positive
/// semidefinite (all within the configured tolerances), dimension >= 2.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::new_with(matrix, &Tolerances::DEFAULT)
    }

    pub fn new_with(matrix: ComplexMatrix, tol: &Tolerances) -> Result<Self> {
        let d = matrix.dim();
        if d < 2 {
            return Err(Error::InvalidDimension { dim: d });
        }
        let defect = matrix.hermiticity_defect();
        if defect > tol.hermiticity {
            return Err(Error::NotAState {
                reason: format!("not Hermitian (defect {defect:.3e})"),
            });
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > tol.trace || tr.im.abs() > tol.trace {
            return Err(Error::NotAState {
                reason: format!("trace {} + {}i is not 1", tr.re, tr.im),
            });
        }
        let eig = hermitian_eig_with(&matrix, tol)?;
        let min_eig = eig.eigenvalues[0];
        if min_eig < -tol.psd {
            return Err(Error::NotAState {
                reason: format!("not positive semidefinite (min eigenvalue {min_eig:.3e})"),
            });
        }
        let purity: f64 = matrix
            .entries()
            .iter()
            .map(|z| z.norm_sqr())
            .sum();
        let lo = 1.0 / d as f64 - tol.psd;
        if !(lo..=1.0 + tol.psd).contains(&purity) {
            return Err(Error::NotAState {
                reason: format!("purity {purity} outside [1/d, 1]"),
            });
        }
        Ok(Self { matrix })
    }

    /// The maximally mixed state I/d, the unique fixed point of every
    /// unitary and the zero of the coherence measure.
    pub fn maximally_mixed(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidDimension { dim: d });
        }
        Ok(Self {
            matrix: ComplexMatrix::identity(d).scale_re(1.0 / d as f64),
        })
    }

    /// Pure state |psi><psi| from an arbitrary nonzero vector.
    pub fn from_ket(ket: &[Complex64]) -> Result<Self> {
        let norm_sq: f64 = ket.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq <= 0.0 {
            return Err(Error::ZeroTrace { trace: 0.0 });
        }
        let scaled: Vec<Complex64> = ket.iter().map(|&z| z / norm_sq.sqrt()).collect();
        Self::new(ComplexMatrix::outer(&scaled))
    }

    /// Computational basis projector |k><k|.
    pub fn basis_state(d: usize, k: usize) -> Result<Self> {
        if k >= d {
            return Err(Error::IndexOutOfRange { index: k, max: d - 1 });
        }
        let mut ket = vec![Complex64::new(0.0, 0.0); d];
        ket[k] = Complex64::new(1.0, 0.0);
        Self::from_ket(&ket)
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Tr rho^2, in [1/d, 1].
    pub fn purity(&self) -> f64 {
        self.matrix.entries().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Eigenvalues ascending (clamped into [0, 1] against rounding).
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eig_with(&self.matrix, &Tolerances::DEFAULT)
            .expect("validated state must decompose")
            .eigenvalues
            .iter()
            .map(|&x| x.clamp(0.0, 1.0))
            .collect()
    }

    /// Unitary conjugation U rho U^dag.
    pub fn conjugate_by(&self, u: &ComplexMatrix) -> Result<Self> {
        if u.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: u.dim(),
                right: self.dim(),
            });
        }
        Self::new(self.matrix.conjugate_by(u))
    }
}

/// von Neumann entropy -sum lambda log lambda; eigenvalues below the
/// entropy cutoff are treated as exact zeros.
pub fn von_neumann_entropy(rho: &DensityMatrix, base: LogBase) -> f64 {
    let cutoff = Tolerances::DEFAULT.entropy_cutoff;
    rho.eigenvalues()
        .iter()
        .filter(|&&l| l > cutoff)
        .map(|&l| -l * base.log(l))
        .sum()
}

/// Quantum relative entropy S(rho || sigma). Signals `SupportViolation`
/// (the infinite case) when rho has weight outside sigma's support.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix, base: LogBase) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }
    let tol = Tolerances::DEFAULT;
    let sig_eig = hermitian_eig_with(sigma.matrix(), &tol)?;
    let d = rho.dim();
    let mut cross = 0.0;
    for j in 0..d {
        let w = sig_eig.eigenvectors.column(j);
        // <w_j| rho |w_j>
        let mut weight = 0.0;
        for a in 0..d {
            for b in 0..d {
                weight += (w[a].conj() * rho.matrix()[(a, b)] * w[b]).re;
            }
        }
        let mu = sig_eig.eigenvalues[j].max(0.0);
        if mu < tol.support_cutoff {
            if weight > tol.support_weight {
                return Err(Error::SupportViolation);
            }
            continue;
        }
        cross -= weight * base.log(mu);
    }
    Ok(cross - von_neumann_entropy(rho, base))
}

/// Real 3-vector s with rho = (I + s . sigma)/2 for a qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub s: [f64; 3],
}

impl BlochVector {
    pub fn new(s: [f64; 3]) -> Result<Self> {
        let norm = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt();
        if norm > 1.0 + Tolerances::DEFAULT.psd {
            return Err(Error::BlochOutOfBall { norm });
        }
        Ok(Self { s })
    }

    pub fn norm(&self) -> f64 {
        (self.s[0] * self.s[0] + self.s[1] * self.s[1] + self.s[2] * self.s[2]).sqrt()
    }
}

/// Bloch vector s_i = Tr(rho sigma_i) of a qubit state.
pub fn bloch_vector(rho: &DensityMatrix) -> Result<BlochVector> {
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: 2,
        });
    }
    let mut s = [0.0; 3];
    for (k, si) in s.iter_mut().enumerate() {
        let p = pauli(k + 1)?;
        *si = (&p * rho.matrix()).trace().re;
    }
    BlochVector::new(s)
}

/// Rebuild rho = (I + s . sigma)/2 from a Bloch vector.
pub fn from_bloch(s: &BlochVector) -> Result<DensityMatrix> {
    let mut m = ComplexMatrix::identity(2);
    for (k, &si) in s.s.iter().enumerate() {
        m = &m + &pauli(k + 1)?.scale_re(si);
    }
    DensityMatrix::new(m.scale_re(0.5))
}

/// Real Pauli-expansion coefficients T_{x_1..x_N} of an N-qubit state,
/// indexed with the first qubit most significant.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationTensor {
    n_qubits: usize,
    values: Vec<f64>,
}

impl CorrelationTensor {
    pub fn new(n_qubits: usize, values: Vec<f64>) -> Result<Self> {
        let want = 4usize.pow(n_qubits as u32);
        if values.len() != want {
            return Err(Error::BadShape {
                dim: want,
                len: values.len(),
            });
        }
        if (values[0] - 1.0).abs() > Tolerances::DEFAULT.trace {
            return Err(Error::NotAState {
                reason: format!("T_0..0 = {} is not 1", values[0]),
            });
        }
        Ok(Self { n_qubits, values })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, indices: &[usize]) -> f64 {
        self.values[self.flat_index(indices)]
    }

    fn flat_index(&self, indices: &[usize]) -> usize {
        assert_eq!(indices.len(), self.n_qubits);
        indices.iter().fold(0, |acc, &x| {
            assert!(x < 4);
            acc * 4 + x
        })
    }

    /// Iterate all multi-indices in lexicographic order.
    pub fn multi_indices(n_qubits: usize) -> impl Iterator<Item = Vec<usize>> {
        let total = 4usize.pow(n_qubits as u32);
        (0..total).map(move |mut flat| {
            let mut idx = vec![0usize; n_qubits];
            for slot in idx.iter_mut().rev() {
                *slot = flat % 4;
                flat /= 4;
            }
            idx
        })
    }

    /// Trace of the 3x3 correlation-matrix block: sum_i T_{ii} for two
    /// qubits (i = 1..3). Invariant under collective rotations.
    pub fn diagonal_sum(&self) -> f64 {
        assert_eq!(self.n_qubits, 2, "diagonal_sum is a two-qubit quantity");
        (1..=3).map(|i| self.get(&[i, i])).sum()
    }
}

fn qubit_count(dim: usize) -> Result<usize> {
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { dim });
    }
    Ok(dim.trailing_zeros() as usize)
}

/// Correlation tensor T_x = Tr(rho sigma_{x_1} x ... x sigma_{x_N}).
pub fn correlation_tensor(rho: &DensityMatrix) -> Result<CorrelationTensor> {
    let n = qubit_count(rho.dim())?;
    let mut values = Vec::with_capacity(4usize.pow(n as u32));
    for idx in CorrelationTensor::multi_indices(n) {
        let op = pauli_string(&idx)?;
        values.push((&op * rho.matrix()).trace().re);
    }
    CorrelationTensor::new(n, values)
}

/// Rebuild rho = 2^{-N} sum_x T_x sigma_{x_1} x ... x sigma_{x_N};
/// fails with `NotAState` when T is not the tensor of a valid state.
pub fn from_tensor(t: &CorrelationTensor) -> Result<DensityMatrix> {
    let n = t.n_qubits();
    let d = 1usize << n;
    let mut m = ComplexMatrix::zeros(d);
    for (flat, idx) in CorrelationTensor::multi_indices(n).enumerate() {
        let coeff = t.values()[flat];
        if coeff == 0.0 {
            continue;
        }
        m = &m + &pauli_string(&idx)?.scale_re(coeff);
    }
    let m = m.scale_re(1.0 / d as f64);
    DensityMatrix::new(m).map_err(|e| match e {
        Error::NotAState { reason } => Error::NotAState { reason },
        other => Error::NotAState {
            reason: other.to_string(),
        },
    })
}

fn complex_gaussian(rng: &mut ChaCha12Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Haar-random pure state from a normalized complex-Gaussian vector.
pub fn random_pure(d: usize, seed: u64) -> Result<DensityMatrix> {
    if d < 2 {
        return Err(Error::InvalidDimension { dim: d });
    }
    let mut rng = stream(seed, "states");
    let ket: Vec<Complex64> = (0..d).map(|_| complex_gaussian(&mut rng)).collect();
    DensityMatrix::from_ket(&ket)
}

/// Hilbert-Schmidt-induced random mixed state rho = G G^dag / Tr(G G^dag)
/// with G a d x rank complex-Gaussian (Ginibre) matrix.
pub fn random_density(d: usize, rank: usize, seed: u64) -> Result<DensityMatrix> {
    if d < 2 {
        return Err(Error::InvalidDimension { dim: d });
    }
    if rank == 0 || rank > d {
        return Err(Error::InvalidRank { rank, dim: d });
    }
    let mut rng = stream(seed, "states");
    let g: Vec<Vec<Complex64>> = (0..d)
        .map(|_| (0..rank).map(|_| complex_gaussian(&mut rng)).collect())
        .collect();
    let mut m = ComplexMatrix::zeros(d);
    for i in 0..d {
        for j in 0..d {
            m[(i, j)] = g[i]
                .iter()
                .zip(g[j].iter())
                .map(|(a, b)| a * b.conj())
                .sum();
        }
    }
    let tr = m.trace().re;
    DensityMatrix::new(m.scale_re(1.0 / tr))
}

/// Haar-random unitary via Gram-Schmidt orthonormalization of a Ginibre
/// matrix. The triangular factor's diagonal is real-positive by
/// construction, which makes the distribution exactly Haar.
pub fn random_unitary(d: usize, seed: u64) -> ComplexMatrix {
    let mut rng = stream(seed, "unitaries");
    random_unitary_from(d, &mut rng)
}

pub(crate) fn random_unitary_from(d: usize, rng: &mut ChaCha12Rng) -> ComplexMatrix {
    let cols: Vec<Vec<Complex64>> = (0..d)
        .map(|_| (0..d).map(|_| complex_gaussian(rng)).collect())
        .collect();
    let ortho = orthonormalize(cols);
    ComplexMatrix::from_fn(d, |i, j| ortho[j][i])
}

/// Random isometry: `cols` orthonormal columns of length `rows`
/// (rows >= cols), Haar on the Stiefel manifold.
pub(crate) fn random_isometry_columns(
    rows: usize,
    cols: usize,
    rng: &mut ChaCha12Rng,
) -> Vec<Vec<Complex64>> {
    let raw: Vec<Vec<Complex64>> = (0..cols)
        .map(|_| (0..rows).map(|_| complex_gaussian(rng)).collect())
        .collect();
    orthonormalize(raw)
}

/// Modified Gram-Schmidt with one reorthogonalization pass.
fn orthonormalize(mut cols: Vec<Vec<Complex64>>) -> Vec<Vec<Complex64>> {
    let n = cols.len();
    for j in 0..n {
        for _pass in 0..2 {
            for k in 0..j {
                let proj: Complex64 = cols[k]
                    .iter()
                    .zip(cols[j].iter())
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                for i in 0..cols[j].len() {
                    let corr = proj * cols[k][i];
                    cols[j][i] -= corr;
                }
            }
        }
        let norm: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    cols
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximally_mixed_purity() {
        let rho = DensityMatrix::maximally_mixed(4).unwrap();
        assert!((rho.purity() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn pure_projector_purity_one() {
        let rho = DensityMatrix::basis_state(3, 1).unwrap();
        assert!((rho.purity() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bloch_half_purity() {
        let rho = from_bloch(&BlochVector::new([0.5, 0.0, 0.0]).unwrap()).unwrap();
        assert!((rho.purity() - 0.625).abs() < 1e-15);
    }

    #[test]
    fn entropy_examples() {
        let pure = DensityMatrix::basis_state(2, 0).unwrap();
        assert!(von_neumann_entropy(&pure, LogBase::E).abs() < 1e-12);
        let mixed = DensityMatrix::maximally_mixed(2).unwrap();
        assert!((von_neumann_entropy(&mixed, LogBase::E) - 2f64.ln()).abs() < 1e-12);
        let diag =
            DensityMatrix::new(ComplexMatrix::from_real(2, &[0.9, 0.0, 0.0, 0.1]).unwrap())
                .unwrap();
        let expect = -0.9f64 * 0.9f64.ln() - 0.1 * 0.1f64.ln();
        assert!((von_neumann_entropy(&diag, LogBase::E) - expect).abs() < 1e-12);
        assert!((expect - 0.325083).abs() < 1e-6);
    }

    #[test]
    fn relative_entropy_examples() {
        let diag =
            DensityMatrix::new(ComplexMatrix::from_real(2, &[0.9, 0.0, 0.0, 0.1]).unwrap())
                .unwrap();
        assert!(relative_entropy(&diag, &diag, LogBase::E).unwrap().abs() < 1e-12);
        let mixed = DensityMatrix::maximally_mixed(2).unwrap();
        let got = relative_entropy(&diag, &mixed, LogBase::Two).unwrap();
        let expect = 1.0 - (-0.9f64 * 0.9f64.log2() - 0.1 * 0.1f64.log2());
        assert!((got - expect).abs() < 1e-12);
        assert!((got - 0.531004).abs() < 1e-6);
        // Orthogonal pure states have no common support.
        let p0 = DensityMatrix::basis_state(2, 0).unwrap();
        let p1 = DensityMatrix::basis_state(2, 1).unwrap();
        assert!(matches!(
            relative_entropy(&p0, &p1, LogBase::E),
            Err(Error::SupportViolation)
        ));
    }

    #[test]
    fn bloch_round_trip() {
        let mixed = DensityMatrix::maximally_mixed(2).unwrap();
        let s = bloch_vector(&mixed).unwrap();
        assert!(s.norm() < 1e-14);
        let up = DensityMatrix::basis_state(2, 0).unwrap();
        let s = bloch_vector(&up).unwrap();
        assert!((s.s[2] - 1.0).abs() < 1e-14 && s.s[0].abs() < 1e-14);
        let v = BlochVector::new([0.3, -0.2, 0.5]).unwrap();
        let rho = from_bloch(&v).unwrap();
        let back = bloch_vector(&rho).unwrap();
        for k in 0..3 {
            assert!((back.s[k] - v.s[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn bloch_out_of_ball_rejected() {
        assert!(matches!(
            BlochVector::new([1.0, 0.5, 0.0]),
            Err(Error::BlochOutOfBall { .. })
        ));
    }

    #[test]
    fn correlation_tensor_of_mixed_and_singlet() {
        let mixed = DensityMatrix::maximally_mixed(4).unwrap();
        let t = correlation_tensor(&mixed).unwrap();
        for (flat, idx) in CorrelationTensor::multi_indices(2).enumerate() {
            let expect = if idx == [0, 0] { 1.0 } else { 0.0 };
            assert!((t.values()[flat] - expect).abs() < 1e-12);
        }

        let inv = 0.5f64.sqrt();
        let singlet = DensityMatrix::from_ket(&[
            Complex64::new(0.0, 0.0),
            Complex64::new(inv, 0.0),
            Complex64::new(-inv, 0.0),
            Complex64::new(0.0, 0.0),
        ])
        .unwrap();
        let t = correlation_tensor(&singlet).unwrap();
        for idx in CorrelationTensor::multi_indices(2) {
            let got = t.get(&idx);
            let expect = match idx.as_slice() {
                [0, 0] => 1.0,
                [1, 1] | [2, 2] | [3, 3] => -1.0,
                _ => 0.0,
            };
            assert!((got - expect).abs() < 1e-12, "T{idx:?} = {got}");
        }
    }

    #[test]
    fn correlation_tensor_of_00() {
        let rho = DensityMatrix::basis_state(4, 0).unwrap();
        let t = correlation_tensor(&rho).unwrap();
        for idx in CorrelationTensor::multi_indices(2) {
            let got = t.get(&idx);
            let expect = match idx.as_slice() {
                [0, 0] | [0, 3] | [3, 0] | [3, 3] => 1.0,
                _ => 0.0,
            };
            assert!((got - expect).abs() < 1e-12, "T{idx:?} = {got}");
        }
    }

    #[test]
    fn tensor_round_trip() {
        let rho = random_density(4, 3, 99).unwrap();
        let t = correlation_tensor(&rho).unwrap();
        let back = from_tensor(&t).unwrap();
        assert!((back.matrix() - rho.matrix()).frobenius_norm() < 1e-10);
    }

    #[test]
    fn from_tensor_rejects_non_psd() {
        // T_{33} = 2 would need an eigenvalue outside [0,1].
        let mut values = vec![0.0; 16];
        values[0] = 1.0;
        values[15] = 2.0;
        let t = CorrelationTensor::new(2, values).unwrap();
        assert!(matches!(from_tensor(&t), Err(Error::NotAState { .. })));
    }

    #[test]
    fn nonpower_of_two_rejected() {
        let rho = DensityMatrix::maximally_mixed(3).unwrap();
        assert!(matches!(
            correlation_tensor(&rho),
            Err(Error::NotPowerOfTwo { dim: 3 })
        ));
    }

    #[test]
    fn random_rank_one_is_pure() {
        let rho = random_density(2, 1, 5).unwrap();
        assert!((rho.purity() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_unitary_is_unitary() {
        let u = random_unitary(3, 11);
        assert!(u.unitarity_defect() < 1e-12);
    }

    #[test]
    fn invalid_rank_rejected() {
        assert!(matches!(
            random_density(2, 3, 1),
            Err(Error::InvalidRank { .. })
        ));
        assert!(matches!(
            random_density(2, 0, 1),
            Err(Error::InvalidRank { .. })
        ));
    }

    #[test]
    fn ensemble_bloch_mean_is_small() {
        // Unitary invariance of the Ginibre ensemble forces a zero-mean
        // Bloch vector; 1e4 draws put the statistical bound near 3 sigma.
        let n = 10_000;
        let mut mean = [0.0f64; 3];
        for i in 0..n {
            let rho = random_density(2, 2, crate::rng::derive_seed(12345, i as u64)).unwrap();
            let s = bloch_vector(&rho).unwrap();
            for (slot, component) in mean.iter_mut().zip(s.s.iter()) {
                *slot += component;
            }
        }
        let norm = (mean.iter().map(|x| x * x).sum::<f64>()).sqrt() / n as f64;
        assert!(norm < 0.05, "ensemble mean {norm}");
    }

    #[test]
    fn rejects_dimension_one() {
        assert!(matches!(
            DensityMatrix::maximally_mixed(1),
            Err(Error::InvalidDimension { dim: 1 })
        ));
    }
}
