//! Kraus-form quantum channels: application, unitality, cohering power,
//! a standard channel zoo, spectral gaps, and the entropy-production and
//! Pinsker verification reports.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{commutator, hermitian_eig, ComplexMatrix};
use crate::measures::coherence_frobenius;
use crate::rng::stream;
use crate::states::{random_unitary_from, von_neumann_entropy, DensityMatrix, LogBase};
use crate::tol::Tolerances;

/// Completely positive trace-preserving map as a list of d x d Kraus
/// operators with sum K^dag K = I.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    dim: usize,
    kraus: Vec<ComplexMatrix>,
}

impl KrausChannel {
    pub fn new(dim: usize, kraus: Vec<ComplexMatrix>) -> Result<Self> {
        Self::new_with(dim, kraus, &Tolerances::DEFAULT)
    }

    pub fn new_with(dim: usize, kraus: Vec<ComplexMatrix>, tol: &Tolerances) -> Result<Self> {
        if kraus.is_empty() {
            return Err(Error::BadShape { dim, len: 0 });
        }
        for k in &kraus {
            if k.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: k.dim(),
                    right: dim,
                });
            }
        }
        let residual = trace_preservation_residual(dim, &kraus);
        if residual > tol.trace_preservation {
            return Err(Error::NotTracePreserving { residual });
        }
        Ok(Self { dim, kraus })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kraus(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    /// Residual of sum K^dag K - I (zero for an exactly trace-preserving set).
    pub fn trace_preservation_residual(&self) -> f64 {
        trace_preservation_residual(self.dim, &self.kraus)
    }

    /// E(rho) as a raw matrix, without state validation.
    pub fn apply_matrix(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.dim);
        for k in &self.kraus {
            out = &out + &(&(k * m) * &k.adjoint());
        }
        out
    }

    /// E(I/d): the image of the maximally mixed state.
    pub fn apply_to_mixed(&self) -> ComplexMatrix {
        self.apply_matrix(&ComplexMatrix::identity(self.dim).scale_re(1.0 / self.dim as f64))
    }
}

fn trace_preservation_residual(dim: usize, kraus: &[ComplexMatrix]) -> f64 {
    let mut sum = ComplexMatrix::zeros(dim);
    for k in kraus {
        sum = &sum + &(&k.adjoint() * k);
    }
    (&sum - &ComplexMatrix::identity(dim)).frobenius_norm()
}

/// Apply the channel to a validated state, returning a validated state.
pub fn apply(channel: &KrausChannel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    if channel.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            left: channel.dim(),
            right: rho.dim(),
        });
    }
    DensityMatrix::new(channel.apply_matrix(rho.matrix()))
}

/// Unitality verdict with the underlying residual ||E(I/d) - I/d||_F.
#[derive(Debug, Clone, Copy)]
pub struct UnitalityReport {
    pub residual: f64,
    pub unital: bool,
}

/// Check unitality: residual under `tol` (default 1e-10).
pub fn is_unital(channel: &KrausChannel, tol: Option<f64>) -> UnitalityReport {
    let tol = tol.unwrap_or(Tolerances::DEFAULT.unitality);
    let d = channel.dim();
    let star = ComplexMatrix::identity(d).scale_re(1.0 / d as f64);
    let residual = (&channel.apply_to_mixed() - &star).frobenius_norm();
    UnitalityReport {
        residual,
        unital: residual < tol,
    }
}

/// Cohering power sqrt(d/(d-1)) ||E(I/d) - I/d||_F: zero exactly on
/// unital channels, one exactly when E(I/d) is pure.
pub fn cohering_power(channel: &KrausChannel) -> f64 {
    let d = channel.dim() as f64;
    let star = ComplexMatrix::identity(channel.dim()).scale_re(1.0 / d);
    let c = (d / (d - 1.0)).sqrt() * (&channel.apply_to_mixed() - &star).frobenius_norm();
    c.min(1.0)
}

/// Commutator route for the cohering power,
/// sqrt( Tr[(sum_mu [K_mu, K_mu^dag])^2] / (d(d-1)) ).
pub fn cohering_power_commutator(channel: &KrausChannel) -> f64 {
    let d = channel.dim();
    let mut acc = ComplexMatrix::zeros(d);
    for k in channel.kraus() {
        acc = &acc + &commutator(k, &k.adjoint());
    }
    let tr_sq = (&acc * &acc).trace().re;
    let df = d as f64;
    (tr_sq.max(0.0) / (df * (df - 1.0))).sqrt().min(1.0)
}

/// The standard channel zoo.
#[derive(Debug, Clone)]
pub enum StandardChannel {
    /// (1-p) rho + p I/d via the Heisenberg-Weyl Kraus set.
    Depolarizing { p: f64 },
    /// Off-diagonal decay: K_0 = sqrt(1-lambda) I plus the basis projectors
    /// scaled by sqrt(lambda).
    PhaseDamping { lambda: f64 },
    /// Qubit amplitude damping toward |0> with damping parameter gamma.
    AmplitudeDamping { gamma: f64 },
    /// A single unitary Kraus operator.
    Unitary(ComplexMatrix),
    /// Projective measurement: Kraus set {|b_k><b_k|} for the columns of
    /// an orthonormal basis.
    ProjectiveMeasurement { basis: ComplexMatrix },
}

/// Build a standard channel on dimension `d`.
pub fn standard_channel(kind: StandardChannel, d: usize) -> Result<KrausChannel> {
    if d < 2 {
        return Err(Error::InvalidDimension { dim: d });
    }
    match kind {
        StandardChannel::Depolarizing { p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::ParameterOutOfRange { value: p });
            }
            let df = d as f64;
            let mut kraus = Vec::with_capacity(d * d);
            let keep = (1.0 - p * (df * df - 1.0) / (df * df)).max(0.0).sqrt();
            kraus.push(ComplexMatrix::identity(d).scale_re(keep));
            let w = p.sqrt() / df;
            if w > 0.0 {
                for a in 0..d {
                    for b in 0..d {
                        if a == 0 && b == 0 {
                            continue;
                        }
                        kraus.push(weyl_operator(d, a, b).scale_re(w));
                    }
                }
            }
            KrausChannel::new(d, kraus)
        }
        StandardChannel::PhaseDamping { lambda } => {
            if !(0.0..=1.0).contains(&lambda) {
                return Err(Error::ParameterOutOfRange { value: lambda });
            }
            let mut kraus = vec![ComplexMatrix::identity(d).scale_re((1.0 - lambda).sqrt())];
            if lambda > 0.0 {
                for k in 0..d {
                    let mut proj = ComplexMatrix::zeros(d);
                    proj[(k, k)] = Complex64::new(lambda.sqrt(), 0.0);
                    kraus.push(proj);
                }
            }
            KrausChannel::new(d, kraus)
        }
        StandardChannel::AmplitudeDamping { gamma } => {
            if !(0.0..=1.0).contains(&gamma) {
                return Err(Error::ParameterOutOfRange { value: gamma });
            }
            if d != 2 {
                return Err(Error::DimensionMismatch { left: d, right: 2 });
            }
            let mut k0 = ComplexMatrix::identity(2);
            k0[(1, 1)] = Complex64::new((1.0 - gamma).sqrt(), 0.0);
            let mut k1 = ComplexMatrix::zeros(2);
            k1[(0, 1)] = Complex64::new(gamma.sqrt(), 0.0);
            KrausChannel::new(2, vec![k0, k1])
        }
        StandardChannel::Unitary(u) => {
            if u.dim() != d {
                return Err(Error::DimensionMismatch {
                    left: u.dim(),
                    right: d,
                });
            }
            let residual = u.unitarity_defect();
            if residual > Tolerances::DEFAULT.basis {
                return Err(Error::NotUnitary { residual });
            }
            KrausChannel::new(d, vec![u])
        }
        StandardChannel::ProjectiveMeasurement { basis } => {
            if basis.dim() != d {
                return Err(Error::DimensionMismatch {
                    left: basis.dim(),
                    right: d,
                });
            }
            let defect = basis.unitarity_defect();
            if defect > Tolerances::DEFAULT.basis {
                return Err(Error::BasisNotOrthonormal { defect });
            }
            let kraus = (0..d)
                .map(|k| ComplexMatrix::outer(&basis.column(k)))
                .collect();
            KrausChannel::new(d, kraus)
        }
    }
}

/// Generalized shift-times-clock unitary X^a Z^b on dimension d.
fn weyl_operator(d: usize, a: usize, b: usize) -> ComplexMatrix {
    let tau = 2.0 * std::f64::consts::PI / d as f64;
    ComplexMatrix::from_fn(d, |i, j| {
        if i == (j + a) % d {
            Complex64::from_polar(1.0, tau * (b * j) as f64)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Doubly stochastic overlap matrix M_kl = |<phi_k | l>|^2 between a
/// state eigenbasis {|l>} and a measurement basis {|phi_k>}.
#[derive(Debug, Clone)]
pub struct OverlapMatrix {
    dim: usize,
    m: Vec<f64>,
}

impl OverlapMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, k: usize, l: usize) -> f64 {
        self.m[k * self.dim + l]
    }
}

/// Build the overlap matrix from two orthonormal bases (columns).
pub fn overlap_matrix(
    eigenbasis: &ComplexMatrix,
    measurement_basis: &ComplexMatrix,
) -> Result<OverlapMatrix> {
    let d = eigenbasis.dim();
    if measurement_basis.dim() != d {
        return Err(Error::DimensionMismatch {
            left: measurement_basis.dim(),
            right: d,
        });
    }
    for b in [eigenbasis, measurement_basis] {
        let defect = b.unitarity_defect();
        if defect > Tolerances::DEFAULT.basis {
            return Err(Error::BasisNotOrthonormal { defect });
        }
    }
    let prod = &measurement_basis.adjoint() * eigenbasis;
    let mut m = vec![0.0; d * d];
    for k in 0..d {
        for l in 0..d {
            m[k * d + l] = prod[(k, l)].norm_sqr();
        }
    }
    // Orthonormal bases force double stochasticity; check anyway so the
    // type invariant is enforced for all construction paths.
    let tol = Tolerances::DEFAULT.trace_preservation;
    for k in 0..d {
        let row: f64 = (0..d).map(|l| m[k * d + l]).sum();
        let col: f64 = (0..d).map(|l| m[l * d + k]).sum();
        if (row - 1.0).abs() > tol || (col - 1.0).abs() > tol {
            return Err(Error::BasisNotOrthonormal {
                defect: (row - 1.0).abs().max((col - 1.0).abs()),
            });
        }
    }
    Ok(OverlapMatrix { dim: d, m })
}

/// Spectral gap with an ergodicity flag. `gamma` is zero whenever the
/// fixed subspace is degenerate.
#[derive(Debug, Clone, Copy)]
pub struct SpectralGapReport {
    pub gamma: f64,
    pub ergodic: bool,
}

/// Second smallest eigenvalue of I - M^T M for a projective-measurement
/// channel described by an overlap matrix.
pub fn spectral_gap_projection(m: &OverlapMatrix) -> SpectralGapReport {
    let d = m.dim();
    let mtm = ComplexMatrix::from_fn(d, |i, j| {
        let mut sum = 0.0;
        for k in 0..d {
            sum += m.get(k, i) * m.get(k, j);
        }
        Complex64::new(sum, 0.0)
    });
    let gap_matrix = &ComplexMatrix::identity(d) - &mtm;
    let eig = hermitian_eig(&gap_matrix).expect("I - M^T M is symmetric");
    let gamma = eig.eigenvalues[1].clamp(0.0, 1.0);
    SpectralGapReport {
        gamma,
        ergodic: gamma > Tolerances::DEFAULT.unital_precondition,
    }
}

/// Spectral gap of a unital channel from the superoperator: represent E
/// in an orthonormal Hermitian operator basis, form T^T T, and return
/// 1 minus the largest eigenvalue strictly below one. Returns gamma = 0
/// with `ergodic = false` when the fixed subspace is degenerate.
pub fn superoperator_spectral_gap(channel: &KrausChannel) -> Result<SpectralGapReport> {
    let report = is_unital(channel, Some(Tolerances::DEFAULT.unital_precondition));
    if !report.unital {
        return Err(Error::NotUnital {
            residual: report.residual,
        });
    }
    let d = channel.dim();
    let basis = hermitian_operator_basis(d);
    let n = basis.len();
    // T_ab = Tr(B_a E(B_b)); real because E preserves Hermiticity.
    let mut t = vec![0.0; n * n];
    for (b_idx, b) in basis.iter().enumerate() {
        let image = channel.apply_matrix(b);
        for (a_idx, a) in basis.iter().enumerate() {
            t[a_idx * n + b_idx] = a.hs_inner(&image).re;
        }
    }
    let ttt = ComplexMatrix::from_fn(n, |i, j| {
        let mut sum = 0.0;
        for k in 0..n {
            sum += t[k * n + i] * t[k * n + j];
        }
        Complex64::new(sum, 0.0)
    });
    let eig = hermitian_eig(&ttt)?;
    let cut = 1.0 - Tolerances::DEFAULT.unital_precondition;
    let fixed_count = eig.eigenvalues.iter().filter(|&&x| x >= cut).count();
    if fixed_count > 1 {
        return Ok(SpectralGapReport {
            gamma: 0.0,
            ergodic: false,
        });
    }
    let below = eig
        .eigenvalues
        .iter()
        .filter(|&&x| x < cut)
        .cloned()
        .fold(0.0, f64::max);
    Ok(SpectralGapReport {
        gamma: (1.0 - below).clamp(0.0, 1.0),
        ergodic: true,
    })
}

/// Orthonormal Hermitian basis: I/sqrt(d) plus the generalized Gell-Mann
/// matrices (symmetric, antisymmetric and diagonal families).
fn hermitian_operator_basis(d: usize) -> Vec<ComplexMatrix> {
    let mut basis = Vec::with_capacity(d * d);
    basis.push(ComplexMatrix::identity(d).scale_re(1.0 / (d as f64).sqrt()));
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    for j in 0..d {
        for k in (j + 1)..d {
            let mut sym = ComplexMatrix::zeros(d);
            sym[(j, k)] = Complex64::new(inv_sqrt2, 0.0);
            sym[(k, j)] = Complex64::new(inv_sqrt2, 0.0);
            basis.push(sym);
            let mut asym = ComplexMatrix::zeros(d);
            asym[(j, k)] = Complex64::new(0.0, -inv_sqrt2);
            asym[(k, j)] = Complex64::new(0.0, inv_sqrt2);
            basis.push(asym);
        }
    }
    for l in 1..d {
        let norm = 1.0 / ((l * (l + 1)) as f64).sqrt();
        let mut diag = ComplexMatrix::zeros(d);
        for j in 0..l {
            diag[(j, j)] = Complex64::new(norm, 0.0);
        }
        diag[(l, l)] = Complex64::new(-(l as f64) * norm, 0.0);
        basis.push(diag);
    }
    basis
}

/// Both sides of the entropy-production bound
/// S(E(rho)) - S(rho) >= (gamma/2) ||rho - I/d||_F^2 (natural log).
#[derive(Debug, Clone, Copy)]
pub struct EntropyProductionReport {
    pub entropy_before: f64,
    pub entropy_after: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

/// Evaluate the entropy-production bound for a unital channel with a
/// spectral gap obtained from either gap operation.
pub fn entropy_production_check(
    channel: &KrausChannel,
    rho: &DensityMatrix,
    gamma: f64,
) -> Result<EntropyProductionReport> {
    let report = is_unital(channel, Some(Tolerances::DEFAULT.unital_precondition));
    if !report.unital {
        return Err(Error::NotUnital {
            residual: report.residual,
        });
    }
    let out = apply(channel, rho)?;
    let entropy_before = von_neumann_entropy(rho, LogBase::E);
    let entropy_after = von_neumann_entropy(&out, LogBase::E);
    let d = rho.dim();
    let star = ComplexMatrix::identity(d).scale_re(1.0 / d as f64);
    let dist_sq = (rho.matrix() - &star).frobenius_norm().powi(2);
    let lhs = entropy_after - entropy_before;
    let rhs = gamma / 2.0 * dist_sq;
    Ok(EntropyProductionReport {
        entropy_before,
        entropy_after,
        lhs,
        rhs,
        slack: lhs - rhs,
    })
}

/// The chain S(rho||sigma) >= (1/2) (Tr|rho-sigma|)^2 >= (1/2) ||rho-sigma||_F^2
/// evaluated in natural log.
#[derive(Debug, Clone, Copy)]
pub struct PinskerReport {
    pub relative_entropy: f64,
    pub half_trace_sq: f64,
    pub half_frobenius_sq: f64,
    pub slack_entropy_vs_trace: f64,
    pub slack_trace_vs_frobenius: f64,
}

/// Evaluate the quantum Pinsker chain; fails with `SupportViolation`
/// when the relative entropy is infinite.
pub fn pinsker_check(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<PinskerReport> {
    let rel = crate::states::relative_entropy(rho, sigma, LogBase::E)?;
    let diff = rho.matrix() - sigma.matrix();
    let trace_dist = crate::linalg::trace_norm_hermitian(&diff)?;
    let half_trace_sq = 0.5 * trace_dist * trace_dist;
    let half_frobenius_sq = 0.5 * diff.frobenius_norm().powi(2);
    Ok(PinskerReport {
        relative_entropy: rel,
        half_trace_sq,
        half_frobenius_sq,
        slack_entropy_vs_trace: rel - half_trace_sq,
        slack_trace_vs_frobenius: half_trace_sq - half_frobenius_sq,
    })
}

/// Random channel with `kraus_count` Kraus operators, sliced from a
/// Haar-random isometry d -> d * kraus_count.
pub fn random_channel(d: usize, kraus_count: usize, seed: u64) -> Result<KrausChannel> {
    if d < 2 {
        return Err(Error::InvalidDimension { dim: d });
    }
    if kraus_count == 0 {
        return Err(Error::InvalidRank {
            rank: 0,
            dim: d,
        });
    }
    let mut rng = stream(seed, "channels");
    let cols = crate::states::random_isometry_columns(d * kraus_count, d, &mut rng);
    let kraus = (0..kraus_count)
        .map(|mu| {
            ComplexMatrix::from_fn(d, |i, j| cols[j][mu * d + i])
        })
        .collect();
    KrausChannel::new(d, kraus)
}

/// Random unital channel: a convex mixture of Haar unitaries
/// sqrt(p_mu) U_mu with p drawn uniformly from the simplex.
pub fn random_unital_channel(d: usize, unitary_count: usize, seed: u64) -> Result<KrausChannel> {
    if d < 2 {
        return Err(Error::InvalidDimension { dim: d });
    }
    if unitary_count == 0 {
        return Err(Error::InvalidRank {
            rank: 0,
            dim: d,
        });
    }
    let mut rng = stream(seed, "unital-channels");
    let mut weights: Vec<f64> = (0..unitary_count)
        .map(|_| -(rng.gen::<f64>().max(f64::MIN_POSITIVE)).ln())
        .collect();
    let total: f64 = weights.iter().sum();
    for w in weights.iter_mut() {
        *w /= total;
    }
    let kraus = weights
        .iter()
        .map(|&p| random_unitary_from(d, &mut rng).scale_re(p.sqrt()))
        .collect();
    KrausChannel::new(d, kraus)
}

/// Purity of the channel's image of the maximally mixed state; exceeds
/// 1/d exactly when the channel is nonunital.
pub fn mixed_image_purity(channel: &KrausChannel) -> f64 {
    let image = channel.apply_to_mixed();
    image.entries().iter().map(|z| z.norm_sqr()).sum()
}

/// Coherence monotonicity helper used by the property suites:
/// C(E(rho)) - C(rho), nonpositive for unital channels.
pub fn coherence_gain(channel: &KrausChannel, rho: &DensityMatrix) -> Result<f64> {
    let out = apply(channel, rho)?;
    Ok(coherence_frobenius(&out) - coherence_frobenius(rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bloch_vector, from_bloch, random_density, BlochVector};

    fn amplitude_damping(gamma: f64) -> KrausChannel {
        standard_channel(StandardChannel::AmplitudeDamping { gamma }, 2).unwrap()
    }

    #[test]
    fn identity_channel_is_identity() {
        let id = standard_channel(StandardChannel::Unitary(ComplexMatrix::identity(3)), 3)
            .unwrap();
        let rho = random_density(3, 2, 17).unwrap();
        let out = apply(&id, &rho).unwrap();
        assert!((out.matrix() - rho.matrix()).frobenius_norm() < 1e-14);
    }

    #[test]
    fn fully_depolarizing_maps_to_mixed() {
        let dep = standard_channel(StandardChannel::Depolarizing { p: 1.0 }, 2).unwrap();
        let pure = DensityMatrix::basis_state(2, 0).unwrap();
        let out = apply(&dep, &pure).unwrap();
        assert!((out.purity() - 0.5).abs() < 1e-12);
        for d in [3usize, 4] {
            let dep = standard_channel(StandardChannel::Depolarizing { p: 1.0 }, d).unwrap();
            let pure = DensityMatrix::basis_state(d, 0).unwrap();
            let out = apply(&dep, &pure).unwrap();
            assert!((out.purity() - 1.0 / d as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn spontaneous_emission_from_mixed() {
        let ch = amplitude_damping(1.0);
        let mixed = DensityMatrix::maximally_mixed(2).unwrap();
        let out = apply(&ch, &mixed).unwrap();
        let ground = DensityMatrix::basis_state(2, 0).unwrap();
        assert!((out.matrix() - ground.matrix()).frobenius_norm() < 1e-12);
    }

    #[test]
    fn unitality_examples() {
        let pd = standard_channel(StandardChannel::PhaseDamping { lambda: 0.4 }, 2).unwrap();
        assert!(is_unital(&pd, None).unital);

        let ad = amplitude_damping(0.3);
        let report = is_unital(&ad, None);
        assert!(!report.unital);
        assert!((report.residual - 0.3 / 2f64.sqrt()).abs() < 1e-12);

        let mix = random_unital_channel(3, 4, 23).unwrap();
        assert!(is_unital(&mix, None).unital);
    }

    #[test]
    fn cohering_power_examples() {
        for lambda in [0.0, 0.3, 1.0] {
            let pd =
                standard_channel(StandardChannel::PhaseDamping { lambda }, 2).unwrap();
            assert!(cohering_power(&pd).abs() < 1e-12);
        }
        for gamma in [0.0, 0.3, 0.7, 1.0] {
            let ad = amplitude_damping(gamma);
            assert!((cohering_power(&ad) - gamma).abs() < 1e-12, "gamma {gamma}");
            assert!((cohering_power_commutator(&ad) - gamma).abs() < 1e-12);
        }
    }

    #[test]
    fn projective_measurement_dephases() {
        let ch = standard_channel(
            StandardChannel::ProjectiveMeasurement {
                basis: ComplexMatrix::identity(2),
            },
            2,
        )
        .unwrap();
        let rho = from_bloch(&BlochVector::new([0.6, 0.0, 0.3]).unwrap()).unwrap();
        let out = apply(&ch, &rho).unwrap();
        let s = bloch_vector(&out).unwrap();
        assert!(s.s[0].abs() < 1e-13 && s.s[1].abs() < 1e-13);
        assert!((s.s[2] - 0.3).abs() < 1e-13);
    }

    #[test]
    fn parameter_out_of_range() {
        assert!(matches!(
            standard_channel(StandardChannel::Depolarizing { p: 1.5 }, 2),
            Err(Error::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            standard_channel(StandardChannel::AmplitudeDamping { gamma: -0.1 }, 2),
            Err(Error::ParameterOutOfRange { .. })
        ));
    }

    #[test]
    fn overlap_gap_examples() {
        let id = ComplexMatrix::identity(2);
        let m = overlap_matrix(&id, &id).unwrap();
        let gap = spectral_gap_projection(&m);
        assert!(gap.gamma.abs() < 1e-12);
        assert!(!gap.ergodic);

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let had = ComplexMatrix::from_real(2, &[h, h, h, -h]).unwrap();
        let m = overlap_matrix(&id, &had).unwrap();
        let gap = spectral_gap_projection(&m);
        assert!((gap.gamma - 1.0).abs() < 1e-12);

        let alpha = std::f64::consts::PI / 8.0;
        let (c, s) = (alpha.cos(), alpha.sin());
        let rot = ComplexMatrix::from_real(2, &[c, -s, s, c]).unwrap();
        let m = overlap_matrix(&id, &rot).unwrap();
        let gap = spectral_gap_projection(&m);
        let expect = (2.0 * alpha).sin().powi(2);
        assert!((gap.gamma - expect).abs() < 1e-12);
        assert!((gap.gamma - 0.5).abs() < 1e-12);
    }

    #[test]
    fn superoperator_gap_examples() {
        let id = standard_channel(StandardChannel::Unitary(ComplexMatrix::identity(2)), 2)
            .unwrap();
        let gap = superoperator_spectral_gap(&id).unwrap();
        assert!(gap.gamma.abs() < 1e-12 && !gap.ergodic);

        let dep = standard_channel(StandardChannel::Depolarizing { p: 1.0 }, 2).unwrap();
        let gap = superoperator_spectral_gap(&dep).unwrap();
        assert!((gap.gamma - 1.0).abs() < 1e-10);
        assert!(gap.ergodic);

        // Computational-basis dephasing fixes every diagonal operator.
        let deph = standard_channel(
            StandardChannel::ProjectiveMeasurement {
                basis: ComplexMatrix::identity(2),
            },
            2,
        )
        .unwrap();
        let gap = superoperator_spectral_gap(&deph).unwrap();
        assert!(gap.gamma.abs() < 1e-12 && !gap.ergodic);

        let ad = amplitude_damping(0.5);
        assert!(matches!(
            superoperator_spectral_gap(&ad),
            Err(Error::NotUnital { .. })
        ));
    }

    #[test]
    fn entropy_production_hadamard_example() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let had = ComplexMatrix::from_real(2, &[h, h, h, -h]).unwrap();
        let ch = standard_channel(StandardChannel::ProjectiveMeasurement { basis: had }, 2)
            .unwrap();
        let rho = DensityMatrix::new(
            ComplexMatrix::from_real(2, &[0.9, 0.0, 0.0, 0.1]).unwrap(),
        )
        .unwrap();
        let report = entropy_production_check(&ch, &rho, 1.0).unwrap();
        let expect_lhs = 2f64.ln() - (-0.9f64 * 0.9f64.ln() - 0.1 * 0.1f64.ln());
        assert!((report.lhs - expect_lhs).abs() < 1e-12);
        assert!((report.rhs - 0.16).abs() < 1e-12);
        assert!((report.slack - (expect_lhs - 0.16)).abs() < 1e-12);
        assert!(report.slack > 0.0);
    }

    #[test]
    fn entropy_production_identity_trivial() {
        let id = standard_channel(StandardChannel::Unitary(ComplexMatrix::identity(2)), 2)
            .unwrap();
        let rho = random_density(2, 2, 31).unwrap();
        let report = entropy_production_check(&id, &rho, 0.0).unwrap();
        assert!(report.lhs.abs() < 1e-10 && report.rhs.abs() < 1e-15);
    }

    #[test]
    fn pinsker_example() {
        let rho = DensityMatrix::new(
            ComplexMatrix::from_real(2, &[0.9, 0.0, 0.0, 0.1]).unwrap(),
        )
        .unwrap();
        let star = DensityMatrix::maximally_mixed(2).unwrap();
        let report = pinsker_check(&rho, &star).unwrap();
        assert!((report.half_trace_sq - 0.32).abs() < 1e-12);
        assert!((report.half_frobenius_sq - 0.16).abs() < 1e-12);
        assert!(report.slack_entropy_vs_trace > 0.0);
        assert!(report.slack_trace_vs_frobenius > 0.0);
        let same = pinsker_check(&rho, &rho).unwrap();
        assert!(same.relative_entropy.abs() < 1e-12);
    }

    #[test]
    fn random_channels_are_cptp() {
        let single = random_channel(2, 1, 41).unwrap();
        assert!(single.kraus()[0].unitarity_defect() < 1e-10);
        let ch = random_channel(2, 4, 42).unwrap();
        assert!(ch.trace_preservation_residual() < 1e-10);
        for case in 0..50u64 {
            let rho = random_density(2, 2, crate::rng::derive_seed(43, case)).unwrap();
            apply(&ch, &rho).expect("channel output must be a valid state");
        }
    }

    #[test]
    fn nonunital_purity_identity() {
        // purity(E(I/d)) - 1/d equals the squared unitality residual.
        for case in 0..20u64 {
            let ch = random_channel(3, 2, crate::rng::derive_seed(51, case)).unwrap();
            let report = is_unital(&ch, None);
            let gap = mixed_image_purity(&ch) - 1.0 / 3.0;
            assert!((gap - report.residual * report.residual).abs() < 1e-12);
        }
    }
}
