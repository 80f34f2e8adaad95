//! State functionals: the Frobenius coherence measure and its eigenvalue
//! form, Brukner-Zeilinger invariant information (purity and MUB-sum
//! definitions), polarization degrees, basis-dependent coherence
//! quantifiers with their bound chain, and the quantum alpha-divergence.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, trace_norm_hermitian, ComplexMatrix};
use crate::states::{bloch_vector, von_neumann_entropy, DensityMatrix, LogBase};
use crate::tol::Tolerances;

/// A complete set of d+1 mutually unbiased bases realizing mutually
/// complementary observables. Constructed for d = 2 and d = 3.
#[derive(Debug, Clone)]
pub struct MubSet {
    dim: usize,
    bases: Vec<ComplexMatrix>,
}

impl MubSet {
    /// Validate an explicit basis collection: each basis orthonormal and
    /// all cross-basis overlaps |<e|f>|^2 = 1/d, both within 1e-12.
    pub fn new(dim: usize, bases: Vec<ComplexMatrix>) -> Result<Self> {
        let tol = Tolerances::DEFAULT.mub;
        for b in &bases {
            if b.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: b.dim(),
                    right: dim,
                });
            }
            let defect = b.unitarity_defect();
            if defect > tol {
                return Err(Error::BasisNotOrthonormal { defect });
            }
        }
        let target = 1.0 / dim as f64;
        for a in 0..bases.len() {
            for b in (a + 1)..bases.len() {
                let prod = &bases[a].adjoint() * &bases[b];
                for i in 0..dim {
                    for j in 0..dim {
                        let overlap = prod[(i, j)].norm_sqr();
                        if (overlap - target).abs() > tol {
                            return Err(Error::BasisNotOrthonormal {
                                defect: (overlap - target).abs(),
                            });
                        }
                    }
                }
            }
        }
        Ok(Self { dim, bases })
    }

    /// Qubit MUBs: the sigma_z, sigma_x and sigma_y eigenbases.
    pub fn qubit() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let z = ComplexMatrix::identity(2);
        let x = ComplexMatrix::new(
            2,
            vec![
                Complex64::new(h, 0.0),
                Complex64::new(h, 0.0),
                Complex64::new(h, 0.0),
                Complex64::new(-h, 0.0),
            ],
        )
        .unwrap();
        let y = ComplexMatrix::new(
            2,
            vec![
                Complex64::new(h, 0.0),
                Complex64::new(h, 0.0),
                Complex64::new(0.0, h),
                Complex64::new(0.0, -h),
            ],
        )
        .unwrap();
        Self::new(2, vec![z, x, y]).expect("hard-coded qubit MUBs are valid")
    }

    /// Qutrit MUBs: computational basis plus the three Fourier/phase
    /// bases with columns (1/sqrt(3)) omega^{k l^2 + j l}, omega = e^{2 pi i/3}.
    pub fn qutrit() -> Self {
        let inv = 1.0 / 3f64.sqrt();
        let half_sqrt3 = 3f64.sqrt() / 2.0;
        let omega = [
            Complex64::new(1.0, 0.0),
            Complex64::new(-0.5, half_sqrt3),
            Complex64::new(-0.5, -half_sqrt3),
        ];
        let mut bases = vec![ComplexMatrix::identity(3)];
        for k in 0..3usize {
            bases.push(ComplexMatrix::from_fn(3, |l, j| {
                omega[(k * l * l + j * l) % 3] * inv
            }));
        }
        Self::new(3, bases).expect("hard-coded qutrit MUBs are valid")
    }

    /// The standard MUB set for the supported dimensions (2 and 3).
    pub fn standard(dim: usize) -> Result<Self> {
        match dim {
            2 => Ok(Self::qubit()),
            3 => Ok(Self::qutrit()),
            d => Err(Error::InvalidDimension { dim: d }),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bases(&self) -> &[ComplexMatrix] {
        &self.bases
    }
}

fn mixed_distance_frobenius(rho: &DensityMatrix) -> f64 {
    let d = rho.dim();
    let star = ComplexMatrix::identity(d).scale_re(1.0 / d as f64);
    (rho.matrix() - &star).frobenius_norm()
}

/// Basis-independent coherence sqrt(d/(d-1)) ||rho - I/d||_F, in [0,1]:
/// zero exactly at the maximally mixed state, one exactly on pure states.
pub fn coherence_frobenius(rho: &DensityMatrix) -> f64 {
    let d = rho.dim() as f64;
    let c = (d / (d - 1.0)).sqrt() * mixed_distance_frobenius(rho);
    c.min(1.0)
}

/// Spectral form of the same measure,
/// sqrt(d/(d-1) sum_j (lambda_j - 1/d)^2); agrees with
/// [`coherence_frobenius`] to rounding.
pub fn coherence_eigform(rho: &DensityMatrix) -> f64 {
    let d = rho.dim() as f64;
    let sum: f64 = rho
        .eigenvalues()
        .iter()
        .map(|&l| (l - 1.0 / d) * (l - 1.0 / d))
        .sum();
    ((d / (d - 1.0)) * sum).sqrt().min(1.0)
}

/// Brukner-Zeilinger invariant information Tr rho^2 - 1/d.
pub fn bz_information(rho: &DensityMatrix) -> f64 {
    rho.purity() - 1.0 / rho.dim() as f64
}

/// Brukner-Zeilinger information as a sum of squared probability
/// deviations over a complete set of mutually complementary observables:
/// sum_{i,j} (Tr(Pi_ij rho) - 1/d)^2. Independent of the MUB choice and
/// equal to Tr rho^2 - 1/d.
pub fn bz_information_mco(rho: &DensityMatrix, mubs: &MubSet) -> Result<f64> {
    let d = rho.dim();
    if mubs.dim() != d {
        return Err(Error::DimensionMismatch {
            left: mubs.dim(),
            right: d,
        });
    }
    let inv_d = 1.0 / d as f64;
    let mut total = 0.0;
    for basis in mubs.bases() {
        for j in 0..d {
            let col = basis.column(j);
            let mut prob = 0.0;
            for a in 0..d {
                for b in 0..d {
                    prob += (col[a].conj() * rho.matrix()[(a, b)] * col[b]).re;
                }
            }
            total += (prob - inv_d) * (prob - inv_d);
        }
    }
    Ok(total)
}

fn validate_coherence_matrix(phi: &ComplexMatrix) -> Result<(Vec<f64>, f64)> {
    let tol = Tolerances::DEFAULT;
    let defect = phi.hermiticity_defect();
    if defect > tol.hermiticity {
        return Err(Error::NotHermitian { defect });
    }
    let eig = hermitian_eig(phi)?;
    let scale = phi.frobenius_norm().max(1.0);
    let min_eig = eig.eigenvalues[0];
    if min_eig < -tol.psd * scale {
        return Err(Error::NotPsd { min_eig });
    }
    let trace = phi.trace().re;
    if trace <= tol.psd * scale {
        return Err(Error::ZeroTrace { trace });
    }
    Ok((eig.eigenvalues, trace))
}

/// Degree of polarization of a planar field's 2x2 coherence matrix,
/// sqrt(1 - 4 det Phi / (Tr Phi)^2). The determinant comes from the
/// eigenvalues to avoid cancellation.
pub fn degree_polarization_2d(phi: &ComplexMatrix) -> Result<f64> {
    if phi.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: phi.dim(),
            right: 2,
        });
    }
    let (eigs, trace) = validate_coherence_matrix(phi)?;
    let det = eigs.iter().map(|&l| l.max(0.0)).product::<f64>();
    Ok((1.0 - 4.0 * det / (trace * trace)).clamp(0.0, 1.0).sqrt())
}

/// 3D degree of polarization sqrt(3/2 (Tr Phi^2/(Tr Phi)^2 - 1/3)).
pub fn degree_polarization_3d(phi: &ComplexMatrix) -> Result<f64> {
    if phi.dim() != 3 {
        return Err(Error::DimensionMismatch {
            left: phi.dim(),
            right: 3,
        });
    }
    let (eigs, trace) = validate_coherence_matrix(phi)?;
    let tr_sq: f64 = eigs.iter().map(|&l| l * l).sum();
    let val = 1.5 * (tr_sq / (trace * trace) - 1.0 / 3.0);
    Ok(val.clamp(0.0, 1.0).sqrt())
}

/// l1 coherence sum_{i != j} |<b_i| rho |b_j>| in the given orthonormal
/// basis (columns of `basis`), defaulting to the computational basis.
pub fn c_l1(rho: &DensityMatrix, basis: Option<&ComplexMatrix>) -> Result<f64> {
    let d = rho.dim();
    let work;
    let m = match basis {
        None => rho.matrix(),
        Some(b) => {
            if b.dim() != d {
                return Err(Error::DimensionMismatch {
                    left: b.dim(),
                    right: d,
                });
            }
            let defect = b.unitarity_defect();
            if defect > Tolerances::DEFAULT.basis {
                return Err(Error::BasisNotOrthonormal { defect });
            }
            work = &(&b.adjoint() * rho.matrix()) * b;
            &work
        }
    };
    let mut sum = 0.0;
    for i in 0..d {
        for j in 0..d {
            if i != j {
                sum += m[(i, j)].norm();
            }
        }
    }
    Ok(sum)
}

/// Closed-form trace-norm coherence of a qubit, sqrt(s1^2 + s2^2)
/// (equals the l1 coherence for qubits).
pub fn c_trace_qubit(rho: &DensityMatrix) -> Result<f64> {
    let s = bloch_vector(rho)?;
    Ok((s.s[0] * s.s[0] + s.s[1] * s.s[1]).sqrt())
}

/// Trace-norm distance ||rho - I/d||_1 to the maximally mixed state:
/// an upper bound on the trace-norm coherence in any dimension, itself
/// bounded by sqrt(d-1) C(rho).
pub fn trace_distance_to_mixed(rho: &DensityMatrix) -> Result<f64> {
    let d = rho.dim();
    let star = ComplexMatrix::identity(d).scale_re(1.0 / d as f64);
    trace_norm_hermitian(&(rho.matrix() - &star))
}

fn binary_entropy_base2(x: f64) -> f64 {
    let term = |p: f64| if p > 0.0 { -p * p.log2() } else { 0.0 };
    term(x) + term(1.0 - x)
}

/// Relative entropy of coherence of a qubit in the computational basis,
/// h((1+s3)/2) - h((1+|s|)/2) with h the base-2 binary entropy.
pub fn c_relent_qubit(rho: &DensityMatrix) -> Result<f64> {
    let s = bloch_vector(rho)?;
    Ok(binary_entropy_base2((1.0 + s.s[2]) / 2.0) - binary_entropy_base2((1.0 + s.norm()) / 2.0))
}

/// Definitional route for the relative entropy of coherence: entropy of
/// the dephased state minus entropy of the state, base 2.
pub fn c_relent_qubit_definitional(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: 2,
        });
    }
    let diag = ComplexMatrix::from_fn(2, |i, j| {
        if i == j {
            Complex64::new(rho.matrix()[(i, i)].re, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let dephased = DensityMatrix::new(diag)?;
    Ok(von_neumann_entropy(&dephased, LogBase::Two) - von_neumann_entropy(rho, LogBase::Two))
}

/// Quantum alpha-divergence (Tr(rho^alpha sigma^{1-alpha}) - 1)/(alpha - 1)
/// for alpha in (0,1) or (1,inf), oriented so the value is nonnegative
/// and D_2(rho || I/d) = d Tr rho^2 - 1.
pub fn alpha_divergence(rho: &DensityMatrix, sigma: &DensityMatrix, alpha: f64) -> Result<f64> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha == 1.0 {
        return Err(Error::InvalidAlpha { alpha });
    }
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }
    let tol = Tolerances::DEFAULT;
    let d = rho.dim();
    let rho_eig = hermitian_eig(rho.matrix())?;
    let sig_eig = hermitian_eig(sigma.matrix())?;
    let mut trace_term = 0.0;
    for j in 0..d {
        let mu = sig_eig.eigenvalues[j].max(0.0);
        if mu < tol.support_cutoff {
            if alpha > 1.0 {
                // Weight of rho on the null direction of sigma.
                let w = sig_eig.eigenvectors.column(j);
                let mut weight = 0.0;
                for a in 0..d {
                    for b in 0..d {
                        weight += (w[a].conj() * rho.matrix()[(a, b)] * w[b]).re;
                    }
                }
                if weight > tol.support_weight {
                    return Err(Error::SupportViolation);
                }
            }
            continue;
        }
        for i in 0..d {
            let lam = rho_eig.eigenvalues[i].max(0.0);
            if lam == 0.0 {
                continue;
            }
            let mut overlap = Complex64::new(0.0, 0.0);
            for a in 0..d {
                overlap += rho_eig.eigenvectors[(a, i)].conj() * sig_eig.eigenvectors[(a, j)];
            }
            trace_term += lam.powf(alpha) * mu.powf(1.0 - alpha) * overlap.norm_sqr();
        }
    }
    Ok((trace_term - 1.0) / (alpha - 1.0))
}

/// Two sides of the purity/information bound
/// I_BZ(rho)/2 <= log2(d) - S_2(rho).
#[derive(Debug, Clone, Copy)]
pub struct InfoBoundReport {
    /// I_BZ(rho)/2 = ||rho - I/d||_F^2 / 2.
    pub lhs: f64,
    /// log2(d) - S(rho) in base 2, i.e. S(rho || I/d) in base 2.
    pub rhs: f64,
    /// rhs - lhs; nonnegative up to rounding.
    pub slack: f64,
}

/// Evaluate the information bound I_BZ/2 <= log2 d - S_2(rho).
pub fn check_info_bound(rho: &DensityMatrix) -> InfoBoundReport {
    let lhs = bz_information(rho) / 2.0;
    let rhs = (rho.dim() as f64).log2() - von_neumann_entropy(rho, LogBase::Two);
    InfoBoundReport {
        lhs,
        rhs,
        slack: rhs - lhs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{from_bloch, random_density, BlochVector};

    fn qubit(s: [f64; 3]) -> DensityMatrix {
        from_bloch(&BlochVector::new(s).unwrap()).unwrap()
    }

    #[test]
    fn coherence_extremes() {
        for d in 2..=5 {
            let star = DensityMatrix::maximally_mixed(d).unwrap();
            assert!(coherence_frobenius(&star).abs() < 1e-12);
            let pure = DensityMatrix::basis_state(d, 0).unwrap();
            assert!((coherence_frobenius(&pure) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn qubit_coherence_is_bloch_length() {
        let rho = qubit([0.3, 0.0, 0.4]);
        assert!((coherence_frobenius(&rho) - 0.5).abs() < 1e-13);
    }

    #[test]
    fn qutrit_half_half_example() {
        let m = ComplexMatrix::from_real(3, &[0.5, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0])
            .unwrap();
        let rho = DensityMatrix::new(m).unwrap();
        assert!((coherence_frobenius(&rho) - 0.5).abs() < 1e-13);
        assert!((coherence_eigform(&rho) - 0.5).abs() < 1e-13);
    }

    #[test]
    fn eigform_matches_frobenius() {
        let rho = qubit([0.0, 0.0, 0.5]);
        assert!((coherence_eigform(&rho) - 0.5).abs() < 1e-13);
        let pure = DensityMatrix::basis_state(2, 0).unwrap();
        assert!((coherence_eigform(&pure) - 1.0).abs() < 1e-13);
        for d in 2..=8 {
            for case in 0..10u64 {
                let rho = random_density(d, d, crate::rng::derive_seed(7, case * 10 + d as u64))
                    .unwrap();
                let diff = (coherence_eigform(&rho) - coherence_frobenius(&rho)).abs();
                assert!(diff < 1e-10, "d={d} case={case} diff={diff}");
            }
        }
    }

    #[test]
    fn bz_information_examples() {
        let star = DensityMatrix::maximally_mixed(3).unwrap();
        assert!(bz_information(&star).abs() < 1e-14);
        let pure = DensityMatrix::basis_state(2, 0).unwrap();
        assert!((bz_information(&pure) - 0.5).abs() < 1e-14);
        assert!((bz_information(&qubit([0.5, 0.0, 0.0])) - 0.125).abs() < 1e-14);
    }

    #[test]
    fn mco_sum_matches_purity_form() {
        let mubs2 = MubSet::qubit();
        let star = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(bz_information_mco(&star, &mubs2).unwrap().abs() < 1e-13);
        let rho = qubit([0.5, 0.0, 0.0]);
        assert!((bz_information_mco(&rho, &mubs2).unwrap() - 0.125).abs() < 1e-12);

        let mubs3 = MubSet::qutrit();
        for case in 0..20u64 {
            let rho = random_density(3, 3, crate::rng::derive_seed(11, case)).unwrap();
            let mco = bz_information_mco(&rho, &mubs3).unwrap();
            let direct = bz_information(&rho);
            assert!((mco - direct).abs() < 1e-10, "case {case}: {mco} vs {direct}");
        }
    }

    #[test]
    fn mco_dimension_mismatch() {
        let rho = DensityMatrix::maximally_mixed(3).unwrap();
        assert!(matches!(
            bz_information_mco(&rho, &MubSet::qubit()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn polarization_examples() {
        let unpolarized = ComplexMatrix::identity(2);
        assert!(degree_polarization_2d(&unpolarized).unwrap().abs() < 1e-13);
        let phi = ComplexMatrix::from_real(2, &[3.0, 1.0, 1.0, 1.0]).unwrap();
        let p2 = degree_polarization_2d(&phi).unwrap();
        assert!((p2 - 0.5f64.sqrt()).abs() < 1e-12);
        let phi3 = ComplexMatrix::from_real(3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0])
            .unwrap();
        assert!((degree_polarization_3d(&phi3).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn polarization_rejects_bad_input() {
        let phi = ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -1.0]).unwrap();
        assert!(matches!(
            degree_polarization_2d(&phi),
            Err(Error::NotPsd { .. })
        ));
        let zero = ComplexMatrix::zeros(2);
        assert!(matches!(
            degree_polarization_2d(&zero),
            Err(Error::ZeroTrace { .. })
        ));
    }

    #[test]
    fn l1_examples() {
        let diag = DensityMatrix::new(
            ComplexMatrix::from_real(2, &[0.7, 0.0, 0.0, 0.3]).unwrap(),
        )
        .unwrap();
        assert!(c_l1(&diag, None).unwrap().abs() < 1e-14);
        let plus = qubit([1.0, 0.0, 0.0]);
        assert!((c_l1(&plus, None).unwrap() - 1.0).abs() < 1e-12);
        let rho = qubit([0.6, 0.0, 0.3]);
        assert!((c_l1(&rho, None).unwrap() - 0.6).abs() < 1e-13);
    }

    #[test]
    fn l1_rejects_bad_basis() {
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        let skew = ComplexMatrix::from_real(2, &[1.0, 1.0, 0.0, 1.0]).unwrap();
        assert!(matches!(
            c_l1(&rho, Some(&skew)),
            Err(Error::BasisNotOrthonormal { .. })
        ));
    }

    #[test]
    fn trace_coherence_examples() {
        let diag = DensityMatrix::new(
            ComplexMatrix::from_real(2, &[0.7, 0.0, 0.0, 0.3]).unwrap(),
        )
        .unwrap();
        assert!(c_trace_qubit(&diag).unwrap().abs() < 1e-14);
        let plus = qubit([1.0, 0.0, 0.0]);
        assert!((c_trace_qubit(&plus).unwrap() - 1.0).abs() < 1e-12);
        for case in 0..20u64 {
            let rho = random_density(2, 2, crate::rng::derive_seed(3, case)).unwrap();
            let a = c_trace_qubit(&rho).unwrap();
            let b = c_l1(&rho, None).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
        let big = DensityMatrix::maximally_mixed(3).unwrap();
        assert!(matches!(
            c_trace_qubit(&big),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn relent_coherence_examples() {
        let diag = qubit([0.0, 0.0, 0.4]);
        assert!(c_relent_qubit(&diag).unwrap().abs() < 1e-13);
        let plus = qubit([1.0, 0.0, 0.0]);
        assert!((c_relent_qubit(&plus).unwrap() - 1.0).abs() < 1e-12);
        let rho = qubit([0.6, 0.0, 0.3]);
        let closed = c_relent_qubit(&rho).unwrap();
        let definitional = c_relent_qubit_definitional(&rho).unwrap();
        assert!((closed - definitional).abs() < 1e-10);
    }

    #[test]
    fn alpha_divergence_identities() {
        let rho = qubit([0.5, 0.0, 0.0]);
        for &alpha in &[0.5, 2.0, 3.0] {
            assert!(alpha_divergence(&rho, &rho, alpha).unwrap().abs() < 1e-11);
        }
        let star = DensityMatrix::maximally_mixed(2).unwrap();
        let d2 = alpha_divergence(&rho, &star, 2.0).unwrap();
        assert!((d2 - 0.25).abs() < 1e-12);
        for case in 0..10u64 {
            let rho = random_density(3, 3, crate::rng::derive_seed(5, case)).unwrap();
            let star = DensityMatrix::maximally_mixed(3).unwrap();
            let d2 = alpha_divergence(&rho, &star, 2.0).unwrap();
            let c = coherence_frobenius(&rho);
            assert!((d2 - 2.0 * c * c).abs() < 1e-10);
        }
    }

    #[test]
    fn alpha_divergence_errors() {
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(matches!(
            alpha_divergence(&rho, &rho, 1.0),
            Err(Error::InvalidAlpha { .. })
        ));
        assert!(matches!(
            alpha_divergence(&rho, &rho, -0.5),
            Err(Error::InvalidAlpha { .. })
        ));
        let p0 = DensityMatrix::basis_state(2, 0).unwrap();
        let p1 = DensityMatrix::basis_state(2, 1).unwrap();
        assert!(matches!(
            alpha_divergence(&p0, &p1, 2.0),
            Err(Error::SupportViolation)
        ));
    }

    #[test]
    fn info_bound_examples() {
        let star = DensityMatrix::maximally_mixed(2).unwrap();
        let r = check_info_bound(&star);
        assert!(r.lhs.abs() < 1e-14 && r.rhs.abs() < 1e-12);
        let diag = DensityMatrix::new(
            ComplexMatrix::from_real(2, &[0.9, 0.0, 0.0, 0.1]).unwrap(),
        )
        .unwrap();
        let r = check_info_bound(&diag);
        assert!((r.lhs - 0.16).abs() < 1e-12);
        assert!((r.rhs - 0.531004).abs() < 1e-6);
        assert!(r.slack >= -1e-10);
    }

    #[test]
    fn basis_dependence_witness() {
        // A Hadamard rotation changes l1 coherence but not the
        // basis-independent measure.
        let rho = qubit([0.0, 0.0, 0.8]);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let had = ComplexMatrix::from_real(2, &[h, h, h, -h]).unwrap();
        let rotated = rho.conjugate_by(&had).unwrap();
        let l1_before = c_l1(&rho, None).unwrap();
        let l1_after = c_l1(&rotated, None).unwrap();
        assert!(l1_before.abs() < 1e-13);
        assert!((l1_after - 0.8).abs() < 1e-12);
        assert!(
            (coherence_frobenius(&rho) - coherence_frobenius(&rotated)).abs() < 1e-12
        );
    }
}
