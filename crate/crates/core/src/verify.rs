//! Named property suites cross-checking every closed form, bound and
//! invariant in the crate against its independent evaluation route.
//!
//! Each suite returns structured pass/fail results with deterministic
//! detail strings; all randomness is derived from the suite seed and an
//! instance index, so two runs with the same seed produce identical
//! reports.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::asymmetry::{
    asymmetry, asymmetry_analytic_qubit, asymmetry_collective_2q_closed,
    asymmetry_independent_closed, f_functional, f_functional_direct, haar_sample, integrate,
    pair_integral, pauli_transfer, single_integral, symmetry, triple_integral, twirl, GroupSpec,
    IntegrationMethod, Su2Element,
};
use crate::channels::{
    apply, cohering_power, cohering_power_commutator, entropy_production_check, is_unital,
    mixed_image_purity, overlap_matrix, pinsker_check, random_channel, random_unital_channel,
    spectral_gap_projection, standard_channel, KrausChannel, StandardChannel,
};
use crate::error::Result;
use crate::linalg::{
    anticommutator, commutator, entrywise_lp_norm, hermitian_eig, schatten_norm,
    ComplexMatrix,
};
use crate::measures::{
    alpha_divergence, bz_information, bz_information_mco, c_l1, c_relent_qubit,
    c_relent_qubit_definitional, c_trace_qubit, check_info_bound, coherence_eigform,
    coherence_frobenius, degree_polarization_2d, degree_polarization_3d, trace_distance_to_mixed,
    MubSet,
};
use crate::rng::{derive_seed, stream};
use crate::states::{
    bloch_vector, correlation_tensor, random_density, random_unitary, DensityMatrix,
};

/// Outcome of one named property check.
#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl PropertyResult {
    fn pass(name: &str, detail: String) -> Self {
        Self {
            name: name.to_string(),
            passed: true,
            detail,
        }
    }

    fn from_violation(name: &str, worst: f64, bound: f64, cases: usize, context: &str) -> Self {
        let passed = worst <= bound;
        Self {
            name: name.to_string(),
            passed,
            detail: format!(
                "cases={cases} worst={worst:.3e} bound={bound:.3e}{}{}",
                if context.is_empty() { "" } else { " " },
                context
            ),
        }
    }
}

/// Tracks the largest violation seen and the instance seed that
/// produced it, so a failing property names a reproducible case.
struct WorstCase {
    value: f64,
    seed: u64,
}

impl WorstCase {
    fn new() -> Self {
        Self {
            value: f64::NEG_INFINITY,
            seed: 0,
        }
    }

    fn update(&mut self, value: f64, seed: u64) {
        if value > self.value {
            self.value = value;
            self.seed = seed;
        }
    }

    fn context(&self) -> String {
        format!("worst_case_seed={}", self.seed)
    }
}

/// All results for one suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub results: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

/// The named verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Norms,
    Coherence,
    Channels,
    Theorem1,
    Theorem2,
    Asymmetry,
    IntegrTables,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Norms,
        Suite::Coherence,
        Suite::Channels,
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Asymmetry,
        Suite::IntegrTables,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Norms => "norms",
            Suite::Coherence => "coherence",
            Suite::Channels => "channels",
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Asymmetry => "asymmetry",
            Suite::IntegrTables => "integr-tables",
        }
    }

    pub fn parse(s: &str) -> Option<Vec<Suite>> {
        match s {
            "all" => Some(Suite::ALL.to_vec()),
            other => Suite::ALL
                .iter()
                .find(|suite| suite.name() == other)
                .map(|&suite| vec![suite]),
        }
    }
}

/// Run one suite with the given seed; `cases` overrides the default
/// instance counts of the sweep-style properties.
pub fn run_suite(suite: Suite, seed: u64, cases: Option<usize>) -> Result<SuiteReport> {
    let results = match suite {
        Suite::Norms => norms_suite(seed, cases)?,
        Suite::Coherence => coherence_suite(seed, cases)?,
        Suite::Channels => channels_suite(seed, cases)?,
        Suite::Theorem1 => theorem1_suite(seed, cases)?,
        Suite::Theorem2 => theorem2_suite(seed, cases)?,
        Suite::Asymmetry => asymmetry_suite(seed, cases)?,
        Suite::IntegrTables => integr_tables_suite(seed, cases)?,
    };
    Ok(SuiteReport {
        suite,
        seed,
        results,
    })
}

fn random_matrix(d: usize, seed: u64) -> ComplexMatrix {
    let mut rng = stream(seed, "verify-matrices");
    ComplexMatrix::from_fn(d, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

fn random_hermitian(d: usize, seed: u64) -> ComplexMatrix {
    random_matrix(d, seed).hermitian_part()
}

fn maximally_coherent(d: usize) -> DensityMatrix {
    let amp = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
    DensityMatrix::from_ket(&vec![amp; d]).expect("uniform superposition is a state")
}

// ---------------------------------------------------------------------
// norms
// ---------------------------------------------------------------------

fn norms_suite(seed: u64, cases: Option<usize>) -> Result<Vec<PropertyResult>> {
    let per_dim = cases.unwrap_or(100);
    let mut results = Vec::new();

    // Schatten Hoelder chain ||A||_p <= d^(1/p - 1/q) ||A||_q and norm
    // monotonicity in p.
    let mut worst = WorstCase::new();
    let mut count = 0;
    for &d in &[2usize, 3, 4, 6] {
        for case in 0..per_dim {
            let instance = derive_seed(seed, (d * 10_000 + case) as u64);
            let a = random_matrix(d, instance);
            let pairs = [(1.0, 2.0), (1.0, f64::INFINITY), (2.0, f64::INFINITY), (1.5, 3.0)];
            for &(p, q) in &pairs {
                let np = schatten_norm(&a, p)?;
                let nq = schatten_norm(&a, q)?;
                let factor = if q.is_infinite() {
                    (d as f64).powf(1.0 / p)
                } else {
                    (d as f64).powf(1.0 / p - 1.0 / q)
                };
                worst.update(np - factor * nq, instance);
                worst.update(nq - np, instance); // monotonicity
                count += 1;
            }
        }
    }
    results.push(PropertyResult::from_violation(
        "norms/holder_chain",
        worst.value,
        1e-10,
        count,
        &worst.context(),
    ));

    // Unitary invariance of Schatten norms.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for case in 0..per_dim.min(50) {
        let d = 2 + case % 3;
        let a = random_matrix(d, derive_seed(seed, 900_000 + case as u64));
        let u = random_unitary(d, derive_seed(seed, 910_000 + case as u64));
        let v = random_unitary(d, derive_seed(seed, 920_000 + case as u64));
        let rotated = &(&u * &a) * &v;
        for &p in &[1.0, 2.0, 3.0, f64::INFINITY] {
            worst = worst.max((schatten_norm(&rotated, p)? - schatten_norm(&a, p)?).abs());
            count += 1;
        }
    }
    results.push(PropertyResult::from_violation(
        "norms/schatten_unitary_invariance",
        worst,
        1e-10,
        count,
        "",
    ));

    // Eigendecomposition reconstruction and orthonormality up to d = 16.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for &d in &[2usize, 3, 5, 8, 12, 16] {
        for case in 0..10 {
            let h = random_hermitian(d, derive_seed(seed, (40_000 + d * 100 + case) as u64));
            let eig = hermitian_eig(&h)?;
            let scale = h.frobenius_norm().max(1.0);
            worst = worst.max((&eig.reconstruct() - &h).frobenius_norm() / scale);
            let gram = &eig.eigenvectors.adjoint() * &eig.eigenvectors;
            worst = worst.max((&gram - &ComplexMatrix::identity(d)).frobenius_norm());
            count += 1;
        }
    }
    results.push(PropertyResult::from_violation(
        "norms/eig_reconstruction",
        worst,
        1e-10,
        count,
        "",
    ));

    // ||[U,rho]||^2 + ||{U,rho}||^2 = 4 ||rho||^2 for unitary U.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for case in 0..per_dim.min(50) {
        let d = 2 + case % 3;
        let u = random_unitary(d, derive_seed(seed, 950_000 + case as u64));
        let h = random_hermitian(d, derive_seed(seed, 960_000 + case as u64));
        let lhs = commutator(&u, &h).frobenius_norm().powi(2)
            + anticommutator(&u, &h).frobenius_norm().powi(2);
        let rhs = 4.0 * h.frobenius_norm().powi(2);
        worst = worst.max((lhs - rhs).abs() / rhs.max(1.0));
        count += 1;
    }
    results.push(PropertyResult::from_violation(
        "norms/commutator_anticommutator_identity",
        worst,
        1e-10,
        count,
        "",
    ));

    // Schatten-2 coincides with the entrywise l2 norm.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for case in 0..per_dim.min(50) {
        let d = 2 + case % 4;
        let a = random_matrix(d, derive_seed(seed, 970_000 + case as u64));
        worst = worst.max((schatten_norm(&a, 2.0)? - entrywise_lp_norm(&a, 2.0)?).abs());
        count += 1;
    }
    results.push(PropertyResult::from_violation(
        "norms/frobenius_is_entrywise_l2",
        worst,
        1e-12,
        count,
        "",
    ));

    Ok(results)
}

// ---------------------------------------------------------------------
// coherence
// ---------------------------------------------------------------------

fn coherence_suite(seed: u64, cases: Option<usize>) -> Result<Vec<PropertyResult>> {
    let per_dim = cases.unwrap_or(100);
    let mut results = Vec::new();

    // Unitary invariance of the Frobenius coherence.
    let mut worst = WorstCase::new();
    let mut count = 0;
    for &d in &[2usize, 3, 4] {
        for case in 0..per_dim {
            let instance = derive_seed(seed, (d * 100_000 + case) as u64);
            let rho = random_density(d, 1 + case % d, instance)?;
            let u = random_unitary(d, derive_seed(seed, (d * 200_000 + case) as u64));
            let rotated = rho.conjugate_by(&u)?;
            worst.update(
                (coherence_frobenius(&rotated) - coherence_frobenius(&rho)).abs(),
                instance,
            );
            count += 1;
        }
    }
    results.push(PropertyResult::from_violation(
        "coherence/unitary_invariance",
        worst.value,
        1e-10,
        count,
        &worst.context(),
    ));

    // Range [0,1] with C = 1 exactly on pure states.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for &d in &[2usize, 3, 4] {
        for case in 0..per_dim.min(50) {
            let rank = 1 + case % d;
            let rho = random_density(d, rank, derive_seed(seed, (d * 300_000 + case) as u64))?;
            let c = coherence_frobenius(&rho);
            worst = worst.max(-c).max(c - 1.0);
            let pure = (rho.purity() - 1.0).abs() < 1e-8;
            let extremal = (c - 1.0).abs() < 1e-8;
            if pure != extremal {
                worst = worst.max(1.0);
            }
            count += 1;
        }
    }
    results.push(PropertyResult::from_violation(
        "coherence/range_and_purity_iff",
        worst,
        1e-10,
        count,
        "",
    ));

    // l1-coherence bound c_l1 <= sqrt(d(d-1)) C in random bases.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for &d in &[2usize, 3, 4] {
        for case in 0..per_dim.min(50) {
            let rho = random_density(d, d, derive_seed(seed, (d * 400_000 + case) as u64))?;
            let bound = (d as f64 * (d as f64 - 1.0)).sqrt() * coherence_frobenius(&rho);
            worst = worst.max(c_l1(&rho, None)? - bound);
            let basis = random_unitary(d, derive_seed(seed, (d * 410_000 + case) as u64));
            worst = worst.max(c_l1(&rho, Some(&basis))? - bound);
            count += 1;
        }
    }
    results.push(PropertyResult::from_violation(
        "coherence/l1_upper_bound",
        worst,
        1e-10,
        count,
        "",
    ));

    // Trace-distance chain ||rho - I/d||_1 <= sqrt(d) ||rho - I/d||_F
    // and <= sqrt(d-1) C.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for &d in &[2usize, 3, 4] {
        for case in 0..per_dim.min(50) {
            let rho = random_density(d, d, derive_seed(seed, (d * 500_000 + case) as u64))?;
            let trace_dist = trace_distance_to_mixed(&rho)?;
            let c = coherence_frobenius(&rho);
            let frob = ((d as f64 - 1.0) / d as f64).sqrt() * c;
            worst = worst.max(trace_dist - (d as f64).sqrt() * frob);
            worst = worst.max(trace_dist - (d as f64 - 1.0).sqrt() * c);
            if d == 2 {
                worst = worst.max(c_trace_qubit(&rho)? - trace_dist);
            }
            count += 1;
        }
    }
    results.push(PropertyResult::from_violation(
        "coherence/trace_norm_chain",
        worst,
        1e-10,
        count,
        "",
    ));

    // MUB-sum form of the invariant information is MUB-independent and
    // equals Tr rho^2 - 1/d (standard set and a rotated copy).
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for &d in &[2usize, 3] {
        let mubs = MubSet::standard(d)?;
        for case in 0..per_dim.min(50) {
            let rho = random_density(d, d, derive_seed(seed, (d * 600_000 + case) as u64))?;
            let direct = bz_information(&rho);
            worst = worst.max((bz_information_mco(&rho, &mubs)? - direct).abs());
            let u = random_unitary(d, derive_seed(seed, (d * 610_000 + case) as u64));
            let rotated = MubSet::new(
                d,
                mubs.bases().iter().map(|b| &u * b).collect(),
            )?;
            worst = worst.max((bz_information_mco(&rho, &rotated)? - direct).abs());
            count += 1;
        }
    }
    results.push(PropertyResult::from_violation(
        "coherence/mco_independence",
        worst,
        1e-10,
        count,
        "",
    ));

    // Spectral form of C agrees with the Frobenius form.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for d in 2..=8usize {
        for case in 0..50 {
            let rho = random_density(d, 1 + case % d, derive_seed(seed, (d * 700_000 + case) as u64))?;
            worst = worst.max((coherence_eigform(&rho) - coherence_frobenius(&rho)).abs());
            count += 1;
        }
    }
    results.push(PropertyResult::from_violation(
        "coherence/eigenvalue_form_equivalence",
        worst,
        1e-10,
        count,
        "",
    ));

    // D_2(rho || I/d) = (d-1) C^2.
    let mut worst = WorstCase::new();
    let mut count = 0;
    for &d in &[2usize, 3, 4] {
        let star = DensityMatrix::maximally_mixed(d)?;
        for case in 0..per_dim {
            let instance = derive_seed(seed, (d * 800_000 + case) as u64);
            let rho = random_density(d, d, instance)?;
            let lhs = alpha_divergence(&rho, &star, 2.0)?;
            let c = coherence_frobenius(&rho);
            worst.update((lhs - (d as f64 - 1.0) * c * c).abs(), instance);
            count += 1;
        }
    }
    results.push(PropertyResult::from_violation(
        "coherence/d2_divergence_identity",
        worst.value,
        1e-10,
        count,
        &worst.context(),
    ));

    // Purity/information bound I_BZ/2 <= log2 d - S_2(rho).
    let total = cases.unwrap_or(200);
    let mut worst = WorstCase::new();
    for case in 0..total {
        let d = 2 + case % 3;
        let instance = derive_seed(seed, 1_000_000 + case as u64);
        let rho = random_density(d, 1 + case % d, instance)?;
        worst.update(-check_info_bound(&rho).slack, instance);
    }
    results.push(PropertyResult::from_violation(
        "coherence/info_bound",
        worst.value,
        1e-10,
        total,
        &worst.context(),
    ));

    // Maximally coherent states reach the l1 and trace-norm maxima.
    let mut worst = f64::NEG_INFINITY;
    for &d in &[2usize, 3, 4] {
        let rho = maximally_coherent(d);
        worst = worst.max((c_l1(&rho, None)? - (d as f64 - 1.0)).abs());
        worst = worst.max((trace_distance_to_mixed(&rho)? - 2.0 * (1.0 - 1.0 / d as f64)).abs());
        if d == 2 {
            worst = worst.max((c_trace_qubit(&rho)? - 1.0).abs());
        }
    }
    results.push(PropertyResult::from_violation(
        "coherence/maximal_values",
        worst,
        1e-10,
        3,
        "",
    ));

    // Polarization degrees equal the coherence of the normalized matrix.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for case in 0..per_dim.min(50) {
        for &d in &[2usize, 3] {
            let g = random_matrix(d, derive_seed(seed, (d * 990_000 + case) as u64));
            let phi = &g * &g.adjoint();
            let trace = phi.trace().re;
            let rho = DensityMatrix::new(phi.scale_re(1.0 / trace))?;
            let p = if d == 2 {
                degree_polarization_2d(&phi)?
            } else {
                degree_polarization_3d(&phi)?
            };
            worst = worst.max((p - coherence_frobenius(&rho)).abs());
            count += 1;
        }
    }
    results.push(PropertyResult::from_violation(
        "coherence/polarization_equals_coherence",
        worst,
        1e-12,
        count,
        "",
    ));

    // Qubit closed forms: C = |s|, C_l1 = C_tr = sqrt(s1^2+s2^2), and the
    // two routes for the relative entropy of coherence agree.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for case in 0..per_dim {
        let rho = random_density(2, 1 + case % 2, derive_seed(seed, 1_100_000 + case as u64))?;
        let s = bloch_vector(&rho)?;
        worst = worst.max((coherence_frobenius(&rho) - s.norm()).abs());
        let planar = (s.s[0] * s.s[0] + s.s[1] * s.s[1]).sqrt();
        worst = worst.max((c_l1(&rho, None)? - planar).abs());
        worst = worst.max((c_trace_qubit(&rho)? - planar).abs());
        worst = worst
            .max((c_relent_qubit(&rho)? - c_relent_qubit_definitional(&rho)?).abs());
        count += 1;
    }
    results.push(PropertyResult::from_violation(
        "coherence/qubit_closed_forms",
        worst,
        1e-10,
        count,
        "",
    ));

    // Witness: a unitary changes the l1 coherence while C is unchanged.
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let had = ComplexMatrix::from_real(2, &[h, h, h, -h])?;
    let diag = DensityMatrix::new(ComplexMatrix::from_real(2, &[0.9, 0.0, 0.0, 0.1])?)?;
    let rotated = diag.conjugate_by(&had)?;
    let l1_change = (c_l1(&rotated, None)? - c_l1(&diag, None)?).abs();
    let c_change = (coherence_frobenius(&rotated) - coherence_frobenius(&diag)).abs();
    let witness_ok = l1_change > 0.5 && c_change < 1e-12;
    results.push(PropertyResult {
        name: "coherence/basis_dependence_witness".to_string(),
        passed: witness_ok,
        detail: format!("l1_change={l1_change:.6} frobenius_change={c_change:.3e}"),
    });

    Ok(results)
}

// ---------------------------------------------------------------------
// channels
// ---------------------------------------------------------------------

fn channels_suite(seed: u64, cases: Option<usize>) -> Result<Vec<PropertyResult>> {
    let total = cases.unwrap_or(200);
    let mut results = Vec::new();

    // Frobenius-distance and Kraus-commutator routes to the cohering
    // power agree.
    let mut worst = WorstCase::new();
    for case in 0..total {
        let d = 2 + case % 3;
        let k = 1 + case % 4;
        let instance = derive_seed(seed, 2_000_000 + case as u64);
        let ch = random_channel(d, k, instance)?;
        worst.update(
            (cohering_power(&ch) - cohering_power_commutator(&ch)).abs(),
            instance,
        );
    }
    results.push(PropertyResult::from_violation(
        "channels/cohering_power_dual_route",
        worst.value,
        1e-10,
        total,
        &worst.context(),
    ));

    // Cohering power stays in [0,1]; the unit value is reached exactly
    // when the image of I/d is pure (spontaneous emission).
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for case in 0..total.min(100) {
        let d = 2 + case % 3;
        let ch = random_channel(d, 1 + case % 4, derive_seed(seed, 2_100_000 + case as u64))?;
        let c = cohering_power(&ch);
        worst = worst.max(c - 1.0).max(-c);
        let image_pure = (mixed_image_purity(&ch) - 1.0).abs() < 1e-8;
        let saturated = (c - 1.0).abs() < 1e-10;
        if image_pure != saturated {
            worst = worst.max(1.0);
        }
        count += 1;
    }
    let emission = standard_channel(StandardChannel::AmplitudeDamping { gamma: 1.0 }, 2)?;
    worst = worst.max((cohering_power(&emission) - 1.0).abs());
    results.push(PropertyResult::from_violation(
        "channels/cohering_power_normalization",
        worst,
        1e-10,
        count + 1,
        "",
    ));

    // Kraus-representation invariance: mixing the Kraus list by a
    // unitary leaves both routes unchanged.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for case in 0..total.min(50) {
        let d = 2 + case % 2;
        let k = 2 + case % 3;
        let ch = random_channel(d, k, derive_seed(seed, 2_200_000 + case as u64))?;
        let w = random_unitary(k, derive_seed(seed, 2_210_000 + case as u64));
        let mixed: Vec<ComplexMatrix> = (0..k)
            .map(|nu| {
                let mut acc = ComplexMatrix::zeros(d);
                for (mu, op) in ch.kraus().iter().enumerate() {
                    acc = &acc + &op.scale(w[(nu, mu)]);
                }
                acc
            })
            .collect();
        let remixed = KrausChannel::new(d, mixed)?;
        worst = worst.max((cohering_power(&remixed) - cohering_power(&ch)).abs());
        worst = worst
            .max((cohering_power_commutator(&remixed) - cohering_power_commutator(&ch)).abs());
        count += 1;
    }
    results.push(PropertyResult::from_violation(
        "channels/kraus_mixing_invariance",
        worst,
        1e-10,
        count,
        "",
    ));

    // Zero cohering power exactly characterizes unitality, and
    // purity(E(I/d)) - 1/d equals the squared unitality residual.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for case in 0..total.min(100) {
        let d = 2 + case % 3;
        let unital = case % 2 == 0;
        let ch = if unital {
            random_unital_channel(d, 2 + case % 3, derive_seed(seed, 2_300_000 + case as u64))?
        } else {
            random_channel(d, 2 + case % 3, derive_seed(seed, 2_300_000 + case as u64))?
        };
        let report = is_unital(&ch, None);
        let c = cohering_power(&ch);
        let scale = (d as f64 / (d as f64 - 1.0)).sqrt();
        worst = worst.max((c - scale * report.residual).abs());
        let purity_gap = mixed_image_purity(&ch) - 1.0 / d as f64;
        worst = worst.max((purity_gap - report.residual * report.residual).abs());
        if unital {
            worst = worst.max(report.residual - 1e-10);
        }
        count += 1;
    }
    results.push(PropertyResult::from_violation(
        "channels/unitality_iff_zero_cohering",
        worst,
        1e-10,
        count,
        "",
    ));

    // Amplitude damping has cohering power exactly gamma.
    let mut worst = f64::NEG_INFINITY;
    for step in 0..=10 {
        let gamma = step as f64 / 10.0;
        let ch = standard_channel(StandardChannel::AmplitudeDamping { gamma }, 2)?;
        worst = worst.max((cohering_power(&ch) - gamma).abs());
    }
    results.push(PropertyResult::from_violation(
        "channels/amplitude_damping_cohering_power",
        worst,
        1e-12,
        11,
        "",
    ));

    // The unital zoo: depolarizing, phase damping, mixtures of unitaries.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for &d in &[2usize, 3] {
        for step in 0..=4 {
            let p = step as f64 / 4.0;
            let dep = standard_channel(StandardChannel::Depolarizing { p }, d)?;
            worst = worst.max(is_unital(&dep, None).residual);
            let pd = standard_channel(StandardChannel::PhaseDamping { lambda: p }, d)?;
            worst = worst.max(is_unital(&pd, None).residual);
            count += 2;
        }
    }
    for case in 0..10u64 {
        let ch = random_unital_channel(2 + (case % 3) as usize, 3, derive_seed(seed, 2_400_000 + case))?;
        worst = worst.max(is_unital(&ch, None).residual);
        count += 1;
    }
    results.push(PropertyResult::from_violation(
        "channels/unital_zoo",
        worst,
        1e-10,
        count,
        "",
    ));

    // CPTP closure: random channels map random states to valid states.
    let mut count = 0;
    let mut failures = 0;
    for case in 0..total.min(50) {
        let d = 2 + case % 3;
        let ch = random_channel(d, 1 + case % 4, derive_seed(seed, 2_500_000 + case as u64))?;
        let rho = random_density(d, 1 + case % d, derive_seed(seed, 2_510_000 + case as u64))?;
        if apply(&ch, &rho).is_err() {
            failures += 1;
        }
        count += 1;
    }
    results.push(PropertyResult {
        name: "channels/cptp_closure".to_string(),
        passed: failures == 0,
        detail: format!("cases={count} invalid_outputs={failures}"),
    });

    // Open search: nonunital channels that nevertheless never increase
    // purity. No assertion beyond bookkeeping; the sweep reports how many
    // purity-increasing witnesses were found.
    let mut nonunital = 0;
    let mut witnesses = 0;
    for case in 0..total.min(100) {
        let d = 2 + case % 2;
        let ch = random_channel(d, 2, derive_seed(seed, 2_600_000 + case as u64))?;
        if is_unital(&ch, None).unital {
            continue;
        }
        nonunital += 1;
        for inner in 0..10u64 {
            let rho = random_density(
                d,
                1 + (inner as usize) % d,
                derive_seed(seed, 2_610_000 + case as u64 * 100 + inner),
            )?;
            let out = apply(&ch, &rho)?;
            if out.purity() > rho.purity() + 1e-12 {
                witnesses += 1;
                break;
            }
        }
    }
    results.push(PropertyResult::pass(
        "channels/nonunital_purity_increase_search",
        format!("nonunital={nonunital} purity_increasing_witnesses={witnesses} (informational)"),
    ));

    Ok(results)
}

// ---------------------------------------------------------------------
// theorem1 (entropy production and entropy bounds)
// ---------------------------------------------------------------------

fn theorem1_suite(seed: u64, cases: Option<usize>) -> Result<Vec<PropertyResult>> {
    let total = cases.unwrap_or(200);
    let mut results = Vec::new();

    // Random projective-measurement channels: entropy production at
    // least (gamma/2) ||rho - I/d||_F^2 with gamma from the overlap matrix.
    let mut worst = WorstCase::new();
    for case in 0..total {
        let d = 2 + case % 2;
        let instance = derive_seed(seed, 3_000_000 + case as u64);
        let rho = random_density(d, d, instance)?;
        let basis = random_unitary(d, derive_seed(seed, 3_010_000 + case as u64));
        let ch = standard_channel(
            StandardChannel::ProjectiveMeasurement {
                basis: basis.clone(),
            },
            d,
        )?;
        let eigenbasis = hermitian_eig(rho.matrix())?.eigenvectors;
        let gap = spectral_gap_projection(&overlap_matrix(&eigenbasis, &basis)?);
        let report = entropy_production_check(&ch, &rho, gap.gamma)?;
        worst.update(-report.slack, instance);
    }
    results.push(PropertyResult::from_violation(
        "theorem1/measurement_entropy_production",
        worst.value,
        1e-10,
        total,
        &worst.context(),
    ));

    // Boundary case: measuring in the state's own eigenbasis gives
    // gamma = 0 and zero entropy production.
    let rho = random_density(3, 3, derive_seed(seed, 3_100_000))?;
    let eigenbasis = hermitian_eig(rho.matrix())?.eigenvectors;
    let gap = spectral_gap_projection(&overlap_matrix(&eigenbasis, &eigenbasis)?);
    let ch = standard_channel(
        StandardChannel::ProjectiveMeasurement {
            basis: eigenbasis.clone(),
        },
        3,
    )?;
    let report = entropy_production_check(&ch, &rho, gap.gamma)?;
    let worst = gap
        .gamma
        .abs()
        .max(report.lhs.abs())
        .max(report.rhs.abs());
    results.push(PropertyResult::from_violation(
        "theorem1/boundary_same_basis",
        worst,
        1e-10,
        1,
        &format!("gamma={:.3e}", gap.gamma),
    ));

    // Boundary case: a mutually unbiased measurement has gamma = 1 and
    // reproduces the hand-computed slack for diag(0.9, 0.1).
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let had = ComplexMatrix::from_real(2, &[h, h, h, -h])?;
    let rho = DensityMatrix::new(ComplexMatrix::from_real(2, &[0.9, 0.0, 0.0, 0.1])?)?;
    let gap = spectral_gap_projection(&overlap_matrix(&ComplexMatrix::identity(2), &had)?);
    let ch = standard_channel(StandardChannel::ProjectiveMeasurement { basis: had }, 2)?;
    let report = entropy_production_check(&ch, &rho, gap.gamma)?;
    let expect_lhs = 2f64.ln() + 0.9f64 * 0.9f64.ln() + 0.1 * 0.1f64.ln();
    let worst = (gap.gamma - 1.0)
        .abs()
        .max((report.lhs - expect_lhs).abs())
        .max((report.rhs - 0.16).abs());
    results.push(PropertyResult::from_violation(
        "theorem1/boundary_mub",
        worst,
        1e-12,
        1,
        &format!("slack={:.12}", report.slack),
    ));

    // Pinsker chain on random full-rank pairs.
    let mut worst = WorstCase::new();
    for case in 0..total {
        let d = 2 + case % 3;
        let instance = derive_seed(seed, 3_200_000 + case as u64);
        let rho = random_density(d, d, instance)?;
        let sigma = random_density(d, d, derive_seed(seed, 3_210_000 + case as u64))?;
        let report = pinsker_check(&rho, &sigma)?;
        worst.update(-report.slack_entropy_vs_trace, instance);
        worst.update(-report.slack_trace_vs_frobenius, instance);
    }
    results.push(PropertyResult::from_violation(
        "theorem1/pinsker_chain",
        worst.value,
        1e-10,
        total,
        &worst.context(),
    ));

    Ok(results)
}

// ---------------------------------------------------------------------
// theorem2 (coherence monotonicity under unital channels)
// ---------------------------------------------------------------------

fn theorem2_suite(seed: u64, cases: Option<usize>) -> Result<Vec<PropertyResult>> {
    let total = cases.unwrap_or(500);
    let mut worst = f64::NEG_INFINITY;
    let mut failures = 0usize;
    let mut first_failure = None;
    for case in 0..total {
        let d = 2 + case % 3;
        let instance = derive_seed(seed, 4_000_000 + case as u64);
        let ch = random_unital_channel(d, 2 + case % 4, instance)?;
        let rho = random_density(d, 1 + case % d, derive_seed(seed, 4_100_000 + case as u64))?;
        let gain = crate::channels::coherence_gain(&ch, &rho)?;
        worst = worst.max(gain);
        if gain > 1e-10 {
            failures += 1;
            first_failure.get_or_insert(instance);
        }
    }
    let context = match first_failure {
        Some(s) => format!("failures={failures} first_failing_seed={s}"),
        None => format!("failures={failures}"),
    };
    Ok(vec![PropertyResult::from_violation(
        "theorem2/unital_monotonicity",
        worst,
        1e-10,
        total,
        &context,
    )])
}

// ---------------------------------------------------------------------
// asymmetry
// ---------------------------------------------------------------------

fn asymmetry_suite(seed: u64, cases: Option<usize>) -> Result<Vec<PropertyResult>> {
    let mc_samples = 200_000;
    let quad = IntegrationMethod::quadrature16();
    let mut results = Vec::new();

    // Qubit closed form against exact quadrature.
    let n_qubits_cases = cases.unwrap_or(20);
    let mut worst = WorstCase::new();
    for case in 0..n_qubits_cases {
        let instance = derive_seed(seed, 5_000_000 + case as u64);
        let rho = random_density(2, 1 + case % 2, instance)?;
        let closed = asymmetry_analytic_qubit(&rho)?;
        let est = asymmetry(&rho, GroupSpec::SingleSu2, quad)?;
        worst.update((est.value - closed).abs(), instance);
    }
    results.push(PropertyResult::from_violation(
        "asymmetry/qubit_closed_vs_quadrature",
        worst.value,
        1e-10,
        n_qubits_cases,
        &worst.context(),
    ));

    // Qubit closed form against Monte Carlo with its standard error.
    let mut worst_sigma = f64::NEG_INFINITY;
    let mut worst_stderr = f64::NEG_INFINITY;
    for case in 0..5u64 {
        let rho = random_density(2, 2, derive_seed(seed, 5_100_000 + case))?;
        let closed = asymmetry_analytic_qubit(&rho)?;
        let est = asymmetry(
            &rho,
            GroupSpec::SingleSu2,
            IntegrationMethod::monte_carlo(mc_samples, derive_seed(seed, 5_110_000 + case)),
        )?;
        let stderr = est.std_error.unwrap_or(f64::INFINITY);
        worst_sigma = worst_sigma.max((est.value - closed).abs() / stderr.max(1e-30) - 5.0);
        worst_stderr = worst_stderr.max(stderr - 2e-3);
    }
    results.push(PropertyResult::from_violation(
        "asymmetry/qubit_closed_vs_monte_carlo",
        worst_sigma.max(worst_stderr),
        0.0,
        5,
        "bound_in_sigmas=5 stderr_cap=2e-3",
    ));

    // Independent-product closed form for N = 2, 3 against Monte Carlo.
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for &n in &[2usize, 3] {
        let d = 1 << n;
        for case in 0..10u64 {
            let rho = random_density(d, 1 + (case as usize) % d, derive_seed(seed, 5_200_000 + n as u64 * 1000 + case))?;
            let closed = asymmetry_independent_closed(&rho)?;
            let est = asymmetry(
                &rho,
                GroupSpec::IndependentProduct(n),
                IntegrationMethod::monte_carlo(mc_samples, derive_seed(seed, 5_210_000 + n as u64 * 1000 + case)),
            )?;
            let stderr = est.std_error.unwrap_or(f64::INFINITY);
            worst = worst.max((est.value - closed).abs() / stderr.max(1e-30) - 5.0);
            count += 1;
        }
    }
    results.push(PropertyResult::from_violation(
        "asymmetry/independent_closed_vs_monte_carlo",
        worst,
        0.0,
        count,
        "bound_in_sigmas=5",
    ));

    // Collective two-qubit closed form: singlet, |00>, random states.
    let re = |x: f64| Complex64::new(x, 0.0);
    let inv = 0.5f64.sqrt();
    let singlet = DensityMatrix::from_ket(&[re(0.0), re(inv), re(-inv), re(0.0)])?;
    let ket00 = DensityMatrix::basis_state(4, 0)?;
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for (idx, rho) in [singlet.clone(), ket00.clone()].iter().enumerate() {
        let closed = asymmetry_collective_2q_closed(rho)?;
        let est = asymmetry(
            rho,
            GroupSpec::Collective(2),
            IntegrationMethod::monte_carlo(mc_samples, derive_seed(seed, 5_300_000 + idx as u64)),
        )?;
        let stderr = est.std_error.unwrap_or(f64::INFINITY).max(1e-12);
        worst = worst.max((est.value - closed).abs() / stderr - 5.0);
        count += 1;
    }
    assert!((asymmetry_collective_2q_closed(&singlet)?).abs() < 1e-12);
    assert!((asymmetry_collective_2q_closed(&ket00)? - 1.0 / 3.0).abs() < 1e-12);
    for case in 0..10u64 {
        let rho = random_density(4, 1 + (case as usize) % 4, derive_seed(seed, 5_310_000 + case))?;
        let closed = asymmetry_collective_2q_closed(&rho)?;
        let est = asymmetry(
            &rho,
            GroupSpec::Collective(2),
            IntegrationMethod::monte_carlo(mc_samples, derive_seed(seed, 5_320_000 + case)),
        )?;
        let stderr = est.std_error.unwrap_or(f64::INFINITY).max(1e-12);
        worst = worst.max((est.value - closed).abs() / stderr - 5.0);
        count += 1;
    }
    results.push(PropertyResult::from_violation(
        "asymmetry/collective_closed_vs_monte_carlo",
        worst,
        0.0,
        count,
        "bound_in_sigmas=5",
    ));

    // Collective closed form against exact quadrature.
    let mut worst = f64::NEG_INFINITY;
    for case in 0..5u64 {
        let rho = random_density(4, 2, derive_seed(seed, 5_400_000 + case))?;
        let closed = asymmetry_collective_2q_closed(&rho)?;
        let est = asymmetry(&rho, GroupSpec::Collective(2), quad)?;
        worst = worst.max((est.value - closed).abs());
    }
    results.push(PropertyResult::from_violation(
        "asymmetry/collective_closed_vs_quadrature",
        worst,
        1e-10,
        5,
        "",
    ));

    // A + S = 1 through the commutator and anticommutator integrals.
    let mut worst = f64::NEG_INFINITY;
    for case in 0..5u64 {
        let rho = random_density(2, 2, derive_seed(seed, 5_500_000 + case))?;
        let a = asymmetry(&rho, GroupSpec::SingleSu2, quad)?.value;
        let s = symmetry(&rho, GroupSpec::SingleSu2, quad)?.value;
        worst = worst.max((a + s - 1.0).abs());
        let rho4 = random_density(4, 2, derive_seed(seed, 5_510_000 + case))?;
        let a = asymmetry(&rho4, GroupSpec::Collective(2), quad)?.value;
        let s = symmetry(&rho4, GroupSpec::Collective(2), quad)?.value;
        worst = worst.max((a + s - 1.0).abs());
    }
    results.push(PropertyResult::from_violation(
        "asymmetry/a_plus_s_is_one",
        worst,
        1e-10,
        10,
        "",
    ));

    // Unitary invariance: closed forms depend only on the purity, and
    // the quadrature route agrees after conjugation.
    let mut worst = f64::NEG_INFINITY;
    for case in 0..10u64 {
        let rho = random_density(2, 2, derive_seed(seed, 5_600_000 + case))?;
        let u = random_unitary(2, derive_seed(seed, 5_610_000 + case));
        let rotated = rho.conjugate_by(&u)?;
        worst = worst.max(
            (asymmetry_analytic_qubit(&rotated)? - asymmetry_analytic_qubit(&rho)?).abs(),
        );
        let a = asymmetry(&rho, GroupSpec::SingleSu2, quad)?.value;
        let b = asymmetry(&rotated, GroupSpec::SingleSu2, quad)?.value;
        worst = worst.max((a - b).abs());

        let rho4 = random_density(4, 3, derive_seed(seed, 5_620_000 + case))?;
        let u4 = random_unitary(4, derive_seed(seed, 5_630_000 + case));
        let rotated4 = rho4.conjugate_by(&u4)?;
        worst = worst.max(
            (asymmetry_independent_closed(&rotated4)? - asymmetry_independent_closed(&rho4)?)
                .abs(),
        );
    }
    results.push(PropertyResult::from_violation(
        "asymmetry/unitary_invariance",
        worst,
        1e-10,
        10,
        "",
    ));

    // Collective invariance witness: sum_i T_ii is invariant under R x R
    // but changes under a generic one-sided rotation.
    let mut worst = f64::NEG_INFINITY;
    let mut rng = stream(derive_seed(seed, 5_700_000), "verify-collective");
    for case in 0..10u64 {
        let rho = random_density(4, 2, derive_seed(seed, 5_710_000 + case))?;
        let g = haar_sample(&mut rng);
        let r = g.matrix();
        let u = r.kron(&r);
        let rotated = rho.conjugate_by(&u)?;
        let before = correlation_tensor(&rho)?.diagonal_sum();
        let after = correlation_tensor(&rotated)?.diagonal_sum();
        worst = worst.max((before - after).abs());
        worst = worst.max(
            (asymmetry_collective_2q_closed(&rotated)? - asymmetry_collective_2q_closed(&rho)?)
                .abs(),
        );
    }
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let had = ComplexMatrix::from_real(2, &[h, h, h, -h])?;
    let local = had.kron(&ComplexMatrix::identity(2));
    let ket00 = DensityMatrix::basis_state(4, 0)?;
    let rotated = ket00.conjugate_by(&local)?;
    let trace_change = (correlation_tensor(&rotated)?.diagonal_sum()
        - correlation_tensor(&ket00)?.diagonal_sum())
    .abs();
    let witness_ok = worst <= 1e-10 && trace_change > 0.5;
    results.push(PropertyResult {
        name: "asymmetry/collective_invariance_witness".to_string(),
        passed: witness_ok,
        detail: format!(
            "collective_worst={worst:.3e} local_trace_change={trace_change:.6}"
        ),
    });

    // Twirl targets and idempotence (exact quadrature).
    let mut worst = f64::NEG_INFINITY;
    let star2 = DensityMatrix::maximally_mixed(2)?;
    let rho = random_density(2, 1, derive_seed(seed, 5_800_000))?;
    let averaged = twirl(&rho, GroupSpec::SingleSu2, quad)?;
    worst = worst.max((averaged.matrix() - star2.matrix()).frobenius_norm());
    let averaged = twirl(&singlet, GroupSpec::Collective(2), quad)?;
    worst = worst.max((averaged.matrix() - singlet.matrix()).frobenius_norm());
    let small = IntegrationMethod::Quadrature {
        n_omega: 8,
        n_theta: 8,
        n_phi: 8,
    };
    let rho4 = random_density(4, 3, derive_seed(seed, 5_810_000))?;
    let star4 = DensityMatrix::maximally_mixed(4)?;
    let averaged = twirl(&rho4, GroupSpec::IndependentProduct(2), small)?;
    worst = worst.max((averaged.matrix() - star4.matrix()).frobenius_norm());
    let once = twirl(&rho4, GroupSpec::Collective(2), quad)?;
    let twice = twirl(&once, GroupSpec::Collective(2), quad)?;
    worst = worst.max((once.matrix() - twice.matrix()).frobenius_norm());
    results.push(PropertyResult::from_violation(
        "asymmetry/twirl_targets_and_idempotence",
        worst,
        2e-11,
        4,
        "",
    ));

    // Euler five-factor identity for the group element.
    let mut worst = f64::NEG_INFINITY;
    let mut rng = stream(derive_seed(seed, 5_900_000), "verify-euler");
    for _ in 0..100 {
        let g = haar_sample(&mut rng);
        worst = worst.max((&g.matrix() - &g.euler_matrix()).frobenius_norm());
    }
    results.push(PropertyResult::from_violation(
        "asymmetry/euler_decomposition_identity",
        worst,
        1e-12,
        100,
        "",
    ));

    // Closed trigonometric fidelity functional against the direct trace.
    let mut worst = f64::NEG_INFINITY;
    let mut rng = stream(derive_seed(seed, 5_950_000), "verify-ffunc");
    for case in 0..100u64 {
        let rho = random_density(2, 1 + (case as usize) % 2, derive_seed(seed, 5_960_000 + case))?;
        let g = haar_sample(&mut rng);
        worst = worst.max((f_functional(&rho, &g)? - f_functional_direct(&rho, &g)?).abs());
    }
    results.push(PropertyResult::from_violation(
        "asymmetry/fidelity_functional_oracle",
        worst,
        1e-12,
        100,
        "",
    ));

    // Haar sampler moments: <cos omega> = -1/2, <cos theta> = 0.
    let n = 1_000_000usize;
    let mut rng = stream(derive_seed(seed, 5_990_000), "verify-haar");
    let mut sum_cos_omega = 0.0;
    let mut sum_cos_theta = 0.0;
    for _ in 0..n {
        let g = haar_sample(&mut rng);
        sum_cos_omega += g.omega.cos();
        sum_cos_theta += g.theta.cos();
    }
    let worst = (sum_cos_omega / n as f64 + 0.5)
        .abs()
        .max((sum_cos_theta / n as f64).abs());
    results.push(PropertyResult::from_violation(
        "asymmetry/haar_sampler_moments",
        worst,
        5e-3,
        n,
        "",
    ));

    Ok(results)
}

// ---------------------------------------------------------------------
// integr-tables
// ---------------------------------------------------------------------

fn integr_tables_suite(seed: u64, _cases: Option<usize>) -> Result<Vec<PropertyResult>> {
    let quad = IntegrationMethod::quadrature16();
    let mut results = Vec::new();

    // Single: Haar average of P_{i,j} is 2 at (0,0) and 0 elsewhere.
    let mut worst = f64::NEG_INFINITY;
    for i in 0..4 {
        for j in 0..4 {
            let table = single_integral(i, j)?;
            let est = integrate(|g| pauli_transfer(i, j, &g[0]).unwrap(), 1, quad)?;
            worst = worst.max((table - est.value).abs());
        }
    }
    results.push(PropertyResult::from_violation(
        "integr-tables/single",
        worst,
        1e-12,
        16,
        "",
    ));

    // Pair: all 256 index combinations, quadrature evaluated on a shared
    // node table for speed.
    let transfer_table = transfer_node_table(16, 16, 16);
    let mut worst = f64::NEG_INFINITY;
    for x1 in 0..4usize {
        for y1 in 0..4usize {
            for x2 in 0..4usize {
                for y2 in 0..4usize {
                    let table = pair_integral(x1, y1, x2, y2)?;
                    let mut quadr = 0.0;
                    for (values, w) in &transfer_table {
                        quadr += w * values[x1 * 4 + y1] * values[x2 * 4 + y2];
                    }
                    worst = worst.max((table - quadr).abs());
                }
            }
        }
    }
    results.push(PropertyResult::from_violation(
        "integr-tables/pair",
        worst,
        1e-12,
        256,
        "",
    ));

    // Triple: all 4096 index combinations against the same node table.
    let mut worst = f64::NEG_INFINITY;
    for x1 in 0..4usize {
        for y1 in 0..4usize {
            for x2 in 0..4usize {
                for y2 in 0..4usize {
                    for x3 in 0..4usize {
                        for y3 in 0..4usize {
                            let table = triple_integral(x1, y1, x2, y2, x3, y3)?;
                            let mut quadr = 0.0;
                            for (values, w) in &transfer_table {
                                quadr += w
                                    * values[x1 * 4 + y1]
                                    * values[x2 * 4 + y2]
                                    * values[x3 * 4 + y3];
                            }
                            worst = worst.max((table - quadr).abs());
                        }
                    }
                }
            }
        }
    }
    results.push(PropertyResult::from_violation(
        "integr-tables/triple",
        worst,
        1e-12,
        4096,
        "",
    ));

    // Monte Carlo spot checks of representative table entries.
    let samples = 1_000_000usize;
    let mc_cases: [(usize, usize, usize, usize, usize, usize); 4] = [
        (3, 3, 0, 0, 0, 0), // reduces to the single integral of P_{3,3}
        (1, 1, 2, 2, 3, 3), // Levi-Civita term, +4/3
        (0, 0, 1, 2, 1, 2), // one-zero-pair term, 8/3
        (1, 2, 2, 1, 3, 3), // Levi-Civita term with a sign, -4/3
    ];
    let mut worst = f64::NEG_INFINITY;
    for (idx, &(x1, y1, x2, y2, x3, y3)) in mc_cases.iter().enumerate() {
        // The first case uses P_{0,0} = 2 factors, making it the plain
        // single-integral check requested for the sampler.
        let expect = triple_integral(x1, y1, x2, y2, x3, y3)?;
        let est = integrate(
            |g| {
                pauli_transfer(x1, y1, &g[0]).unwrap()
                    * pauli_transfer(x2, y2, &g[0]).unwrap()
                    * pauli_transfer(x3, y3, &g[0]).unwrap()
                    / 4.0
            },
            1,
            IntegrationMethod::monte_carlo(samples, derive_seed(seed, 6_000_000 + idx as u64)),
        )?;
        worst = worst.max((est.value * 4.0 - expect).abs());
    }
    results.push(PropertyResult::from_violation(
        "integr-tables/monte_carlo_spot_checks",
        worst,
        5e-3,
        mc_cases.len(),
        &format!("samples={samples}"),
    ));

    Ok(results)
}

/// Evaluate all sixteen Pauli transfer values on a shared quadrature
/// grid: returns ([P_{i,j}] flattened, weight) per node.
fn transfer_node_table(
    n_omega: usize,
    n_theta: usize,
    n_phi: usize,
) -> Vec<([f64; 16], f64)> {
    use std::f64::consts::PI;
    let (gl_nodes, gl_weights) = crate::asymmetry::gauss_legendre(n_theta);
    let mut table = Vec::with_capacity(n_omega * n_theta * n_phi);
    for a in 0..n_phi {
        let phi = -PI + 2.0 * PI * (a as f64 + 0.5) / n_phi as f64;
        for (u, wu) in gl_nodes.iter().zip(gl_weights.iter()) {
            let theta = u.clamp(-1.0, 1.0).acos();
            for c in 0..n_omega {
                let omega = 2.0 * PI * c as f64 / n_omega as f64;
                let half = (omega / 2.0).sin();
                let w = wu * half * half / (n_omega as f64 * n_phi as f64);
                let g = Su2Element { omega, theta, phi };
                let mut values = [0.0; 16];
                for i in 0..4 {
                    for j in 0..4 {
                        values[i * 4 + j] = pauli_transfer(i, j, &g).unwrap();
                    }
                }
                table.push((values, w));
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::parse(suite.name()), Some(vec![suite]));
        }
        assert_eq!(Suite::parse("all").map(|v| v.len()), Some(7));
        assert_eq!(Suite::parse("bogus"), None);
    }

    #[test]
    fn small_runs_pass_and_are_deterministic() {
        for suite in [Suite::Norms, Suite::Theorem2] {
            let a = run_suite(suite, 7, Some(10)).unwrap();
            let b = run_suite(suite, 7, Some(10)).unwrap();
            assert!(a.passed(), "{:?}", a.results);
            let render = |r: &SuiteReport| {
                r.results
                    .iter()
                    .map(|p| format!("{}|{}|{}", p.name, p.passed, p.detail))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            assert_eq!(render(&a), render(&b));
        }
    }
}
