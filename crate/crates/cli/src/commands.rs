use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context, Result};
use serde_json::{json, Value};

use qcas_core::asymmetry::{
    asymmetry, asymmetry_analytic_qubit, asymmetry_collective_2q_closed,
    asymmetry_independent_closed, GroupSpec, IntegrationMethod,
};
use qcas_core::channels::{
    cohering_power, cohering_power_commutator, entropy_production_check, is_unital,
    overlap_matrix, spectral_gap_projection, standard_channel, superoperator_spectral_gap,
    KrausChannel, StandardChannel,
};
use qcas_core::linalg::hermitian_eig;
use qcas_core::measures::{
    bz_information, c_l1, c_relent_qubit, c_trace_qubit, check_info_bound, coherence_frobenius,
    degree_polarization_2d, degree_polarization_3d, trace_distance_to_mixed,
};
use qcas_core::states::{from_bloch, random_pure, BlochVector};
use qcas_core::verify::{run_suite, Suite};
use qcas_core::{ComplexMatrix, DensityMatrix, Tolerances};

use crate::io;
use crate::report::{fmt_csv, fmt_sig};
use crate::{GroupKind, MeasureKind, MethodKind, SweepKind};

/// Failure carrying an explicit process exit code, for conditions the
/// core error type does not classify (e.g. a missing closed form).
#[derive(Debug)]
pub struct CodedFailure {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for CodedFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for CodedFailure {}

fn inapplicable(message: impl Into<String>) -> anyhow::Error {
    anyhow!(CodedFailure {
        code: 3,
        message: message.into(),
    })
}

pub struct Output {
    pub text: String,
    pub json: Value,
    pub exit: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            exit: 0,
        }
    }
}

// ---------------------------------------------------------------------
// coherence
// ---------------------------------------------------------------------

pub fn cmd_coherence(
    state_path: &Path,
    measure: Option<MeasureKind>,
    all: bool,
    basis_path: Option<&Path>,
    tol: &Tolerances,
) -> Result<Output> {
    let basis = basis_path.map(io::read_matrix).transpose()?;
    let mut lines = Vec::new();
    let mut values = serde_json::Map::new();

    let raw = io::read_matrix(state_path)?;
    let dim = raw.dim();

    let push = |lines: &mut Vec<String>, values: &mut serde_json::Map<String, Value>,
                    key: &str,
                    v: f64| {
        lines.push(format!("{key}: {}", fmt_sig(v)));
        values.insert(key.to_string(), json!(v));
    };

    let compute = |kind: MeasureKind,
                   lines: &mut Vec<String>,
                   values: &mut serde_json::Map<String, Value>|
     -> Result<()> {
        match kind {
            MeasureKind::P2 => {
                let p = degree_polarization_2d(&raw)?;
                push(lines, values, "p2", p);
            }
            MeasureKind::P3 => {
                let p = degree_polarization_3d(&raw)?;
                push(lines, values, "p3", p);
            }
            other => {
                let rho = DensityMatrix::new_with(raw.clone(), tol)
                    .with_context(|| state_path.display().to_string())?;
                match other {
                    MeasureKind::Frobenius => {
                        push(lines, values, "frobenius", coherence_frobenius(&rho))
                    }
                    MeasureKind::Bz => push(lines, values, "bz", bz_information(&rho)),
                    MeasureKind::L1 => {
                        push(lines, values, "l1", c_l1(&rho, basis.as_ref())?)
                    }
                    MeasureKind::Trace => {
                        if rho.dim() == 2 {
                            push(lines, values, "trace", c_trace_qubit(&rho)?);
                        } else {
                            let dist = trace_distance_to_mixed(&rho)?;
                            let bound = ((rho.dim() - 1) as f64).sqrt()
                                * coherence_frobenius(&rho);
                            push(lines, values, "trace_distance_to_mixed", dist);
                            push(lines, values, "trace_upper_bound", bound);
                        }
                    }
                    MeasureKind::Relent => {
                        push(lines, values, "relent", c_relent_qubit(&rho)?)
                    }
                    MeasureKind::P2 | MeasureKind::P3 => unreachable!(),
                }
            }
        }
        Ok(())
    };

    lines.push(format!("state: {} (dim {dim})", state_path.display()));
    if all {
        let rho = DensityMatrix::new_with(raw.clone(), tol)
            .with_context(|| state_path.display().to_string())?;
        compute(MeasureKind::Frobenius, &mut lines, &mut values)?;
        compute(MeasureKind::Bz, &mut lines, &mut values)?;
        compute(MeasureKind::L1, &mut lines, &mut values)?;
        compute(MeasureKind::Trace, &mut lines, &mut values)?;
        if dim == 2 {
            compute(MeasureKind::Relent, &mut lines, &mut values)?;
            compute(MeasureKind::P2, &mut lines, &mut values)?;
        }
        if dim == 3 {
            compute(MeasureKind::P3, &mut lines, &mut values)?;
        }
        // Bound chain relating the basis-dependent quantifiers to the
        // basis-independent measure.
        let c = coherence_frobenius(&rho);
        let l1 = c_l1(&rho, basis.as_ref())?;
        let l1_bound = (dim as f64 * (dim as f64 - 1.0)).sqrt() * c;
        let dist = trace_distance_to_mixed(&rho)?;
        let dist_bound = ((dim - 1) as f64).sqrt() * c;
        let info = check_info_bound(&rho);
        lines.push("bound chain:".to_string());
        lines.push(format!(
            "  l1 <= sqrt(d(d-1))*C: {} <= {} (slack {})",
            fmt_sig(l1),
            fmt_sig(l1_bound),
            fmt_sig(l1_bound - l1)
        ));
        lines.push(format!(
            "  ||rho - I/d||_1 <= sqrt(d-1)*C: {} <= {} (slack {})",
            fmt_sig(dist),
            fmt_sig(dist_bound),
            fmt_sig(dist_bound - dist)
        ));
        lines.push(format!(
            "  I_BZ/2 <= log2(d) - S_2(rho): {} <= {} (slack {})",
            fmt_sig(info.lhs),
            fmt_sig(info.rhs),
            fmt_sig(info.slack)
        ));
        values.insert(
            "bound_chain".to_string(),
            json!({
                "l1": l1,
                "l1_bound": l1_bound,
                "trace_distance": dist,
                "trace_distance_bound": dist_bound,
                "info_lhs": info.lhs,
                "info_rhs": info.rhs,
                "info_slack": info.slack,
            }),
        );
    } else {
        let kind = measure.unwrap_or(MeasureKind::Frobenius);
        compute(kind, &mut lines, &mut values)?;
    }

    let json = json!({
        "file": state_path.display().to_string(),
        "dim": dim,
        "measures": Value::Object(values),
    });
    Ok(Output::ok(lines.join("\n"), json))
}

// ---------------------------------------------------------------------
// channel
// ---------------------------------------------------------------------

pub fn cmd_channel(
    channel_path: &Path,
    want_cohering: bool,
    want_unital: bool,
    want_gap: bool,
    entropy_state: Option<&Path>,
    tol: &Tolerances,
) -> Result<Output> {
    let channel = io::read_channel(channel_path, tol)?;
    let mut lines = vec![format!(
        "channel: {} (dim {}, {} Kraus operators, trace-preservation residual {:.3e})",
        channel_path.display(),
        channel.dim(),
        channel.kraus().len(),
        channel.trace_preservation_residual()
    )];
    let mut values = serde_json::Map::new();
    let default_all = !want_cohering && !want_unital && !want_gap && entropy_state.is_none();

    if want_cohering || default_all {
        let c = cohering_power(&channel);
        let c_comm = cohering_power_commutator(&channel);
        lines.push(format!("cohering_power: {}", fmt_sig(c)));
        lines.push(format!("cohering_power_commutator_route: {}", fmt_sig(c_comm)));
        values.insert("cohering_power".into(), json!(c));
        values.insert("cohering_power_commutator_route".into(), json!(c_comm));
    }
    if want_unital || default_all {
        let report = is_unital(&channel, None);
        lines.push(format!(
            "unital: {} (residual {:.3e})",
            report.unital, report.residual
        ));
        values.insert("unital".into(), json!(report.unital));
        values.insert("unitality_residual".into(), json!(report.residual));
    }
    if want_gap {
        let gap = superoperator_spectral_gap(&channel)?;
        lines.push(format!(
            "spectral_gap: {} (superoperator route, ergodic: {})",
            fmt_sig(gap.gamma),
            gap.ergodic
        ));
        values.insert("spectral_gap".into(), json!(gap.gamma));
        values.insert("ergodic".into(), json!(gap.ergodic));
    }
    if let Some(state_path) = entropy_state {
        let rho = io::read_state(state_path, tol)?;
        let (gamma, route, ergodic) = entropy_gap(&channel, &rho)?;
        let report = entropy_production_check(&channel, &rho, gamma)?;
        lines.push(format!(
            "entropy_production: lhs {} >= rhs {} (slack {}, gamma {} via {route}, ergodic: {ergodic})",
            fmt_sig(report.lhs),
            fmt_sig(report.rhs),
            fmt_sig(report.slack),
            fmt_sig(gamma)
        ));
        values.insert(
            "entropy_production".into(),
            json!({
                "lhs": report.lhs,
                "rhs": report.rhs,
                "slack": report.slack,
                "gamma": gamma,
                "gamma_route": route,
                "ergodic": ergodic,
            }),
        );
    }

    let json = json!({
        "file": channel_path.display().to_string(),
        "dim": channel.dim(),
        "kraus_count": channel.kraus().len(),
        "results": Value::Object(values),
    });
    Ok(Output::ok(lines.join("\n"), json))
}

/// Pick the spectral gap for the entropy-production bound: the overlap
/// matrix between the state eigenbasis and the measurement basis when
/// the channel is a projective measurement, the superoperator gap
/// otherwise.
fn entropy_gap(channel: &KrausChannel, rho: &DensityMatrix) -> Result<(f64, &'static str, bool)> {
    if let Some(basis) = measurement_basis_of(channel) {
        let eigenbasis = hermitian_eig(rho.matrix())?.eigenvectors;
        let gap = spectral_gap_projection(&overlap_matrix(&eigenbasis, &basis)?);
        return Ok((gap.gamma, "measurement-overlap", gap.ergodic));
    }
    let gap = superoperator_spectral_gap(channel)?;
    Ok((gap.gamma, "superoperator", gap.ergodic))
}

/// Recognize a complete rank-one projective measurement and recover its
/// basis (columns), if the Kraus set has that shape.
fn measurement_basis_of(channel: &KrausChannel) -> Option<ComplexMatrix> {
    let d = channel.dim();
    if channel.kraus().len() != d {
        return None;
    }
    let tol = 1e-8;
    let mut columns = Vec::with_capacity(d);
    for k in channel.kraus() {
        if k.hermiticity_defect() > tol {
            return None;
        }
        if ((k * k).trace() - k.trace()).norm() > tol || (k.trace().re - 1.0).abs() > tol {
            return None;
        }
        // Rank-one projector: any nonzero column is proportional to phi.
        let best = (0..d)
            .max_by(|&a, &b| {
                let na: f64 = k.column(a).iter().map(|z| z.norm_sqr()).sum();
                let nb: f64 = k.column(b).iter().map(|z| z.norm_sqr()).sum();
                na.partial_cmp(&nb).unwrap()
            })
            .unwrap();
        let col = k.column(best);
        let norm: f64 = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < tol {
            return None;
        }
        columns.push(col.into_iter().map(|z| z / norm).collect::<Vec<_>>());
    }
    let basis = ComplexMatrix::from_fn(d, |i, j| columns[j][i]);
    if basis.unitarity_defect() > tol {
        return None;
    }
    Some(basis)
}

// ---------------------------------------------------------------------
// asymmetry
// ---------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
pub fn cmd_asymmetry(
    state_path: &Path,
    group: GroupKind,
    method: MethodKind,
    samples: usize,
    nodes: usize,
    compare: bool,
    seed: u64,
    tol: &Tolerances,
) -> Result<Output> {
    let rho = io::read_state(state_path, tol)?;
    let d = rho.dim();
    let spec = group_spec(group, d)?;
    let group_label = match spec {
        GroupSpec::SingleSu2 => "su2".to_string(),
        GroupSpec::IndependentProduct(n) => format!("independent({n})"),
        GroupSpec::Collective(n) => format!("collective({n})"),
    };

    let analytic = || closed_form(&rho, spec);
    let mut lines = vec![format!(
        "state: {} (dim {d})  group: {group_label}",
        state_path.display()
    )];
    let mut values = serde_json::Map::new();

    let numeric_method = |kind: MethodKind| match kind {
        MethodKind::Mc => IntegrationMethod::monte_carlo(samples, seed),
        _ => IntegrationMethod::Quadrature {
            n_omega: nodes,
            n_theta: nodes,
            n_phi: nodes,
        },
    };

    match method {
        MethodKind::Analytic => {
            let value = analytic().map_err(|e| {
                inapplicable(format!("no closed form for {group_label} at dim {d}: {e}"))
            })?;
            lines.push(format!("asymmetry (analytic): {}", fmt_sig(value)));
            values.insert("asymmetry".into(), json!(value));
            values.insert("method".into(), json!("analytic"));
        }
        MethodKind::Mc | MethodKind::Quadrature => {
            let est = asymmetry(&rho, spec, numeric_method(method))?;
            let label = if method == MethodKind::Mc {
                format!("mc, samples {samples}, seed {seed}")
            } else {
                format!("quadrature, {nodes} nodes per angle")
            };
            lines.push(format!("asymmetry ({label}): {}", fmt_sig(est.value)));
            values.insert("asymmetry".into(), json!(est.value));
            values.insert(
                "method".into(),
                json!(if method == MethodKind::Mc { "mc" } else { "quadrature" }),
            );
            if let Some(stderr) = est.std_error {
                lines.push(format!("std_error: {}", fmt_sig(stderr)));
                values.insert("std_error".into(), json!(stderr));
            }
        }
    }

    if compare {
        let closed = analytic()
            .map_err(|e| inapplicable(format!("--compare needs a closed form: {e}")))?;
        let numeric = match method {
            MethodKind::Analytic => asymmetry(&rho, spec, numeric_method(MethodKind::Quadrature))?,
            other => asymmetry(&rho, spec, numeric_method(other))?,
        };
        let diff = (numeric.value - closed).abs();
        lines.push(format!("compare analytic: {}", fmt_sig(closed)));
        lines.push(format!("compare numerical: {}", fmt_sig(numeric.value)));
        lines.push(format!("compare |difference|: {}", fmt_sig(diff)));
        values.insert(
            "compare".into(),
            json!({
                "analytic": closed,
                "numerical": numeric.value,
                "difference": diff,
                "std_error": numeric.std_error,
            }),
        );
    }

    let json = json!({
        "file": state_path.display().to_string(),
        "dim": d,
        "group": group_label,
        "results": Value::Object(values),
    });
    Ok(Output::ok(lines.join("\n"), json))
}

fn group_spec(group: GroupKind, d: usize) -> Result<GroupSpec> {
    let qubits = |d: usize| -> Result<usize> {
        if d < 2 || !d.is_power_of_two() {
            return Err(inapplicable(format!("dimension {d} is not a power of two")));
        }
        Ok(d.trailing_zeros() as usize)
    };
    match group {
        GroupKind::Su2 => {
            if d != 2 {
                return Err(inapplicable(format!(
                    "group su2 acts on a single qubit, state has dim {d}"
                )));
            }
            Ok(GroupSpec::SingleSu2)
        }
        GroupKind::Independent => Ok(GroupSpec::IndependentProduct(qubits(d)?)),
        GroupKind::Collective => Ok(GroupSpec::Collective(qubits(d)?)),
    }
}

fn closed_form(rho: &DensityMatrix, spec: GroupSpec) -> Result<f64> {
    match spec {
        GroupSpec::SingleSu2 => Ok(asymmetry_analytic_qubit(rho)?),
        GroupSpec::IndependentProduct(_) => Ok(asymmetry_independent_closed(rho)?),
        GroupSpec::Collective(1) => Ok(asymmetry_analytic_qubit(rho)?),
        GroupSpec::Collective(2) => Ok(asymmetry_collective_2q_closed(rho)?),
        GroupSpec::Collective(n) => Err(anyhow!(
            "no closed form for collective rotations on {n} qubits"
        )),
    }
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

pub fn cmd_verify(suite_name: &str, seed: u64, cases: Option<usize>) -> Result<Output> {
    let suites = Suite::parse(suite_name).ok_or_else(|| {
        anyhow!(
            "unknown suite '{suite_name}' (expected one of: norms, coherence, channels, \
             theorem1, theorem2, asymmetry, integr-tables, all)"
        )
    })?;

    let mut text = String::new();
    let mut suite_values = Vec::new();
    let mut total = 0usize;
    let mut passed = 0usize;
    for suite in &suites {
        let report = run_suite(*suite, seed, cases)?;
        writeln!(text, "# suite: {}  seed: {seed}", suite.name())?;
        let mut props = Vec::new();
        for r in &report.results {
            total += 1;
            if r.passed {
                passed += 1;
            }
            writeln!(
                text,
                "{} {} :: {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.detail
            )?;
            props.push(json!({
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
            }));
        }
        suite_values.push(json!({
            "suite": suite.name(),
            "passed": report.passed(),
            "properties": props,
        }));
    }
    let all_passed = passed == total;
    write!(
        text,
        "RESULT: {} ({passed}/{total} properties)",
        if all_passed { "PASS" } else { "FAIL" }
    )?;
    let json = json!({
        "seed": seed,
        "suites": suite_values,
        "passed": all_passed,
        "properties_passed": passed,
        "properties_total": total,
    });
    Ok(Output {
        text,
        json,
        exit: if all_passed { 0 } else { 1 },
    })
}

// ---------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
pub fn cmd_sweep(
    kind: SweepKind,
    from: f64,
    to: f64,
    steps: usize,
    n_qubits: usize,
    samples: usize,
    out: &PathBuf,
    seed: u64,
) -> Result<Output> {
    let steps = steps.max(1);
    let grid = |i: usize| {
        if steps == 1 {
            from
        } else {
            from + (to - from) * i as f64 / (steps - 1) as f64
        }
    };
    let mut csv = String::new();
    match kind {
        SweepKind::AsymmetryVsS => {
            writeln!(csv, "s,analytic,quadrature,abs_diff")?;
            for i in 0..steps {
                let s = grid(i);
                let rho = from_bloch(&BlochVector::new([s, 0.0, 0.0])?)?;
                let analytic = 0.5 - 1.0 / (2.0 * (1.0 + s * s));
                let quadr =
                    asymmetry(&rho, GroupSpec::SingleSu2, IntegrationMethod::quadrature16())?
                        .value;
                writeln!(
                    csv,
                    "{},{},{},{}",
                    fmt_csv(s),
                    fmt_csv(analytic),
                    fmt_csv(quadr),
                    fmt_csv((analytic - quadr).abs())
                )?;
            }
        }
        SweepKind::CoheringVsGamma => {
            writeln!(csv, "gamma,analytic,cohering_power,commutator_route")?;
            for i in 0..steps {
                let gamma = grid(i);
                let ch = standard_channel(StandardChannel::AmplitudeDamping { gamma }, 2)?;
                writeln!(
                    csv,
                    "{},{},{},{}",
                    fmt_csv(gamma),
                    fmt_csv(gamma),
                    fmt_csv(cohering_power(&ch)),
                    fmt_csv(cohering_power_commutator(&ch))
                )?;
            }
        }
        SweepKind::AsymmetryVsPurityN => {
            writeln!(csv, "mixing,purity,closed_form,mc_value,mc_std_error")?;
            let d = 1usize << n_qubits;
            let pure = random_pure(d, qcas_core::rng::derive_seed(seed, 0))?;
            let star = DensityMatrix::maximally_mixed(d)?;
            for i in 0..steps {
                let t = grid(i);
                let m = &pure.matrix().scale_re(t) + &star.matrix().scale_re(1.0 - t);
                let rho = DensityMatrix::new(m)?;
                let closed = asymmetry_independent_closed(&rho)?;
                let est = asymmetry(
                    &rho,
                    GroupSpec::IndependentProduct(n_qubits),
                    IntegrationMethod::monte_carlo(
                        samples,
                        qcas_core::rng::derive_seed(seed, 1 + i as u64),
                    ),
                )?;
                writeln!(
                    csv,
                    "{},{},{},{},{}",
                    fmt_csv(t),
                    fmt_csv(rho.purity()),
                    fmt_csv(closed),
                    fmt_csv(est.value),
                    fmt_csv(est.std_error.unwrap_or(0.0))
                )?;
            }
        }
    }
    std::fs::write(out, &csv).with_context(|| format!("cannot write {}", out.display()))?;
    let rows = csv.lines().count() - 1;
    Ok(Output::ok(
        format!("wrote {} ({rows} rows)", out.display()),
        json!({"out": out.display().to_string(), "rows": rows}),
    ))
}
