//! Command-line front end: state/channel file analysis, verification
//! suites, and CSV sweeps of the functional relationships.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qcas_core::{Error as CoreError, Tolerances};

use qcas_cli::commands::{self, CodedFailure, Output};
use qcas_cli::{GroupKind, MeasureKind, MethodKind, SweepKind};

#[derive(Parser)]
#[command(
    name = "qcas",
    version,
    about = "Quantum coherence and asymmetry calculator",
    long_about = "Computes basis-independent coherence measures, cohering power of Kraus \
                  channels, entropy-production bounds and SU(2) asymmetry measures, with \
                  closed-form, quadrature and Monte Carlo evaluation paths checked against \
                  each other."
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Seed for every randomized quantity
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Override the input-validation tolerance (default 1e-10)
    #[arg(long, global = true)]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coherence measures of a state file
    Coherence {
        /// JSON state file {"dim": d, "matrix": [[[re,im],...],...]}
        state: PathBuf,
        /// Which measure to print
        #[arg(long, value_enum)]
        measure: Option<MeasureKind>,
        /// Print every applicable measure plus the bound chain
        #[arg(long)]
        all: bool,
        /// Orthonormal basis (columns) for the l1 measure
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// Analyses of a Kraus channel file
    Channel {
        /// JSON channel file {"dim": d, "kraus": [matrix, ...]}
        channel: PathBuf,
        /// Cohering power through both evaluation routes
        #[arg(long)]
        cohering_power: bool,
        /// Unitality verdict and residual
        #[arg(long)]
        unital: bool,
        /// Superoperator spectral gap (unital channels only)
        #[arg(long)]
        spectral_gap: bool,
        /// Entropy-production report against the given state file
        #[arg(long, value_name = "STATE_FILE")]
        entropy_production: Option<PathBuf>,
    },
    /// Asymmetry of a state under an SU(2) product group
    Asymmetry {
        state: PathBuf,
        /// Symmetry group
        #[arg(long, value_enum)]
        group: GroupKind,
        /// Evaluation method
        #[arg(long, value_enum, default_value_t = MethodKind::Analytic)]
        method: MethodKind,
        /// Monte Carlo sample count
        #[arg(long, default_value_t = 200_000)]
        samples: usize,
        /// Quadrature nodes per angle
        #[arg(long, default_value_t = 16)]
        nodes: usize,
        /// Also run the analytic-vs-numerical comparison
        #[arg(long)]
        compare: bool,
    },
    /// Run verification suites (norms | coherence | channels | theorem1 |
    /// theorem2 | asymmetry | integr-tables | all)
    Verify {
        suite: String,
        /// Override the per-property case counts
        #[arg(long)]
        cases: Option<usize>,
    },
    /// Tabulate a functional relationship as CSV
    Sweep {
        kind: SweepKind,
        #[arg(long, default_value_t = 0.0)]
        from: f64,
        #[arg(long, default_value_t = 1.0)]
        to: f64,
        #[arg(long, default_value_t = 11)]
        steps: usize,
        /// Qubit count for the purity sweep
        #[arg(long, default_value_t = 2)]
        n_qubits: usize,
        /// Monte Carlo samples per grid point
        #[arg(long, default_value_t = 20_000)]
        samples: usize,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = match cli.tol {
        Some(t) => Tolerances::with_validation(t),
        None => Tolerances::DEFAULT,
    };

    let result: anyhow::Result<Output> = match cli.command {
        Command::Coherence {
            ref state,
            measure,
            all,
            ref basis,
        } => commands::cmd_coherence(state, measure, all, basis.as_deref(), &tol),
        Command::Channel {
            ref channel,
            cohering_power,
            unital,
            spectral_gap,
            ref entropy_production,
        } => commands::cmd_channel(
            channel,
            cohering_power,
            unital,
            spectral_gap,
            entropy_production.as_deref(),
            &tol,
        ),
        Command::Asymmetry {
            ref state,
            group,
            method,
            samples,
            nodes,
            compare,
        } => commands::cmd_asymmetry(state, group, method, samples, nodes, compare, cli.seed, &tol),
        Command::Verify { ref suite, cases } => commands::cmd_verify(suite, cli.seed, cases),
        Command::Sweep {
            kind,
            from,
            to,
            steps,
            n_qubits,
            samples,
            ref out,
        } => commands::cmd_sweep(kind, from, to, steps, n_qubits, samples, out, cli.seed),
    };

    match result {
        Ok(output) => {
            if cli.json {
                println!("{}", output.json);
            } else {
                println!("{}", output.text);
            }
            ExitCode::from(output.exit as u8)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(classify(&err) as u8)
        }
    }
}

/// Exit-code contract: 2 parse/validation, 3 inapplicable,
/// 4 unmet precondition.
fn classify(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(coded) = cause.downcast_ref::<CodedFailure>() {
            return coded.code;
        }
        if let Some(core) = cause.downcast_ref::<CoreError>() {
            return match core {
                CoreError::NotUnital { .. } | CoreError::SupportViolation => 4,
                CoreError::DimensionMismatch { .. }
                | CoreError::NotPowerOfTwo { .. }
                | CoreError::GridTooLarge { .. }
                | CoreError::InvalidDimension { .. } => 3,
                _ => 2,
            };
        }
    }
    2
}
