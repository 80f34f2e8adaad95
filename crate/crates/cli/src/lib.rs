//! Library surface of the command-line tool: file formats, report
//! formatting and the command implementations, kept importable so the
//! integration tests exercise the same code paths the binary runs.

pub mod commands;
pub mod io;
pub mod report;

use clap::ValueEnum;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MeasureKind {
    /// Basis-independent Frobenius coherence sqrt(d/(d-1)) ||rho - I/d||_F
    Frobenius,
    /// Brukner-Zeilinger invariant information Tr rho^2 - 1/d
    Bz,
    /// l1 off-diagonal coherence in the computational (or --basis) basis
    L1,
    /// Trace-norm coherence (closed form for qubits, bound chain above)
    Trace,
    /// Relative entropy of coherence (qubits)
    Relent,
    /// Degree of polarization of a 2x2 coherence matrix
    P2,
    /// Degree of polarization of a 3x3 coherence matrix
    P3,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupKind {
    /// One SU(2) acting on a single qubit
    Su2,
    /// Independent rotations R_1 x ... x R_N
    Independent,
    /// Collective rotations R x ... x R
    Collective,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodKind {
    Analytic,
    Mc,
    Quadrature,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    /// Qubit asymmetry against the Bloch length
    AsymmetryVsS,
    /// N-qubit independent asymmetry against purity
    AsymmetryVsPurityN,
    /// Cohering power of amplitude damping against gamma
    CoheringVsGamma,
}
