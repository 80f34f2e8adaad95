//! Dense complex linear algebra, validated quantum states,
//! basis-independent coherence measures, Kraus channels with cohering
//! power and entropy-production checks, and Haar-averaged asymmetry
//! measures over SU(2) product groups.
//!
//! Every closed form ships with an independent evaluation route (exact
//! quadrature or seeded Monte Carlo); the [`verify`] module runs the
//! cross-checks as named property suites.

pub mod asymmetry;
pub mod channels;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod rng;
pub mod states;
pub mod tol;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::ComplexMatrix;
pub use states::DensityMatrix;
pub use tol::Tolerances;
