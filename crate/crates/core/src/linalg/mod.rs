//! Dense complex linear algebra: the numeric substrate for everything
//! else in the crate.

mod eig;
mod matrix;
mod norms;
mod pauli;

pub use eig::{hermitian_eig, hermitian_eig_with, EigenDecomposition};
pub use matrix::ComplexMatrix;
pub use norms::{entrywise_lp_norm, schatten_norm, singular_values, trace_norm_hermitian};
pub use pauli::{anticommutator, commutator, kron_all, pauli, pauli_string, tensor};
