//! Pauli matrices, Kronecker products and (anti)commutators.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// Pauli matrix by index: 0 -> identity, 1 -> sigma_x, 2 -> sigma_y,
/// 3 -> sigma_z.
pub fn pauli(x: usize) -> Result<ComplexMatrix> {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let entries = match x {
        0 => vec![one, z, z, one],
        1 => vec![z, one, one, z],
        2 => vec![z, -i, i, z],
        3 => vec![one, z, z, -one],
        _ => return Err(Error::IndexOutOfRange { index: x, max: 3 }),
    };
    ComplexMatrix::new(2, entries)
}

/// Kronecker product of an ordered list of factors (left = most
/// significant).
pub fn kron_all(factors: &[ComplexMatrix]) -> ComplexMatrix {
    let mut out = ComplexMatrix::identity(1);
    for f in factors {
        out = out.kron(f);
    }
    out
}

/// The N-fold Pauli string sigma_{x_1} x ... x sigma_{x_N}.
pub fn pauli_string(indices: &[usize]) -> Result<ComplexMatrix> {
    let mut out = ComplexMatrix::identity(1);
    for &x in indices {
        out = out.kron(&pauli(x)?);
    }
    Ok(out)
}

pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    &(a * b) - &(b * a)
}

pub fn anticommutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    &(a * b) + &(b * a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        let sx = pauli(1).unwrap();
        let sy = pauli(2).unwrap();
        let sz = pauli(3).unwrap();
        // [sigma_x, sigma_y] = 2i sigma_z
        let comm = commutator(&sx, &sy);
        let expect = sz.scale(Complex64::new(0.0, 2.0));
        assert!((&comm - &expect).frobenius_norm() < 1e-15);
        // {sigma_x, sigma_y} = 0
        assert!(anticommutator(&sx, &sy).frobenius_norm() < 1e-15);
    }

    #[test]
    fn pauli_index_out_of_range() {
        assert!(matches!(pauli(4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn tensor_of_identities() {
        let i2 = pauli(0).unwrap();
        assert_eq!(tensor(&i2, &i2), ComplexMatrix::identity(4));
    }
}
