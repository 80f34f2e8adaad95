//! Schatten and entrywise matrix norms.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};

/// Singular values of `a`, ascending: square roots of the eigenvalues of
/// A^dag A (clamped at zero against rounding).
pub fn singular_values(a: &ComplexMatrix) -> Result<Vec<f64>> {
    let gram = &a.adjoint() * a;
    let eig = hermitian_eig(&gram)?;
    Ok(eig
        .eigenvalues
        .iter()
        .map(|&x| x.max(0.0).sqrt())
        .collect())
}

/// Schatten p-norm (sum sigma_i^p)^(1/p); `p = f64::INFINITY` selects the
/// operator norm (largest singular value).
pub fn schatten_norm(a: &ComplexMatrix, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidP { p });
    }
    let sigma = singular_values(a)?;
    Ok(lp_of(&sigma, p))
}

/// Entrywise l_p norm (sum |a_ij|^p)^(1/p); infinity selects the largest
/// entry magnitude.
pub fn entrywise_lp_norm(a: &ComplexMatrix, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidP { p });
    }
    let mags: Vec<f64> = a.entries().iter().map(|z| z.norm()).collect();
    Ok(lp_of(&mags, p))
}

/// Trace norm of a Hermitian matrix from its eigenvalues (cheaper and
/// sharper than the generic singular-value route).
pub fn trace_norm_hermitian(a: &ComplexMatrix) -> Result<f64> {
    let eig = hermitian_eig(a)?;
    Ok(eig.eigenvalues.iter().map(|x| x.abs()).sum())
}

fn lp_of(values: &[f64], p: f64) -> f64 {
    if p.is_infinite() {
        return values.iter().cloned().fold(0.0, f64::max);
    }
    if p == 1.0 {
        return values.iter().sum();
    }
    if p == 2.0 {
        return values.iter().map(|x| x * x).sum::<f64>().sqrt();
    }
    // Scale out the largest element to avoid overflow for large p.
    let max = values.iter().cloned().fold(0.0, f64::max);
    if max == 0.0 {
        return 0.0;
    }
    let sum: f64 = values.iter().map(|x| (x / max).powf(p)).sum();
    max * sum.powf(1.0 / p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_singular_values() {
        let a = ComplexMatrix::from_real(2, &[3.0, 0.0, 0.0, 4.0]).unwrap();
        assert!((schatten_norm(&a, 1.0).unwrap() - 7.0).abs() < 1e-12);
        assert!((schatten_norm(&a, 2.0).unwrap() - 5.0).abs() < 1e-12);
        assert!((schatten_norm(&a, f64::INFINITY).unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn identity_frobenius() {
        for d in 2..6 {
            let i = ComplexMatrix::identity(d);
            assert!((schatten_norm(&i, 2.0).unwrap() - (d as f64).sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn entrywise_examples() {
        let x = ComplexMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        assert!((entrywise_lp_norm(&x, 1.0).unwrap() - 2.0).abs() < 1e-15);
        let i = ComplexMatrix::identity(2);
        assert!((entrywise_lp_norm(&i, 2.0).unwrap() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn invalid_p_rejected() {
        let i = ComplexMatrix::identity(2);
        assert!(matches!(
            schatten_norm(&i, 0.5),
            Err(Error::InvalidP { .. })
        ));
        assert!(matches!(
            entrywise_lp_norm(&i, f64::NAN),
            Err(Error::InvalidP { .. })
        ));
    }
}
