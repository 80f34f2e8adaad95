//! SU(2) group elements in axis-angle coordinates and Haar sampling.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

use std::f64::consts::PI;

/// Group element exp(-i (omega/2) n . sigma) with rotation angle
/// omega in [0, 2 pi] and axis direction (theta, phi),
/// theta in [0, pi], phi in [-pi, pi].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2Element {
    pub omega: f64,
    pub theta: f64,
    pub phi: f64,
}

impl Su2Element {
    pub fn new(omega: f64, theta: f64, phi: f64) -> Result<Self> {
        check_range(omega, 0.0, 2.0 * PI)?;
        check_range(theta, 0.0, PI)?;
        check_range(phi, -PI, PI)?;
        Ok(Self { omega, theta, phi })
    }

    /// The explicit 2x2 matrix: unitary with determinant one.
    pub fn matrix(&self) -> ComplexMatrix {
        let half = self.omega / 2.0;
        let (c, s) = (half.cos(), half.sin());
        let (ct, st) = (self.theta.cos(), self.theta.sin());
        ComplexMatrix::new(
            2,
            vec![
                Complex64::new(c, -s * ct),
                Complex64::from_polar(s * st, -self.phi - PI / 2.0),
                Complex64::from_polar(s * st, self.phi - PI / 2.0),
                Complex64::new(c, s * ct),
            ],
        )
        .expect("2x2 entries are finite")
    }

    /// Five-factor Euler form
    /// e^{-i phi sigma_3/2} e^{-i theta sigma_2/2} e^{-i omega sigma_3/2}
    /// e^{i theta sigma_2/2} e^{i phi sigma_3/2}; identical to
    /// [`Self::matrix`] up to rounding and used as its independent oracle.
    pub fn euler_matrix(&self) -> ComplexMatrix {
        let rz = |angle: f64| {
            ComplexMatrix::diagonal(&[
                Complex64::from_polar(1.0, -angle / 2.0),
                Complex64::from_polar(1.0, angle / 2.0),
            ])
        };
        let ry = |angle: f64| {
            let (c, s) = ((angle / 2.0).cos(), (angle / 2.0).sin());
            ComplexMatrix::new(
                2,
                vec![
                    Complex64::new(c, 0.0),
                    Complex64::new(-s, 0.0),
                    Complex64::new(s, 0.0),
                    Complex64::new(c, 0.0),
                ],
            )
            .unwrap()
        };
        let mut m = rz(self.phi);
        m = &m * &ry(self.theta);
        m = &m * &rz(self.omega);
        m = &m * &ry(-self.theta);
        &m * &rz(-self.phi)
    }
}

fn check_range(value: f64, lo: f64, hi: f64) -> Result<()> {
    if !value.is_finite() || value < lo || value > hi {
        return Err(Error::AngleOutOfRange { value, lo, hi });
    }
    Ok(())
}

/// Draw one group element from the normalized Haar measure
/// sin^2(omega/2) sin(theta) / (4 pi^2) d omega d theta d phi:
/// phi uniform, cos(theta) uniform, and omega by inverting the CDF
/// (omega - sin omega)/(2 pi).
pub fn haar_sample(rng: &mut ChaCha12Rng) -> Su2Element {
    let phi = rng.gen_range(-PI..PI);
    let u_theta: f64 = rng.gen_range(-1.0..1.0f64);
    let theta = u_theta.clamp(-1.0, 1.0).acos();
    let omega = invert_omega_cdf(rng.gen::<f64>());
    Su2Element { omega, theta, phi }
}

/// Solve (omega - sin omega)/(2 pi) = u on [0, 2 pi] by Newton iteration
/// from omega_0 = 2 pi u with a bisection safeguard; the derivative
/// sin^2(omega/2)/pi vanishes at both endpoints, so raw Newton is unsafe.
pub fn invert_omega_cdf(u: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let cdf = |w: f64| (w - w.sin()) / two_pi;
    let (mut lo, mut hi) = (0.0, two_pi);
    let mut w = two_pi * u;
    for _ in 0..200 {
        let f = cdf(w) - u;
        if f.abs() < 1e-12 {
            return w;
        }
        if f > 0.0 {
            hi = w;
        } else {
            lo = w;
        }
        let deriv = (1.0 - w.cos()) / two_pi;
        let newton = w - f / deriv;
        w = if deriv > 1e-12 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    w
}
