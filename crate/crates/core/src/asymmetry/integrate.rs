//! Haar integration over SU(2) product groups by exact tensor quadrature
//! or chunked, reproducible Monte Carlo.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::rng::{derive_seed, stream};

use super::su2::{haar_sample, Su2Element};

/// How a group average is evaluated.
///
/// Quadrature uses uniform periodic nodes in phi and omega (the
/// sin^2(omega/2) weight folded into the integrand) and Gauss-Legendre
/// nodes in cos(theta); every integrand in this crate is a trigonometric
/// polynomial of low degree per angle, so the default 16-node rule is
/// exact to rounding. Monte Carlo draws Haar samples in fixed-size
/// chunks, each chunk seeded by (seed, chunk index), so results are
/// bit-identical regardless of scheduling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntegrationMethod {
    MonteCarlo { samples: usize, seed: u64 },
    Quadrature { n_omega: usize, n_theta: usize, n_phi: usize },
}

impl IntegrationMethod {
    /// The default exact rule: 16 nodes per angle.
    pub fn quadrature16() -> Self {
        IntegrationMethod::Quadrature {
            n_omega: 16,
            n_theta: 16,
            n_phi: 16,
        }
    }

    pub fn monte_carlo(samples: usize, seed: u64) -> Self {
        IntegrationMethod::MonteCarlo { samples, seed }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            IntegrationMethod::MonteCarlo { samples: 0, .. } => {
                Err(Error::EmptyIntegrationGrid)
            }
            IntegrationMethod::Quadrature {
                n_omega,
                n_theta,
                n_phi,
            } if n_omega == 0 || n_theta == 0 || n_phi == 0 => {
                Err(Error::EmptyIntegrationGrid)
            }
            _ => Ok(()),
        }
    }
}

/// A group average together with its Monte Carlo standard error
/// (`None` for quadrature, which is exact here).
#[derive(Debug, Clone, Copy)]
pub struct IntegralEstimate {
    pub value: f64,
    pub std_error: Option<f64>,
}

const MC_CHUNK: usize = 4096;
const QUADRATURE_EVAL_CAP: u128 = 100_000_000;

/// Average `f` over `factors` independent copies of SU(2) with Haar
/// measure. The slice handed to `f` holds one element per factor.
pub fn integrate<F>(f: F, factors: usize, method: IntegrationMethod) -> Result<IntegralEstimate>
where
    F: Fn(&[Su2Element]) -> f64,
{
    method.validate()?;
    match method {
        IntegrationMethod::MonteCarlo { samples, seed } => {
            Ok(monte_carlo(&f, factors, samples, seed))
        }
        IntegrationMethod::Quadrature {
            n_omega,
            n_theta,
            n_phi,
        } => {
            let nodes = quadrature_nodes(n_omega, n_theta, n_phi);
            let per_factor = nodes.len() as u128;
            let evals = per_factor.pow(factors as u32);
            if evals > QUADRATURE_EVAL_CAP {
                return Err(Error::GridTooLarge {
                    evaluations: evals,
                    cap: QUADRATURE_EVAL_CAP,
                });
            }
            let mut elements = vec![nodes[0].0; factors];
            let value = quadrature_recurse(&f, &nodes, &mut elements, 0, 1.0);
            Ok(IntegralEstimate {
                value,
                std_error: None,
            })
        }
    }
}

/// Matrix-valued group average with the same node/sample layout as
/// [`integrate`]; used by twirling.
pub fn integrate_matrix<F>(
    f: F,
    factors: usize,
    dim: usize,
    method: IntegrationMethod,
) -> Result<crate::linalg::ComplexMatrix>
where
    F: Fn(&[Su2Element]) -> crate::linalg::ComplexMatrix,
{
    use crate::linalg::ComplexMatrix;
    method.validate()?;
    match method {
        IntegrationMethod::MonteCarlo { samples, seed } => {
            let mut acc = ComplexMatrix::zeros(dim);
            let mut elements = vec![
                Su2Element {
                    omega: 0.0,
                    theta: 0.0,
                    phi: 0.0,
                };
                factors
            ];
            let chunks = samples.div_ceil(MC_CHUNK);
            let mut drawn = 0usize;
            for chunk in 0..chunks {
                let mut rng = stream(derive_seed(seed, chunk as u64), "mc-integrate");
                let count = MC_CHUNK.min(samples - drawn);
                for _ in 0..count {
                    for slot in elements.iter_mut() {
                        *slot = haar_sample(&mut rng);
                    }
                    acc = &acc + &f(&elements);
                }
                drawn += count;
            }
            Ok(acc.scale_re(1.0 / samples as f64))
        }
        IntegrationMethod::Quadrature {
            n_omega,
            n_theta,
            n_phi,
        } => {
            let nodes = quadrature_nodes(n_omega, n_theta, n_phi);
            let per_factor = nodes.len() as u128;
            let evals = per_factor.pow(factors as u32);
            if evals > QUADRATURE_EVAL_CAP {
                return Err(Error::GridTooLarge {
                    evaluations: evals,
                    cap: QUADRATURE_EVAL_CAP,
                });
            }
            let mut elements = vec![nodes[0].0; factors];
            let mut acc = ComplexMatrix::zeros(dim);
            matrix_quadrature_recurse(&f, &nodes, &mut elements, 0, 1.0, &mut acc);
            Ok(acc)
        }
    }
}

fn matrix_quadrature_recurse<F>(
    f: &F,
    nodes: &[(Su2Element, f64)],
    elements: &mut [Su2Element],
    depth: usize,
    weight: f64,
    acc: &mut crate::linalg::ComplexMatrix,
) where
    F: Fn(&[Su2Element]) -> crate::linalg::ComplexMatrix,
{
    if depth == elements.len() {
        let term = f(elements).scale_re(weight);
        *acc = &*acc + &term;
        return;
    }
    for &(g, w) in nodes {
        elements[depth] = g;
        matrix_quadrature_recurse(f, nodes, elements, depth + 1, weight * w, acc);
    }
}

fn monte_carlo<F>(f: &F, factors: usize, samples: usize, seed: u64) -> IntegralEstimate
where
    F: Fn(&[Su2Element]) -> f64,
{
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut elements = vec![
        Su2Element {
            omega: 0.0,
            theta: 0.0,
            phi: 0.0,
        };
        factors
    ];
    let chunks = samples.div_ceil(MC_CHUNK);
    let mut drawn = 0usize;
    for chunk in 0..chunks {
        let mut rng = stream(derive_seed(seed, chunk as u64), "mc-integrate");
        let count = MC_CHUNK.min(samples - drawn);
        for _ in 0..count {
            for slot in elements.iter_mut() {
                *slot = haar_sample(&mut rng);
            }
            let v = f(&elements);
            sum += v;
            sum_sq += v * v;
        }
        drawn += count;
    }
    let n = samples as f64;
    let mean = sum / n;
    let std_error = if samples > 1 {
        let var = ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0);
        Some((var / n).sqrt())
    } else {
        None
    };
    IntegralEstimate {
        value: mean,
        std_error,
    }
}

/// Per-factor node list: (element, weight) with weights summing to one.
fn quadrature_nodes(n_omega: usize, n_theta: usize, n_phi: usize) -> Vec<(Su2Element, f64)> {
    let (gl_nodes, gl_weights) = gauss_legendre(n_theta);
    let mut nodes = Vec::with_capacity(n_omega * n_theta * n_phi);
    for a in 0..n_phi {
        let phi = -PI + 2.0 * PI * (a as f64 + 0.5) / n_phi as f64;
        for (u, wu) in gl_nodes.iter().zip(gl_weights.iter()) {
            let theta = u.clamp(-1.0, 1.0).acos();
            for c in 0..n_omega {
                let omega = 2.0 * PI * c as f64 / n_omega as f64;
                let half = (omega / 2.0).sin();
                // Normalized measure sin^2(omega/2) sin(theta)/(4 pi^2):
                // the phi and omega rules each carry a 2 pi / n factor and
                // the Gauss-Legendre weight integrates du = sin(theta) d theta.
                let w = wu * half * half / (n_omega as f64 * n_phi as f64);
                nodes.push((Su2Element { omega, theta, phi }, w));
            }
        }
    }
    nodes
}

fn quadrature_recurse<F>(
    f: &F,
    nodes: &[(Su2Element, f64)],
    elements: &mut [Su2Element],
    depth: usize,
    weight: f64,
) -> f64
where
    F: Fn(&[Su2Element]) -> f64,
{
    if depth == elements.len() {
        return weight * f(elements);
    }
    let mut total = 0.0;
    for &(g, w) in nodes {
        elements[depth] = g;
        total += quadrature_recurse(f, nodes, elements, depth + 1, weight * w);
    }
    total
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on
/// the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Value and derivative of the Legendre polynomial P_n at x.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_is_exact_for_polynomials() {
        let (nodes, weights) = gauss_legendre(16);
        let total: f64 = weights.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
        let quad: f64 = nodes
            .iter()
            .zip(weights.iter())
            .map(|(x, w)| w * x * x)
            .sum();
        assert!((quad - 2.0 / 3.0).abs() < 1e-14);
        let deg31: f64 = nodes
            .iter()
            .zip(weights.iter())
            .map(|(x, w)| w * x.powi(30))
            .sum();
        assert!((deg31 - 2.0 / 31.0).abs() < 1e-13);
    }

    #[test]
    fn measure_is_normalized() {
        for method in [
            IntegrationMethod::quadrature16(),
            IntegrationMethod::monte_carlo(5000, 7),
        ] {
            let est = integrate(|_| 1.0, 1, method).unwrap();
            assert!((est.value - 1.0).abs() < 1e-12);
        }
        let est = integrate(|_| 1.0, 2, IntegrationMethod::quadrature16()).unwrap();
        assert!((est.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn first_moments_vanish_exactly() {
        // cos(omega) integrates to -1/2, cos(theta) to 0 under Haar.
        let est = integrate(
            |g| g[0].omega.cos(),
            1,
            IntegrationMethod::quadrature16(),
        )
        .unwrap();
        assert!((est.value + 0.5).abs() < 1e-13);
        let est = integrate(
            |g| g[0].theta.cos(),
            1,
            IntegrationMethod::quadrature16(),
        )
        .unwrap();
        assert!(est.value.abs() < 1e-13);
    }

    #[test]
    fn monte_carlo_reports_std_error() {
        let est = integrate(
            |g| g[0].omega.cos(),
            1,
            IntegrationMethod::monte_carlo(50_000, 9),
        )
        .unwrap();
        let stderr = est.std_error.unwrap();
        assert!(stderr > 0.0 && stderr < 0.01);
        assert!((est.value + 0.5).abs() < 5.0 * stderr);
    }

    #[test]
    fn monte_carlo_is_chunk_deterministic() {
        let run = || {
            integrate(
                |g| g[0].phi.sin().powi(2),
                1,
                IntegrationMethod::monte_carlo(10_000, 123),
            )
            .unwrap()
            .value
        };
        assert_eq!(run().to_bits(), run().to_bits());
    }

    #[test]
    fn oversized_grid_rejected() {
        let method = IntegrationMethod::Quadrature {
            n_omega: 16,
            n_theta: 16,
            n_phi: 16,
        };
        assert!(matches!(
            integrate(|_| 1.0, 3, method),
            Err(Error::GridTooLarge { .. })
        ));
    }
}
