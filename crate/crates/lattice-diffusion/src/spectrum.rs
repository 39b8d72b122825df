//! Hessian spectra of the chain at its uniform stationary points.

use crate::{LatticeError, Result};
use std::f64::consts::PI;

/// Eigenvalue families of the ring, indexed by the Fourier mode k = 0..N−1:
/// `lambda[k]` is the discrete-Laplacian eigenvalue 2 sin²(kπ/N);
/// `mu[k] = −1 + γ·lambda[k]` is the Hessian spectrum at the origin;
/// `nu[k] = 2 + γ·lambda[k]` is the Hessian spectrum at the uniform minima.
#[derive(Debug, Clone)]
pub struct LatticeSpectrum {
    pub lambda: Vec<f64>,
    pub mu: Vec<f64>,
    pub nu: Vec<f64>,
}

impl LatticeSpectrum {
    /// Number of negative eigenvalues at the origin.
    pub fn unstable_count(&self) -> usize {
        self.mu.iter().filter(|&&m| m < 0.0).count()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(LatticeError::InvalidParameter(
            "the ring needs at least two sites".into(),
        ));
    }
    Ok(())
}

/// All three eigenvalue families for an N-site ring with coupling γ.
pub fn lattice_spectrum(n: usize, gamma: f64) -> Result<LatticeSpectrum> {
    check_n(n)?;
    if !gamma.is_finite() || gamma < 0.0 {
        return Err(LatticeError::InvalidParameter(format!(
            "coupling gamma = {gamma} must be finite and nonnegative"
        )));
    }
    let mut lambda = Vec::with_capacity(n);
    for k in 0..n {
        let s = (k as f64 * PI / n as f64).sin();
        lambda.push(2.0 * s * s);
    }
    let mu = lambda.iter().map(|&l| -1.0 + gamma * l).collect();
    let nu = lambda.iter().map(|&l| 2.0 + gamma * l).collect();
    Ok(LatticeSpectrum { lambda, mu, nu })
}

/// Synchronization threshold γ₁(N) = 1/(2 sin²(π/N)). For γ strictly above
/// this value the origin is the only saddle between the two uniform minima
/// and has exactly one unstable direction.
pub fn gamma_one(n: usize) -> Result<f64> {
    check_n(n)?;
    let s = (PI / n as f64).sin();
    Ok(1.0 / (2.0 * s * s))
}
