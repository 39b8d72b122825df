//! Linearization spectra at the uniform stationary states on the circle.

use crate::{KramersError, Result};

/// Eigenvalue `λ_k = (2πk/l)²` of `−Δ` on the circle of circumference `l`.
///
/// Each `k ≥ 1` carries multiplicity two (cosine and sine modes); `k = 0` is
/// the constant mode with multiplicity one.
pub fn laplacian_eigenvalue_1d(l: f64, k: u64) -> f64 {
    let w = 2.0 * std::f64::consts::PI * k as f64 / l;
    w * w
}

/// Curvature spectra of the energy at the flat saddle and at the wells.
///
/// `mu[k] = λ_k − 1` is the Hessian eigenvalue at the saddle `φ ≡ 0` and
/// `nu[k] = λ_k + 2` the one at the wells `φ ≡ ±1`, both for the frequency
/// index `k` (multiplicity two for `k ≥ 1`).
#[derive(Debug, Clone)]
pub struct HessianSpectrum1d {
    /// Circumference of the circle.
    pub l: f64,
    /// Saddle curvatures `λ_k − 1`, index `k = 0..=n_max`.
    pub mu: Vec<f64>,
    /// Well curvatures `λ_k + 2`, index `k = 0..=n_max`.
    pub nu: Vec<f64>,
}

impl HessianSpectrum1d {
    /// Number of strictly negative saddle curvatures, counted with
    /// multiplicity (two per `k ≥ 1`).
    pub fn unstable_count(&self) -> usize {
        self.mu
            .iter()
            .enumerate()
            .filter(|(_, &m)| m < 0.0)
            .map(|(k, _)| if k == 0 { 1 } else { 2 })
            .sum()
    }
}

/// Compute the saddle and well curvature spectra up to frequency `n_max`.
///
/// Fails if `l ≤ 0` or `l` is not finite.
pub fn hessian_spectrum_1d(l: f64, n_max: usize) -> Result<HessianSpectrum1d> {
    if !(l.is_finite() && l > 0.0) {
        return Err(KramersError::InvalidParameter(format!(
            "domain size must be positive and finite, got {l}"
        )));
    }
    let mut mu = Vec::with_capacity(n_max + 1);
    let mut nu = Vec::with_capacity(n_max + 1);
    for k in 0..=n_max as u64 {
        let lam = laplacian_eigenvalue_1d(l, k);
        mu.push(lam - 1.0);
        nu.push(lam + 2.0);
    }
    Ok(HessianSpectrum1d { l, mu, nu })
}
