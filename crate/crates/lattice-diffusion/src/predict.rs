//! Mean transition-time prediction from the saddle-point geometry.

use crate::spectrum::{gamma_one, lattice_spectrum};
use crate::{LatticeError, Result};
use std::f64::consts::PI;

fn check(n: usize, gamma: f64) -> Result<()> {
    let threshold = gamma_one(n)?;
    if !gamma.is_finite() || gamma <= threshold {
        return Err(LatticeError::InvalidParameter(format!(
            "gamma = {gamma} must exceed the synchronization threshold {threshold} \
             (below it the origin is not the relevant saddle)"
        )));
    }
    Ok(())
}

/// Prefactor (2π/|μ_0|)·√(Π_k |μ_k| / Π_k ν_k) of the mean transition time
/// between the two uniform minima, valid for γ > γ₁(N).
pub fn eyring_kramers_prefactor(n: usize, gamma: f64) -> Result<f64> {
    check(n, gamma)?;
    let s = lattice_spectrum(n, gamma)?;
    // One unstable direction: μ_0 = −1. Accumulate in logs for large N.
    let mut log_ratio = 0.0;
    for k in 0..n {
        log_ratio += s.mu[k].abs().ln() - s.nu[k].ln();
    }
    Ok(2.0 * PI / s.mu[0].abs() * (0.5 * log_ratio).exp())
}

/// Expected time for the noisy chain to cross from one uniform minimum to the
/// other: prefactor times e^{(N/4)/ε}, where N/4 is the energy barrier at the
/// origin. Requires γ > γ₁(N) and ε > 0.
pub fn eyring_kramers_time(n: usize, gamma: f64, eps: f64) -> Result<f64> {
    if eps <= 0.0 || !eps.is_finite() {
        return Err(LatticeError::InvalidParameter(format!(
            "noise intensity eps = {eps} must be positive and finite"
        )));
    }
    let barrier = n as f64 / 4.0;
    Ok(eyring_kramers_prefactor(n, gamma)? * (barrier / eps).exp())
}
