//! Potential energy, gradient, and interface energy of the coupled chain.

use crate::{LatticeError, Result};

/// Positions of the N particles on the ring, with coupling strength γ.
/// Indices are cyclic: site N is site 0 again.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeState {
    pub y: Vec<f64>,
    pub gamma: f64,
}

impl LatticeState {
    pub fn new(y: Vec<f64>, gamma: f64) -> Result<Self> {
        if y.len() < 2 {
            return Err(LatticeError::InvalidParameter(
                "at least two sites are required".into(),
            ));
        }
        if !gamma.is_finite() || gamma < 0.0 {
            return Err(LatticeError::InvalidParameter(format!(
                "coupling gamma = {gamma} must be finite and nonnegative"
            )));
        }
        Ok(Self { y, gamma })
    }

    /// Uniform configuration a·(1,…,1) on `n` sites.
    pub fn uniform(n: usize, a: f64, gamma: f64) -> Result<Self> {
        Self::new(vec![a; n], gamma)
    }

    pub fn n_sites(&self) -> usize {
        self.y.len()
    }
}

/// On-site double-well energy U(ξ) = ¼(ξ² − 1)², minimized at ξ = ±1 with
/// U(±1) = 0 and a local maximum U(0) = ¼.
#[inline]
pub(crate) fn onsite(xi: f64) -> f64 {
    let d = xi * xi - 1.0;
    0.25 * d * d
}

/// U'(ξ) = ξ³ − ξ.
#[inline]
pub(crate) fn onsite_prime(xi: f64) -> f64 {
    xi * xi * xi - xi
}

/// Total energy V(y) = Σ_i U(y^i) + (γ/4) Σ_i (y^{i+1} − y^i)², cyclic.
pub fn potential_energy(state: &LatticeState) -> f64 {
    let n = state.y.len();
    let mut v = 0.0;
    for i in 0..n {
        let next = state.y[(i + 1) % n];
        let d = next - state.y[i];
        v += onsite(state.y[i]) + 0.25 * state.gamma * d * d;
    }
    v
}

/// Gradient of `potential_energy`:
/// (∇V)_i = (y^i)³ − y^i − (γ/2)(y^{i+1} − 2y^i + y^{i−1}).
pub fn potential_gradient(state: &LatticeState) -> Vec<f64> {
    let mut g = vec![0.0; state.y.len()];
    gradient_into(&state.y, state.gamma, &mut g);
    g
}

/// In-place gradient used by the integrator loop.
#[inline]
pub(crate) fn gradient_into(y: &[f64], gamma: f64, out: &mut [f64]) {
    let n = y.len();
    for i in 0..n {
        let up = y[(i + 1) % n];
        let down = y[(i + n - 1) % n];
        out[i] = onsite_prime(y[i]) - 0.5 * gamma * (up - 2.0 * y[i] + down);
    }
}

/// Interface energy W(y) = ½ Σ_i (y^{i+1} − y^i)², the squared deviation from
/// a synchronized (uniform) configuration. For coupling at or above the
/// synchronization threshold it never increases along the noiseless flow.
pub fn interface_energy(y: &[f64]) -> f64 {
    let n = y.len();
    let mut w = 0.0;
    for i in 0..n {
        let d = y[(i + 1) % n] - y[i];
        w += d * d;
    }
    0.5 * w
}
