//! Path-space action ½ ∫ ‖γ̇ + ∇V(γ)‖² dt for uniformly sampled paths.
//!
//! Along a solution of γ̇ = −∇V the integrand vanishes; along the reversed
//! flow γ̇ = +∇V the value telescopes to 2[V(γ(T)) − V(γ(0))].

use crate::model::{gradient_into, LatticeState};
use crate::{LatticeError, Result};

/// Trapezoidal discretization of the action. `path` holds states sampled at
/// uniform spacing `dt`; velocities use second-order differences (central in
/// the interior, one-sided at the ends).
pub fn rate_functional_lattice(path: &[Vec<f64>], dt: f64, gamma: f64) -> Result<f64> {
    if path.len() < 3 {
        return Err(LatticeError::InvalidParameter(
            "need at least three path samples".into(),
        ));
    }
    if dt <= 0.0 || !dt.is_finite() {
        return Err(LatticeError::InvalidParameter(format!(
            "sample spacing dt = {dt} must be positive"
        )));
    }
    let n = path[0].len();
    LatticeState::new(path[0].clone(), gamma)?;
    if path.iter().any(|p| p.len() != n) {
        return Err(LatticeError::InvalidParameter(
            "all path samples must have the same number of sites".into(),
        ));
    }

    let m = path.len();
    let mut grad = vec![0.0; n];
    let mut integrand = Vec::with_capacity(m);
    for j in 0..m {
        gradient_into(&path[j], gamma, &mut grad);
        let mut f = 0.0;
        for i in 0..n {
            let vel = if j == 0 {
                (-3.0 * path[0][i] + 4.0 * path[1][i] - path[2][i]) / (2.0 * dt)
            } else if j == m - 1 {
                (3.0 * path[m - 1][i] - 4.0 * path[m - 2][i] + path[m - 3][i]) / (2.0 * dt)
            } else {
                (path[j + 1][i] - path[j - 1][i]) / (2.0 * dt)
            };
            let r = vel + grad[i];
            f += r * r;
        }
        integrand.push(f);
    }
    let mut total = 0.5 * (integrand[0] + integrand[m - 1]);
    total += integrand[1..m - 1].iter().sum::<f64>();
    Ok(0.5 * dt * total)
}
