//! Wick powers on value grids and the two-dimensional counterterm constant.

use crate::hermite::hermite;
use crate::modes::ModeSet;
use crate::{GaussError, Result};

/// Apply the Wick power `:φᵖ:(x) = H_p(φ(x); c)` pointwise on a value grid,
/// where `c` is the Wick (variance) constant of the field.
pub fn wick_power_grid(grid: &[f64], power: u32, c: f64) -> Vec<f64> {
    grid.iter().map(|&v| hermite(power, v, c)).collect()
}

/// Counterterm constant of the two-dimensional renormalized dynamics at
/// Galerkin cutoff `n` on the torus of side `l`:
///
/// `C(n, l, θ) = θ + (1/l²) Σ_{‖k‖₁ ≤ n} 1/|λ_k − 1|`,  `λ_k = (2π‖k‖/l)²`.
///
/// The sum grows like `log n / (2π)`; the finite offset `θ` parametrizes the
/// renormalization convention and shifts the predicted mean transition time
/// by exactly `e^{−3θ/2}`.  Fails if some retained `λ_k = 1` (`l` a multiple
/// of `2π‖k‖` for a lattice vector in the ball).
pub fn galerkin_counterterm_2d(l: f64, n: usize, theta: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(GaussError::InvalidParameter(
            "finite part θ must be finite".into(),
        ));
    }
    let modes = ModeSet::new(2, n)?;
    let mut sum = 0.0;
    for i in 0..modes.len() {
        let denom = modes.lambda(l, i) - 1.0;
        if denom.abs() < 1e-12 {
            return Err(GaussError::SpectralDegeneracy(format!(
                "mode {:?} sits on the resonance λ = 1",
                modes.vectors()[i]
            )));
        }
        sum += 1.0 / denom.abs();
    }
    Ok(theta + sum / (l * l))
}
