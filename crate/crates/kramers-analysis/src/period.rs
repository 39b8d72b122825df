//! Period of the closed orbits of the frozen Hamiltonian flow
//! `q̈ = −q + q³` around the origin.
//!
//! These orbits organize the non-uniform stationary states of the field
//! dynamics: a stationary profile on a circle of circumference `l` must wind
//! around such an orbit, so new saddles bifurcate exactly when `l` crosses a
//! multiple of the orbit period.

use crate::quad::adaptive_simpson;
use crate::{KramersError, Result};
use std::f64::consts::FRAC_PI_2;

/// Period `T(e) = 2 ∮ dq / √(2e − q² + q⁴/2)` of the closed orbit with
/// energy `e ∈ (0, ¼)`.
///
/// The turning-point singularities are removed by the substitution
/// `q = q₊ sin u` with amplitude `q₊² = 1 − √(1 − 4e)`, which leaves the
/// smooth integrand `T(e) = 4 ∫₀^{π/2} du / √(1 − ½q₊²(1 + sin²u))`.
/// `T` increases from `2π` (harmonic limit `e → 0`) and diverges
/// logarithmically at the separatrix `e → ¼`.
pub fn period_function(e: f64) -> Result<f64> {
    if !(e.is_finite() && e > 0.0 && e < 0.25) {
        return Err(KramersError::InvalidParameter(format!(
            "orbit energy must lie strictly between 0 and 1/4, got {e}"
        )));
    }
    let qp2 = 1.0 - (1.0 - 4.0 * e).sqrt();
    let integrand = move |u: f64| {
        let s = u.sin();
        1.0 / (1.0 - 0.5 * qp2 * (1.0 + s * s)).sqrt()
    };
    Ok(4.0 * adaptive_simpson(integrand, 0.0, FRAC_PI_2, 1e-14, 52))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_energies_outside_the_well() {
        assert!(period_function(0.0).is_err());
        assert!(period_function(-0.1).is_err());
        assert!(period_function(0.25).is_err());
        assert!(period_function(0.3).is_err());
        assert!(period_function(f64::NAN).is_err());
    }
}
