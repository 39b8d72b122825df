//! One-dimensional potential theory by direct quadrature.
//!
//! For the scalar diffusion `dy = −V'(y) dt + √(2ε) dW` the committor
//! between `A = (−∞, a]` and `B = [b, ∞)` and the mean hitting time of `A`
//! have closed integral forms; evaluating them by adaptive quadrature gives
//! sharp references against which simulations and asymptotic formulas are
//! checked.  All exponentials are max-shifted so the integrands stay inside
//! `f64` range even deep in the small-noise regime.

use crate::{Result, SpdeError};
use kramers_analysis::quad::adaptive_simpson;

fn check_eps(eps: f64) -> Result<()> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(SpdeError::InvalidParameter(format!(
            "noise strength must be positive and finite, got {eps}"
        )));
    }
    Ok(())
}

/// Largest sampled value of `f` on `[lo, hi]` (dense uniform scan).
fn sampled_max(f: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    let n = 2048;
    (0..=n)
        .map(|i| f(lo + (hi - lo) * i as f64 / n as f64))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Probability of reaching `[b, ∞)` before `(−∞, a]` starting from `y`:
/// `h(y) = ∫_y^b e^{V₀/ε} / ∫_a^b e^{V₀/ε}`.
pub fn committor_1d_quadrature(
    v0: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    eps: f64,
    y: f64,
) -> Result<f64> {
    check_eps(eps)?;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(SpdeError::InvalidParameter(format!(
            "need finite boundaries a < b, got a = {a}, b = {b}"
        )));
    }
    if !(a..=b).contains(&y) {
        return Err(SpdeError::InvalidParameter(format!(
            "the committor formula applies for y in [{a}, {b}], got {y}"
        )));
    }
    let shift = sampled_max(&v0, a, b) / eps;
    let f = |z: f64| (v0(z) / eps - shift).exp();
    let tol = 1e-13 * (b - a).max(1.0);
    let den = adaptive_simpson(f, a, b, tol, 48);
    if !(den.is_finite() && den > 0.0) {
        return Err(SpdeError::InvalidParameter(
            "the boundary-value weight ∫ e^{V₀/ε} is degenerate; check V₀".into(),
        ));
    }
    let num = adaptive_simpson(f, y, b, tol, 48);
    Ok((num / den).clamp(0.0, 1.0))
}

/// Upper truncation point for `∫ e^{−V/ε}`: the first point beyond which the
/// integrand is smaller than `e^{−60}` of its peak, found by doubling scans.
fn confinement_cutoff(v: &impl Fn(f64) -> f64, from: f64, eps: f64) -> Result<(f64, f64)> {
    let mut range = 4.0f64;
    loop {
        let lo = from;
        let hi = from + range;
        let n = 4096;
        let mut vmin = f64::INFINITY;
        for i in 0..=n {
            vmin = vmin.min(v(lo + (hi - lo) * i as f64 / n as f64));
        }
        if !vmin.is_finite() {
            return Err(SpdeError::InvalidParameter(
                "potential is not finite on the scanned range".into(),
            ));
        }
        if v(hi) >= vmin + 60.0 * eps && v(hi) >= v(hi - (hi - lo) / n as f64) {
            return Ok((hi, vmin));
        }
        range *= 2.0;
        if range > 1e6 {
            return Err(SpdeError::InvalidParameter(
                "potential does not confine: e^{−V/ε} has no decaying tail within 1e6".into(),
            ));
        }
    }
}

/// Mean hitting time of `A = (−∞, a]` from `y` for `dy = −V' dt + √(2ε) dW`:
/// `w(y) = (1/ε) ∫_a^y e^{V(z)/ε} [∫_z^∞ e^{−V(x)/ε} dx] dz` (0 inside `A`).
pub fn kramers_1d_quadrature(
    v: impl Fn(f64) -> f64,
    a: f64,
    eps: f64,
    y: f64,
) -> Result<f64> {
    check_eps(eps)?;
    if !(a.is_finite() && y.is_finite()) {
        return Err(SpdeError::InvalidParameter(format!(
            "need finite a and y, got a = {a}, y = {y}"
        )));
    }
    if y <= a {
        return Ok(0.0);
    }
    // Truncate the inner integral where e^{−V/ε} is dead relative to its
    // peak, and max-shift both exponentials.
    let (cutoff, vmin) = confinement_cutoff(&v, a, eps)?;
    let vmax = sampled_max(&v, a, y);
    let inner_tol = 1e-13 * (cutoff - a).max(1.0);
    let outer_tol = 1e-12 * (y - a).max(1.0);
    let inner = |z: f64| {
        adaptive_simpson(|x| (-(v(x) - vmin) / eps).exp(), z, cutoff, inner_tol, 48)
    };
    let outer = adaptive_simpson(
        |z| ((v(z) - vmax) / eps).exp() * inner(z),
        a,
        y,
        outer_tol,
        44,
    );
    let w = outer / eps * ((vmax - vmin) / eps).exp();
    if !w.is_finite() {
        return Err(SpdeError::InvalidParameter(
            "mean hitting time overflowed f64 range; the barrier/ε is too large".into(),
        ));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double_well(z: f64) -> f64 {
        0.25 * z.powi(4) - 0.5 * z * z
    }

    #[test]
    fn committor_boundary_values() {
        let h = |y: f64| committor_1d_quadrature(double_well, -1.0, 1.0, 0.05, y).unwrap();
        assert_eq!(h(-1.0), 1.0);
        assert_eq!(h(1.0), 0.0);
    }

    #[test]
    fn committor_flat_potential_is_linear() {
        for y in [-1.0, -0.3, 0.2, 0.9] {
            let h = committor_1d_quadrature(|_| 0.0, -1.0, 1.0, 0.1, y).unwrap();
            let want = (1.0 - y) / 2.0;
            assert!((h - want).abs() < 1e-12, "y={y}: {h} vs {want}");
        }
    }

    #[test]
    fn committor_symmetric_double_well_is_half_at_zero() {
        let h = committor_1d_quadrature(double_well, -1.0, 1.0, 0.05, 0.0).unwrap();
        assert!((h - 0.5).abs() < 1e-10);
    }

    #[test]
    fn committor_rejects_bad_inputs() {
        assert!(committor_1d_quadrature(|_| 0.0, 1.0, -1.0, 0.1, 0.0).is_err());
        assert!(committor_1d_quadrature(|_| 0.0, -1.0, 1.0, 0.0, 0.0).is_err());
        assert!(committor_1d_quadrature(|_| 0.0, -1.0, 1.0, 0.1, 2.0).is_err());
    }

    #[test]
    fn hitting_time_vanishes_inside_the_target() {
        assert_eq!(
            kramers_1d_quadrature(double_well, -1.0, 0.1, -1.0).unwrap(),
            0.0
        );
        assert_eq!(
            kramers_1d_quadrature(double_well, -1.0, 0.1, -1.7).unwrap(),
            0.0
        );
    }

    #[test]
    fn hitting_time_grows_with_distance_from_the_target() {
        let w1 = kramers_1d_quadrature(double_well, -1.0, 0.1, 0.5).unwrap();
        let w2 = kramers_1d_quadrature(double_well, -1.0, 0.1, 1.0).unwrap();
        assert!(0.0 < w1 && w1 < w2);
    }

    #[test]
    fn non_confining_potential_is_rejected() {
        assert!(kramers_1d_quadrature(|z| -z, -1.0, 0.1, 1.0).is_err());
    }
}
