//! Large-deviation action of a sampled field path.
//!
//! The action of a path `γ` is `½ ∫dt ∫dx (∂_tγ − Δγ − γ + γ³)²`.  On a
//! snapshot sequence it is evaluated with the midpoint rule in time (time
//! derivative by central difference, spatial terms at the interval
//! midpoint) and *exact* spatial quadrature: the integrand square of a
//! band-limited field has bandwidth `6n`, so the rectangle rule on a fine
//! enough grid integrates it without quadrature error.

use crate::dynamics::laplacian;
use crate::{Result, SpdeError};
use gaussian_calculus::field::smooth_grid_size;
use gaussian_calculus::SpectralField;

/// A time-ordered sequence of field snapshots.
#[derive(Debug, Clone, Default)]
pub struct PathSample {
    times: Vec<f64>,
    fields: Vec<SpectralField>,
}

impl PathSample {
    pub fn new() -> Self {
        PathSample::default()
    }

    /// Append a snapshot.  Times must be strictly increasing and all
    /// snapshots must live on the same mode set and torus.
    pub fn push(&mut self, t: f64, field: SpectralField) -> Result<()> {
        if !t.is_finite() {
            return Err(SpdeError::InvalidParameter(format!(
                "snapshot time must be finite, got {t}"
            )));
        }
        if let Some(&prev) = self.times.last() {
            if t <= prev {
                return Err(SpdeError::InvalidParameter(format!(
                    "snapshot times must increase strictly: {t} after {prev}"
                )));
            }
        }
        if let Some(first) = self.fields.first() {
            let same = first.modes().dim() == field.modes().dim()
                && first.modes().cutoff() == field.modes().cutoff()
                && first.l() == field.l();
            if !same {
                return Err(SpdeError::InvalidParameter(
                    "snapshots must share one mode set and torus".into(),
                ));
            }
        }
        self.times.push(t);
        self.fields.push(field);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn fields(&self) -> &[SpectralField] {
        &self.fields
    }

    pub fn first(&self) -> Option<&SpectralField> {
        self.fields.first()
    }

    pub fn last(&self) -> Option<&SpectralField> {
        self.fields.last()
    }

    /// The time-reversed path on the same (shifted) time grid:
    /// `γ'(t) = γ(T − t)` with `T` the final time.
    pub fn reversed(&self) -> PathSample {
        let t_end = *self.times.last().unwrap_or(&0.0);
        let times = self.times.iter().rev().map(|t| t_end - t).collect();
        let fields = self.fields.iter().rev().cloned().collect();
        PathSample { times, fields }
    }
}

/// Evaluate the action `½ ∫∫ (∂_tγ − Δγ − γ + γ³)²` of a sampled path.
///
/// Second-order accurate in the snapshot spacing; exact in space.
pub fn rate_functional_field(path: &PathSample) -> Result<f64> {
    if path.len() < 2 {
        return Err(SpdeError::InvalidParameter(
            "need at least two snapshots to integrate a path".into(),
        ));
    }
    let first = &path.fields[0];
    let modes = first.modes().clone();
    let l = first.l();
    let d = modes.dim() as usize;
    let m = smooth_grid_size(6 * modes.cutoff() + 1);
    let cell = (l / m as f64).powi(d as i32);

    let mut total = 0.0;
    for i in 0..path.len() - 1 {
        let h = path.times[i + 1] - path.times[i];
        let (a, b) = (&path.fields[i], &path.fields[i + 1]);
        let mut mid = a.clone();
        let mut dtf = a.clone();
        for (j, (cm, cd)) in mid
            .coeffs_mut()
            .iter_mut()
            .zip(dtf.coeffs_mut().iter_mut())
            .enumerate()
        {
            let (ua, ub) = (a.coeffs()[j], b.coeffs()[j]);
            *cm = 0.5 * (ua + ub);
            *cd = (ub - ua) / h;
        }
        let g_mid = mid.to_grid(m)?;
        let g_lap = laplacian(&mid).to_grid(m)?;
        let g_dt = dtf.to_grid(m)?;
        let mut sum = 0.0;
        for j in 0..g_mid.len() {
            let w = g_dt[j] - g_lap[j] - g_mid[j] + g_mid[j] * g_mid[j] * g_mid[j];
            sum += w * w;
        }
        total += h * sum;
    }
    Ok(0.5 * total * cell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gaussian_calculus::ModeSet;
    use std::sync::Arc;

    fn uniform(l: f64, n: usize, v: f64) -> SpectralField {
        let modes = Arc::new(ModeSet::new(1, n).unwrap());
        let mut f = SpectralField::zeros(modes, l).unwrap();
        f.set_coeff([0, 0], v * l.sqrt()).unwrap();
        f
    }

    #[test]
    fn push_enforces_order_and_compatibility() {
        let mut p = PathSample::new();
        p.push(0.0, uniform(1.0, 4, 0.0)).unwrap();
        assert!(p.push(0.0, uniform(1.0, 4, 0.1)).is_err());
        assert!(p.push(-1.0, uniform(1.0, 4, 0.1)).is_err());
        assert!(p.push(1.0, uniform(1.0, 5, 0.1)).is_err());
        assert!(p.push(1.0, uniform(2.0, 4, 0.1)).is_err());
        p.push(1.0, uniform(1.0, 4, 0.1)).unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn too_short_paths_are_rejected() {
        let mut p = PathSample::new();
        assert!(rate_functional_field(&p).is_err());
        p.push(0.0, uniform(1.0, 4, 0.3)).unwrap();
        assert!(rate_functional_field(&p).is_err());
    }

    #[test]
    fn constant_uniform_path_closed_form() {
        // γ ≡ c over [0, T]: action = ½ T lᵈ (c³ − c)².
        let (l, c, t_end) = (1.8, 0.6, 2.5);
        let mut p = PathSample::new();
        p.push(0.0, uniform(l, 6, c)).unwrap();
        p.push(t_end, uniform(l, 6, c)).unwrap();
        let want = 0.5 * t_end * l * (c * c * c - c).powi(2);
        let got = rate_functional_field(&p).unwrap();
        assert!((got - want).abs() < 1e-12 * want.max(1.0), "{got} vs {want}");
    }

    #[test]
    fn constant_single_mode_path_matches_dense_quadrature() {
        // γ = u·e_k held fixed: the integrand (λ−1)u e_k + u³ e_k³ is a trig
        // polynomial; integrate its square on a dense grid directly.
        let (l, u, t_end, k) = (2.0, 0.8, 1.0, 2i32);
        let modes = Arc::new(ModeSet::new(1, 4).unwrap());
        let mut f = SpectralField::zeros(modes.clone(), l).unwrap();
        f.set_coeff([k, 0], u).unwrap();
        let lam = modes.lambda(l, modes.index_of([k, 0]).unwrap());
        let mut p = PathSample::new();
        p.push(0.0, f.clone()).unwrap();
        p.push(t_end, f).unwrap();

        let m = 4096;
        let mut integral = 0.0;
        for j in 0..m {
            let x = l * j as f64 / m as f64;
            let e = (2.0 / l).sqrt() * (2.0 * std::f64::consts::PI * k as f64 * x / l).cos();
            let w = (lam - 1.0) * u * e + (u * e).powi(3);
            integral += w * w;
        }
        integral *= l / m as f64;
        let want = 0.5 * t_end * integral;
        let got = rate_functional_field(&p).unwrap();
        assert!(
            (got - want).abs() < 1e-10 * want,
            "{got} vs {want}"
        );
    }

    #[test]
    fn reversal_flips_order_and_preserves_spacing() {
        let mut p = PathSample::new();
        p.push(0.0, uniform(1.0, 4, -1.0)).unwrap();
        p.push(0.5, uniform(1.0, 4, -0.5)).unwrap();
        p.push(2.0, uniform(1.0, 4, 0.9)).unwrap();
        let r = p.reversed();
        assert_eq!(r.times(), &[0.0, 1.5, 2.0]);
        assert_eq!(
            r.fields()[0].coeffs(),
            p.fields()[2].coeffs(),
            "reversal starts at the old endpoint"
        );
        assert_eq!(r.fields()[2].coeffs(), p.fields()[0].coeffs());
    }
}
