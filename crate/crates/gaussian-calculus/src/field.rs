//! Real fields on the torus stored by orthonormal Fourier coefficients,
//! with exact transforms to and from uniform value grids.
//!
//! The orthonormal real basis on the torus of side `l` (volume `lᵈ`) is
//!
//! * constant mode: `e₀(x) = l^{−d/2}`,
//! * for each lattice vector `k` in the positive half-space:
//!   `e_k(x) = √2 l^{−d/2} cos(2πk·x/l)` and
//!   `e_{−k}(x) = √2 l^{−d/2} sin(2πk·x/l)`,
//!
//! so the coefficient array of a [`SpectralField`] assigns the cosine
//! amplitude to `k` and the sine amplitude to `−k`.  With this normalization
//! `∫ φ² = Σ u_k²` exactly.

use crate::modes::ModeSet;
use crate::{GaussError, Result};
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use std::f64::consts::SQRT_2;
use std::sync::Arc;

type C64 = Complex<f64>;

/// In-place unnormalized multi-dimensional FFT (row-major layout, last index
/// fastest).  `inverse = true` applies `Σ X_k e^{+2πi kj/m}` per axis.
pub(crate) fn ndfft(data: &mut [C64], dims: &[usize], inverse: bool) {
    let total: usize = dims.iter().product();
    assert_eq!(data.len(), total, "data length must match grid dims");
    let mut planner = FftPlanner::new();
    for axis in 0..dims.len() {
        let len = dims[axis];
        let stride: usize = dims[axis + 1..].iter().product();
        let outer: usize = dims[..axis].iter().product();
        let fft = if inverse {
            planner.plan_fft_inverse(len)
        } else {
            planner.plan_fft_forward(len)
        };
        let mut line = vec![C64::default(); len];
        for o in 0..outer {
            for s in 0..stride {
                let base = o * len * stride + s;
                for (i, slot) in line.iter_mut().enumerate() {
                    *slot = data[base + i * stride];
                }
                fft.process(&mut line);
                for (i, slot) in line.iter().enumerate() {
                    data[base + i * stride] = *slot;
                }
            }
        }
    }
}

/// Smallest 5-smooth integer (`2^a 3^b 5^c`) that is `>= min`.
///
/// FFT sizes with only small prime factors keep the transforms fast.
pub fn smooth_grid_size(min: usize) -> usize {
    let mut best = usize::MAX;
    let mut p2 = 1usize;
    while p2 < min.saturating_mul(2) {
        let mut p23 = p2;
        while p23 < min.saturating_mul(2) {
            let mut p235 = p23;
            while p235 < min {
                p235 = p235.saturating_mul(5);
            }
            best = best.min(p235);
            p23 = p23.saturating_mul(3);
        }
        p2 = p2.saturating_mul(2);
    }
    best
}

/// A real field on the torus, stored as coefficients over a [`ModeSet`].
#[derive(Debug, Clone)]
pub struct SpectralField {
    l: f64,
    modes: Arc<ModeSet>,
    coeffs: Vec<f64>,
}

impl SpectralField {
    /// The zero field on the given mode set and torus side `l`.
    pub fn zeros(modes: Arc<ModeSet>, l: f64) -> Result<Self> {
        if !(l.is_finite() && l > 0.0) {
            return Err(GaussError::InvalidParameter(format!(
                "torus side must be positive and finite, got {l}"
            )));
        }
        let coeffs = vec![0.0; modes.len()];
        Ok(SpectralField { l, modes, coeffs })
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn modes(&self) -> &Arc<ModeSet> {
        &self.modes
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }

    /// Coefficient of lattice vector `k` (0 if outside the truncation).
    pub fn coeff(&self, k: [i32; 2]) -> f64 {
        self.modes
            .index_of(k)
            .map_or(0.0, |i| self.coeffs[i])
    }

    pub fn set_coeff(&mut self, k: [i32; 2], value: f64) -> Result<()> {
        match self.modes.index_of(k) {
            Some(i) => {
                self.coeffs[i] = value;
                Ok(())
            }
            None => Err(GaussError::InvalidParameter(format!(
                "mode {k:?} is outside the truncation"
            ))),
        }
    }

    /// Spatial average `(1/lᵈ) ∫ φ = u₀ · l^{−d/2}`.
    pub fn spatial_mean(&self) -> f64 {
        let i0 = self.modes.index_of([0, 0]).expect("mode sets contain 0");
        self.coeffs[i0] * self.l.powf(-(self.modes.dim() as f64) / 2.0)
    }

    /// `∫ φ² = Σ u_k²` (orthonormal basis).
    pub fn l2_norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|u| u * u).sum()
    }

    /// Sobolev norm `Σ (1 + ‖k‖₂²)^s u_k²` in the integer-frequency
    /// convention (the weight uses the lattice vector, not `2πk/l`).
    pub fn sobolev_norm_sq(&self, s: f64) -> f64 {
        self.modes
            .vectors()
            .iter()
            .zip(&self.coeffs)
            .map(|(k, u)| {
                let k2 = (k[0] as f64).powi(2) + (k[1] as f64).powi(2);
                (1.0 + k2).powf(s) * u * u
            })
            .sum()
    }

    /// Evaluate the field on the uniform `m^d` grid `x_j = l·j/m`
    /// (row-major, last axis fastest).  Exact for `m ≥ 2·cutoff + 1`.
    pub fn to_grid(&self, m: usize) -> Result<Vec<f64>> {
        let n = self.modes.cutoff();
        if m < 2 * n + 1 {
            return Err(GaussError::InvalidParameter(format!(
                "grid size {m} cannot resolve modes up to {n}; need at least {}",
                2 * n + 1
            )));
        }
        let d = self.modes.dim() as usize;
        let total = m.pow(d as u32);
        let mut data = vec![C64::default(); total];
        let vol_fac = self.l.powf(-(d as f64) / 2.0);
        let bin = |k: i32| -> usize { k.rem_euclid(m as i32) as usize };
        let flat = |k: [i32; 2]| -> usize {
            if d == 1 {
                bin(k[0])
            } else {
                bin(k[0]) * m + bin(k[1])
            }
        };
        for (i, &k) in self.modes.vectors().iter().enumerate() {
            if k == [0, 0] {
                data[0] += C64::new(self.coeffs[i] * vol_fac, 0.0);
            } else if ModeSet::is_positive_half(k) {
                let u_cos = self.coeffs[i];
                let u_sin = self.coeff([-k[0], -k[1]]);
                let c = C64::new(u_cos, -u_sin) * (vol_fac / SQRT_2);
                data[flat(k)] = c;
                data[flat([-k[0], -k[1]])] = c.conj();
            }
        }
        let dims: Vec<usize> = (0..d).map(|_| m).collect();
        ndfft(&mut data, &dims, true);
        Ok(data.into_iter().map(|z| z.re).collect())
    }

    /// Project grid values back onto the mode set (exact inverse of
    /// [`Self::to_grid`] for band-limited fields; otherwise the Galerkin
    /// projection of the grid function).
    pub fn from_grid(modes: Arc<ModeSet>, l: f64, grid: &[f64]) -> Result<Self> {
        let d = modes.dim() as usize;
        let m = match d {
            1 => grid.len(),
            _ => {
                let m = (grid.len() as f64).sqrt().round() as usize;
                if m * m != grid.len() {
                    return Err(GaussError::InvalidParameter(format!(
                        "2d grid length {} is not a perfect square",
                        grid.len()
                    )));
                }
                m
            }
        };
        let n = modes.cutoff();
        if m < 2 * n + 1 {
            return Err(GaussError::InvalidParameter(format!(
                "grid size {m} cannot resolve modes up to {n}"
            )));
        }
        let mut data: Vec<C64> = grid.iter().map(|&v| C64::new(v, 0.0)).collect();
        let dims: Vec<usize> = (0..d).map(|_| m).collect();
        ndfft(&mut data, &dims, false);
        let scale = 1.0 / m.pow(d as u32) as f64;
        let vol_fac = l.powf(d as f64 / 2.0);
        let bin = |k: i32| -> usize { k.rem_euclid(m as i32) as usize };
        let flat = |k: [i32; 2]| -> usize {
            if d == 1 {
                bin(k[0])
            } else {
                bin(k[0]) * m + bin(k[1])
            }
        };
        let mut field = SpectralField::zeros(modes.clone(), l)?;
        for (i, &k) in modes.vectors().iter().enumerate() {
            if k == [0, 0] {
                field.coeffs[i] = data[0].re * scale * vol_fac;
            } else if ModeSet::is_positive_half(k) {
                let c = data[flat(k)] * scale;
                field.coeffs[i] = SQRT_2 * vol_fac * c.re;
                let j = modes.index_of([-k[0], -k[1]]).expect("ball is symmetric");
                field.coeffs[j] = -SQRT_2 * vol_fac * c.im;
            }
        }
        Ok(field)
    }
}
