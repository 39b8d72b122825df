//! Mode-sum diagram constants of the three-dimensional renormalized
//! dynamics on the unit torus.
//!
//! All sums run over the punctured ℓ¹ ball `K* = {k ∈ Z³ : 0 < ‖k‖₁ ≤ n}`
//! with propagator weights `v_k = 1/(λ_k − 1)`, `λ_k = (2π‖k‖₂)²`.  The
//! building block is the pair convolution `a_m = Σ_k v_k v_{m−k}` (both
//! factors in `K*`), which is computed exactly by a zero-padded FFT: the
//! cyclic grid is chosen at least `4n+1` wide per axis, so no wraparound
//! touches the support of the linear convolution.
//!
//! From `v` and `a` the crate assembles
//!
//! * `c1 = Σ v_k` — the tadpole sum, divergent linearly in `n`;
//! * `i3 = Σ_{m∈K*} a_m v_m` — the triple pairing `Σ_{k₁+k₂+k₃=0} v v v`,
//!   divergent logarithmically;
//! * `i4 = Σ_m a_m²` — the quadruple pairing `Σ_{k₁+⋯+k₄=0} v v v v`,
//!   divergent linearly;
//! * `sunset = Σ_m a_m³` — the two-vertex sunset sum, slowly divergent;
//!
//! and the renormalization constants proportional to them.

use crate::field::{ndfft, smooth_grid_size};
use crate::{GaussError, Result};
use rustfft::num_complex::Complex;

/// Diagram sums and renormalization constants at ℓ¹ cutoff `n`.
#[derive(Debug, Clone, Copy)]
pub struct RenormConstants3d {
    pub n: usize,
    /// Tadpole `Σ v_k`; the first (linearly divergent) counterterm.
    pub c1: f64,
    /// Triple pairing `Σ_{k₁+k₂+k₃=0} v v v`.
    pub i3: f64,
    /// Second counterterm in the potential-shift convention: `3! · i3`.
    pub c2: f64,
    /// The same diagram in the leaf-pairing convention: `i3 / 2`.
    pub c2_leaf: f64,
    /// Quadruple pairing `Σ_{k₁+k₂+k₃+k₄=0} v v v v`.
    pub i4: f64,
    /// Third constant `(4!/(2!·4²)) · i4 = 0.75 · i4`.
    pub c3: f64,
    /// Sunset sum `Σ_m (Σ_k v_k v_{m−k})³`.
    pub sunset: f64,
    /// Fourth constant `(2³/(3!·4³)) · C(4,2)³ · sunset = 4.5 · sunset`.
    pub c4: f64,
}

/// `λ_k − 1` at unit torus side.
fn denom(k: [i32; 3]) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let sq = (k[0] as f64).powi(2) + (k[1] as f64).powi(2) + (k[2] as f64).powi(2);
    two_pi * two_pi * sq - 1.0
}

fn check_cutoff(n: usize) -> Result<()> {
    if n == 0 || n > 256 {
        return Err(GaussError::InvalidParameter(format!(
            "3d diagram cutoff must lie in 1..=256, got {n}"
        )));
    }
    Ok(())
}

/// Iterate over the punctured ℓ¹ ball `K*`.
fn for_each_kstar(n: usize, mut f: impl FnMut([i32; 3], f64)) {
    let ni = n as i32;
    for k1 in -ni..=ni {
        for k2 in -(ni - k1.abs())..=(ni - k1.abs()) {
            let rem = ni - k1.abs() - k2.abs();
            for k3 in -rem..=rem {
                let k = [k1, k2, k3];
                if k != [0, 0, 0] {
                    f(k, 1.0 / denom(k));
                }
            }
        }
    }
}

struct PairConvolution {
    m: usize,
    /// Cyclic grid holding the (real) linear convolution `v ∗ v`.
    grid: Vec<Complex<f64>>,
}

impl PairConvolution {
    fn compute(n: usize) -> Self {
        let m = smooth_grid_size(4 * n + 1);
        let mut grid = vec![Complex::new(0.0, 0.0); m * m * m];
        let mi = m as i32;
        let bin = |k: i32| -> usize { k.rem_euclid(mi) as usize };
        for_each_kstar(n, |k, v| {
            let idx = (bin(k[0]) * m + bin(k[1])) * m + bin(k[2]);
            grid[idx] = Complex::new(v, 0.0);
        });
        let dims = [m, m, m];
        ndfft(&mut grid, &dims, false);
        for z in grid.iter_mut() {
            *z = *z * *z;
        }
        ndfft(&mut grid, &dims, true);
        let scale = 1.0 / (m * m * m) as f64;
        for z in grid.iter_mut() {
            *z *= scale;
        }
        PairConvolution { m, grid }
    }

    fn at(&self, k: [i32; 3]) -> f64 {
        let mi = self.m as i32;
        let bin = |k: i32| -> usize { k.rem_euclid(mi) as usize };
        self.grid[(bin(k[0]) * self.m + bin(k[1])) * self.m + bin(k[2])].re
    }
}

/// Compute all diagram sums and constants at cutoff `n`.
pub fn renorm_constants_3d(n: usize) -> Result<RenormConstants3d> {
    check_cutoff(n)?;
    let conv = PairConvolution::compute(n);
    let mut c1 = 0.0;
    let mut i3 = 0.0;
    for_each_kstar(n, |k, v| {
        c1 += v;
        i3 += conv.at(k) * v;
    });
    let mut i4 = 0.0;
    let mut sunset = 0.0;
    for z in &conv.grid {
        let a = z.re;
        i4 += a * a;
        sunset += a * a * a;
    }
    Ok(RenormConstants3d {
        n,
        c1,
        i3,
        c2: 6.0 * i3,
        c2_leaf: 0.5 * i3,
        i4,
        c3: 0.75 * i4,
        sunset,
        c4: 4.5 * sunset,
    })
}

/// Integral `∫ G^p` of the `p`-th power of the truncated kernel
/// `G(x) = Σ_{K*} v_k e^{2πik·x}` on the unit torus, `p ∈ {2, 3, 4}`:
/// equivalently the `p`-fold pairing sum `Σ_{k₁+⋯+k_p=0} v ⋯ v`.
pub fn green_power_integral(n: usize, power: u32) -> Result<f64> {
    check_cutoff(n)?;
    match power {
        2 => {
            let mut s = 0.0;
            for_each_kstar(n, |_, v| s += v * v);
            Ok(s)
        }
        3 => Ok(renorm_constants_3d(n)?.i3),
        4 => Ok(renorm_constants_3d(n)?.i4),
        _ => Err(GaussError::InvalidParameter(format!(
            "kernel power must be 2, 3, or 4, got {power}"
        ))),
    }
}
