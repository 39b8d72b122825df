//! Canonical Fourier mode truncations on the torus.
//!
//! A [`ModeSet`] is the ℓ¹ ball `{k ∈ Zᵈ : |k₁| + … + |k_d| ≤ n}` for
//! `d ∈ {1, 2}`, enumerated in a fixed deterministic order.  Every lattice
//! vector indexes one *real* degree of freedom: vectors in the positive
//! half-space carry cosine amplitudes, their negatives carry sine
//! amplitudes, and the origin carries the constant mode (see
//! [`crate::field::SpectralField`] for the exact basis).

use crate::{GaussError, Result};
use std::collections::HashMap;
use std::f64::consts::PI;

/// A deterministic enumeration of the lattice modes `‖k‖₁ ≤ n` in `Zᵈ`.
#[derive(Debug, Clone)]
pub struct ModeSet {
    dim: u8,
    n: usize,
    vectors: Vec<[i32; 2]>,
    index: HashMap<[i32; 2], usize>,
}

impl ModeSet {
    /// Build the ℓ¹ ball of radius `n` in dimension `dim ∈ {1, 2}`.
    pub fn new(dim: u8, n: usize) -> Result<Self> {
        if !(dim == 1 || dim == 2) {
            return Err(GaussError::InvalidParameter(format!(
                "mode sets are provided in dimensions 1 and 2, got {dim}"
            )));
        }
        if n == 0 || n > 1 << 14 {
            return Err(GaussError::InvalidParameter(format!(
                "mode cutoff must lie in 1..=16384, got {n}"
            )));
        }
        let ni = n as i32;
        let mut vectors = Vec::new();
        match dim {
            1 => {
                for k in -ni..=ni {
                    vectors.push([k, 0]);
                }
            }
            _ => {
                for k1 in -ni..=ni {
                    let rem = ni - k1.abs();
                    for k2 in -rem..=rem {
                        vectors.push([k1, k2]);
                    }
                }
            }
        }
        let index = vectors
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, i))
            .collect();
        Ok(ModeSet {
            dim,
            n,
            vectors,
            index,
        })
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn cutoff(&self) -> usize {
        self.n
    }

    /// Number of retained lattice vectors (= real degrees of freedom).
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The retained lattice vectors in enumeration order.
    pub fn vectors(&self) -> &[[i32; 2]] {
        &self.vectors
    }

    /// Position of lattice vector `k` in the enumeration, if retained.
    pub fn index_of(&self, k: [i32; 2]) -> Option<usize> {
        self.index.get(&k).copied()
    }

    /// Laplacian eigenvalue `λ_k = (2π/l)² ‖k‖₂²` of the `i`-th mode.
    pub fn lambda(&self, l: f64, i: usize) -> f64 {
        let k = self.vectors[i];
        let base = 2.0 * PI / l;
        base * base * (k[0] as f64 * k[0] as f64 + k[1] as f64 * k[1] as f64)
    }

    /// Whether `k` lies in the positive half-space (cosine amplitudes).
    ///
    /// The rule is lexicographic in `(k₂, k₁)`: `k₂ > 0`, or `k₂ = 0` and
    /// `k₁ > 0`.  Exactly one of `k`, `−k` is positive for `k ≠ 0`.
    pub fn is_positive_half(k: [i32; 2]) -> bool {
        k[1] > 0 || (k[1] == 0 && k[0] > 0)
    }
}
