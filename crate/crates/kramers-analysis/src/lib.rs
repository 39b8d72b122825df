//! Spectral linearization data, regularized spectral determinants, and sharp
//! mean transition-time predictions for overdamped double-well field dynamics
//! on one- and two-dimensional tori.
//!
//! The dynamics relax the energy
//! `V(φ) = ∫ (½|∇φ|² − ½φ² + ¼φ⁴)` over the torus of side `l`, whose uniform
//! states `φ ≡ ±1` are the two wells while `φ ≡ 0` is the lowest saddle
//! between them whenever `l < 2π`.  Everything in this crate is computable
//! from the linearization spectra at those three states:
//!
//! * [`hessian_spectrum_1d`] — the curvatures `μ_k = λ_k − 1` (saddle) and
//!   `ν_k = λ_k + 2` (wells), with `λ_k = (2πk/l)²`;
//! * [`fredholm_det_1d`] — the convergent determinant ratio
//!   `det(Id + 3(−Δ − 1)⁻¹) = Π ν_k/μ_k`, evaluated by a truncated product
//!   plus an analytically summed tail, together with its closed form;
//! * [`carleman_det2`] — the Carleman (trace-subtracted) determinant
//!   `det₂(Id + cA) = Π (1 + c a_k) e^{−c a_k}` needed in two dimensions,
//!   where the plain product diverges;
//! * [`eyring_kramers_1d`] / [`eyring_kramers_2d`] — the resulting sharp
//!   prefactor and mean transition time `prefactor · exp(barrier/ε)`;
//! * [`period_function`] — the period of the planar orbits of the frozen
//!   (zero-noise, spatially homogeneous) Hamiltonian flow, which controls
//!   the bifurcation cascade of non-uniform saddles as `l` grows past `2π`.
//!
//! All determinant-like quantities are returned as [`SignedDet`] (sign and
//! log-magnitude) so that products stay finite far beyond the overflow range
//! of `f64`.

pub mod determinant;
pub mod period;
pub mod predict;
pub mod quad;
pub mod spectrum;

pub use determinant::{
    carleman_det2, fredholm_det_1d, fredholm_det_1d_analytic, spectral_cross_trace,
    spectral_product, spectral_trace, Dim, SignedDet,
};
pub use period::period_function;
pub use predict::{eyring_kramers_1d, eyring_kramers_2d, EyringKramers};
pub use spectrum::{hessian_spectrum_1d, laplacian_eigenvalue_1d, HessianSpectrum1d};

/// Errors produced by spectral and predictive routines.
#[derive(Debug, thiserror::Error)]
pub enum KramersError {
    /// A parameter is outside the domain where the quantity is defined.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// An eigenvalue hits a pole of the resolvent factor `1/(λ + b)`.
    #[error("spectral pole: {0}")]
    SpectralPole(String),
    /// A determinant factor vanishes, so the log-determinant is undefined.
    #[error("degenerate determinant factor: {0}")]
    DegenerateFactor(String),
}

pub type Result<T> = std::result::Result<T, KramersError>;
