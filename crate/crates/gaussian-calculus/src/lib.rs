//! Gaussian calculus for lattice-truncated free fields on tori.
//!
//! The crate provides the shared spectral infrastructure of the field
//! simulations and the exactly computable Gaussian quantities built on it:
//!
//! * [`modes::ModeSet`] — canonical ℓ¹-ball Fourier mode truncations in one
//!   and two dimensions, shared by samplers and solvers so that refining the
//!   cutoff keeps the common modes aligned;
//! * [`field::SpectralField`] — real fields stored by orthonormal Fourier
//!   coefficients, with exact FFT transforms to and from value grids;
//! * [`gff::GffSpec`] — Gaussian free field sampling with per-mode keyed
//!   randomness, so that samples at different cutoffs share their common
//!   mode draws (common random numbers across refinements);
//! * [`hermite`] / [`wick`] — variance-parametrized Hermite polynomials and
//!   Wick powers, with the counterterm constants of the two-dimensional
//!   renormalized dynamics;
//! * [`isserlis`] — exact Gaussian moments by recursive pairing;
//! * [`diagrams`] — the divergent and convergent mode sums (tadpole, triple
//!   and quadruple pairings, sunset) entering the three-dimensional
//!   renormalization constants, evaluated by padded FFT convolution.

pub mod diagrams;
pub mod field;
pub mod gff;
pub mod hermite;
pub mod isserlis;
pub mod modes;
pub mod wick;

pub use diagrams::{green_power_integral, renorm_constants_3d, RenormConstants3d};
pub use field::SpectralField;
pub use gff::{keyed_rng, pack_mode, GffSpec};
pub use hermite::{hermite, hermite_generating};
pub use isserlis::isserlis_moment;
pub use modes::ModeSet;
pub use wick::{galerkin_counterterm_2d, wick_power_grid};

/// Errors produced by Gaussian-field routines.
#[derive(Debug, thiserror::Error)]
pub enum GaussError {
    /// A parameter is outside the domain where the quantity is defined.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// A retained mode hits a pole or produces a non-positive variance.
    #[error("spectral degeneracy: {0}")]
    SpectralDegeneracy(String),
}

pub type Result<T> = std::result::Result<T, GaussError>;
