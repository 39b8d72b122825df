//! Spectral Galerkin integration of the stochastic Allen–Cahn equation on
//! one- and two-dimensional tori, with the exactly solvable linear pieces
//! factored out.
//!
//! * [`dynamics`] — heat flow, exact Ornstein–Uhlenbeck updates for the
//!   stochastic convolution, and an exponential-integrator step for the full
//!   nonlinear dynamics (with the Wick mass counterterm in two dimensions);
//! * [`experiment`] — parallel well-to-well transition-time measurements
//!   with reproducible per-replica noise streams;
//! * [`rate`] — the large-deviation action of a sampled path, evaluated by
//!   exact spectral quadrature of the integrand;
//! * [`quadrature`] — the one-dimensional committor and mean-hitting-time
//!   integral formulas, for cross-checking simulations against potential
//!   theory.

pub mod config;
pub mod dynamics;
pub mod experiment;
pub mod quadrature;
pub mod rate;

pub use config::{Dealiasing, SpdeConfig};
pub use dynamics::{
    heat_semigroup, laplacian, potential_energy_field, sobolev_norm, stochastic_convolution_step,
    transverse_sobolev_norm, Solver, BLOWUP_LIMIT,
};
pub use experiment::{simulate_path, transition_time_experiment, RunOutcome, TransitionSummary};
pub use quadrature::{committor_1d_quadrature, kramers_1d_quadrature};
pub use rate::{rate_functional_field, PathSample};

/// Errors produced by the SPDE integrator and its analysis routines.
#[derive(Debug, thiserror::Error)]
pub enum SpdeError {
    /// A parameter is outside the domain where the operation is defined.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// The field norm crossed the abort threshold (the continuum dynamics
    /// cannot explode, so this indicates a too-coarse time step).
    #[error("field blew up at t = {t}: ‖φ‖_L² = {norm:.3e} exceeds {limit:.1e}")]
    BlowUp { t: f64, norm: f64, limit: f64 },
    /// A spectral-field operation failed.
    #[error(transparent)]
    Field(#[from] gaussian_calculus::GaussError),
    /// A transition-time prediction failed.
    #[error(transparent)]
    Prediction(#[from] kramers_analysis::KramersError),
}

pub type Result<T> = std::result::Result<T, SpdeError>;
