//! A ring of N coupled bistable particles: each site sits in the double-well
//! potential U(ξ) = ¼(ξ²−1)² and is harmonically coupled to its cyclic
//! neighbors with strength γ. The crate provides the potential landscape and
//! its spectra at the uniform stationary points, Euler–Maruyama sampling of
//! the overdamped Langevin dynamics, batch transition-time experiments, the
//! Eyring–Kramers mean-time prediction, and the path-space action functional.

mod action;
mod batch;
mod model;
mod predict;
mod simulate;
mod spectrum;

pub use action::rate_functional_lattice;
pub use batch::{
    transition_time_batch, write_batch_csv, BatchConfig, BatchResult, BatchSummary, RunRecord,
};
pub use model::{interface_energy, potential_energy, potential_gradient, LatticeState};
pub use predict::{eyring_kramers_prefactor, eyring_kramers_time};
pub use simulate::{em_simulate, em_trace, SdeConfig, SimResult, StopEvent};
pub use spectrum::{gamma_one, lattice_spectrum, LatticeSpectrum};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("state became non-finite at t = {t}")]
    NumericalAbort { t: f64 },
}

pub type Result<T> = std::result::Result<T, LatticeError>;
