//! Potential theory on finite reversible Markov chains.
//!
//! A [`ReversibleChain`] is a row-stochastic matrix `p` on states
//! `0..n` together with a stationary measure `π` satisfying detailed
//! balance `π(x)p(x,y) = π(y)p(y,x)`.  On top of it the crate computes the
//! exact potential-theoretic quantities that control metastable transitions:
//!
//! * [`ReversibleChain::committor`] — the harmonic function `h` with
//!   `h = 1` on `A`, `h = 0` on `B`, interpolating the probability of
//!   reaching `A` before `B`;
//! * [`ReversibleChain::capacity`] — the Dirichlet form of the committor,
//!   equal to the equilibrium-measure mass `Σ_A π e_AB`;
//! * [`ReversibleChain::magic_mean_time`] — the exact mean hitting time of
//!   `B` started from the equilibrium distribution on `A`, computed as
//!   `Σ_{x∉B} π(x)h(x) / cap(A,B)`;
//! * [`ReversibleChain::dirichlet_upper_bound`] /
//!   [`ReversibleChain::thomson_lower_bound`] — the two variational
//!   principles that sandwich the capacity between any admissible test
//!   function and any unit flow;
//! * [`ReversibleChain::harmonic_flow`] — the optimizer of the flow
//!   principle, built from the committor;
//! * Monte Carlo estimators ([`ReversibleChain::mc_hitting_time`],
//!   [`ReversibleChain::mc_committor`]) for independent cross-checks.
//!
//! Linear systems are solved densely (LU) up to a configurable size and by
//! conjugate gradients on the detailed-balance-symmetrized operator above
//! it.

mod chain;
mod mc;
mod parse;
mod potential;
mod solve;

pub use chain::ReversibleChain;
pub use mc::StartLaw;
pub use potential::{MagicTime, UnitFlow};

/// Errors produced by chain construction and potential-theory routines.
#[derive(Debug, thiserror::Error)]
pub enum MarkovError {
    /// The transition data do not define a reversible chain.
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    /// Target sets, trial functions, or flows are malformed.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A linear solve failed to converge or was singular.
    #[error("solver failure: {0}")]
    SolveFailure(String),
}

pub type Result<T> = std::result::Result<T, MarkovError>;
