//! Monte Carlo estimators for independent cross-checks of the exact
//! potential-theoretic quantities.

use crate::chain::ReversibleChain;
use crate::{MarkovError, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Initial condition of a simulated trajectory.
pub enum StartLaw<'a> {
    /// Start from a fixed state.
    State(usize),
    /// Start from a probability vector over all states (need not be
    /// normalized).
    Weights(&'a [f64]),
}

/// Global step budget guarding against non-hitting simulations.
const STEP_BUDGET: u64 = 2_000_000_000;

impl ReversibleChain {
    fn sample_row(&self, x: usize, u: f64) -> usize {
        let mut acc = 0.0;
        let row = self.row(x);
        for &(y, p) in row {
            acc += p;
            if u < acc {
                return y;
            }
        }
        row.last().expect("rows are non-empty").0
    }

    fn sample_start(&self, start: &StartLaw, rng: &mut ChaCha8Rng) -> Result<usize> {
        match start {
            StartLaw::State(x) => {
                if *x >= self.len() {
                    return Err(MarkovError::InvalidInput(format!(
                        "start state {x} outside the state space"
                    )));
                }
                Ok(*x)
            }
            StartLaw::Weights(w) => {
                if w.len() != self.len() {
                    return Err(MarkovError::InvalidInput(
                        "start law length must equal the state count".into(),
                    ));
                }
                let total: f64 = w.iter().sum();
                if total <= 0.0 || !total.is_finite() || w.iter().any(|&v| v < 0.0 || !v.is_finite()) {
                    return Err(MarkovError::InvalidInput(
                        "start law must be nonnegative with positive mass".into(),
                    ));
                }
                let u: f64 = rng.gen::<f64>() * total;
                let mut acc = 0.0;
                for (x, &v) in w.iter().enumerate() {
                    acc += v;
                    if u < acc {
                        return Ok(x);
                    }
                }
                Ok(w.len() - 1)
            }
        }
    }

    /// Monte Carlo mean hitting time of `B`: returns `(mean, standard
    /// error)` over `runs` independent trajectories.
    pub fn mc_hitting_time(
        &self,
        start: &StartLaw,
        b: &[usize],
        runs: u32,
        seed: u64,
    ) -> Result<(f64, f64)> {
        if runs == 0 {
            return Err(MarkovError::InvalidInput("need at least one run".into()));
        }
        let in_b = self.membership(b)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        let mut budget = STEP_BUDGET;
        for _ in 0..runs {
            let mut x = self.sample_start(start, &mut rng)?;
            let mut steps = 0u64;
            while !in_b[x] {
                x = self.sample_row(x, rng.gen::<f64>());
                steps += 1;
                if budget == 0 {
                    return Err(MarkovError::SolveFailure(
                        "step budget exhausted before hitting B".into(),
                    ));
                }
                budget -= 1;
            }
            let t = steps as f64;
            sum += t;
            sum_sq += t * t;
        }
        let mean = sum / runs as f64;
        let var = (sum_sq / runs as f64 - mean * mean).max(0.0);
        Ok((mean, (var / runs as f64).sqrt()))
    }

    /// Monte Carlo committor estimate `P_x[hit A before B]` with standard
    /// error.
    pub fn mc_committor(
        &self,
        x: usize,
        a: &[usize],
        b: &[usize],
        runs: u32,
        seed: u64,
    ) -> Result<(f64, f64)> {
        self.check_sets(a, b)?;
        if runs == 0 {
            return Err(MarkovError::InvalidInput("need at least one run".into()));
        }
        if x >= self.len() {
            return Err(MarkovError::InvalidInput(format!(
                "state {x} outside the state space"
            )));
        }
        let in_a = self.membership(a)?;
        let in_b = self.membership(b)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut hits = 0u64;
        let mut budget = STEP_BUDGET;
        for _ in 0..runs {
            let mut y = x;
            loop {
                if in_a[y] {
                    hits += 1;
                    break;
                }
                if in_b[y] {
                    break;
                }
                y = self.sample_row(y, rng.gen::<f64>());
                if budget == 0 {
                    return Err(MarkovError::SolveFailure(
                        "step budget exhausted before reaching A or B".into(),
                    ));
                }
                budget -= 1;
            }
        }
        let p = hits as f64 / runs as f64;
        let se = (p * (1.0 - p) / runs as f64).sqrt();
        Ok((p, se))
    }

    fn membership(&self, set: &[usize]) -> Result<Vec<bool>> {
        let mut m = vec![false; self.len()];
        for &x in set {
            if x >= self.len() {
                return Err(MarkovError::InvalidInput(format!(
                    "state {x} outside the state space"
                )));
            }
            m[x] = true;
        }
        Ok(m)
    }
}
