//! Construction and validation of reversible chains.

use crate::{MarkovError, Result};
use std::collections::VecDeque;

const ROW_SUM_TOL: f64 = 1e-9;
const BALANCE_TOL: f64 = 1e-9;

/// A finite reversible Markov chain: row-stochastic transitions with a
/// strictly positive stationary measure satisfying detailed balance.
#[derive(Debug, Clone)]
pub struct ReversibleChain {
    pub(crate) rows: Vec<Vec<(usize, f64)>>,
    pub(crate) pi: Vec<f64>,
    pub(crate) dense_limit: usize,
}

impl ReversibleChain {
    /// Default state count up to which linear systems use dense LU.
    pub const DEFAULT_DENSE_LIMIT: usize = 2000;

    /// Build a chain from transition edges `(x, y, p(x,y))`.
    ///
    /// Missing self-loops are fine; rows must sum to one.  If `pi` is given
    /// it is validated against detailed balance and normalized; otherwise
    /// the stationary measure is derived from the balance relations along
    /// the support graph (which must be connected).
    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)], pi: Option<&[f64]>) -> Result<Self> {
        if n == 0 {
            return Err(MarkovError::InvalidChain("chain has no states".into()));
        }
        let mut rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
        for &(x, y, p) in edges {
            if x >= n || y >= n {
                return Err(MarkovError::InvalidChain(format!(
                    "edge ({x},{y}) outside the state space 0..{n}"
                )));
            }
            if !p.is_finite() || !(0.0..=1.0 + 1e-12).contains(&p) {
                return Err(MarkovError::InvalidChain(format!(
                    "transition probability p({x},{y}) = {p} outside [0,1]"
                )));
            }
            if p == 0.0 {
                continue;
            }
            if rows[x].iter().any(|&(t, _)| t == y) {
                return Err(MarkovError::InvalidChain(format!(
                    "duplicate edge ({x},{y})"
                )));
            }
            rows[x].push((y, p));
        }
        for (x, row) in rows.iter_mut().enumerate() {
            row.sort_by_key(|&(t, _)| t);
            let total: f64 = row.iter().map(|&(_, p)| p).sum();
            if (total - 1.0).abs() > ROW_SUM_TOL {
                return Err(MarkovError::InvalidChain(format!(
                    "row {x} sums to {total}, not 1"
                )));
            }
        }
        // Support symmetry is necessary for detailed balance with π > 0.
        for (x, row) in rows.iter().enumerate() {
            for &(y, _) in row {
                if x != y && !rows[y].iter().any(|&(t, _)| t == x) {
                    return Err(MarkovError::InvalidChain(format!(
                        "p({x},{y}) > 0 but p({y},{x}) = 0: support is not symmetric"
                    )));
                }
            }
        }
        let pi = match pi {
            Some(values) => {
                if values.len() != n {
                    return Err(MarkovError::InvalidChain(format!(
                        "stationary measure has {} entries for {n} states",
                        values.len()
                    )));
                }
                if let Some((x, &w)) = values
                    .iter()
                    .enumerate()
                    .find(|(_, &w)| !(w.is_finite() && w > 0.0))
                {
                    return Err(MarkovError::InvalidChain(format!(
                        "stationary weight π({x}) = {w} must be positive"
                    )));
                }
                values.to_vec()
            }
            None => derive_pi(&rows)?,
        };
        let chain = ReversibleChain {
            rows,
            pi,
            dense_limit: Self::DEFAULT_DENSE_LIMIT,
        };
        chain.check_detailed_balance()?;
        Ok(chain.normalized())
    }

    /// Build a chain from a dense transition matrix.
    pub fn from_dense(p: &[Vec<f64>], pi: Option<&[f64]>) -> Result<Self> {
        let n = p.len();
        let mut edges = Vec::new();
        for (x, row) in p.iter().enumerate() {
            if row.len() != n {
                return Err(MarkovError::InvalidChain(
                    "transition matrix must be square".into(),
                ));
            }
            for (y, &v) in row.iter().enumerate() {
                if v != 0.0 {
                    edges.push((x, y, v));
                }
            }
        }
        Self::from_edges(n, &edges, pi)
    }

    /// Override the dense-solver size threshold (numerical strategy knob).
    pub fn with_dense_limit(mut self, limit: usize) -> Self {
        self.dense_limit = limit;
        self
    }

    /// Number of states.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Normalized stationary distribution.
    pub fn pi(&self) -> &[f64] {
        &self.pi
    }

    /// Transition probability `p(x, y)`.
    pub fn prob(&self, x: usize, y: usize) -> f64 {
        self.rows[x]
            .iter()
            .find(|&&(t, _)| t == y)
            .map_or(0.0, |&(_, p)| p)
    }

    /// Nonzero transitions out of `x` as `(target, probability)`.
    pub fn row(&self, x: usize) -> &[(usize, f64)] {
        &self.rows[x]
    }

    fn normalized(mut self) -> Self {
        let total: f64 = self.pi.iter().sum();
        for w in &mut self.pi {
            *w /= total;
        }
        self
    }

    fn check_detailed_balance(&self) -> Result<()> {
        for (x, row) in self.rows.iter().enumerate() {
            for &(y, p) in row {
                if y <= x {
                    continue;
                }
                let fwd = self.pi[x] * p;
                let bwd = self.pi[y] * self.prob(y, x);
                if (fwd - bwd).abs() > BALANCE_TOL * (fwd + bwd) {
                    return Err(MarkovError::InvalidChain(format!(
                        "detailed balance fails on edge ({x},{y}): {fwd} vs {bwd}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Validate a pair of disjoint nonempty target sets.
    pub(crate) fn check_sets(&self, a: &[usize], b: &[usize]) -> Result<()> {
        for (name, set) in [("A", a), ("B", b)] {
            if set.is_empty() {
                return Err(MarkovError::InvalidInput(format!("set {name} is empty")));
            }
            let mut seen = vec![false; self.len()];
            for &x in set {
                if x >= self.len() {
                    return Err(MarkovError::InvalidInput(format!(
                        "state {x} in {name} outside the state space"
                    )));
                }
                if seen[x] {
                    return Err(MarkovError::InvalidInput(format!(
                        "state {x} repeated in {name}"
                    )));
                }
                seen[x] = true;
            }
        }
        if a.iter().any(|x| b.contains(x)) {
            return Err(MarkovError::InvalidInput(
                "target sets A and B must be disjoint".into(),
            ));
        }
        Ok(())
    }
}

/// Derive the stationary measure from detailed balance along the support
/// graph: fix π(0) = 1 and propagate π(y) = π(x) p(x,y)/p(y,x).
fn derive_pi(rows: &[Vec<(usize, f64)>]) -> Result<Vec<f64>> {
    let n = rows.len();
    let mut pi = vec![f64::NAN; n];
    pi[0] = 1.0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &(y, pxy) in &rows[x] {
            if y == x {
                continue;
            }
            let pyx = rows[y]
                .iter()
                .find(|&&(t, _)| t == x)
                .map(|&(_, p)| p)
                .expect("support symmetry was checked");
            let candidate = pi[x] * pxy / pyx;
            if pi[y].is_nan() {
                pi[y] = candidate;
                queue.push_back(y);
            } else if (pi[y] - candidate).abs() > BALANCE_TOL * (pi[y] + candidate) {
                return Err(MarkovError::InvalidChain(format!(
                    "balance relations are inconsistent around state {y}: \
                     the chain is not reversible"
                )));
            }
        }
    }
    if let Some(x) = pi.iter().position(|w| w.is_nan()) {
        return Err(MarkovError::InvalidChain(format!(
            "state {x} is unreachable from state 0; provide π explicitly \
             or restrict to one communicating class"
        )));
    }
    Ok(pi)
}
