//! Plain-text chain format.
//!
//! One directive per line; `#` starts a comment, blank lines are skipped:
//!
//! ```text
//! # transitions: <from> <to> <probability>
//! 0 1 0.5
//! 0 0 0.5
//! 1 0 1.0
//! # optional stationary weights (unnormalized): pi <state> <weight>
//! pi 0 2.0
//! pi 1 1.0
//! ```
//!
//! The state count is inferred from the largest index.  Weights, when
//! present, must be given for every state.

use crate::chain::ReversibleChain;
use crate::{MarkovError, Result};

impl ReversibleChain {
    /// Parse a chain from the plain-text format above.
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges: Vec<(usize, usize, f64)> = Vec::new();
        let mut pi_entries: Vec<(usize, f64)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: &str| {
                MarkovError::InvalidInput(format!("line {}: {msg}: '{raw}'", lineno + 1))
            };
            if fields[0] == "pi" {
                if fields.len() != 3 {
                    return Err(bad("expected 'pi <state> <weight>'"));
                }
                let x: usize = fields[1].parse().map_err(|_| bad("bad state index"))?;
                let w: f64 = fields[2].parse().map_err(|_| bad("bad weight"))?;
                pi_entries.push((x, w));
            } else {
                if fields.len() != 3 {
                    return Err(bad("expected '<from> <to> <probability>'"));
                }
                let x: usize = fields[0].parse().map_err(|_| bad("bad source state"))?;
                let y: usize = fields[1].parse().map_err(|_| bad("bad target state"))?;
                let p: f64 = fields[2].parse().map_err(|_| bad("bad probability"))?;
                edges.push((x, y, p));
            }
        }
        if edges.is_empty() {
            return Err(MarkovError::InvalidInput(
                "no transitions found in chain description".into(),
            ));
        }
        let n = edges
            .iter()
            .flat_map(|&(x, y, _)| [x, y])
            .chain(pi_entries.iter().map(|&(x, _)| x))
            .max()
            .unwrap()
            + 1;
        let pi = if pi_entries.is_empty() {
            None
        } else {
            let mut pi = vec![f64::NAN; n];
            for (x, w) in pi_entries {
                if x >= n {
                    return Err(MarkovError::InvalidInput(format!(
                        "pi entry for state {x} outside the state space"
                    )));
                }
                pi[x] = w;
            }
            if let Some(x) = pi.iter().position(|w| w.is_nan()) {
                return Err(MarkovError::InvalidInput(format!(
                    "stationary weight missing for state {x}"
                )));
            }
            Some(pi)
        };
        ReversibleChain::from_edges(n, &edges, pi.as_deref())
    }
}
