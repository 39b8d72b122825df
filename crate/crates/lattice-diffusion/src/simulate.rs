//! Explicit Euler–Maruyama integration of dy = −∇V(y) dt + √(2ε) dW.

use crate::model::{gradient_into, LatticeState};
use crate::{LatticeError, Result};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

/// Parameters of a stochastic run. The explicit scheme biases hitting times
/// by O(dt) and hitting locations by O(√dt), so `dt` trades cost for bias.
#[derive(Debug, Clone, Serialize)]
pub struct SdeConfig {
    /// Noise intensity ε ≥ 0 (ε = 0 integrates the plain gradient flow).
    pub eps: f64,
    /// Time step of the explicit scheme.
    pub dt: f64,
    /// Horizon after which a run is declared timed out.
    pub t_max: f64,
    /// Radius of the closed Euclidean ball around the target configuration.
    pub hit_radius: f64,
}

impl SdeConfig {
    /// Defaults: dt = 1e−3, δ = 0.2, horizon 1e4/ε (1e4 when ε = 0).
    pub fn with_eps(eps: f64) -> Self {
        let t_max = if eps > 0.0 { 1e4 / eps } else { 1e4 };
        Self {
            eps,
            dt: 1e-3,
            t_max,
            hit_radius: 0.2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.eps >= 0.0
            && self.eps.is_finite()
            && self.dt > 0.0
            && self.dt.is_finite()
            && self.t_max > 0.0
            && self.hit_radius > 0.0;
        if !ok {
            return Err(LatticeError::InvalidParameter(format!(
                "need eps ≥ 0, dt > 0, t_max > 0, hit_radius > 0; got {self:?}"
            )));
        }
        Ok(())
    }
}

/// How a run ended.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum StopEvent {
    /// The stopping predicate first held at this time.
    Hit { time: f64 },
    /// The horizon `t_max` elapsed without the predicate holding.
    Timeout,
}

#[derive(Debug, Clone)]
pub struct SimResult {
    pub event: StopEvent,
    pub steps: u64,
    pub final_y: Vec<f64>,
}

fn check_finite(y: &[f64], t: f64) -> Result<()> {
    if y.iter().any(|v| !v.is_finite()) {
        return Err(LatticeError::NumericalAbort { t });
    }
    Ok(())
}

/// Integrate until `stop` holds (checked on the initial state and after every
/// step) or the horizon elapses. A non-finite state aborts with an error.
pub fn em_simulate(
    state0: &LatticeState,
    cfg: &SdeConfig,
    mut stop: impl FnMut(&[f64]) -> bool,
    rng: &mut impl Rng,
) -> Result<SimResult> {
    cfg.validate()?;
    let mut y = state0.y.clone();
    let n = y.len();
    let mut grad = vec![0.0; n];
    let noise_scale = (2.0 * cfg.eps * cfg.dt).sqrt();
    let max_steps = (cfg.t_max / cfg.dt).ceil() as u64;

    if stop(&y) {
        return Ok(SimResult {
            event: StopEvent::Hit { time: 0.0 },
            steps: 0,
            final_y: y,
        });
    }
    for step in 1..=max_steps {
        gradient_into(&y, state0.gamma, &mut grad);
        for i in 0..n {
            let xi: f64 = rng.sample(StandardNormal);
            y[i] += -grad[i] * cfg.dt + noise_scale * xi;
        }
        let t = step as f64 * cfg.dt;
        check_finite(&y, t)?;
        if stop(&y) {
            return Ok(SimResult {
                event: StopEvent::Hit { time: t },
                steps: step,
                final_y: y,
            });
        }
    }
    Ok(SimResult {
        event: StopEvent::Timeout,
        steps: max_steps,
        final_y: y,
    })
}

/// Integrate up to `t_end`, recording the state every `every`-th step
/// (step 0 included). Returns (time, state) samples.
pub fn em_trace(
    state0: &LatticeState,
    cfg: &SdeConfig,
    t_end: f64,
    every: usize,
    rng: &mut impl Rng,
) -> Result<Vec<(f64, Vec<f64>)>> {
    cfg.validate()?;
    if every == 0 || t_end <= 0.0 || !t_end.is_finite() {
        return Err(LatticeError::InvalidParameter(
            "need every ≥ 1 and t_end > 0".into(),
        ));
    }
    let mut y = state0.y.clone();
    let n = y.len();
    let mut grad = vec![0.0; n];
    let noise_scale = (2.0 * cfg.eps * cfg.dt).sqrt();
    let steps = (t_end / cfg.dt).ceil() as u64;
    let mut out = vec![(0.0, y.clone())];
    for step in 1..=steps {
        gradient_into(&y, state0.gamma, &mut grad);
        for i in 0..n {
            let xi: f64 = rng.sample(StandardNormal);
            y[i] += -grad[i] * cfg.dt + noise_scale * xi;
        }
        let t = step as f64 * cfg.dt;
        check_finite(&y, t)?;
        if step % every as u64 == 0 {
            out.push((t, y.clone()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn validates_config() {
        let bad = SdeConfig {
            eps: -1.0,
            ..SdeConfig::with_eps(0.1)
        };
        assert!(bad.validate().is_err());
        let bad = SdeConfig {
            dt: 0.0,
            ..SdeConfig::with_eps(0.1)
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn immediate_hit_when_start_satisfies_stop() {
        let s = LatticeState::uniform(2, 1.0, 1.0).unwrap();
        let cfg = SdeConfig::with_eps(0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = em_simulate(&s, &cfg, |_| true, &mut rng).unwrap();
        assert_eq!(r.event, StopEvent::Hit { time: 0.0 });
        assert_eq!(r.steps, 0);
    }

    #[test]
    fn diverging_state_aborts() {
        // A huge initial amplitude overflows under the explicit cubic drift.
        let s = LatticeState::new(vec![1e200, -1e200], 0.0).unwrap();
        let cfg = SdeConfig::with_eps(0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        match em_simulate(&s, &cfg, |_| false, &mut rng) {
            Err(LatticeError::NumericalAbort { .. }) => {}
            other => panic!("expected numerical abort, got {other:?}"),
        }
    }
}
