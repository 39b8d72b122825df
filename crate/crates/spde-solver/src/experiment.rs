//! Parallel well-to-well transition-time measurements.
//!
//! Each replica integrates the full dynamics from the uniform state
//! `φ ≡ −1` until it reaches the neighborhood of `φ ≡ +1`, defined as:
//! the mean-mode coefficient within `hit_radius` of the target's, *and* the
//! transverse part (mean mode removed) inside the `H^s` ball of radius
//! `√log(1/ε)` — with `s = 0.25` in one dimension and `s = −0.25` in two.
//! Replica `j` draws from stream `j` of the master seed, so results are
//! bit-reproducible and independent of the thread count.

use crate::config::SpdeConfig;
use crate::dynamics::{transverse_sobolev_norm, Solver};
use crate::rate::PathSample;
use crate::{Result, SpdeError};
use gaussian_calculus::SpectralField;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Sobolev exponent of the transverse hitting ball.
pub fn transverse_exponent(d: u8) -> f64 {
    if d == 1 {
        0.25
    } else {
        -0.25
    }
}

/// One Monte-Carlo replica of the transition experiment.
#[derive(Debug, Clone, Serialize)]
pub struct RunOutcome {
    /// RNG stream index of this replica under the master seed.
    pub replica: u64,
    /// First time the hitting criterion held, if within the horizon.
    pub hit_time: Option<f64>,
    pub timed_out: bool,
}

/// Aggregate over the replicas that hit; timeouts are counted separately
/// and never folded into the mean.
#[derive(Debug, Clone, Serialize)]
pub struct TransitionSummary {
    pub mean_hit_time: Option<f64>,
    pub std_error: Option<f64>,
    pub hits: usize,
    pub timeouts: usize,
    pub replicas: usize,
    /// `s` of the transverse `H^s` hitting ball.
    pub transverse_exponent: f64,
    /// Radius `√log(1/ε)` of the transverse ball.
    pub transverse_radius: f64,
    pub config: SpdeConfig,
    pub runs: Vec<RunOutcome>,
}

/// Run `n_runs` independent crossings from `φ ≡ −1` to the hitting
/// neighborhood of `φ ≡ +1`.
pub fn transition_time_experiment(cfg: &SpdeConfig, n_runs: usize) -> Result<TransitionSummary> {
    cfg.validate()?;
    if n_runs == 0 {
        return Err(SpdeError::InvalidParameter(
            "need at least one replica".into(),
        ));
    }
    if !(cfg.eps > 0.0 && cfg.eps < 1.0) {
        return Err(SpdeError::InvalidParameter(format!(
            "transition experiments need noise strength in (0, 1), got {}",
            cfg.eps
        )));
    }
    let solver = Solver::new(cfg.clone())?;
    let target = cfg.l.powf(cfg.d as f64 / 2.0);
    let s = transverse_exponent(cfg.d);
    let radius = (1.0 / cfg.eps).ln().sqrt();
    let i0 = solver
        .modes()
        .index_of([0, 0])
        .expect("mode sets contain the origin");
    let max_steps = (cfg.t_max / cfg.dt).ceil() as u64;

    let runs: Vec<Result<RunOutcome>> = (0..n_runs as u64)
        .into_par_iter()
        .map(|replica| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(replica);
            let mut field = solver.uniform_field(-1.0);
            let mut hit_time = None;
            for step in 1..=max_steps {
                solver.step_allen_cahn(&mut field, (step - 1) as f64 * cfg.dt, &mut rng)?;
                let u0 = field.coeffs()[i0];
                if (u0 - target).abs() <= cfg.hit_radius
                    && transverse_sobolev_norm(&field, s) <= radius
                {
                    hit_time = Some(step as f64 * cfg.dt);
                    break;
                }
            }
            Ok(RunOutcome {
                replica,
                timed_out: hit_time.is_none(),
                hit_time,
            })
        })
        .collect();
    let runs: Vec<RunOutcome> = runs.into_iter().collect::<Result<_>>()?;

    let hit_times: Vec<f64> = runs.iter().filter_map(|r| r.hit_time).collect();
    let hits = hit_times.len();
    let (mean, se) = if hits > 0 {
        let m = hit_times.iter().sum::<f64>() / hits as f64;
        let se = if hits > 1 {
            let var =
                hit_times.iter().map(|t| (t - m) * (t - m)).sum::<f64>() / (hits as f64 - 1.0);
            Some((var / hits as f64).sqrt())
        } else {
            None
        };
        (Some(m), se)
    } else {
        (None, None)
    };

    Ok(TransitionSummary {
        mean_hit_time: mean,
        std_error: se,
        hits,
        timeouts: n_runs - hits,
        replicas: n_runs,
        transverse_exponent: s,
        transverse_radius: radius,
        config: cfg.clone(),
        runs,
    })
}

/// Integrate a single trajectory from `initial` up to `t_end`, recording
/// every `every`-th step (the initial state included).  Noise comes from
/// stream `replica` of the master seed; `eps = 0` integrates the
/// deterministic flow.
pub fn simulate_path(
    cfg: &SpdeConfig,
    initial: &SpectralField,
    t_end: f64,
    every: usize,
    replica: u64,
) -> Result<PathSample> {
    if every == 0 || !(t_end > 0.0 && t_end.is_finite()) {
        return Err(SpdeError::InvalidParameter(
            "need every ≥ 1 and a positive finite end time".into(),
        ));
    }
    let solver = Solver::new(cfg.clone())?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(replica);
    let mut field = initial.clone();
    let steps = (t_end / cfg.dt).ceil() as u64;
    let mut path = PathSample::new();
    path.push(0.0, field.clone())?;
    for step in 1..=steps {
        solver.step_allen_cahn(&mut field, (step - 1) as f64 * cfg.dt, &mut rng)?;
        if step % every as u64 == 0 {
            path.push(step as f64 * cfg.dt, field.clone())?;
        }
    }
    Ok(path)
}
