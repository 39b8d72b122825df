//! Parallel batches of transition-time measurements between the two uniform
//! minima, with CSV/JSON-friendly records.

use crate::model::LatticeState;
use crate::simulate::{em_simulate, SdeConfig, StopEvent};
use crate::{LatticeError, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;

/// Full description of a batch experiment; echoed into the summary.
#[derive(Debug, Clone, Serialize)]
pub struct BatchConfig {
    pub n_sites: usize,
    pub gamma: f64,
    pub sde: SdeConfig,
    pub replicas: usize,
    pub master_seed: u64,
}

/// One Monte-Carlo replica. `seed` is the batch master seed; together with
/// `run_id` (the RNG stream index) it pins the run bit-for-bit.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub run_id: u64,
    pub seed: u64,
    pub hit_time: Option<f64>,
    pub timed_out: bool,
}

/// Aggregate over the replicas that hit. Timeouts are counted separately and
/// never folded into the mean.
#[derive(Debug, Clone, Serialize)]
pub struct BatchSummary {
    pub mean_hit_time: Option<f64>,
    pub std_error: Option<f64>,
    pub hits: usize,
    pub timeouts: usize,
    pub replicas: usize,
    pub config: BatchConfig,
}

#[derive(Debug, Clone)]
pub struct BatchResult {
    pub runs: Vec<RunRecord>,
    pub summary: BatchSummary,
}

/// Run `replicas` independent crossings from (−1,…,−1) to the Euclidean
/// `hit_radius`-ball around (+1,…,+1). Replica j uses RNG stream j of the
/// master seed, so results are reproducible and independent of thread count.
pub fn transition_time_batch(cfg: &BatchConfig) -> Result<BatchResult> {
    cfg.sde.validate()?;
    if cfg.replicas == 0 {
        return Err(LatticeError::InvalidParameter(
            "need at least one replica".into(),
        ));
    }
    let start = LatticeState::uniform(cfg.n_sites, -1.0, cfg.gamma)?;
    let radius_sq = cfg.sde.hit_radius * cfg.sde.hit_radius;
    let target_hit = move |y: &[f64]| -> bool {
        let d: f64 = y.iter().map(|v| (v - 1.0) * (v - 1.0)).sum();
        d <= radius_sq
    };

    let runs: Vec<Result<RunRecord>> = (0..cfg.replicas as u64)
        .into_par_iter()
        .map(|run_id| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.master_seed);
            rng.set_stream(run_id);
            let sim = em_simulate(&start, &cfg.sde, target_hit, &mut rng)?;
            let (hit_time, timed_out) = match sim.event {
                StopEvent::Hit { time } => (Some(time), false),
                StopEvent::Timeout => (None, true),
            };
            Ok(RunRecord {
                run_id,
                seed: cfg.master_seed,
                hit_time,
                timed_out,
            })
        })
        .collect();
    let runs: Vec<RunRecord> = runs.into_iter().collect::<Result<_>>()?;

    let hit_times: Vec<f64> = runs.iter().filter_map(|r| r.hit_time).collect();
    let hits = hit_times.len();
    let timeouts = cfg.replicas - hits;
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

    Ok(BatchResult {
        summary: BatchSummary {
            mean_hit_time: mean,
            std_error: se,
            hits,
            timeouts,
            replicas: cfg.replicas,
            config: cfg.clone(),
        },
        runs,
    })
}

/// Emit the per-run records as CSV with columns run_id, seed, hit_time,
/// timed_out (hit_time empty on timeout).
pub fn write_batch_csv<W: Write>(result: &BatchResult, sink: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["run_id", "seed", "hit_time", "timed_out"])
        .and_then(|_| {
            for r in &result.runs {
                let hit = r.hit_time.map(|t| format!("{t:.6}")).unwrap_or_default();
                w.write_record([
                    r.run_id.to_string(),
                    r.seed.to_string(),
                    hit,
                    r.timed_out.to_string(),
                ])?;
            }
            w.flush()?;
            Ok(())
        })
        .map_err(|e| LatticeError::InvalidParameter(format!("csv write failed: {e}")))
}
