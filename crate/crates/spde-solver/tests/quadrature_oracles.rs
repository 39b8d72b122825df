//! The exact mean-hitting-time double integral against high-precision
//! reference values, asymptotics, and direct Monte-Carlo hitting times.

use gaussian_calculus::{ModeSet, SpectralField};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use spde_solver::{kramers_1d_quadrature, stochastic_convolution_step};
use std::sync::Arc;

fn double_well(y: f64) -> f64 {
    0.25 * y.powi(4) - 0.5 * y * y
}

/// Reference values computed independently with 30-digit arithmetic:
/// `w(y=1)` for the quartic double well.
const REFS: [(f64, f64, f64); 4] = [
    // (a, eps, w)
    (-1.0, 0.1, 66.2686263649),
    (-1.0, 0.05, 729.670691942),
    (-1.0, 0.025, 102108.365457),
    (-1.5, 0.1, 108.313494104),
];

#[test]
fn double_well_hitting_times_match_the_references() {
    for &(a, eps, want) in &REFS {
        let got = kramers_1d_quadrature(double_well, a, eps, 1.0).unwrap();
        assert!(
            ((got - want) / want).abs() < 1e-8,
            "a={a}, eps={eps}: {got} vs {want}"
        );
    }
}

#[test]
fn small_noise_asymptotics_and_its_error_decay() {
    // The sharp small-noise formula for escape from the y = 1 well over the
    // saddle at 0 is K(ε) = 2π/√(|V''(0)|V''(1)) e^{(V(0)−V(1))/ε}
    // = (2π/√2) e^{1/(4ε)}.  With the target at a = −1 the relative error
    // of K decays like O(ε) (each halving of ε roughly halves it), so it
    // sits comfortably inside a √ε-sized band.
    let k = |eps: f64| 2.0 * std::f64::consts::PI / 2.0f64.sqrt() * (0.25 / eps).exp();
    let mut errs = Vec::new();
    for &(_, eps, w) in REFS.iter().take(3) {
        let rel = w / k(eps) - 1.0;
        assert!(
            rel.abs() < 1.5 * eps.sqrt(),
            "eps={eps}: relative error {rel} outside the √ε band"
        );
        errs.push(rel);
    }
    assert!(errs[0] > errs[1] && errs[1] > errs[2], "error must shrink with ε");
    let r1 = errs[0] / errs[1];
    let r2 = errs[1] / errs[2];
    assert!((r1 - 2.105).abs() < 0.02, "err(0.1)/err(0.05) = {r1}");
    assert!((r2 - 2.455).abs() < 0.02, "err(0.05)/err(0.025) = {r2}");

    // A target well below the second minimum (a = −1.5) adds a second
    // passage: the plain formula is off by about a factor 2 there.
    let w15 = REFS[3].2;
    let ratio = w15 / k(0.1);
    assert!((ratio - 2.0).abs() < 0.02, "deep-target ratio {ratio}");
}

/// Mean of hitting times with its standard error.
fn mean_se(times: &[f64]) -> (f64, f64) {
    let n = times.len() as f64;
    let m = times.iter().sum::<f64>() / n;
    let var = times.iter().map(|t| (t - m) * (t - m)).sum::<f64>() / (n - 1.0);
    (m, (var / n).sqrt())
}

#[test]
fn quadratic_well_matches_direct_simulation() {
    // V = y²/2: the scalar diffusion is the exactly integrable
    // Ornstein–Uhlenbeck process, simulated here through the per-mode
    // update (d = 1, l = 1, mean mode = field value).
    let (a, eps, y0) = (-1.0, 0.25, 1.0);
    let want = kramers_1d_quadrature(|y| 0.5 * y * y, a, eps, y0).unwrap();

    let dt = 2e-4;
    let max_steps = 4_000_000u64;
    let runs = 1200u64;
    let times: Vec<f64> = (0..runs)
        .into_par_iter()
        .map(|replica| {
            let modes = Arc::new(ModeSet::new(1, 1).unwrap());
            let mut f = SpectralField::zeros(modes, 1.0).unwrap();
            f.set_coeff([0, 0], y0).unwrap();
            let i0 = f.modes().index_of([0, 0]).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(555);
            rng.set_stream(replica);
            for step in 1..=max_steps {
                stochastic_convolution_step(&mut f, dt, eps, 1.0, &mut rng);
                if f.coeffs()[i0] <= a {
                    return step as f64 * dt;
                }
            }
            panic!("OU run {replica} did not hit by t = {}", max_steps as f64 * dt);
        })
        .collect();
    let (mean, se) = mean_se(&times);
    assert!(
        (mean - want).abs() < 3.0 * se,
        "OU hitting: MC {mean} ± {se} vs quadrature {want}"
    );
}

#[test]
fn double_well_matches_direct_simulation() {
    // With zero coupling the lattice sites decouple into independent scalar
    // diffusions in exactly the quartic double well (the chain energy is
    // shifted by a constant, which drops out of the gradient), so the
    // Euler–Maruyama hitting times of (−∞, a] at site 0 cross-check the
    // integral.  The chain needs two sites; site 1 is simply ignored.
    use lattice_diffusion::{em_simulate, LatticeState, SdeConfig, StopEvent};
    let (a, eps, y0) = (-1.2, 0.25, 1.0);
    let want = kramers_1d_quadrature(double_well, a, eps, y0).unwrap();

    let cfg = SdeConfig {
        eps,
        dt: 2.5e-4,
        t_max: 1e5,
        hit_radius: 0.1, // unused by the custom stopping rule below
    };
    let runs = 1200u64;
    let times: Vec<f64> = (0..runs)
        .into_par_iter()
        .map(|replica| {
            let start = LatticeState::new(vec![y0, y0], 0.0).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(556);
            rng.set_stream(replica);
            let sim = em_simulate(&start, &cfg, |y| y[0] <= a, &mut rng).unwrap();
            match sim.event {
                StopEvent::Hit { time } => time,
                StopEvent::Timeout => panic!("double-well run {replica} timed out"),
            }
        })
        .collect();
    let (mean, se) = mean_se(&times);
    assert!(
        (mean - want).abs() < 3.0 * se,
        "double-well hitting: MC {mean} ± {se} vs quadrature {want}"
    );
}
