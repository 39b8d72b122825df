//! The action functional on simulated paths.
//!
//! A noiseless trajectory is a zero of the action.  Running any flow
//! segment backwards costs exactly twice the potential difference between
//! its endpoints, which is the mechanism behind the `2·(barrier)` exponent
//! of mean transition times.

use gaussian_calculus::{ModeSet, SpectralField};
use spde_solver::{potential_energy_field, rate_functional_field, simulate_path, SpdeConfig};
use std::sync::Arc;

fn relaxation_setup() -> (SpdeConfig, SpectralField) {
    let mut cfg = SpdeConfig::new_1d(1.0, 8, 0.0);
    cfg.dt = 1e-4;
    // Slightly off the unstable uniform state, with a transverse component
    // so the path leaves the space of constant profiles.
    let modes = Arc::new(ModeSet::new(1, 8).unwrap());
    let mut start = SpectralField::zeros(modes, cfg.l).unwrap();
    start.set_coeff([0, 0], -0.05).unwrap();
    start.set_coeff([1, 0], 0.10).unwrap();
    (cfg, start)
}

#[test]
fn noiseless_relaxation_has_vanishing_action() {
    let (cfg, start) = relaxation_setup();
    let path = simulate_path(&cfg, &start, 10.0, 100, 0).unwrap();

    // The path has settled into the negative well.
    let end = path.last().unwrap();
    let i0 = end.modes().index_of([0, 0]).unwrap();
    assert!((end.coeffs()[i0] + 1.0).abs() < 1e-3, "did not reach the well");
    let v_end = potential_energy_field(end).unwrap();
    assert!((v_end + 0.25).abs() < 1e-3, "well depth should be −1/4: {v_end}");

    let action = rate_functional_field(&path).unwrap();
    assert!(
        action.abs() < 1e-4,
        "relaxation path should cost nothing: {action}"
    );
}

#[test]
fn reversed_relaxation_costs_twice_the_potential_difference() {
    let (cfg, start) = relaxation_setup();
    // Full relaxation and a partial segment stopped mid-flight: the
    // identity holds for any exact-flow segment, equilibrated or not.
    for t_end in [10.0, 2.0] {
        let path = simulate_path(&cfg, &start, t_end, 100, 0).unwrap();
        let v_first = potential_energy_field(path.first().unwrap()).unwrap();
        let v_last = potential_energy_field(path.last().unwrap()).unwrap();
        let uphill = 2.0 * (v_first - v_last);
        assert!(uphill > 0.0);

        let action = rate_functional_field(&path.reversed()).unwrap();
        assert!(
            (action - uphill).abs() <= 0.03 * uphill,
            "t_end={t_end}: reversed action {action} vs twice the drop {uphill}"
        );
    }
}
