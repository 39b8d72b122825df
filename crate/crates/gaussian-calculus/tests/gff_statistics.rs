//! Sampled free-field statistics against exact mode sums.
//!
//! Frozen reference numbers were computed independently with mpmath/numpy
//! from the defining lattice sums.

use gaussian_calculus::{galerkin_counterterm_2d, GffSpec, ModeSet, SpectralField};
use std::sync::Arc;

fn assert_rel(got: f64, want: f64, tol: f64, what: &str) {
    let rel = ((got - want) / want).abs();
    assert!(
        rel <= tol,
        "{what}: got {got}, want {want}, rel err {rel:.3e} > {tol:.1e}"
    );
}

#[test]
fn wick_constants_2d_reference_values() {
    // (1/l²) Σ_{‖k‖₁≤n} 1/(λ_k + 1) on the unit torus.
    for &(n, want) in &[
        (16usize, 1.4703046607),
        (32, 1.5781195382),
        (64, 1.6871893990),
    ] {
        let spec = GffSpec {
            dim: 2,
            l: 1.0,
            n,
            mass_sq: 1.0,
            zero_mean: false,
        };
        assert_rel(
            spec.wick_constant().unwrap(),
            want,
            1e-9,
            &format!("Wick constant at n={n}"),
        );
    }
}

#[test]
fn wick_constant_grows_like_log_over_2pi() {
    // Doubling the cutoff adds ≈ log 2 / (2π) ≈ 0.110318.
    let c = |n: usize| {
        GffSpec {
            dim: 2,
            l: 1.0,
            n,
            mass_sq: 1.0,
            zero_mean: false,
        }
        .wick_constant()
        .unwrap()
    };
    let log2_over_2pi = std::f64::consts::LN_2 / (2.0 * std::f64::consts::PI);
    for &n in &[64usize, 128, 256] {
        let inc = c(2 * n) - c(n);
        assert!(
            ((inc - log2_over_2pi) / log2_over_2pi).abs() < 0.01,
            "increment at n={n}: {inc} vs {log2_over_2pi}"
        );
    }
}

#[test]
fn galerkin_counterterm_reference_values() {
    // θ + (1/l²) Σ 1/|λ_k − 1| on the unit torus.
    for &(n, want) in &[
        (8usize, 1.3726561667),
        (16, 1.4780178801),
        (32, 1.5858507143),
    ] {
        assert_rel(
            galerkin_counterterm_2d(1.0, n, 0.0).unwrap(),
            want,
            1e-9,
            &format!("Galerkin counterterm at n={n}"),
        );
    }
}

#[test]
fn sampled_pointwise_variance_matches_wick_constant() {
    // E[φ(0)²] = C_n; the value at the origin is (u₀ + √2 Σ_pos u_k)/l^{d/2}.
    let spec = GffSpec {
        dim: 2,
        l: 1.0,
        n: 16,
        mass_sq: 1.0,
        zero_mean: false,
    };
    let c_exact = spec.wick_constant().unwrap();
    let samples = 4000u32;
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for draw in 0..samples {
        let f = spec.sample(99, draw).unwrap();
        let mut at_origin = 0.0;
        for (i, &k) in f.modes().vectors().iter().enumerate() {
            if k == [0, 0] {
                at_origin += f.coeffs()[i];
            } else if ModeSet::is_positive_half(k) {
                at_origin += std::f64::consts::SQRT_2 * f.coeffs()[i];
            }
        }
        let sq = at_origin * at_origin;
        sum += sq;
        sum_sq += sq * sq;
    }
    let mean = sum / samples as f64;
    let var = sum_sq / samples as f64 - mean * mean;
    let se = (var / samples as f64).sqrt();
    assert!(
        (mean - c_exact).abs() < 4.0 * se,
        "pointwise variance {mean} vs Wick constant {c_exact} (se {se})"
    );
}

#[test]
fn sampled_mode_variances_match_the_covariance() {
    let spec = GffSpec {
        dim: 1,
        l: 2.0,
        n: 6,
        mass_sq: 1.0,
        zero_mean: false,
    };
    let modes = spec.modes().unwrap();
    let samples = 20_000u32;
    let mut acc = vec![0.0f64; modes.len()];
    for draw in 0..samples {
        let f = spec.sample(7, draw).unwrap();
        for (a, u) in acc.iter_mut().zip(f.coeffs()) {
            *a += u * u;
        }
    }
    for (i, &k) in modes.vectors().iter().enumerate() {
        let want = 1.0 / (modes.lambda(2.0, i) + 1.0);
        let got = acc[i] / samples as f64;
        // Var[u²] = 2 want², so 4σ ≈ 4·want·√(2/samples) ≈ 4% of want.
        assert!(
            ((got - want) / want).abs() < 0.05,
            "mode {k:?}: sampled {got}, exact {want}"
        );
    }
}

#[test]
fn grid_statistics_are_stationary() {
    // The sampled field is translation invariant: the empirical variance at
    // two distinct grid points must agree within Monte Carlo error.
    let spec = GffSpec {
        dim: 1,
        l: 1.0,
        n: 12,
        mass_sq: 1.0,
        zero_mean: false,
    };
    let m = 25;
    let (mut v0, mut v7) = (0.0, 0.0);
    let samples = 3000u32;
    for draw in 0..samples {
        let g = spec.sample(3, draw).unwrap().to_grid(m).unwrap();
        v0 += g[0] * g[0];
        v7 += g[7] * g[7];
    }
    v0 /= samples as f64;
    v7 /= samples as f64;
    assert!(
        ((v0 - v7) / v0).abs() < 0.1,
        "variance at two points: {v0} vs {v7}"
    );
    let _ = SpectralField::zeros(Arc::new(ModeSet::new(1, 2).unwrap()), 1.0).unwrap();
}
