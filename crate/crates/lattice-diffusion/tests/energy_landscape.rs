//! Symmetries, gradient consistency, and the off-diagonal quadratic bound of
//! the chain potential.

use lattice_diffusion::{gamma_one, potential_energy, potential_gradient, LatticeState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_state(n: usize, gamma: f64, rng: &mut impl Rng) -> LatticeState {
    let y: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.8..1.8)).collect();
    LatticeState::new(y, gamma).unwrap()
}

#[test]
fn energy_is_even_and_shift_and_reflection_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let s = random_state(7, 1.7, &mut rng);
        let v = potential_energy(&s);

        let neg = LatticeState::new(s.y.iter().map(|x| -x).collect(), s.gamma).unwrap();
        assert!((potential_energy(&neg) - v).abs() <= 1e-12 * v.abs().max(1.0));

        let mut shifted = s.y.clone();
        shifted.rotate_left(3);
        let sh = LatticeState::new(shifted, s.gamma).unwrap();
        assert!((potential_energy(&sh) - v).abs() <= 1e-12 * v.abs().max(1.0));

        let mut reflected = s.y.clone();
        reflected.reverse();
        let rf = LatticeState::new(reflected, s.gamma).unwrap();
        assert!((potential_energy(&rf) - v).abs() <= 1e-12 * v.abs().max(1.0));
    }
}

#[test]
fn gradient_matches_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let h = 1e-6;
    for _ in 0..100 {
        let s = random_state(6, 0.9, &mut rng);
        let g = potential_gradient(&s);
        #[allow(clippy::needless_range_loop)]
        for i in 0..6 {
            let mut up = s.clone();
            up.y[i] += h;
            let mut down = s.clone();
            down.y[i] -= h;
            let fd = (potential_energy(&up) - potential_energy(&down)) / (2.0 * h);
            let denom = g[i].abs().max(1e-8);
            assert!(
                ((g[i] - fd) / denom).abs() < 1e-5,
                "site {i}: grad {} vs fd {fd}",
                g[i]
            );
        }
    }
}

#[test]
fn off_diagonal_energy_gap() {
    // Splitting y = a·(1,…,1) + y⊥ with Σ y⊥ = 0, the energy exceeds the
    // diagonal energy by at least ½(γ/γ₁ − 1)‖y⊥‖² once γ > γ₁(N).
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for n in [4usize, 8] {
        let g1 = gamma_one(n).unwrap();
        for factor in [1.2, 3.0] {
            let gamma = factor * g1;
            for _ in 0..100 {
                let a = rng.gen_range(-1.5..1.5);
                let mut perp: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let mean = perp.iter().sum::<f64>() / n as f64;
                for v in perp.iter_mut() {
                    *v -= mean;
                }
                let scale = rng.gen_range(0.01..2.0)
                    / perp.iter().map(|v| v * v).sum::<f64>().sqrt().max(1e-9);
                for v in perp.iter_mut() {
                    *v *= scale;
                }
                let norm_sq: f64 = perp.iter().map(|v| v * v).sum();

                let diag = LatticeState::uniform(n, a, gamma).unwrap();
                let combined = LatticeState::new(
                    perp.iter().map(|v| a + v).collect(),
                    gamma,
                )
                .unwrap();
                let lhs = potential_energy(&combined);
                let rhs = potential_energy(&diag) + 0.5 * (factor - 1.0) * norm_sq;
                assert!(
                    lhs >= rhs - 1e-12,
                    "n={n} factor={factor}: V={lhs} below bound {rhs}"
                );
            }
        }
    }
}
