//! Committors, capacities, variational bounds, and exact mean hitting times.

use crate::chain::ReversibleChain;
use crate::solve::solve_dirichlet;
use crate::{MarkovError, Result};

/// The exact mean hitting time of `B` from the equilibrium distribution on
/// `A`, together with the pieces it is assembled from.
#[derive(Debug, Clone, Copy)]
pub struct MagicTime {
    /// Capacity `cap(A, B)`.
    pub capacity: f64,
    /// Committor mass `Σ_{x∉B} π(x) h_AB(x)`.
    pub committor_mass: f64,
    /// Mean hitting time `committor_mass / capacity`.
    pub value: f64,
}

/// A discrete flow: antisymmetric edge values `φ(x, y) = −φ(y, x)`, stored
/// once per support edge in an arbitrary orientation.
#[derive(Debug, Clone)]
pub struct UnitFlow {
    /// `(x, y, φ(x, y))` with `φ` in the orientation `x → y`.
    pub edges: Vec<(usize, usize, f64)>,
}

impl ReversibleChain {
    /// Committor `h(x) = P_x[hit A before B]`: harmonic off `A ∪ B`,
    /// `h = 1` on `A`, `h = 0` on `B`.
    pub fn committor(&self, a: &[usize], b: &[usize]) -> Result<Vec<f64>> {
        self.check_sets(a, b)?;
        let mut boundary = vec![None; self.len()];
        for &x in a {
            boundary[x] = Some(1.0);
        }
        for &x in b {
            boundary[x] = Some(0.0);
        }
        solve_dirichlet(self, &boundary, &vec![0.0; self.len()])
    }

    /// Dirichlet form `E(f, g) = ½ Σ_{x,y} π(x)p(x,y)(f(x)−f(y))(g(x)−g(y))`.
    pub fn dirichlet_form(&self, f: &[f64], g: &[f64]) -> Result<f64> {
        if f.len() != self.len() || g.len() != self.len() {
            return Err(MarkovError::InvalidInput(format!(
                "function length must equal the state count {}",
                self.len()
            )));
        }
        let mut total = 0.0;
        for x in 0..self.len() {
            for &(y, p) in self.row(x) {
                total += 0.5 * self.pi()[x] * p * (f[x] - f[y]) * (g[x] - g[y]);
            }
        }
        Ok(total)
    }

    /// Equilibrium measure `e_AB(x) = −(Lh)(x) = h(x) − (Ph)(x)` on `A`
    /// (zero elsewhere): the π-weighted escape rate toward `B`.
    pub fn equilibrium_measure(&self, a: &[usize], b: &[usize]) -> Result<Vec<f64>> {
        let h = self.committor(a, b)?;
        let mut e = vec![0.0; self.len()];
        for &x in a {
            let ph: f64 = self.row(x).iter().map(|&(y, p)| p * h[y]).sum();
            e[x] = h[x] - ph;
        }
        Ok(e)
    }

    /// Capacity `cap(A, B) = E(h, h) = Σ_{x∈A} π(x) e_AB(x)`.
    pub fn capacity(&self, a: &[usize], b: &[usize]) -> Result<f64> {
        let h = self.committor(a, b)?;
        self.dirichlet_form(&h, &h)
    }

    /// Mean hitting times `w(x) = E_x[τ_B]` solving `(I−P)w = 1` off `B`.
    pub fn poisson_hitting_times(&self, b: &[usize]) -> Result<Vec<f64>> {
        if b.is_empty() {
            return Err(MarkovError::InvalidInput("target set B is empty".into()));
        }
        let mut boundary = vec![None; self.len()];
        for &x in b {
            if x >= self.len() {
                return Err(MarkovError::InvalidInput(format!(
                    "state {x} outside the state space"
                )));
            }
            boundary[x] = Some(0.0);
        }
        solve_dirichlet(self, &boundary, &vec![1.0; self.len()])
    }

    /// Exact mean hitting time of `B` from the equilibrium distribution
    /// `ν_AB = π e_AB / cap` on `A`:  `E_ν[τ_B] = Σ_{x∉B} π(x)h(x) / cap`.
    pub fn magic_mean_time(&self, a: &[usize], b: &[usize]) -> Result<MagicTime> {
        let h = self.committor(a, b)?;
        let capacity = self.dirichlet_form(&h, &h)?;
        if capacity <= 0.0 {
            return Err(MarkovError::SolveFailure(format!(
                "capacity {capacity} is not positive: A and B may not communicate"
            )));
        }
        let in_b = {
            let mut m = vec![false; self.len()];
            for &x in b {
                m[x] = true;
            }
            m
        };
        let committor_mass: f64 = (0..self.len())
            .filter(|&x| !in_b[x])
            .map(|x| self.pi()[x] * h[x])
            .sum();
        Ok(MagicTime {
            capacity,
            committor_mass,
            value: committor_mass / capacity,
        })
    }

    /// Equilibrium starting law `ν_AB(x) = π(x) e_AB(x) / cap` on `A`.
    pub fn equilibrium_law(&self, a: &[usize], b: &[usize]) -> Result<Vec<f64>> {
        let e = self.equilibrium_measure(a, b)?;
        let weights: Vec<f64> = e
            .iter()
            .zip(self.pi())
            .map(|(ev, pv)| ev * pv)
            .collect();
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(MarkovError::SolveFailure(
                "equilibrium measure has no mass".into(),
            ));
        }
        Ok(weights.into_iter().map(|w| w / total).collect())
    }

    /// Dirichlet principle: `E(f̃, f̃) ≥ cap(A, B)` for the admissible
    /// version `f̃` of `trial` — clamped to `[0, 1]` and overridden to 1 on
    /// `A`, 0 on `B`.  Returns the bound.
    pub fn dirichlet_upper_bound(
        &self,
        trial: &[f64],
        a: &[usize],
        b: &[usize],
    ) -> Result<f64> {
        self.check_sets(a, b)?;
        if trial.len() != self.len() {
            return Err(MarkovError::InvalidInput(format!(
                "trial function length must equal the state count {}",
                self.len()
            )));
        }
        let mut f: Vec<f64> = trial.iter().map(|v| v.clamp(0.0, 1.0)).collect();
        for &x in a {
            f[x] = 1.0;
        }
        for &x in b {
            f[x] = 0.0;
        }
        self.dirichlet_form(&f, &f)
    }

    /// The harmonic unit flow `φ(x,y) = π(x)p(x,y)(h(x) − h(y))/cap` — the
    /// optimizer of the Thomson principle.
    pub fn harmonic_flow(&self, a: &[usize], b: &[usize]) -> Result<UnitFlow> {
        let h = self.committor(a, b)?;
        let cap = self.dirichlet_form(&h, &h)?;
        if cap <= 0.0 {
            return Err(MarkovError::SolveFailure(
                "capacity vanishes; no flow exists".into(),
            ));
        }
        let mut edges = Vec::new();
        for x in 0..self.len() {
            for &(y, p) in self.row(x) {
                if y > x {
                    let phi = self.pi()[x] * p * (h[x] - h[y]) / cap;
                    if phi != 0.0 {
                        edges.push((x, y, phi));
                    }
                }
            }
        }
        Ok(UnitFlow { edges })
    }

    /// Thomson principle: `cap(A, B) ≥ 1/D(φ)` for every unit `A→B` flow,
    /// where `D(φ) = Σ_edges φ(x,y)²/(π(x)p(x,y))`.  Validates that `φ` is
    /// supported on chain edges, conserved off `A ∪ B`, and has unit
    /// strength out of `A`; returns the bound `1/D(φ)`.
    pub fn thomson_lower_bound(&self, flow: &UnitFlow, a: &[usize], b: &[usize]) -> Result<f64> {
        self.check_sets(a, b)?;
        let mut div = vec![0.0f64; self.len()];
        let mut energy = 0.0;
        for &(x, y, phi) in &flow.edges {
            if x >= self.len() || y >= self.len() || x == y {
                return Err(MarkovError::InvalidInput(format!(
                    "flow edge ({x},{y}) is not a valid chain edge"
                )));
            }
            let c = self.pi()[x] * self.prob(x, y);
            if c <= 0.0 {
                return Err(MarkovError::InvalidInput(format!(
                    "flow uses edge ({x},{y}) with zero conductance"
                )));
            }
            div[x] += phi;
            div[y] -= phi;
            energy += phi * phi / c;
        }
        let in_ab: Vec<bool> = {
            let mut m = vec![false; self.len()];
            for &x in a.iter().chain(b) {
                m[x] = true;
            }
            m
        };
        let scale: f64 = flow
            .edges
            .iter()
            .map(|&(_, _, phi)| phi.abs())
            .fold(0.0, f64::max)
            .max(1e-300);
        for (x, &d) in div.iter().enumerate() {
            if !in_ab[x] && d.abs() > 1e-9 * scale {
                return Err(MarkovError::InvalidInput(format!(
                    "flow is not conserved at interior state {x}: divergence {d}"
                )));
            }
        }
        let strength: f64 = a.iter().map(|&x| div[x]).sum();
        if (strength - 1.0).abs() > 1e-9 {
            return Err(MarkovError::InvalidInput(format!(
                "flow strength out of A is {strength}, expected 1"
            )));
        }
        if energy <= 0.0 {
            return Err(MarkovError::InvalidInput("flow has zero energy".into()));
        }
        Ok(1.0 / energy)
    }
}
