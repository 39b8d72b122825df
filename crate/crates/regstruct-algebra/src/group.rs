//! The structure group: group-like functionals on the positive sector and
//! their action `Γ_g = (Id ⊗ g) Δ⁺` on symbols.
//!
//! A [`GroupElement`] assigns numeric values to the positive-sector
//! generators (`X_i` and `J_ℓ(τ)`), is fixed to `1` on the unit, and extends
//! multiplicatively over products — the group-like property. Values for
//! generators that were never set default to zero.
//!
//! The group law is convolution through the positive-sector coproduct:
//! `(g·h)(σ) = Σ g(σ⁽¹⁾)·h(σ⁽²⁾)` over `Δ₊(σ)`.

use crate::coproduct::{coproduct, coproduct_plus};
use crate::symbol::{MultiIndex, Symbol};
use crate::tensor::PlusSymbol;
use crate::RegstructError;
use std::collections::BTreeMap;

/// A group-like functional on the positive sector, stored by its values on
/// generators.
#[derive(Clone, Debug, Default)]
pub struct GroupElement {
    x: [f64; 4],
    j: BTreeMap<(MultiIndex, Symbol), f64>,
}

impl GroupElement {
    /// The identity functional: zero on every generator (hence `1` only on
    /// the unit, and `Γ` is the identity map).
    pub fn identity() -> Self {
        GroupElement {
            x: [0.0; 4],
            j: BTreeMap::new(),
        }
    }

    /// Set the value on the coordinate generator `X_axis`.
    pub fn with_x(mut self, axis: usize, value: f64) -> Self {
        assert!(axis < 4, "axis out of range");
        self.x[axis] = value;
        self
    }

    /// Set the value on the generator `J_index(arg)`. The generator must be
    /// admissible (positivity constraint), which is checked by construction.
    pub fn with_j(
        mut self,
        index: MultiIndex,
        arg: &Symbol,
        value: f64,
    ) -> Result<Self, RegstructError> {
        PlusSymbol::j(index, arg)?;
        self.j.insert((index, arg.clone()), value);
        Ok(self)
    }

    /// Evaluate on an arbitrary positive-sector element, multiplicatively
    /// over its generator factorization. `g(1) = 1`.
    pub fn eval(&self, p: &PlusSymbol) -> f64 {
        let mut acc = 1.0;
        for (axis, &k) in p.monomial_part().iter().enumerate() {
            for _ in 0..k {
                acc *= self.x[axis];
            }
        }
        for (idx, arg, mult) in p.j_factors() {
            let v = self
                .j
                .get(&(*idx, arg.clone()))
                .copied()
                .unwrap_or(0.0);
            for _ in 0..*mult {
                acc *= v;
            }
        }
        acc
    }

    /// The action `Γ_g(s) = Σ s⁽¹⁾ · g(s⁽²⁾)` as a sorted symbol → coefficient
    /// map (zero coefficients dropped).
    pub fn gamma(&self, s: &Symbol) -> BTreeMap<Symbol, f64> {
        let mut out = BTreeMap::new();
        for (left, right, c) in coproduct(s).iter() {
            let num = *c.numer() as f64 / *c.denom() as f64;
            let v = num * self.eval(right);
            if v != 0.0 {
                *out.entry(left.clone()).or_insert(0.0) += v;
            }
        }
        out.retain(|_, v| *v != 0.0);
        out
    }

    /// Convolution `(g·h)(σ) = (g ⊗ h) Δ₊(σ)`, materialized on the union of
    /// both elements' known generators. Because `Δ₊` is an algebra morphism
    /// and `g`, `h` are group-like, the result is again group-like, so its
    /// generator values determine it completely.
    pub fn convolve(&self, h: &GroupElement) -> Result<GroupElement, RegstructError> {
        let mut out = GroupElement::identity();
        for axis in 0..4 {
            out.x[axis] = self.x[axis] + h.x[axis];
        }
        let keys: std::collections::BTreeSet<_> =
            self.j.keys().chain(h.j.keys()).cloned().collect();
        for (idx, arg) in keys {
            let gen = PlusSymbol::j(idx, &arg)?;
            let mut v = 0.0;
            for (p1, p2, c) in coproduct_plus(&gen)?.iter() {
                let num = *c.numer() as f64 / *c.denom() as f64;
                v += num * self.eval(p1) * h.eval(p2);
            }
            out.j.insert((idx, arg), v);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_symbol;

    #[test]
    fn identity_acts_trivially() {
        let g = GroupElement::identity();
        for s in ["Xi", "I(Xi)", "I(I(Xi))*I(Xi)^2", "X1", "I(Xi)^2*X3"] {
            let sym = parse_symbol(s).unwrap();
            let acted = g.gamma(&sym);
            assert_eq!(acted.len(), 1, "{s}");
            assert_eq!(acted[&sym], 1.0);
        }
    }

    #[test]
    fn multiplicative_evaluation() {
        let conv = parse_symbol("I(Xi)").unwrap();
        let g = GroupElement::identity()
            .with_x(1, 2.0)
            .with_j([0, 1, 0, 0], &conv, 3.0)
            .unwrap();
        let p = PlusSymbol::x(1)
            .mul(&PlusSymbol::j([0, 1, 0, 0], &conv).unwrap())
            .mul(&PlusSymbol::x(1));
        assert_eq!(g.eval(&p), 12.0);
        assert_eq!(g.eval(&PlusSymbol::unit()), 1.0);
        // Unknown generators evaluate to zero.
        assert_eq!(g.eval(&PlusSymbol::j([0; 4], &conv).unwrap()), 0.0);
    }
}
