//! The renormalization map `M = exp(−c1·L1 − c2·L2)`.
//!
//! `L1` and `L2` are substitution operators acting on canonical symbols by
//! extracting a divergent sub-pattern and replacing it by the unit, summed
//! over all ways of extracting with exact combinatorial multiplicities:
//!
//! * `L1` removes an unordered **pair of `I(Xi)` factors** from any single
//!   product node — the root, or the argument of any integration factor,
//!   recursively. A node with `n ≥ 2` such factors contributes `C(n,2)`
//!   extractions. If removing the pair empties an integration argument, the
//!   resulting `I(polynomial)` is zero and the term is dropped.
//! * `L2` removes the **second-order sunset pattern**: at a product node
//!   holding at least two `I(Xi)` factors and an integration factor `I(σ)`
//!   whose argument holds at least two `I(Xi)` factors, it deletes two
//!   `I(Xi)` from the node, collapses `I(σ)`, removes two `I(Xi)` from `σ`,
//!   and multiplies what is left of `σ` back into the node. The multiplicity
//!   is `C(top, 2) · C(inner, 2)` times the multiplicity of the collapsed
//!   factor.
//!
//! Both operators strictly raise the degree, so the exponential series
//! terminates after finitely many applications and `M` is computed exactly,
//! with coefficients polynomial in the two formal constants `c1`, `c2`.

use crate::symbol::Symbol;
use num_rational::Rational64;
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in the formal constants `c1`, `c2`: monomial exponents
/// `(p, q)` (for `c1^p c2^q`) mapped to rational coefficients.
pub type CoefPoly = BTreeMap<(u32, u32), Rational64>;

/// Build a one-monomial polynomial `coeff · c1^p · c2^q`.
pub fn coef_monomial(p: u32, q: u32, coeff: Rational64) -> CoefPoly {
    let mut m = CoefPoly::new();
    if *coeff.numer() != 0 {
        m.insert((p, q), coeff);
    }
    m
}

fn poly_accumulate(dst: &mut CoefPoly, src: &CoefPoly, shift: (u32, u32), scale: Rational64) {
    for (&(p, q), &c) in src {
        let key = (p + shift.0, q + shift.1);
        let entry = dst.entry(key).or_insert_with(|| Rational64::from_integer(0));
        *entry += c * scale;
        if *entry.numer() == 0 {
            dst.remove(&key);
        }
    }
}

/// Format a [`CoefPoly`] like `-3*c1 + 3*c1^2`.
pub fn format_coef_poly(poly: &CoefPoly) -> String {
    if poly.is_empty() {
        return "0".to_owned();
    }
    let mut parts = Vec::new();
    for (&(p, q), &c) in poly {
        let mut factors = Vec::new();
        if p == 1 {
            factors.push("c1".to_owned());
        } else if p > 1 {
            factors.push(format!("c1^{p}"));
        }
        if q == 1 {
            factors.push("c2".to_owned());
        } else if q > 1 {
            factors.push(format!("c2^{q}"));
        }
        if factors.is_empty() {
            parts.push(format!("{c}"));
        } else if c == Rational64::from_integer(1) {
            parts.push(factors.join("*"));
        } else if c == Rational64::from_integer(-1) {
            parts.push(format!("-{}", factors.join("*")));
        } else {
            parts.push(format!("{c}*{}", factors.join("*")));
        }
    }
    parts.join(" + ")
}

/// A formal sum of symbols with [`CoefPoly`] coefficients, canonicalized.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RenormSum {
    terms: BTreeMap<Symbol, CoefPoly>,
}

impl RenormSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Symbol, CoefPoly)>) -> Self {
        let mut s = Self::zero();
        for (sym, poly) in terms {
            for (&(p, q), &c) in &poly {
                s.add(sym.clone(), (p, q), c);
            }
        }
        s
    }

    pub fn add(&mut self, sym: Symbol, mono: (u32, u32), coeff: Rational64) {
        if *coeff.numer() == 0 {
            return;
        }
        let poly = self.terms.entry(sym.clone()).or_default();
        let entry = poly.entry(mono).or_insert_with(|| Rational64::from_integer(0));
        *entry += coeff;
        if *entry.numer() == 0 {
            poly.remove(&mono);
        }
        if poly.is_empty() {
            self.terms.remove(&sym);
        }
    }

    pub fn coeff(&self, sym: &Symbol) -> CoefPoly {
        self.terms.get(sym).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, &CoefPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for RenormSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (sym, poly) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if poly.len() == 1 && poly.get(&(0, 0)) == Some(&Rational64::from_integer(1)) {
                write!(f, "{sym}")?;
            } else if poly.len() == 1 {
                write!(f, "{}*{sym}", format_coef_poly(poly))?;
            } else {
                write!(f, "({})*{sym}", format_coef_poly(poly))?;
            }
        }
        Ok(())
    }
}

/// The renormalization map, parameterized by the argument of the factor
/// whose pairs `L1` extracts (`I(Xi)`, i.e. argument `Xi`, for the standard
/// map).
#[derive(Clone, Debug)]
pub struct RenormMap {
    pair_arg: Symbol,
}

impl Default for RenormMap {
    fn default() -> Self {
        Self::standard()
    }
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn total_noise(s: &Symbol) -> u32 {
    let mut acc = s.noise_power();
    for (arg, m) in s.integrated_factors() {
        acc += m * total_noise(arg);
    }
    acc
}

impl RenormMap {
    /// The standard two-constant map: `L1` extracts `I(Xi)` pairs, `L2`
    /// extracts the sunset pattern built from them.
    pub fn standard() -> Self {
        RenormMap {
            pair_arg: Symbol::noise(),
        }
    }

    /// All single `L1` extractions from `s`, as `(result, multiplicity)`
    /// pairs. Results whose extraction empties an integration argument are
    /// dropped (`I(polynomial) = 0`).
    fn l1_single(&self, s: &Symbol) -> Vec<(Symbol, i64)> {
        let mut out = Vec::new();
        let n = i64::from(s.ifac_count(&self.pair_arg));
        if n >= 2 {
            out.push((s.with_ifac_delta(&self.pair_arg, -2), choose2(n)));
        }
        for (arg, mult) in s.integrated_factors() {
            for (extracted, k) in self.l1_single(arg) {
                let Some(repl) = Symbol::integ(&extracted) else {
                    continue;
                };
                out.push((
                    s.with_ifac_delta(arg, -1).mul(&repl),
                    k * i64::from(*mult),
                ));
            }
        }
        out
    }

    /// All single `L2` (sunset) extractions from `s`; see the module docs
    /// for the pattern.
    fn l2_single(&self, s: &Symbol) -> Vec<(Symbol, i64)> {
        let mut out = Vec::new();
        let top = i64::from(s.ifac_count(&self.pair_arg));
        if top >= 2 {
            for (arg, mult) in s.integrated_factors() {
                if *arg == self.pair_arg {
                    continue;
                }
                let inner = i64::from(arg.ifac_count(&self.pair_arg));
                if inner >= 2 {
                    let leftover = arg.with_ifac_delta(&self.pair_arg, -2);
                    let collapsed = s
                        .with_ifac_delta(&self.pair_arg, -2)
                        .with_ifac_delta(arg, -1)
                        .mul(&leftover);
                    out.push((collapsed, choose2(top) * choose2(inner) * i64::from(*mult)));
                }
            }
        }
        for (arg, mult) in s.integrated_factors() {
            for (extracted, k) in self.l2_single(arg) {
                let Some(repl) = Symbol::integ(&extracted) else {
                    continue;
                };
                out.push((
                    s.with_ifac_delta(arg, -1).mul(&repl),
                    k * i64::from(*mult),
                ));
            }
        }
        out
    }

    /// Apply `M = exp(−c1·L1 − c2·L2)` to a symbol. The series is summed
    /// exactly: layer `n` holds `(−c1·L1 − c2·L2)^n / n!` applied to `s`,
    /// and every application removes noise factors, so the series stops
    /// after at most `total noise / 2` layers.
    pub fn renormalize(&self, s: &Symbol) -> RenormSum {
        let one = Rational64::from_integer(1);
        let mut acc = RenormSum::zero();
        acc.add(s.clone(), (0, 0), one);

        let mut layer: BTreeMap<Symbol, CoefPoly> = BTreeMap::new();
        layer.insert(s.clone(), coef_monomial(0, 0, one));

        let max_layers = i64::from(total_noise(s) / 2);
        for n in 1..=max_layers {
            let inv_n = Rational64::new(1, n);
            let mut next: BTreeMap<Symbol, CoefPoly> = BTreeMap::new();
            for (sym, poly) in &layer {
                for (t, k) in self.l1_single(sym) {
                    let scale = -Rational64::from_integer(k) * inv_n;
                    poly_accumulate(next.entry(t).or_default(), poly, (1, 0), scale);
                }
                for (t, k) in self.l2_single(sym) {
                    let scale = -Rational64::from_integer(k) * inv_n;
                    poly_accumulate(next.entry(t).or_default(), poly, (0, 1), scale);
                }
            }
            next.retain(|_, p| !p.is_empty());
            if next.is_empty() {
                break;
            }
            for (sym, poly) in &next {
                for (&mono, &c) in poly {
                    acc.add(sym.clone(), mono, c);
                }
            }
            layer = next;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_symbol;

    fn p(s: &str) -> Symbol {
        parse_symbol(s).unwrap()
    }

    #[test]
    fn single_extractions_count_pairs() {
        let m = RenormMap::standard();
        let cube = p("I(Xi)^3");
        let singles = m.l1_single(&cube);
        assert_eq!(singles, vec![(p("I(Xi)"), 3)]);
        // No pair anywhere: nothing to extract.
        assert!(m.l1_single(&p("I(Xi)")).is_empty());
        assert!(m.l1_single(&p("Xi")).is_empty());
        assert!(m.l2_single(&p("I(Xi)^3")).is_empty());
    }

    #[test]
    fn emptied_integration_arguments_vanish() {
        let m = RenormMap::standard();
        // Extracting the inner pair of I(I(Xi)^2) would leave I(1) = 0, so
        // the only extraction from I(I(Xi)^2)*I(Xi)^2 acts at the root.
        let s = p("I(I(Xi)^2)*I(Xi)^2");
        let singles = m.l1_single(&s);
        assert_eq!(singles, vec![(p("I(I(Xi)^2)"), 1)]);
    }

    #[test]
    fn sunset_extraction_promotes_leftover_factors() {
        let m = RenormMap::standard();
        let s = p("I(I(Xi)^3)*I(Xi)^2");
        let singles = m.l2_single(&s);
        assert_eq!(singles, vec![(p("I(Xi)"), 3)]);
        let exact = p("I(I(Xi)^2)*I(Xi)^2");
        assert_eq!(m.l2_single(&exact), vec![(Symbol::unit(), 1)]);
    }
}
