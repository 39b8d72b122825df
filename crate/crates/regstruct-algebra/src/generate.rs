//! Truncated generation of the canonical symbol set.
//!
//! The set collects the symbols produced by iterating the Duhamel-type map
//! `τ ↦ I(Xi + τ³) + (polynomial jet)` from the empty set, expanded to first
//! order around the stochastic convolution `I(Xi)` and truncated at a degree
//! cap. Each pass contributes:
//!
//! * the polynomial jet: monomials `X^k` of degree (parabolic weight) within
//!   the cap — the Taylor part of a solution truncated at that order;
//! * the forcing `Xi` and its convolution `I(Xi)`;
//! * integrations `I(I(Xi)^a)`, `a = 1, 2, 3`, of the pure cube powers —
//!   the first-order Duhamel terms (cube terms carrying a correction factor
//!   would only enter at second order and are not integrated);
//! * products of two or three expansion-basis factors — the cube terms
//!   themselves. The basis consists of the jet monomials together with the
//!   single-integration symbols seen so far; a product is admitted when at
//!   least two factors are non-polynomial (a single convolution dressed by
//!   monomials is jet content, not a new cube term) and at most one factor
//!   differs from `I(Xi)` — two correction factors are second-order small.
//!
//! Because a product can combine one factor lying above the cap with up to
//! three copies of `I(Xi)` and land back below it, single-integration
//! symbols are carried internally up to `cap + 3·(1/2 + κ)`; the final set
//! is filtered to the requested cap. The iteration reaches a fixed point in
//! finitely many passes: the basis shapes are finite and degrees are bounded
//! below (local subcriticality — convolution factors cannot push a product
//! below the forcing degree).

use crate::degree::Degree;
use crate::symbol::Symbol;
use std::collections::BTreeSet;

/// Degree parameters of the structure: the degree assigned to the forcing
/// symbol. The default (`-5/2 - κ`) models space-time white noise in three
/// space dimensions; `-3/2 - κ` gives the two-dimensional variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureParams {
    pub noise_degree: Degree,
}

impl Default for StructureParams {
    fn default() -> Self {
        StructureParams {
            noise_degree: crate::symbol::default_noise_degree(),
        }
    }
}

/// A generated symbol set: an immutable registry built once by
/// [`generate_fac`] / [`generate_fac_with`]; all queries are read-only.
#[derive(Clone, Debug)]
pub struct Structure {
    params: StructureParams,
    cap: Degree,
    symbols: BTreeSet<Symbol>,
}

impl Structure {
    pub fn params(&self) -> StructureParams {
        self.params
    }

    pub fn cap(&self) -> Degree {
        self.cap
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.symbols.iter()
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.symbols.contains(s)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn degree_of(&self, s: &Symbol) -> Degree {
        s.degree_with(self.params.noise_degree)
    }

    /// Symbols with their degrees, sorted ascending by (degree, symbol).
    pub fn sorted_by_degree(&self) -> Vec<(Degree, Symbol)> {
        let mut rows: Vec<(Degree, Symbol)> = self
            .symbols
            .iter()
            .map(|s| (self.degree_of(s), s.clone()))
            .collect();
        rows.sort();
        rows
    }

    pub fn min_degree(&self) -> Option<Degree> {
        self.symbols.iter().map(|s| self.degree_of(s)).min()
    }
}

fn monomials_up_to(cap: Degree) -> Vec<Symbol> {
    let mut out = Vec::new();
    let mut w: u32 = 0;
    while Degree::integer(i64::from(w)) <= cap && w <= 64 {
        for k in crate::tensor::indices_of_weight(w) {
            out.push(Symbol::monomial(k));
        }
        w += 1;
    }
    out
}

/// Generate with default parameters (three-dimensional forcing degree).
pub fn generate_fac(cap: Degree) -> Structure {
    generate_fac_with(StructureParams::default(), cap)
}

/// Generate the truncated symbol set for the given parameters and cap.
pub fn generate_fac_with(params: StructureParams, cap: Degree) -> Structure {
    let conv = Symbol::integ(&Symbol::noise()).expect("forcing is not polynomial");
    let deg = |s: &Symbol| s.degree_with(params.noise_degree);

    // Slack for intermediate single-integration symbols: three convolution
    // factors lower a product degree by 3·(-|I(Xi)|) at most.
    let conv_deg = deg(&conv);
    let slack = (Degree::zero() - conv_deg).scaled(3);
    let internal_cap = if slack.is_positive() { cap + slack } else { cap };

    let jet: Vec<Symbol> = monomials_up_to(cap);

    let mut set: BTreeSet<Symbol> = BTreeSet::new();
    loop {
        let mut next: BTreeSet<Symbol> = set.clone();

        for m in &jet {
            next.insert(m.clone());
        }
        if deg(&Symbol::noise()) <= internal_cap {
            next.insert(Symbol::noise());
        }
        if deg(&conv) <= internal_cap {
            next.insert(conv.clone());
        }

        // First-order Duhamel terms: integrate the pure cube powers of the
        // convolution once it is available.
        if set.contains(&conv) {
            for a in 1..=3u32 {
                if let Some(lift) = Symbol::integ(&conv.pow(a)) {
                    if deg(&lift) <= internal_cap {
                        next.insert(lift);
                    }
                }
            }
        }

        // Expansion basis: jet monomials plus the single-integration symbols
        // seen so far (products and the forcing never multiply back in).
        let mut basis: Vec<Symbol> = jet.clone();
        basis.extend(set.iter().filter(|s| s.is_single_integral()).cloned());

        // Cube terms: products of two or three basis factors.
        let nb = basis.len();
        let admit = |factors: &[&Symbol], next: &mut BTreeSet<Symbol>| {
            let nonpoly = factors.iter().filter(|u| !u.is_polynomial()).count();
            let corrections = factors
                .iter()
                .filter(|u| !u.is_unit() && ***u != conv)
                .count();
            if nonpoly < 2 || corrections > 1 {
                return;
            }
            let mut prod = factors[0].clone();
            for u in &factors[1..] {
                prod = prod.mul(u);
            }
            if deg(&prod) <= internal_cap {
                next.insert(prod);
            }
        };
        for i in 0..nb {
            for j in i..nb {
                admit(&[&basis[i], &basis[j]], &mut next);
                for l in j..nb {
                    admit(&[&basis[i], &basis[j], &basis[l]], &mut next);
                }
            }
        }

        if next == set {
            break;
        }
        set = next;
    }

    set.retain(|s| deg(s) <= cap);
    Structure {
        params,
        cap,
        symbols: set,
    }
}
