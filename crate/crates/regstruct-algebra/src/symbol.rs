//! Canonical tree symbols.
//!
//! A symbol is a commutative product
//! `Xi^xi · X0^k0·X1^k1·X2^k2·X3^k3 · Π I(arg_j)^m_j`,
//! where `Xi` stands for space-time white noise, `X0..X3` are the time and
//! space monomials with parabolic weights `(2,1,1,1)`, and `I(·)` is abstract
//! integration against the heat kernel. Products are stored sorted with
//! multiplicities merged, so structural equality is syntactic equality.
//!
//! The non-redundancy rule `I(X^k) = 0` is enforced at construction time:
//! [`Symbol::integ`] returns `None` when the argument is purely polynomial
//! (including the unit), since no nonzero symbol represents the result.

use crate::degree::Degree;
use num_rational::Rational64;
use std::fmt;

/// Multi-index over `(t, x1, x2, x3)`.
pub type MultiIndex = [u32; 4];

/// Parabolic weight `2k0 + k1 + k2 + k3` of a multi-index.
pub fn parabolic_weight(k: &MultiIndex) -> u32 {
    2 * k[0] + k[1] + k[2] + k[3]
}

/// Componentwise factorial `k0!·k1!·k2!·k3!` as a rational.
pub fn multi_factorial(k: &MultiIndex) -> Rational64 {
    let mut acc: i64 = 1;
    for &ki in k {
        for j in 2..=i64::from(ki) {
            acc *= j;
        }
    }
    Rational64::from_integer(acc)
}

/// A canonical commutative tree symbol. See the module docs for the shape.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Symbol {
    pub(crate) xi: u32,
    pub(crate) xpow: MultiIndex,
    /// Sorted list of `(argument, multiplicity)` pairs, one per distinct
    /// integrated factor `I(argument)`; multiplicities are at least 1.
    pub(crate) ifac: Vec<(Symbol, u32)>,
}

impl Symbol {
    /// The unit symbol `1`.
    pub fn unit() -> Self {
        Symbol {
            xi: 0,
            xpow: [0; 4],
            ifac: Vec::new(),
        }
    }

    /// The noise symbol `Xi`.
    pub fn noise() -> Self {
        Symbol {
            xi: 1,
            xpow: [0; 4],
            ifac: Vec::new(),
        }
    }

    /// The monomial `X^k`.
    pub fn monomial(k: MultiIndex) -> Self {
        Symbol {
            xi: 0,
            xpow: k,
            ifac: Vec::new(),
        }
    }

    /// The coordinate monomial `X_axis` (`axis = 0` is time).
    pub fn x(axis: usize) -> Self {
        assert!(axis < 4, "axis out of range");
        let mut k = [0u32; 4];
        k[axis] = 1;
        Symbol::monomial(k)
    }

    /// Abstract integration `I(arg)`. Returns `None` when `arg` is purely
    /// polynomial, because `I(X^k) = 0`.
    pub fn integ(arg: &Symbol) -> Option<Self> {
        if arg.is_polynomial() {
            return None;
        }
        Symbol {
            xi: 0,
            xpow: [0; 4],
            ifac: vec![(arg.clone(), 1)],
        }
        .into()
    }

    /// Commutative product of two symbols.
    pub fn mul(&self, other: &Symbol) -> Symbol {
        let mut xpow = self.xpow;
        for (a, b) in xpow.iter_mut().zip(&other.xpow) {
            *a += b;
        }
        let mut ifac = self.ifac.clone();
        for (arg, m) in &other.ifac {
            match ifac.binary_search_by(|(a, _)| a.cmp(arg)) {
                Ok(pos) => ifac[pos].1 += m,
                Err(pos) => ifac.insert(pos, (arg.clone(), *m)),
            }
        }
        Symbol {
            xi: self.xi + other.xi,
            xpow,
            ifac,
        }
    }

    /// `self^n` (the unit for `n = 0`).
    pub fn pow(&self, n: u32) -> Symbol {
        let mut out = Symbol::unit();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn is_unit(&self) -> bool {
        self.xi == 0 && self.xpow == [0; 4] && self.ifac.is_empty()
    }

    /// Purely polynomial: a monomial `X^k` (including the unit).
    pub fn is_polynomial(&self) -> bool {
        self.xi == 0 && self.ifac.is_empty()
    }

    /// Number of noise factors.
    pub fn noise_power(&self) -> u32 {
        self.xi
    }

    /// Monomial part exponents.
    pub fn monomial_part(&self) -> &MultiIndex {
        &self.xpow
    }

    /// Integrated factors as `(argument, multiplicity)` pairs.
    pub fn integrated_factors(&self) -> &[(Symbol, u32)] {
        &self.ifac
    }

    /// A single integration factor `I(arg)` with no other parts, i.e. a
    /// basis symbol of the expansion (as opposed to a product).
    pub fn is_single_integral(&self) -> bool {
        self.xi == 0
            && self.xpow == [0; 4]
            && self.ifac.len() == 1
            && self.ifac[0].1 == 1
    }

    /// A pure power `I(Xi)^a` with `a >= 1`.
    pub fn is_conv_power(&self) -> bool {
        self.xi == 0
            && self.xpow == [0; 4]
            && self.ifac.len() == 1
            && self.ifac[0].0 == Symbol::noise()
    }

    /// Parabolic degree with the default three-dimensional noise degree
    /// `|Xi| = -5/2 - κ`.
    pub fn degree(&self) -> Degree {
        self.degree_with(default_noise_degree())
    }

    /// Parabolic degree with a caller-chosen noise degree (the degree table
    /// is otherwise identical; see [`crate::StructureParams`]).
    pub fn degree_with(&self, noise_degree: Degree) -> Degree {
        let mut d = noise_degree.scaled(self.xi);
        d += Degree::integer(i64::from(parabolic_weight(&self.xpow)));
        for (arg, m) in &self.ifac {
            d += (arg.degree_with(noise_degree) + Degree::integer(2)).scaled(*m);
        }
        d
    }

    pub(crate) fn with_ifac_delta(&self, key: &Symbol, delta: i64) -> Symbol {
        let mut out = self.clone();
        match out.ifac.binary_search_by(|(a, _)| a.cmp(key)) {
            Ok(pos) => {
                let m = i64::from(out.ifac[pos].1) + delta;
                assert!(m >= 0, "negative multiplicity");
                if m == 0 {
                    out.ifac.remove(pos);
                } else {
                    out.ifac[pos].1 = u32::try_from(m).unwrap();
                }
            }
            Err(pos) => {
                assert!(delta >= 0, "removing an absent factor");
                if delta > 0 {
                    out.ifac
                        .insert(pos, (key.clone(), u32::try_from(delta).unwrap()));
                }
            }
        }
        out
    }

    pub(crate) fn ifac_count(&self, key: &Symbol) -> u32 {
        self.ifac
            .binary_search_by(|(a, _)| a.cmp(key))
            .map(|pos| self.ifac[pos].1)
            .unwrap_or(0)
    }
}

/// Default noise degree `-5/2 - κ` (space-time white noise in three space
/// dimensions under parabolic scaling).
pub fn default_noise_degree() -> Degree {
    Degree::from_parts(-5, 2, -1)
}

fn fmt_monomial(k: &MultiIndex, out: &mut Vec<String>) {
    for (axis, &p) in k.iter().enumerate() {
        if p == 1 {
            out.push(format!("X{axis}"));
        } else if p > 1 {
            out.push(format!("X{axis}^{p}"));
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        if self.xi == 1 {
            parts.push("Xi".to_owned());
        } else if self.xi > 1 {
            parts.push(format!("Xi^{}", self.xi));
        }
        for (arg, m) in &self.ifac {
            if *m == 1 {
                parts.push(format!("I({arg})"));
            } else {
                parts.push(format!("I({arg})^{m}"));
            }
        }
        fmt_monomial(&self.xpow, &mut parts);
        write!(f, "{}", parts.join("*"))
    }
}
