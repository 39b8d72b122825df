//! The positive sector and tensor sums.
//!
//! [`PlusSymbol`] is an element of the positive symbol set: a product
//! `X^k · Π J_{ℓ_j}(τ_j)^{m_j}`, where each `J_ℓ(τ)` stands for an `ℓ`-th
//! derivative of the integration of `τ` evaluated at the base point. Every
//! `J` factor must satisfy the positivity constraint
//! `|τ| + 2 − |ℓ| > 0` (lexicographically, with `κ` infinitesimal).
//!
//! [`TensorSum`] is a formal rational-coefficient sum of `symbol ⊗ plus`
//! pairs, canonicalized and merged; [`PlusTensorSum`] is the analogue with
//! both legs in the positive sector.

use crate::degree::Degree;
use crate::symbol::{multi_factorial, parabolic_weight, MultiIndex, Symbol};
use crate::RegstructError;
use num_rational::Rational64;
use std::collections::BTreeMap;
use std::fmt;

/// A canonical element `X^k · Π J_{ℓ_j}(τ_j)^{m_j}` of the positive sector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PlusSymbol {
    xpow: MultiIndex,
    /// Sorted `(derivative index, argument, multiplicity)` triples.
    jfac: Vec<(MultiIndex, Symbol, u32)>,
}

impl PlusSymbol {
    pub fn unit() -> Self {
        PlusSymbol {
            xpow: [0; 4],
            jfac: Vec::new(),
        }
    }

    pub fn monomial(k: MultiIndex) -> Self {
        PlusSymbol {
            xpow: k,
            jfac: Vec::new(),
        }
    }

    /// The coordinate monomial `X_axis` as a positive-sector element.
    pub fn x(axis: usize) -> Self {
        assert!(axis < 4, "axis out of range");
        let mut k = [0u32; 4];
        k[axis] = 1;
        PlusSymbol::monomial(k)
    }

    /// A single generator `J_ℓ(arg)`. Fails unless `arg` is non-polynomial
    /// and the positivity constraint `|arg| + 2 − |ℓ| > 0` holds (degrees
    /// taken with the default noise degree).
    pub fn j(index: MultiIndex, arg: &Symbol) -> Result<Self, RegstructError> {
        if arg.is_polynomial() {
            return Err(RegstructError::Invalid(format!(
                "J applied to the polynomial symbol {arg}"
            )));
        }
        let deg = arg.degree() + Degree::integer(2)
            - Degree::integer(i64::from(parabolic_weight(&index)));
        if !deg.is_positive() {
            return Err(RegstructError::Invalid(format!(
                "J_{index:?}({arg}) has non-positive degree {deg}"
            )));
        }
        Ok(PlusSymbol {
            xpow: [0; 4],
            jfac: vec![(index, arg.clone(), 1)],
        })
    }

    pub fn mul(&self, other: &PlusSymbol) -> PlusSymbol {
        let mut xpow = self.xpow;
        for (a, b) in xpow.iter_mut().zip(&other.xpow) {
            *a += b;
        }
        let mut jfac = self.jfac.clone();
        for (idx, arg, m) in &other.jfac {
            match jfac.binary_search_by(|(i2, a2, _)| (i2, a2).cmp(&(idx, arg))) {
                Ok(pos) => jfac[pos].2 += m,
                Err(pos) => jfac.insert(pos, (*idx, arg.clone(), *m)),
            }
        }
        PlusSymbol { xpow, jfac }
    }

    pub fn is_unit(&self) -> bool {
        self.xpow == [0; 4] && self.jfac.is_empty()
    }

    pub fn monomial_part(&self) -> &MultiIndex {
        &self.xpow
    }

    pub fn j_factors(&self) -> &[(MultiIndex, Symbol, u32)] {
        &self.jfac
    }

    /// Degree: `|X^k| = |k|` (parabolic) and `|J_ℓ(τ)| = |τ| + 2 − |ℓ|`,
    /// additive over the product.
    pub fn degree(&self) -> Degree {
        let mut d = Degree::integer(i64::from(parabolic_weight(&self.xpow)));
        for (idx, arg, m) in &self.jfac {
            let j = arg.degree() + Degree::integer(2)
                - Degree::integer(i64::from(parabolic_weight(idx)));
            d += j.scaled(*m);
        }
        d
    }
}

fn fmt_j_index(idx: &MultiIndex) -> String {
    if *idx == [0; 4] {
        String::new()
    } else if *idx == [1, 0, 0, 0] {
        "_t".to_owned()
    } else if parabolic_weight(idx) == 1 {
        let axis = (1..4).find(|&i| idx[i] == 1).unwrap();
        format!("_x{axis}")
    } else {
        format!("_[{},{},{},{}]", idx[0], idx[1], idx[2], idx[3])
    }
}

impl fmt::Display for PlusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (axis, &p) in self.xpow.iter().enumerate() {
            if p == 1 {
                parts.push(format!("X{axis}"));
            } else if p > 1 {
                parts.push(format!("X{axis}^{p}"));
            }
        }
        for (idx, arg, m) in &self.jfac {
            let head = format!("J{}({})", fmt_j_index(idx), arg);
            if *m == 1 {
                parts.push(head);
            } else {
                parts.push(format!("{head}^{m}"));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Binomial expansion of a monomial split `X^k ↦ Σ C(k,l) X^l ⊗ X^{k−l}`,
/// returned as `(l, k−l, C(k,l))` triples.
pub(crate) fn monomial_splits(k: &MultiIndex) -> Vec<(MultiIndex, MultiIndex, Rational64)> {
    fn binom(n: u32, r: u32) -> i64 {
        let mut acc: i64 = 1;
        for j in 0..r {
            acc = acc * i64::from(n - j) / i64::from(j + 1);
        }
        acc
    }
    let mut out = Vec::new();
    for l0 in 0..=k[0] {
        for l1 in 0..=k[1] {
            for l2 in 0..=k[2] {
                for l3 in 0..=k[3] {
                    let l = [l0, l1, l2, l3];
                    let rest = [k[0] - l0, k[1] - l1, k[2] - l2, k[3] - l3];
                    let c = binom(k[0], l0) * binom(k[1], l1) * binom(k[2], l2) * binom(k[3], l3);
                    out.push((l, rest, Rational64::from_integer(c)));
                }
            }
        }
    }
    out
}

/// All multi-indices of parabolic weight exactly `w`.
pub(crate) fn indices_of_weight(w: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    for k0 in 0..=(w / 2) {
        let rem = w - 2 * k0;
        for k1 in 0..=rem {
            for k2 in 0..=(rem - k1) {
                let k3 = rem - k1 - k2;
                out.push([k0, k1, k2, k3]);
            }
        }
    }
    out
}

pub(crate) fn add_indices(a: &MultiIndex, b: &MultiIndex) -> MultiIndex {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

/// `(-1)^{|c|} / c!` where `|c|` counts raw entries (not parabolic weight):
/// the sign of `(-X)^c` depends on how many coordinate factors appear.
pub(crate) fn neg_x_coeff(c: &MultiIndex) -> Rational64 {
    let entries: u32 = c.iter().sum();
    let sign = if entries.is_multiple_of(2) { 1 } else { -1 };
    Rational64::from_integer(sign) / multi_factorial(c)
}

macro_rules! tensor_sum_impl {
    ($name:ident, $left:ty, $right:ty, $sep:literal) => {
        /// A canonicalized formal sum with rational coefficients; terms with
        /// coefficient zero are dropped eagerly.
        #[derive(Clone, PartialEq, Eq, Debug, Default)]
        pub struct $name {
            terms: BTreeMap<($left, $right), Rational64>,
        }

        impl $name {
            pub fn zero() -> Self {
                Self::default()
            }

            /// The sum consisting of the single term `1 ⊗ 1`.
            pub fn one() -> Self {
                let mut s = Self::zero();
                s.add_term(<$left>::unit(), <$right>::unit(), Rational64::from_integer(1));
                s
            }

            pub fn from_terms(
                terms: impl IntoIterator<Item = ($left, $right, Rational64)>,
            ) -> Self {
                let mut s = Self::zero();
                for (a, b, c) in terms {
                    s.add_term(a, b, c);
                }
                s
            }

            pub fn add_term(&mut self, left: $left, right: $right, coeff: Rational64) {
                if *coeff.numer() == 0 {
                    return;
                }
                let key = (left, right);
                match self.terms.get_mut(&key) {
                    Some(v) => {
                        *v += coeff;
                        if *v.numer() == 0 {
                            self.terms.remove(&key);
                        }
                    }
                    None => {
                        self.terms.insert(key, coeff);
                    }
                }
            }

            pub fn add_assign(&mut self, other: &Self) {
                for ((a, b), c) in &other.terms {
                    self.add_term(a.clone(), b.clone(), *c);
                }
            }

            /// Pairwise (slotwise) product of two sums.
            pub fn mul(&self, other: &Self) -> Self {
                let mut out = Self::zero();
                for ((a1, b1), c1) in &self.terms {
                    for ((a2, b2), c2) in &other.terms {
                        out.add_term(a1.mul(a2), b1.mul(b2), c1 * c2);
                    }
                }
                out
            }

            pub fn iter(&self) -> impl Iterator<Item = (&$left, &$right, &Rational64)> {
                self.terms.iter().map(|((a, b), c)| (a, b, c))
            }

            pub fn len(&self) -> usize {
                self.terms.len()
            }

            pub fn is_empty(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn coeff(&self, left: &$left, right: &$right) -> Rational64 {
                self.terms
                    .get(&(left.clone(), right.clone()))
                    .copied()
                    .unwrap_or_else(|| Rational64::from_integer(0))
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.terms.is_empty() {
                    return write!(f, "0");
                }
                let mut first = true;
                for ((a, b), c) in &self.terms {
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    if *c != Rational64::from_integer(1) {
                        write!(f, "{c} ")?;
                    }
                    write!(f, "{a}{}{b}", $sep)?;
                }
                Ok(())
            }
        }
    };
}

tensor_sum_impl!(TensorSum, Symbol, PlusSymbol, " (x) ");
tensor_sum_impl!(PlusTensorSum, PlusSymbol, PlusSymbol, " (x) ");
