//! Parabolic degrees of the form `a + b·κ`, where `κ` is a positive
//! infinitesimal kept symbolic as a rational coefficient.
//!
//! Degrees are compared lexicographically: `a + b·κ < c + d·κ` iff `a < c`,
//! or `a = c` and `b < d`. This realizes "for every sufficiently small
//! `κ > 0`" without ever committing to a numeric value.

use num_rational::Rational64;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

/// A degree `a + b·κ` with `a`, `b` rational and `κ` an unspecified positive
/// infinitesimal. The derived ordering on `(a, b)` is exactly the
/// lexicographic order described in the module docs.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Degree {
    /// Rational part.
    pub a: Rational64,
    /// Coefficient of `κ`.
    pub b: Rational64,
}

impl Degree {
    pub fn new(a: Rational64, b: Rational64) -> Self {
        Degree { a, b }
    }

    /// Degree `num/den + b·κ` from raw integers (`den > 0`).
    pub fn from_parts(num: i64, den: i64, b: i64) -> Self {
        Degree {
            a: Rational64::new(num, den),
            b: Rational64::from_integer(b),
        }
    }

    pub fn zero() -> Self {
        Degree::from_parts(0, 1, 0)
    }

    pub fn integer(n: i64) -> Self {
        Degree::from_parts(n, 1, 0)
    }

    /// Strictly positive in the lexicographic sense (`a > 0`, or `a = 0` and
    /// `b > 0`).
    pub fn is_positive(&self) -> bool {
        *self > Degree::zero()
    }

    /// Multiply by a nonnegative integer multiplicity.
    pub fn scaled(&self, n: u32) -> Self {
        let k = Rational64::from_integer(i64::from(n));
        Degree {
            a: self.a * k,
            b: self.b * k,
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        Degree {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl AddAssign for Degree {
    fn add_assign(&mut self, rhs: Degree) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Sub for Degree {
    type Output = Degree;
    fn sub(self, rhs: Degree) -> Degree {
        Degree {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Neg for Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits_shim::is_zero;
        if is_zero(&self.b) {
            write!(f, "{}", self.a)
        } else if is_zero(&self.a) {
            write!(f, "{}k", self.b)
        } else if self.b < Rational64::from_integer(0) {
            write!(f, "{} - {}k", self.a, -self.b)
        } else {
            write!(f, "{} + {}k", self.a, self.b)
        }
    }
}

/// Tiny local helper so we do not need the full `num-traits` dependency just
/// for a zero test.
mod num_traits_shim {
    use num_rational::Rational64;
    pub fn is_zero(r: &Rational64) -> bool {
        *r.numer() == 0
    }
}
