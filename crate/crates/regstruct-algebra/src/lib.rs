//! Symbolic kernel for the model-space combinatorics of a cubic singular
//! stochastic PDE in up to three space dimensions.
//!
//! The crate works with formal symbols built from a forcing symbol `Xi`,
//! parabolic space-time monomials `X^k`, an abstract convolution `I(·)`
//! against the heat kernel, and commutative products. It provides:
//!
//! * exact degree bookkeeping in the form `a + b·κ` with rational `a` and a
//!   formally infinitesimal `κ > 0` ([`Degree`]);
//! * generation of the finite symbol set carried by a solution expansion
//!   truncated at a degree cap ([`generate_fac`], [`Structure`]);
//! * the structure-group coproduct splitting a symbol into a lower-order
//!   part and positive-degree recentering data ([`coproduct`]), the
//!   companion coalgebra on the recentering side ([`coproduct_plus`]), and
//!   the induced group action on the free vector space over symbols
//!   ([`GroupElement`]);
//! * the renormalization map that subtracts divergent self-pairings of the
//!   convolved forcing — a mass-type counterterm `c1` and a sunset-type
//!   counterterm `c2` — as an exact exponential series ([`RenormMap`]);
//! * a plain-ASCII grammar for symbols ([`parse_symbol`]) with canonical
//!   display forms, so downstream tools can round-trip them.
//!
//! All coefficients are exact rationals; nothing here is numerical.

mod coproduct;
mod degree;
mod generate;
mod group;
mod parse;
mod renorm;
mod symbol;
mod tensor;

pub use coproduct::{coproduct, coproduct_plus};
pub use degree::Degree;
pub use generate::{generate_fac, generate_fac_with, Structure, StructureParams};
pub use group::GroupElement;
pub use parse::parse_symbol;
pub use renorm::{coef_monomial, format_coef_poly, CoefPoly, RenormMap, RenormSum};
pub use symbol::{
    default_noise_degree, multi_factorial, parabolic_weight, MultiIndex, Symbol,
};
pub use tensor::{PlusSymbol, PlusTensorSum, TensorSum};

/// Errors reported by symbol parsing and the coalgebra operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegstructError {
    /// The input text is not a well-formed symbol expression.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// The expression denotes the zero element (integration of a
    /// polynomial), which is not a symbol.
    #[error("expression `{0}` denotes the zero element: integration annihilates polynomials")]
    ZeroSymbol(String),
    /// A coalgebra operation left the computable sector: the recentering
    /// functional `{0}` has a structurally non-trivial argument.
    #[error("recentering functional `{0}` is not closed under the coproduct: {1}")]
    NotClosed(String, String),
    /// An operation received arguments outside its domain.
    #[error("{0}")]
    Invalid(String),
}
