//! The coproduct `Δ⁺` on symbols and its extension to the positive sector.
//!
//! On tree symbols the defining rules are
//!
//! ```text
//! Δ⁺(Xi)    = Xi ⊗ 1
//! Δ⁺(X^k)   = Σ_{l ≤ k} C(k,l) X^l ⊗ X^{k−l}
//! Δ⁺(I(τ))  = (I ⊗ Id) Δ⁺(τ)
//!             + Σ_{ℓ,m} (X^ℓ/ℓ!) ⊗ (X^m/m!) · J_{ℓ+m}(τ)
//! ```
//!
//! extended multiplicatively over products. The `(ℓ, m)` sum ranges over all
//! multi-indices for which `J_{ℓ+m}(τ)` satisfies the positivity constraint
//! `|τ| + 2 − |ℓ+m| > 0`; terms whose first leg vanishes under `I` (because
//! `I(X^k) = 0`) are dropped, which is consistent since they are zero.
//!
//! On the positive sector, `X_i` is primitive (monomials split binomially)
//! and a generator `J_ℓ(τ)` with group-trivial argument (`Δ⁺τ = τ ⊗ 1`)
//! splits as
//!
//! ```text
//! Δ₊(J_ℓ τ) = Σ_c J_{ℓ+c}(τ) ⊗ (−X)^c/c!  +  1 ⊗ J_ℓ(τ),
//! ```
//!
//! again keeping only positive-degree `J` terms. This is the unique
//! extension (for group-trivial arguments) compatible with the comodule
//! identity `(Id ⊗ Δ₊)Δ⁺ = (Δ⁺ ⊗ Id)Δ⁺`: the recentering factor `(−X)^c/c!`
//! is forced by the binomial cancellation in that identity. Arguments with a
//! non-trivial coproduct are outside the truncation implemented here and are
//! reported as an error rather than silently mishandled.

use crate::symbol::{multi_factorial, parabolic_weight, Symbol};
use crate::tensor::{
    add_indices, indices_of_weight, monomial_splits, neg_x_coeff, PlusSymbol, PlusTensorSum,
    TensorSum,
};
use crate::{Degree, RegstructError};
use num_rational::Rational64;

/// `Δ⁺` on a tree symbol. Total on canonical symbols; the positivity
/// constraint of the positive sector only prunes the emitted `J` terms.
pub fn coproduct(s: &Symbol) -> TensorSum {
    let one = Rational64::from_integer(1);
    let mut acc = TensorSum::one();

    if s.noise_power() > 0 {
        let mut noise = TensorSum::zero();
        noise.add_term(
            Symbol::noise().pow(s.noise_power()),
            PlusSymbol::unit(),
            one,
        );
        acc = acc.mul(&noise);
    }

    let k = *s.monomial_part();
    if k != [0; 4] {
        let mut mono = TensorSum::zero();
        for (l, rest, c) in monomial_splits(&k) {
            mono.add_term(Symbol::monomial(l), PlusSymbol::monomial(rest), c);
        }
        acc = acc.mul(&mono);
    }

    for (arg, mult) in s.integrated_factors() {
        let single = coproduct_integral(arg);
        for _ in 0..*mult {
            acc = acc.mul(&single);
        }
    }
    acc
}

/// `Δ⁺(I(arg))` for a non-polynomial argument.
fn coproduct_integral(arg: &Symbol) -> TensorSum {
    let mut out = TensorSum::zero();

    // (I ⊗ Id) applied to Δ⁺(arg); first legs that integrate to zero vanish.
    for (left, right, c) in coproduct(arg).iter() {
        if let Some(ileft) = Symbol::integ(left) {
            out.add_term(ileft, right.clone(), *c);
        }
    }

    // Recentering terms X^ℓ/ℓ! ⊗ X^m/m! J_{ℓ+m}(arg).
    let jdeg = arg.degree() + Degree::integer(2);
    let mut total_weight = 0u32;
    loop {
        let remaining = jdeg - Degree::integer(i64::from(total_weight));
        if !remaining.is_positive() {
            break;
        }
        for full in indices_of_weight(total_weight) {
            let jsym = PlusSymbol::j(full, arg)
                .expect("index within the positivity bound must be admissible");
            for (l, m, _) in monomial_splits(&full) {
                let coeff =
                    Rational64::from_integer(1) / (multi_factorial(&l) * multi_factorial(&m));
                let right = PlusSymbol::monomial(m).mul(&jsym);
                out.add_term(Symbol::monomial(l), right, coeff);
            }
        }
        total_weight += 1;
    }
    out
}

/// `Δ₊` on a positive-sector element, defined multiplicatively from the
/// monomial splitting and the generator rule in the module docs.
///
/// Fails with [`RegstructError::NotClosed`] if some `J` generator has an
/// argument whose own coproduct is non-trivial, since the truncated formula
/// would then be incomplete.
pub fn coproduct_plus(p: &PlusSymbol) -> Result<PlusTensorSum, RegstructError> {
    let mut acc = PlusTensorSum::one();

    let k = *p.monomial_part();
    if k != [0; 4] {
        let mut mono = PlusTensorSum::zero();
        for (l, rest, c) in monomial_splits(&k) {
            mono.add_term(PlusSymbol::monomial(l), PlusSymbol::monomial(rest), c);
        }
        acc = acc.mul(&mono);
    }

    for (idx, arg, mult) in p.j_factors() {
        let single = coproduct_plus_generator(idx, arg)?;
        for _ in 0..*mult {
            acc = acc.mul(&single);
        }
    }
    Ok(acc)
}

fn coproduct_plus_generator(
    idx: &[u32; 4],
    arg: &Symbol,
) -> Result<PlusTensorSum, RegstructError> {
    let inner = coproduct(arg);
    let trivial = inner.len() == 1
        && inner.coeff(arg, &PlusSymbol::unit()) == Rational64::from_integer(1);
    if !trivial {
        return Err(RegstructError::NotClosed(
            format!("J_{idx:?}({arg})"),
            format!(
                "the argument has the non-trivial coproduct {inner}, which the \
                 truncated positive-sector formula does not cover"
            ),
        ));
    }

    let mut out = PlusTensorSum::zero();
    // Σ_c J_{ℓ+c}(arg) ⊗ (−X)^c/c!, positive-degree terms only.
    let jdeg = arg.degree() + Degree::integer(2)
        - Degree::integer(i64::from(parabolic_weight(idx)));
    let mut extra = 0u32;
    loop {
        let remaining = jdeg - Degree::integer(i64::from(extra));
        if !remaining.is_positive() {
            break;
        }
        for c in indices_of_weight(extra) {
            let shifted = add_indices(idx, &c);
            let jsym = PlusSymbol::j(shifted, arg)
                .expect("index within the positivity bound must be admissible");
            out.add_term(jsym, PlusSymbol::monomial(c), neg_x_coeff(&c));
        }
        extra += 1;
    }
    // 1 ⊗ J_ℓ(arg).
    out.add_term(
        PlusSymbol::unit(),
        PlusSymbol::j(*idx, arg)?,
        Rational64::from_integer(1),
    );
    Ok(out)
}
