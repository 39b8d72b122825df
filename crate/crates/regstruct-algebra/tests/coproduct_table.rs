//! Golden data for the structure-group coproduct on the degree-≤-3/2 symbol
//! set: every split with a non-trivial right leg, term for term, plus the
//! degree bookkeeping and positivity invariants that characterize it.

use num_rational::Rational64;
use regstruct_algebra::{
    coproduct, generate_fac, parse_symbol, Degree, PlusSymbol, Symbol, TensorSum,
};

fn p(text: &str) -> Symbol {
    parse_symbol(text).unwrap_or_else(|e| panic!("parse `{text}`: {e}"))
}

fn one() -> Rational64 {
    Rational64::from_integer(1)
}

/// `J_0(arg)`: recentering against the plain kernel (no derivative).
fn j0(arg: &str) -> PlusSymbol {
    PlusSymbol::j([0; 4], &p(arg)).unwrap()
}

/// `J_i(arg)`: recentering against the kernel's i-th spatial derivative.
fn ji(i: usize, arg: &str) -> PlusSymbol {
    let mut idx = [0u32; 4];
    idx[i] = 1;
    PlusSymbol::j(idx, &p(arg)).unwrap()
}

fn expect(symbol: &str, tail: Vec<(Symbol, PlusSymbol, Rational64)>) {
    let s = p(symbol);
    let mut terms = vec![(s.clone(), PlusSymbol::unit(), one())];
    terms.extend(tail);
    let expected = TensorSum::from_terms(terms);
    let got = coproduct(&s);
    assert_eq!(got, expected, "coproduct of {symbol}: got {got}");
}

#[test]
fn group_trivial_symbols_split_as_self_tensor_unit() {
    for text in ["Xi", "1", "I(Xi)", "I(Xi)^2", "I(Xi)^3"] {
        expect(text, vec![]);
    }
}

#[test]
fn coordinate_symbols_are_primitive() {
    for i in 1..=3 {
        let s = Symbol::x(i);
        let expected = TensorSum::from_terms([
            (s.clone(), PlusSymbol::unit(), one()),
            (Symbol::unit(), PlusSymbol::x(i), one()),
        ]);
        assert_eq!(coproduct(&s), expected);
    }
}

#[test]
fn integrated_cube_with_two_convolutions() {
    expect(
        "I(I(Xi)^3)*I(Xi)^2",
        vec![(p("I(Xi)^2"), j0("I(Xi)^3"), one())],
    );
}

#[test]
fn integrated_cube_with_one_convolution() {
    expect(
        "I(I(Xi)^3)*I(Xi)",
        vec![(p("I(Xi)"), j0("I(Xi)^3"), one())],
    );
}

#[test]
fn integrated_square_with_two_convolutions() {
    expect(
        "I(I(Xi)^2)*I(Xi)^2",
        vec![(p("I(Xi)^2"), j0("I(Xi)^2"), one())],
    );
}

#[test]
fn coordinate_dressed_convolution_squares() {
    for i in 1..=3 {
        let s = Symbol::integ(&Symbol::noise())
            .unwrap()
            .pow(2)
            .mul(&Symbol::x(i));
        let expected = TensorSum::from_terms([
            (s.clone(), PlusSymbol::unit(), one()),
            (p("I(Xi)^2"), PlusSymbol::x(i), one()),
        ]);
        assert_eq!(coproduct(&s), expected, "split of {s}");
    }
}

#[test]
fn integrated_cube() {
    expect("I(I(Xi)^3)", vec![(Symbol::unit(), j0("I(Xi)^3"), one())]);
}

#[test]
fn integrated_square_with_one_convolution() {
    expect(
        "I(I(Xi)^2)*I(Xi)",
        vec![(p("I(Xi)"), j0("I(Xi)^2"), one())],
    );
}

#[test]
fn integrated_convolution_with_two_convolutions() {
    let mut tail = vec![(p("I(Xi)^2"), j0("I(Xi)"), one())];
    for i in 1..=3 {
        tail.push((p("I(Xi)^2").mul(&Symbol::x(i)), ji(i, "I(Xi)"), one()));
        tail.push((p("I(Xi)^2"), PlusSymbol::x(i).mul(&ji(i, "I(Xi)")), one()));
    }
    expect("I(I(Xi))*I(Xi)^2", tail);
}

#[test]
fn integrated_square() {
    expect("I(I(Xi)^2)", vec![(Symbol::unit(), j0("I(Xi)^2"), one())]);
}

#[test]
fn integrated_convolution_with_one_convolution() {
    let mut tail = vec![(p("I(Xi)"), j0("I(Xi)"), one())];
    for i in 1..=3 {
        tail.push((p("I(Xi)").mul(&Symbol::x(i)), ji(i, "I(Xi)"), one()));
        tail.push((p("I(Xi)"), PlusSymbol::x(i).mul(&ji(i, "I(Xi)")), one()));
    }
    expect("I(I(Xi))*I(Xi)", tail);
}

#[test]
fn doubly_integrated_convolution() {
    let mut tail = vec![(Symbol::unit(), j0("I(Xi)"), one())];
    for i in 1..=3 {
        tail.push((Symbol::x(i), ji(i, "I(Xi)"), one()));
        tail.push((Symbol::unit(), PlusSymbol::x(i).mul(&ji(i, "I(Xi)")), one()));
    }
    expect("I(I(Xi))", tail);
}

#[test]
fn every_split_preserves_total_degree() {
    let structure = generate_fac(Degree::from_parts(3, 2, 0));
    for s in structure.symbols() {
        let total = s.degree();
        for (left, right, _) in coproduct(s).iter() {
            assert_eq!(
                left.degree() + right.degree(),
                total,
                "degree leak splitting {s} into {left} (x) {right}"
            );
        }
    }
}

#[test]
fn every_emitted_recentering_functional_has_positive_degree() {
    let structure = generate_fac(Degree::from_parts(3, 2, 0));
    for s in structure.symbols() {
        for (_, right, _) in coproduct(s).iter() {
            if !right.is_unit() {
                assert!(
                    Degree::zero() < right.degree(),
                    "non-positive right leg {right} for {s}"
                );
            }
            for (idx, arg, _) in right.j_factors() {
                // No time derivatives and at most one spatial derivative
                // ever appear at this truncation order.
                assert_eq!(idx[0], 0, "time derivative in {right}");
                let weight: u32 = 2 * idx[0] + idx[1] + idx[2] + idx[3];
                assert!(weight <= 1, "second-order derivative in {right}");
                // Each kernel functional must be classically defined:
                // |arg| + 2 - |idx| > 0.
                let gain = arg.degree() + Degree::integer(2)
                    - Degree::integer(i64::from(weight));
                assert!(gain.is_positive(), "ill-defined J in {right}");
            }
        }
    }
}

#[test]
fn splits_with_unit_right_leg_have_coefficient_one() {
    let structure = generate_fac(Degree::from_parts(3, 2, 0));
    for s in structure.symbols() {
        let c = coproduct(s).coeff(s, &PlusSymbol::unit());
        assert_eq!(c, one(), "identity term of {s}");
    }
}
