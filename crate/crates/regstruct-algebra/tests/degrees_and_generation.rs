//! Golden data for symbol degrees and for the truncated generation of the
//! canonical symbol set of the cubic equation driven by space-time white
//! noise in three dimensions.

use regstruct_algebra::{
    generate_fac, generate_fac_with, parse_symbol, Degree, StructureParams, Symbol,
};
use std::collections::BTreeSet;

fn p(text: &str) -> Symbol {
    parse_symbol(text).unwrap_or_else(|e| panic!("parse `{text}`: {e}"))
}

fn d(num: i64, den: i64, kappa: i64) -> Degree {
    Degree::from_parts(num, den, kappa)
}

/// Every symbol of the degree-≤-3/2 set with its exact degree `a + b·κ`.
fn golden_rows() -> Vec<(&'static str, Degree)> {
    vec![
        ("Xi", d(-5, 2, -1)),
        ("I(Xi)^3", d(-3, 2, -3)),
        ("I(Xi)^2", d(-1, 1, -2)),
        ("I(I(Xi)^3)*I(Xi)^2", d(-1, 2, -5)),
        ("I(Xi)", d(-1, 2, -1)),
        ("I(I(Xi)^3)*I(Xi)", d(0, 1, -4)),
        ("I(I(Xi)^2)*I(Xi)^2", d(0, 1, -4)),
        ("I(Xi)^2*X1", d(0, 1, -2)),
        ("I(Xi)^2*X2", d(0, 1, -2)),
        ("I(Xi)^2*X3", d(0, 1, -2)),
        ("1", d(0, 1, 0)),
        ("I(I(Xi)^3)", d(1, 2, -3)),
        ("I(I(Xi)^2)*I(Xi)", d(1, 2, -3)),
        ("I(I(Xi))*I(Xi)^2", d(1, 2, -3)),
        ("I(I(Xi)^2)", d(1, 1, -2)),
        ("I(I(Xi))*I(Xi)", d(1, 1, -2)),
        ("X1", d(1, 1, 0)),
        ("X2", d(1, 1, 0)),
        ("X3", d(1, 1, 0)),
        ("I(I(Xi))", d(3, 2, -1)),
    ]
}

#[test]
fn degrees_match_the_golden_table() {
    for (text, expected) in golden_rows() {
        let s = p(text);
        assert_eq!(
            s.degree(),
            expected,
            "degree of {text}: got {}, expected {expected}",
            s.degree()
        );
    }
}

#[test]
fn generation_at_cap_three_halves_is_exactly_the_golden_set() {
    let structure = generate_fac(d(3, 2, 0));
    let expected: BTreeSet<Symbol> = golden_rows().into_iter().map(|(t, _)| p(t)).collect();
    assert_eq!(expected.len(), 20);

    let got: BTreeSet<Symbol> = structure.symbols().cloned().collect();
    for s in &expected {
        assert!(got.contains(s), "missing symbol {s}");
    }
    for s in &got {
        assert!(expected.contains(s), "spurious symbol {s}");
    }
    assert_eq!(structure.len(), 20);
}

#[test]
fn generation_at_cap_minus_one_half_keeps_five_symbols() {
    let structure = generate_fac(d(-1, 2, 0));
    let expected: BTreeSet<Symbol> = ["Xi", "I(Xi)^3", "I(Xi)^2", "I(I(Xi)^3)*I(Xi)^2", "I(Xi)"]
        .into_iter()
        .map(p)
        .collect();
    let got: BTreeSet<Symbol> = structure.symbols().cloned().collect();
    assert_eq!(got, expected);
}

#[test]
fn minimum_degree_is_the_forcing_degree() {
    let structure = generate_fac(d(3, 2, 0));
    assert_eq!(structure.min_degree(), Some(d(-5, 2, -1)));
    assert_eq!(structure.degree_of(&p("Xi")), d(-5, 2, -1));
}

#[test]
fn time_monomial_is_above_the_cap() {
    let structure = generate_fac(d(3, 2, 0));
    // The time coordinate has parabolic weight two, hence degree 2 > 3/2.
    assert!(!structure.contains(&Symbol::x(0)));
    assert_eq!(Symbol::x(0).degree(), Degree::integer(2));
    // Quadratic spatial monomials are likewise excluded.
    assert!(!structure.contains(&p("X1^2")));
    assert!(!structure.contains(&p("X1*X2")));
}

#[test]
fn sorted_listing_is_ascending_and_starts_at_the_forcing() {
    let structure = generate_fac(d(3, 2, 0));
    let rows = structure.sorted_by_degree();
    assert_eq!(rows.len(), 20);
    assert_eq!(rows[0].1, p("Xi"));
    assert_eq!(rows[rows.len() - 1].1, p("I(I(Xi))"));
    for w in rows.windows(2) {
        assert!(w[0].0 <= w[1].0, "degrees out of order: {} > {}", w[0].0, w[1].0);
    }
    // Ten symbols are strictly negative once the infinitesimal part counts
    // (the five at or below -1/2 plus the five of the form 0 - b·κ), and
    // exactly five sit at or below -1/2.
    let negative = rows
        .iter()
        .filter(|(deg, _)| !(Degree::zero() <= *deg))
        .count();
    assert_eq!(negative, 10);
    let deeply_negative = rows
        .iter()
        .filter(|(deg, _)| *deg <= d(-1, 2, 0))
        .count();
    assert_eq!(deeply_negative, 5);
}

#[test]
fn two_dimensional_variant_has_eight_symbols() {
    let params = StructureParams {
        noise_degree: d(-3, 2, -1),
    };
    let structure = generate_fac_with(params, d(3, 2, 0));
    let expected: BTreeSet<Symbol> = ["1", "X1", "X2", "X3", "Xi", "I(Xi)", "I(Xi)^2", "I(Xi)^3"]
        .into_iter()
        .map(p)
        .collect();
    let got: BTreeSet<Symbol> = structure.symbols().cloned().collect();
    assert_eq!(got, expected);
    // The cube of the convolution sits exactly at the cap: 3·(1/2 - κ).
    assert_eq!(structure.degree_of(&p("I(Xi)^3")), d(3, 2, -3));
}

#[test]
fn displayed_forms_round_trip_through_the_parser() {
    let structure = generate_fac(d(3, 2, 0));
    for s in structure.symbols() {
        let text = s.to_string();
        let back = p(&text);
        assert_eq!(&back, s, "round-trip failed for {text}");
    }
}
