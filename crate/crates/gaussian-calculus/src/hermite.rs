//! Hermite polynomials with a variance parameter.
//!
//! `H_n(x; c)` is defined by the three-term recurrence
//! `H_0 = 1`, `H_1 = x`, `H_{n+1}(x; c) = x·H_n(x; c) − c·n·H_{n−1}(x; c)`,
//! so that `H_n(·; 1)` are the probabilists' polynomials and
//! `E[H_n(X; c) H_m(X; c)] = δ_{nm} n! cⁿ` for `X ~ N(0, c)`.  These are the
//! Wick powers of a Gaussian: `H_n(X; c) = :Xⁿ:` when `c = E[X²]`.

/// Evaluate `H_n(x; c)` by the three-term recurrence.
pub fn hermite(n: u32, x: f64, c: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => x,
        _ => {
            let mut prev = 1.0;
            let mut cur = x;
            for m in 1..n {
                let next = x * cur - c * m as f64 * prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Both sides of the exponential generating identity
/// `exp(tx − c t²/2) = Σ_{n≥0} tⁿ/n! · H_n(x; c)`:
/// returns `(closed_form, partial_sum)` with `terms` summands.
pub fn hermite_generating(x: f64, t: f64, c: f64, terms: u32) -> (f64, f64) {
    let closed = (t * x - 0.5 * c * t * t).exp();
    let mut sum = 0.0;
    let mut tn_over_fact = 1.0;
    for n in 0..terms {
        sum += tn_over_fact * hermite(n, x, c);
        tn_over_fact *= t / (n + 1) as f64;
    }
    (closed, sum)
}
