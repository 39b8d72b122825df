//! Exact moments of centered Gaussian vectors by recursive pairing.

use crate::{GaussError, Result};

/// Mixed moment `E[X_{i₁} X_{i₂} ⋯ X_{i_m}]` of a centered Gaussian vector
/// with covariance `cov`, by the pairing (Isserlis/Wick) expansion:
/// the sum over all perfect matchings of the index multiset of the product
/// of pair covariances.  Odd `m` gives 0; repeated indices are allowed.
///
/// The number of matchings is `(m−1)!! `, so keep `m ≲ 16`.
pub fn isserlis_moment(cov: &[Vec<f64>], indices: &[usize]) -> Result<f64> {
    let n = cov.len();
    for row in cov {
        if row.len() != n {
            return Err(GaussError::InvalidParameter(
                "covariance matrix must be square".into(),
            ));
        }
    }
    for (i, row) in cov.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if (v - cov[j][i]).abs() > 1e-12 * v.abs().max(1.0) {
                return Err(GaussError::InvalidParameter(format!(
                    "covariance matrix must be symmetric (entry {i},{j})"
                )));
            }
        }
    }
    if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
        return Err(GaussError::InvalidParameter(format!(
            "index {bad} out of range for a {n}-dimensional vector"
        )));
    }
    if indices.len() > 20 {
        return Err(GaussError::InvalidParameter(format!(
            "moment order {} too large for the pairing expansion",
            indices.len()
        )));
    }
    if indices.len() % 2 == 1 {
        return Ok(0.0);
    }
    fn pair_sum(cov: &[Vec<f64>], rest: &[usize]) -> f64 {
        if rest.is_empty() {
            return 1.0;
        }
        let first = rest[0];
        let mut total = 0.0;
        for j in 1..rest.len() {
            let partner = rest[j];
            let mut remaining: Vec<usize> = Vec::with_capacity(rest.len() - 2);
            remaining.extend_from_slice(&rest[1..j]);
            remaining.extend_from_slice(&rest[j + 1..]);
            total += cov[first][partner] * pair_sum(cov, &remaining);
        }
        total
    }
    Ok(pair_sum(cov, indices))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_moments_vanish() {
        let cov = vec![vec![2.0]];
        assert_eq!(isserlis_moment(&cov, &[0, 0, 0]).unwrap(), 0.0);
    }

    #[test]
    fn scalar_even_moments_are_double_factorials() {
        // E[X^{2m}] = (2m−1)!! σ^{2m}.
        let cov = vec![vec![1.0]];
        assert_eq!(isserlis_moment(&cov, &[0; 2]).unwrap(), 1.0);
        assert_eq!(isserlis_moment(&cov, &[0; 4]).unwrap(), 3.0);
        assert_eq!(isserlis_moment(&cov, &[0; 6]).unwrap(), 15.0);
        assert_eq!(isserlis_moment(&cov, &[0; 8]).unwrap(), 105.0);
        let cov2 = vec![vec![1.5]];
        let want = 3.0 * 1.5 * 1.5;
        assert!((isserlis_moment(&cov2, &[0; 4]).unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn mixed_fourth_moment() {
        // E[X²Y²] = σ_x²σ_y² + 2σ_xy² for jointly Gaussian (X, Y).
        let cov = vec![vec![1.0, 0.6], vec![0.6, 2.0]];
        let got = isserlis_moment(&cov, &[0, 0, 1, 1]).unwrap();
        assert!((got - (2.0 + 2.0 * 0.36)).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_inputs() {
        let asym = vec![vec![1.0, 0.5], vec![0.4, 1.0]];
        assert!(isserlis_moment(&asym, &[0, 1]).is_err());
        let cov = vec![vec![1.0]];
        assert!(isserlis_moment(&cov, &[1, 0]).is_err());
        assert!(isserlis_moment(&cov, &[0; 22]).is_err());
    }
}
