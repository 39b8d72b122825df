//! Dirichlet-problem solver: dense LU for small chains, conjugate gradients
//! on the detailed-balance-symmetrized operator for large ones.

use crate::chain::ReversibleChain;
use crate::{MarkovError, Result};
use nalgebra::{DMatrix, DVector};

/// Solve `(I − P)u = rhs` on the states where `boundary` is `None`, with
/// `u` pinned to the given values elsewhere.
pub(crate) fn solve_dirichlet(
    chain: &ReversibleChain,
    boundary: &[Option<f64>],
    rhs: &[f64],
) -> Result<Vec<f64>> {
    let n = chain.len();
    assert_eq!(boundary.len(), n);
    assert_eq!(rhs.len(), n);
    let active: Vec<usize> = (0..n).filter(|&x| boundary[x].is_none()).collect();
    if active.is_empty() {
        return Ok(boundary.iter().map(|b| b.unwrap()).collect());
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &x) in active.iter().enumerate() {
        pos[x] = i;
    }
    // Move boundary terms to the right-hand side.
    let mut b = vec![0.0f64; active.len()];
    for (i, &x) in active.iter().enumerate() {
        let mut v = rhs[x];
        for &(y, p) in chain.row(x) {
            if let Some(val) = boundary[y] {
                v += p * val;
            }
        }
        b[i] = v;
    }
    let interior = if active.len() <= chain.dense_limit {
        solve_dense(chain, &active, &pos, &b)?
    } else {
        solve_cg(chain, &active, &pos, &b)?
    };
    let mut u = vec![0.0f64; n];
    for (x, slot) in u.iter_mut().enumerate() {
        *slot = match boundary[x] {
            Some(v) => v,
            None => interior[pos[x]],
        };
    }
    Ok(u)
}

fn solve_dense(
    chain: &ReversibleChain,
    active: &[usize],
    pos: &[usize],
    b: &[f64],
) -> Result<Vec<f64>> {
    let m = active.len();
    let mut mat = DMatrix::<f64>::identity(m, m);
    for (i, &x) in active.iter().enumerate() {
        for &(y, p) in chain.row(x) {
            if pos[y] != usize::MAX {
                mat[(i, pos[y])] -= p;
            }
        }
    }
    let lu = mat.lu();
    let sol = lu
        .solve(&DVector::from_column_slice(b))
        .ok_or_else(|| MarkovError::SolveFailure("Dirichlet system is singular".into()))?;
    Ok(sol.iter().copied().collect())
}

/// Conjugate gradients on `Â v = D^{1/2} b` with
/// `Â = D^{1/2}(I − P)D^{−1/2}`, `D = diag π` — symmetric positive
/// definite by detailed balance whenever the boundary is attainable.
fn solve_cg(
    chain: &ReversibleChain,
    active: &[usize],
    pos: &[usize],
    b: &[f64],
) -> Result<Vec<f64>> {
    let m = active.len();
    let sqrt_pi: Vec<f64> = active.iter().map(|&x| chain.pi()[x].sqrt()).collect();
    let matvec = |v: &[f64], out: &mut [f64]| {
        for (i, &x) in active.iter().enumerate() {
            let mut acc = v[i];
            for &(y, p) in chain.row(x) {
                let j = pos[y];
                if j != usize::MAX {
                    acc -= p * (sqrt_pi[i] / sqrt_pi[j]) * v[j];
                }
            }
            out[i] = acc;
        }
    };
    let bs: Vec<f64> = b.iter().zip(&sqrt_pi).map(|(v, s)| v * s).collect();
    let bnorm = bs.iter().map(|v| v * v).sum::<f64>().sqrt();
    if bnorm == 0.0 {
        return Ok(vec![0.0; m]);
    }
    let mut v = vec![0.0f64; m];
    let mut r = bs.clone();
    let mut p = r.clone();
    let mut ap = vec![0.0f64; m];
    let mut rs: f64 = r.iter().map(|v| v * v).sum();
    let max_iter = 40 * m + 200;
    for _ in 0..max_iter {
        if rs.sqrt() <= 1e-13 * bnorm {
            break;
        }
        matvec(&p, &mut ap);
        let pap: f64 = p.iter().zip(&ap).map(|(a, b)| a * b).sum();
        if pap <= 0.0 {
            return Err(MarkovError::SolveFailure(
                "symmetrized operator is not positive definite".into(),
            ));
        }
        let alpha = rs / pap;
        for i in 0..m {
            v[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        let rs_new: f64 = r.iter().map(|v| v * v).sum();
        let beta = rs_new / rs;
        rs = rs_new;
        for i in 0..m {
            p[i] = r[i] + beta * p[i];
        }
    }
    if rs.sqrt() > 1e-10 * bnorm {
        return Err(MarkovError::SolveFailure(format!(
            "conjugate gradients stalled at relative residual {:.3e}",
            rs.sqrt() / bnorm
        )));
    }
    Ok(v.iter().zip(&sqrt_pi).map(|(v, s)| v / s).collect())
}
