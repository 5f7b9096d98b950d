//! Cyclic Jacobi diagonalization of small real-symmetric matrices.

use crate::error::{Error, Result};
use crate::tol;

/// Off-diagonal Frobenius norm of the packed symmetric matrix `a`.
fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                s += a[p * n + q] * a[p * n + q];
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a real symmetric matrix, sorted descending.
///
/// Plain cyclic Jacobi without eigenvector accumulation; the matrices here
/// never exceed a few tens of rows, so O(n³) per sweep is fine. Converges when
/// the off-diagonal Frobenius norm drops below [`tol::JACOBI_OFF`], errors
/// with [`Error::NoConvergence`] at the sweep cap.
pub(crate) fn symmetric_eigenvalues_desc(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    if n == 0 {
        return Ok(Vec::new());
    }
    for _sweep in 0..tol::JACOBI_MAX_SWEEPS {
        if off_norm(&a, n) < tol::JACOBI_OFF {
            let mut vals: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
            vals.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
            return Ok(vals);
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // Symmetric Schur rotation annihilating a[p][q].
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e12 {
                    1.0 / (2.0 * theta)
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[p * n + k] = a[k * n + p];
                    a[k * n + q] = s * akp + c * akq;
                    a[q * n + k] = a[k * n + q];
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    Err(Error::NoConvergence(tol::JACOBI_MAX_SWEEPS))
}
