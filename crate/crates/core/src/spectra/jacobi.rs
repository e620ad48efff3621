use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the dense eigensolver.
pub const DEFAULT_DENSE_CAP: usize = 1000;

const MAX_SWEEPS: usize = 100;

/// All adjacency eigenvalues in nonincreasing order.
pub fn full_spectrum(g: &Graph) -> Result<Vec<f64>> {
    full_spectrum_capped(g, DEFAULT_DENSE_CAP)
}

pub fn full_spectrum_capped(g: &Graph, cap: usize) -> Result<Vec<f64>> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("spectrum of the empty graph".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "dense eigensolve",
            size: n,
            cap,
        });
    }
    let mut values = symmetric_eigenvalues(g.adjacency_dense(), n);
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Largest absolute eigenvalue once one copy of `λ₁` is removed.
pub fn second_largest_absolute_eigenvalue(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter("need at least two vertices".into()));
    }
    let spectrum = full_spectrum(g)?;
    Ok(spectrum[1..].iter().map(|v| v.abs()).fold(0.0, f64::max))
}

/// Cyclic Jacobi rotations on a dense symmetric matrix (row-major, consumed).
/// Returns the unsorted eigenvalues.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    debug_assert_eq!(a.len(), n * n);
    let frob: f64 = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    let target = (f64::EPSILON * frob).powi(2);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum();
        if off <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}
