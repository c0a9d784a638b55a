//! Symmetric tridiagonal eigenvalue solver (implicit QL with Wilkinson
//! shifts).
//!
//! Two entry points:
//!
//! * [`eigenvalues`] — eigenvalues only, used by the Monte Carlo samplers
//!   (O(N²) per matrix, no eigenvector storage);
//! * [`eigen_first_components`] — eigenvalues plus the first component of
//!   each normalized eigenvector, which is exactly what the Golub–Welsch
//!   construction of Gauss quadrature rules needs (weights are
//!   `moment₀ · q₁ₖ²`).
//!
//! The implementation is the classical EISPACK `tql2`/`imtql2` scheme: for
//! each trailing eigenvalue, apply implicit QL sweeps with the Wilkinson
//! shift until the off-diagonal entry deflates.  Plane rotations are
//! accumulated into a single carried row when first components are
//! requested.

/// Maximum QL sweeps per eigenvalue before giving up.
const MAX_SWEEPS: usize = 50;

fn hypot(a: f64, b: f64) -> f64 {
    a.hypot(b)
}

/// Core QL iteration. `diag` and `off` are consumed; `off` has length n
/// with a trailing scratch zero. If `row` is `Some`, it carries one row of
/// the accumulated orthogonal transform.
fn ql_implicit(diag: &mut [f64], off: &mut [f64], mut row: Option<&mut [f64]>) {
    let n = diag.len();
    if n == 0 {
        return;
    }
    off[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            // Look for a small off-diagonal element to split the matrix.
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= MAX_SWEEPS, "tridiagonal QL failed to converge");
            // Wilkinson shift from the leading 2x2 of the active block.
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = hypot(g, 1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0, 1.0);
            let mut p = 0.0;
            for i in (l..m).rev() {
                let mut f = s * off[i];
                let b = c * off[i];
                r = hypot(f, g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                if let Some(ref mut q) = row {
                    // Rotate the carried eigenvector-row components.
                    f = q[i + 1];
                    q[i + 1] = s * q[i] + c * f;
                    q[i] = c * q[i] - s * f;
                }
            }
            if r == 0.0 && m > l + 1 {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
}

fn sort_pairs(diag: &mut [f64], row: Option<&mut [f64]>) {
    let n = diag.len();
    match row {
        None => diag.sort_by(|a, b| a.partial_cmp(b).unwrap()),
        Some(q) => {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
            let d2: Vec<f64> = idx.iter().map(|&i| diag[i]).collect();
            let q2: Vec<f64> = idx.iter().map(|&i| q[i]).collect();
            diag.copy_from_slice(&d2);
            q.copy_from_slice(&q2);
        }
    }
}

/// Eigenvalues (ascending) of the symmetric tridiagonal matrix with the
/// given diagonal and sub-diagonal.
pub fn eigenvalues(diag: &[f64], sub: &[f64]) -> Vec<f64> {
    let n = diag.len();
    assert!(sub.len() + 1 == n || (n == 0 && sub.is_empty()));
    let mut d = diag.to_vec();
    let mut e = Vec::with_capacity(n);
    e.extend_from_slice(sub);
    e.push(0.0);
    ql_implicit(&mut d, &mut e, None);
    sort_pairs(&mut d, None);
    d
}

/// Eigenvalues (ascending) together with the first component of each
/// normalized eigenvector.
pub fn eigen_first_components(diag: &[f64], sub: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = diag.len();
    assert!(sub.len() + 1 == n);
    let mut d = diag.to_vec();
    let mut e = Vec::with_capacity(n);
    e.extend_from_slice(sub);
    e.push(0.0);
    let mut row = vec![0.0; n];
    row[0] = 1.0;
    ql_implicit(&mut d, &mut e, Some(&mut row));
    sort_pairs(&mut d, Some(&mut row));
    (d, row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn two_by_two_closed_form() {
        // [[2, 1], [1, 3]]: eigenvalues (5 ± sqrt(5)) / 2
        let vals = eigenvalues(&[2.0, 3.0], &[1.0]);
        assert_relative_eq!(vals[0], (5.0 - 5f64.sqrt()) / 2.0, epsilon = 1e-14);
        assert_relative_eq!(vals[1], (5.0 + 5f64.sqrt()) / 2.0, epsilon = 1e-14);
    }

    #[test]
    fn free_laplacian_eigenvalues() {
        // diag 2, off -1, size n: eigenvalues 2 - 2 cos(k pi / (n+1)).
        let n = 25;
        let vals = eigenvalues(&vec![2.0; n], &vec![-1.0; n - 1]);
        for (k, v) in vals.iter().enumerate() {
            let expect = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert_relative_eq!(*v, expect, epsilon = 1e-12);
        }
    }

    #[test]
    fn first_components_are_normalized_rows() {
        // For the free Laplacian the eigenvectors are sines; the first
        // components squared are 2 sin^2(k pi/(n+1)) / (n+1).
        let n = 12;
        let (vals, first) = eigen_first_components(&vec![2.0; n], &vec![-1.0; n - 1]);
        let norm: f64 = first.iter().map(|c| c * c).sum();
        assert_relative_eq!(norm, 1.0, epsilon = 1e-12);
        for (k, (v, c)) in vals.iter().zip(first.iter()).enumerate() {
            let th = (k + 1) as f64 * std::f64::consts::PI / (n as f64 + 1.0);
            assert_relative_eq!(*v, 2.0 - 2.0 * th.cos(), epsilon = 1e-12);
            assert_relative_eq!(c * c, 2.0 * th.sin().powi(2) / (n as f64 + 1.0), epsilon = 1e-12);
        }
    }
}
