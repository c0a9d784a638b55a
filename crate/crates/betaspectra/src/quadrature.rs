//! Gauss quadrature via orthogonal-polynomial recurrences.
//!
//! Rules are built by the Golub–Welsch construction: the monic three-term
//! recurrence for the target weight is packed into a symmetric tridiagonal
//! Jacobi matrix whose eigenvalues are the nodes and whose eigenvectors'
//! first components give the weights.  The classical weights used here —
//! Legendre, generalized Laguerre `x^a e^{-x}` and shifted Jacobi
//! `x^p (1-x)^q` on (0,1) — all have closed-form recurrence coefficients.
//!
//! Weight exponents in this crate are extensive (proportional to N), so the
//! zeroth moment `μ₀ = ∫W` spans thousands of orders of magnitude; rules
//! therefore carry log-domain weights, and orthonormal polynomial values are
//! produced together with a shared log scale factor.

use crate::numeric::ln_gamma;
use crate::tridiag;

/// Monic three-term recurrence `π_{k+1} = (x - a_k) π_k - b_k π_{k-1}` for
/// some weight, with `b[0]` storing nothing and `ln_mu0 = ln ∫ W`.
#[derive(Clone, Debug)]
pub struct Recurrence {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub ln_mu0: f64,
}

impl Recurrence {
    /// Legendre weight 1 on [-1, 1].
    pub fn legendre(n: usize) -> Self {
        let a = vec![0.0; n];
        let mut b = vec![0.0; n];
        for (k, bk) in b.iter_mut().enumerate().skip(1) {
            let kf = k as f64;
            *bk = kf * kf / (4.0 * kf * kf - 1.0);
        }
        Recurrence { a, b, ln_mu0: 2f64.ln() }
    }

    /// Generalized Laguerre weight `x^alpha e^{-x}` on (0, ∞).
    pub fn laguerre(n: usize, alpha: f64) -> Self {
        assert!(alpha > -1.0);
        let mut a = vec![0.0; n];
        let mut b = vec![0.0; n];
        for k in 0..n {
            let kf = k as f64;
            a[k] = 2.0 * kf + alpha + 1.0;
            if k > 0 {
                b[k] = kf * (kf + alpha);
            }
        }
        Recurrence { a, b, ln_mu0: ln_gamma(alpha + 1.0) }
    }

    /// Shifted Jacobi weight `x^p (1-x)^q` on (0, 1).
    ///
    /// Derived from the standard weight `(1-y)^A (1+y)^B` on [-1,1] with
    /// `A = q`, `B = p` under `y = 2x - 1` (monic coefficients map as
    /// `a ↦ (a+1)/2`, `b ↦ b/4`).
    pub fn jacobi01(n: usize, p: f64, q: f64) -> Self {
        assert!(p > -1.0 && q > -1.0);
        let (aa, bb) = (q, p);
        let mut a = vec![0.0; n];
        let mut b = vec![0.0; n];
        for k in 0..n {
            let kf = k as f64;
            let d = 2.0 * kf + aa + bb;
            let ay = if d == 0.0 || d + 2.0 == 0.0 {
                (bb - aa) / (aa + bb + 2.0)
            } else {
                (bb * bb - aa * aa) / (d * (d + 2.0))
            };
            a[k] = (ay + 1.0) / 2.0;
            if k > 0 {
                let by = 4.0 * kf * (kf + aa) * (kf + bb) * (kf + aa + bb)
                    / (d * d * (d + 1.0) * (d - 1.0));
                b[k] = by / 4.0;
            }
        }
        // mu0 = B(p+1, q+1)
        let ln_mu0 = ln_gamma(p + 1.0) + ln_gamma(q + 1.0) - ln_gamma(p + q + 2.0);
        Recurrence { a, b, ln_mu0 }
    }

    /// Values of the orthonormal polynomials `q_0..q_{n-1}` at `x`, returned
    /// as `(vals, ln_scale)` with `q_j(x) = vals[j] · exp(ln_scale)`.
    ///
    /// The recurrence in orthonormal form is
    /// `√b_{k+1} q_{k+1} = (x - a_k) q_k - √b_k q_{k-1}`; values are
    /// renormalized whenever they grow large so the computation never
    /// overflows even for extensive weight exponents.
    pub fn orthonormal_scaled(&self, x: f64, n: usize) -> (Vec<f64>, f64) {
        assert!(n <= self.a.len());
        let mut vals = vec![0.0; n];
        let mut ln_scale = -0.5 * self.ln_mu0;
        if n == 0 {
            return (vals, ln_scale);
        }
        vals[0] = 1.0;
        let mut prev = 0.0;
        let mut cur = 1.0;
        for k in 1..n {
            let bk = self.b[k].sqrt();
            let bkm = if k >= 2 { self.b[k - 1].sqrt() } else { 0.0 };
            let next = ((x - self.a[k - 1]) * cur - bkm * prev) / bk;
            prev = cur;
            cur = next;
            let m = cur.abs();
            if m > 1e120 {
                // fold the growth into the shared log scale; earlier entries
                // (now negligible relative to the dominant degree) shrink
                for v in vals.iter_mut().take(k) {
                    *v /= m;
                }
                prev /= m;
                cur /= m;
                ln_scale += m.ln();
            }
            vals[k] = cur;
        }
        (vals, ln_scale)
    }
}

/// A Gauss rule with log-domain weights (`weight_k = exp(ln_weights[k])`).
#[derive(Clone, Debug)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub ln_weights: Vec<f64>,
}

impl GaussRule {
    /// n-point rule for the weight described by `rec` (which must hold at
    /// least n coefficient pairs).
    pub fn from_recurrence(rec: &Recurrence, n: usize) -> Self {
        assert!(n >= 1 && n <= rec.a.len());
        let diag = rec.a[..n].to_vec();
        let sub: Vec<f64> = (1..n).map(|k| rec.b[k].sqrt()).collect();
        let (nodes, first) = tridiag::eigen_first_components(&diag, &sub);
        let ln_weights = first
            .iter()
            .map(|c| rec.ln_mu0 + (c * c).max(f64::MIN_POSITIVE).ln())
            .collect();
        GaussRule { nodes, ln_weights }
    }

    /// Plain (linear-domain) weights; safe when `ln_mu0` is moderate.
    pub fn weights(&self) -> Vec<f64> {
        self.ln_weights.iter().map(|lw| lw.exp()).collect()
    }

    /// ∫ f(x) W(x) dx ≈ Σ w_k f(x_k) for a plain-valued integrand.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.ln_weights)
            .map(|(&x, &lw)| lw.exp() * f(x))
            .sum()
    }
}

/// n-point Gauss–Legendre rule mapped to [lo, hi] (plain weights).
pub fn gauss_legendre_on(lo: f64, hi: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let rec = Recurrence::legendre(n);
    let rule = GaussRule::from_recurrence(&rec, n);
    let half = (hi - lo) / 2.0;
    let mid = (hi + lo) / 2.0;
    let nodes = rule.nodes.iter().map(|&t| mid + half * t).collect();
    let weights = rule.ln_weights.iter().map(|&lw| lw.exp() * half).collect();
    (nodes, weights)
}

/// n-point Gauss–Chebyshev rule (first kind): ∫_{-1}^{1} f(t)/√(1-t²) dt.
/// Nodes `cos((2k-1)π/2n)`, all weights `π/n`.
pub fn gauss_chebyshev(n: usize) -> (Vec<f64>, f64) {
    let nodes = (1..=n)
        .map(|k| ((2 * k - 1) as f64 * std::f64::consts::PI / (2 * n) as f64).cos())
        .collect();
    (nodes, std::f64::consts::PI / n as f64)
}

/// n-point Gauss–Chebyshev rule (second kind): ∫_{-1}^{1} f(t)√(1-t²) dt.
/// Nodes `cos(kπ/(n+1))`, weights `π/(n+1)·sin²(kπ/(n+1))`.
pub fn gauss_chebyshev2(n: usize) -> (Vec<f64>, Vec<f64>) {
    let m = (n + 1) as f64;
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for k in 1..=n {
        let th = k as f64 * std::f64::consts::PI / m;
        nodes.push(th.cos());
        weights.push(std::f64::consts::PI / m * th.sin().powi(2));
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn legendre_rule_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre_on(-1.0, 1.0, 8);
        // moments of x^k on [-1,1]: 0 for odd, 2/(k+1) for even, exact to degree 15
        for k in 0..=15usize {
            let s: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(k as i32)).sum();
            let expect = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
            assert_relative_eq!(s, expect, epsilon = 1e-13);
        }
    }

    #[test]
    fn laguerre_rule_matches_gamma_moments() {
        let a = 3.5;
        let rec = Recurrence::laguerre(12, a);
        let rule = GaussRule::from_recurrence(&rec, 12);
        for k in 0..=10usize {
            let s = rule.integrate(|x| x.powi(k as i32));
            let expect = (ln_gamma(a + 1.0 + k as f64) - 0.0).exp();
            assert_relative_eq!(s, expect, max_relative = 1e-12);
        }
    }

    #[test]
    fn jacobi01_rule_matches_beta_moments() {
        let (p, q) = (2.5, 4.0);
        let rec = Recurrence::jacobi01(10, p, q);
        let rule = GaussRule::from_recurrence(&rec, 10);
        for k in 0..=8usize {
            let s = rule.integrate(|x| x.powi(k as i32));
            let expect =
                (ln_gamma(p + 1.0 + k as f64) + ln_gamma(q + 1.0) - ln_gamma(p + q + 2.0 + k as f64)).exp();
            assert_relative_eq!(s, expect, max_relative = 1e-12);
        }
    }

    #[test]
    fn orthonormal_values_reproduce_orthonormality_under_matching_rule() {
        // sum_k w_k q_i(x_k) q_j(x_k) = delta_ij, including huge exponents
        let rec = Recurrence::laguerre(40, 30.0);
        let rule = GaussRule::from_recurrence(&rec, 20);
        let nq = 12;
        let mut gram = vec![vec![0.0; nq]; nq];
        for (&x, &lw) in rule.nodes.iter().zip(&rule.ln_weights) {
            let (vals, ln_s) = rec.orthonormal_scaled(x, nq);
            let w2 = (lw + 2.0 * ln_s).exp();
            for i in 0..nq {
                for j in 0..nq {
                    gram[i][j] += w2 * vals[i] * vals[j];
                }
            }
        }
        for i in 0..nq {
            for j in 0..nq {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert_relative_eq!(gram[i][j], expect, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn chebyshev2_rule_matches_semicircle_moments() {
        let (nodes, w) = gauss_chebyshev2(32);
        let m0: f64 = w.iter().sum();
        let m2: f64 = nodes.iter().zip(&w).map(|(t, wi)| wi * t * t).sum();
        assert_relative_eq!(m0, std::f64::consts::PI / 2.0, epsilon = 1e-13);
        assert_relative_eq!(m2, std::f64::consts::PI / 8.0, epsilon = 1e-13);
    }

    #[test]
    fn chebyshev_rule_matches_arcsine_moments() {
        let (nodes, w) = gauss_chebyshev(24);
        let m0: f64 = nodes.iter().map(|_| w).sum();
        let m2: f64 = nodes.iter().map(|t| w * t * t).sum();
        assert_relative_eq!(m0, std::f64::consts::PI, epsilon = 1e-13);
        assert_relative_eq!(m2, std::f64::consts::PI / 2.0, epsilon = 1e-13);
    }
}
