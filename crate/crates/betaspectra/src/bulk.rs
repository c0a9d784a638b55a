//! Leading-order bulk density laws and their O(1) corrections.
//!
//! Inside the limiting support the density per eigenvalue converges to the
//! Marčenko–Pastur law (Laguerre) or its Jacobi counterpart.  The first
//! correction carries the factor `1/β - 1/2`: two delta atoms of weight 1/2
//! at the edges minus an arcsine-weight term,
//!
//! ```text
//!   ρ(t) = N ρ_∞(t) + (1/β - 1/2) ( ½δ(t-lo) + ½δ(t-hi) - 1/(π√((t-lo)(hi-t))) ) + O(1/N).
//! ```
//!
//! The atoms are kept symbolic (weights only); downstream they enter solely
//! through exact evaluation of test functions at the edges.  The correction
//! integrates to zero, so the corrected density still has total mass N.

use crate::ensemble::{JacobiEnsemble, LaguerreEnsemble};
use crate::quadrature::gauss_chebyshev2;

/// Marčenko–Pastur density per eigenvalue at `x` strictly inside the
/// support: `(1/2πx)·√((hi-x)(x-lo))`.  Returns `None` outside the open
/// support.
pub fn mp_density(ens: &LaguerreEnsemble, x: f64) -> Option<f64> {
    let (lo, hi) = ens.support();
    if x <= lo || x >= hi {
        return None;
    }
    Some(((hi - x) * (x - lo)).sqrt() / (2.0 * std::f64::consts::PI * x))
}

/// Jacobi bulk density per eigenvalue:
/// `((2+α₁+α₂)/2π)·√((x-c₁)(c₂-x))/(x(1-x))` for `c₁ < x < c₂`.
pub fn jacobi_bulk_density(ens: &JacobiEnsemble, x: f64) -> Option<f64> {
    let (c1, c2) = ens.support();
    if x <= c1 || x >= c2 {
        return None;
    }
    let pre = (2.0 + ens.alpha1 + ens.alpha2) / (2.0 * std::f64::consts::PI);
    Some(pre * ((x - c1) * (c2 - x)).sqrt() / (x * (1.0 - x)))
}

/// Bulk law with its O(1) correction structure.
///
/// `smooth` is `N·ρ_∞`; the atoms and the coefficient of the
/// `-1/(π√((t-lo)(hi-t)))` term are stored symbolically.  All three
/// correction pieces vanish at β = 2.
pub struct CorrectedDensity {
    pub support: (f64, f64),
    pub smooth: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub atom_lower: f64,
    pub atom_upper: f64,
    pub inv_sqrt_coeff: f64,
}

impl CorrectedDensity {
    /// Total mass: N from the smooth part, plus atoms, plus the inverse-
    /// square-root term whose integral is exactly -inv_sqrt_coeff (the
    /// arcsine weight has unit mass).
    pub fn total_mass(&self, quad_points: usize) -> f64 {
        let (lo, hi) = self.support;
        let (nodes, weights) = gauss_chebyshev2(quad_points);
        let half = (hi - lo) / 2.0;
        let mid = (hi + lo) / 2.0;
        // ∫ smooth = Σ w_k g(t_k) with smooth(t) = g(t)·√((t-lo)(hi-t)),
        // i.e. g = smooth/√(..); mapped Chebyshev-2 nodes absorb the root.
        let mut s = 0.0;
        for (&t, &w) in nodes.iter().zip(&weights) {
            let x = mid + half * t;
            let root = ((x - lo) * (hi - x)).sqrt();
            s += w * half * half * (self.smooth)(x) / root;
        }
        s + self.atom_lower + self.atom_upper - self.inv_sqrt_coeff
    }
}

fn correction_coeff(beta: f64) -> f64 {
    1.0 / beta - 0.5
}

/// Corrected Laguerre bulk density (per-eigenvalue variable `x = λ/N`).
pub fn corrected_density_laguerre(ens: &LaguerreEnsemble) -> CorrectedDensity {
    let n = ens.n as f64;
    let e = *ens;
    let c = correction_coeff(ens.beta);
    CorrectedDensity {
        support: ens.support(),
        smooth: Box::new(move |x| n * mp_density(&e, x).unwrap_or(0.0)),
        atom_lower: c / 2.0,
        atom_upper: c / 2.0,
        inv_sqrt_coeff: c,
    }
}

/// Corrected Jacobi bulk density.
pub fn corrected_density_jacobi(ens: &JacobiEnsemble) -> CorrectedDensity {
    let n = ens.n as f64;
    let e = *ens;
    let c = correction_coeff(ens.beta);
    CorrectedDensity {
        support: ens.support(),
        smooth: Box::new(move |x| n * jacobi_bulk_density(&e, x).unwrap_or(0.0)),
        atom_lower: c / 2.0,
        atom_upper: c / 2.0,
        inv_sqrt_coeff: c,
    }
}

/// CDF of the per-eigenvalue bulk law on `[lo, t]`, via the mapped
/// Chebyshev-2 rule restricted by a change of variable (used by the Monte
/// Carlo histogram tests, which need bin masses of the limiting law).
pub fn bulk_mass_between(density: impl Fn(f64) -> Option<f64>, a: f64, b: f64, points: usize) -> f64 {
    // Plain Gauss–Legendre is adequate away from the edges; near an edge
    // the integrand vanishes like a square root, which the caller handles
    // by keeping edge bins out of the comparison.
    let (nodes, weights) = crate::quadrature::gauss_legendre_on(a, b, points);
    nodes
        .iter()
        .zip(&weights)
        .map(|(&x, &w)| w * density(x).unwrap_or(0.0))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn mp_midpoint_value_and_edges() {
        // alpha = 0: support (0,4); at x = 2 density = 1/(2π)
        let ens = LaguerreEnsemble::new(2.0, 0.0, 10).unwrap();
        assert_relative_eq!(
            mp_density(&ens, 2.0).unwrap(),
            1.0 / (2.0 * std::f64::consts::PI),
            epsilon = 1e-14
        );
        assert!(mp_density(&ens, 4.0).is_none());
        assert!(mp_density(&ens, 5.0).is_none());
    }

    #[test]
    fn mp_normalizes_to_one() {
        for alpha in [0.5, 1.0, 2.0] {
            let ens = LaguerreEnsemble::new(2.0, alpha, 10).unwrap();
            let d = corrected_density_laguerre(&ens);
            // beta = 2: correction vanishes, total mass = N exactly
            assert_relative_eq!(d.total_mass(400) / 10.0, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn jacobi_bulk_midpoint_and_normalization() {
        let flat = JacobiEnsemble::new(2.0, 0.0, 0.0, 8).unwrap();
        // (0,0): support (0,1); at x = 1/2: (2/2π)·(1/2)/(1/4) = 2/π
        assert_relative_eq!(
            jacobi_bulk_density(&flat, 0.5).unwrap(),
            2.0 / std::f64::consts::PI,
            epsilon = 1e-14
        );
        let ens = JacobiEnsemble::new(2.0, 5.0, 5.0, 8).unwrap();
        let d = corrected_density_jacobi(&ens);
        assert_relative_eq!(d.total_mass(400) / 8.0, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn jacobi_bulk_parameter_swap_symmetry() {
        let a = JacobiEnsemble::new(2.0, 2.0, 7.0, 8).unwrap();
        let b = JacobiEnsemble::new(2.0, 7.0, 2.0, 8).unwrap();
        for x in [0.05, 0.1, 0.2, 0.3] {
            match (jacobi_bulk_density(&a, x), jacobi_bulk_density(&b, 1.0 - x)) {
                (Some(u), Some(v)) => assert_relative_eq!(u, v, epsilon = 1e-12),
                (None, None) => {}
                _ => panic!("swap symmetry broken at x = {x}"),
            }
        }
    }

    #[test]
    fn correction_coefficients_by_beta() {
        for (beta, atom, coeff) in [(2.0, 0.0, 0.0), (1.0, 0.25, 0.5), (4.0, -0.125, -0.25)] {
            let ens = LaguerreEnsemble::new(beta, 1.0, 6).unwrap();
            let d = corrected_density_laguerre(&ens);
            assert_relative_eq!(d.atom_lower, atom, epsilon = 1e-15);
            assert_relative_eq!(d.atom_upper, atom, epsilon = 1e-15);
            assert_relative_eq!(d.inv_sqrt_coeff, coeff, epsilon = 1e-15);
        }
    }

    #[test]
    fn corrected_total_mass_is_n_for_all_beta() {
        // the O(1) correction integrates to zero: atoms (+1/2,+1/2)·c
        // cancel the inverse-square-root term's mass (-1)·c
        for beta in [1.0, 2.0, 4.0] {
            let ens = LaguerreEnsemble::new(beta, 1.0, 12).unwrap();
            assert_relative_eq!(
                corrected_density_laguerre(&ens).total_mass(400),
                12.0,
                epsilon = 1e-8
            );
            let jens = JacobiEnsemble::new(beta, 5.0, 5.0, 12).unwrap();
            assert_relative_eq!(
                corrected_density_jacobi(&jens).total_mass(400),
                12.0,
                epsilon = 1e-8
            );
        }
    }
}
