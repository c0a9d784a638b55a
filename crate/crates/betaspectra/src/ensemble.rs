//! Ensemble parameter sets, limiting supports and Selberg normalizations.
//!
//! Both ensembles carry *extensive* weight exponents: the Laguerre exponent
//! is `a = αN`, the Jacobi exponents are `a_i = α_i N`.  The one-body weight
//! convention used throughout the crate is
//!
//! ```text
//!   Laguerre: λ^{βa/2 + β/2 - 1} e^{-βλ/2}           on (0, ∞)
//!   Jacobi:   λ^{βa₁/2 + β/2 - 1} (1-λ)^{βa₂/2 + β/2 - 1}   on (0, 1)
//! ```
//!
//! i.e. the O(1) part of each exponent is `β/2 - 1` (the covariance-matrix
//! convention).  At β = 2 the weights reduce to `λ^a e^{-λ}` and
//! `λ^{a₁}(1-λ)^{a₂}`, matching the classical-polynomial kernels used by the
//! exact-density module; at β = 1 they reduce to `λ^{(a-1)/2} e^{-λ/2}` and
//! `λ^{(a₁-1)/2}(1-λ)^{(a₂-1)/2}`.
//!
//! With the eigenvalue scaling λ = Nx (Laguerre) the limiting support is
//! `[a₁², a₂²]`, `a_{1,2} = √(α+1) ∓ 1`; for Jacobi the support `[c₁, c₂]`
//! solves
//!
//! ```text
//!   c₁ + c₂ = 1 + (a₁² - a₂²)/(a₁ + a₂ + 2)²,   c₁c₂ = (a₁/(a₁+a₂+2))²
//! ```
//!
//! (rates per eigenvalue: a_i/N = α_i).  Normalization constants come from
//! the Selberg integral in log form.

use crate::numeric::ln_gamma;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum EnsembleError {
    #[error("beta must be positive, got {0}")]
    NonPositiveBeta(f64),
    #[error("matrix size must be at least 1, got {0}")]
    BadSize(usize),
    #[error("rate {name} must be nonnegative, got {value}")]
    NegativeRate { name: &'static str, value: f64 },
    #[error("rate {name} must be strictly positive here, got {value}")]
    ZeroRate { name: &'static str, value: f64 },
    #[error("beta = 1 exact densities require even N, got {0}")]
    OddSizeBetaOne(usize),
    #[error("evaluation point {0} outside the natural domain")]
    OutOfDomain(f64),
    #[error("brute-force oracle limited to N <= 6, got {0}")]
    BruteForceTooLarge(usize),
    #[error("operation not implemented for beta = {0}")]
    UnsupportedBeta(f64),
}

/// Laguerre β-ensemble with extensive exponent `a = αN`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LaguerreEnsemble {
    pub beta: f64,
    pub alpha: f64,
    pub n: usize,
}

impl LaguerreEnsemble {
    pub fn new(beta: f64, alpha: f64, n: usize) -> Result<Self, EnsembleError> {
        if beta <= 0.0 {
            return Err(EnsembleError::NonPositiveBeta(beta));
        }
        if n == 0 {
            return Err(EnsembleError::BadSize(n));
        }
        if alpha < 0.0 {
            return Err(EnsembleError::NegativeRate { name: "alpha", value: alpha });
        }
        Ok(LaguerreEnsemble { beta, alpha, n })
    }

    /// Extensive exponent a = αN.
    pub fn exponent(&self) -> f64 {
        self.alpha * self.n as f64
    }

    /// One-body weight power g = βa/2 + β/2 - 1 (weight `λ^g e^{-βλ/2}`).
    pub fn weight_power(&self) -> f64 {
        self.beta * self.exponent() / 2.0 + self.beta / 2.0 - 1.0
    }

    /// Limiting support endpoints (a₁², a₂²) in the λ = Nx variable.
    pub fn support(&self) -> (f64, f64) {
        let r = (self.alpha + 1.0).sqrt();
        ((r - 1.0) * (r - 1.0), (r + 1.0) * (r + 1.0))
    }

    /// ln of the one-body weight at λ.
    pub fn ln_weight(&self, lambda: f64) -> f64 {
        self.weight_power() * lambda.ln() - self.beta * lambda / 2.0
    }

    /// ln of the Selberg normalization
    /// `∫ ∏ λ^q e^{-cλ} ∏|Δ|^β dλ` with `q = weight_power()`, `c = β/2`.
    pub fn ln_normalization(&self) -> f64 {
        ln_selberg_laguerre(self.n, self.weight_power(), self.beta / 2.0, self.beta)
    }
}

/// Jacobi β-ensemble with extensive exponents `a_i = α_i N`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiEnsemble {
    pub beta: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub n: usize,
}

impl JacobiEnsemble {
    pub fn new(beta: f64, alpha1: f64, alpha2: f64, n: usize) -> Result<Self, EnsembleError> {
        if beta <= 0.0 {
            return Err(EnsembleError::NonPositiveBeta(beta));
        }
        if n == 0 {
            return Err(EnsembleError::BadSize(n));
        }
        for (name, value) in [("alpha1", alpha1), ("alpha2", alpha2)] {
            if value < 0.0 {
                return Err(EnsembleError::NegativeRate { name, value });
            }
        }
        Ok(JacobiEnsemble { beta, alpha1, alpha2, n })
    }

    pub fn exponents(&self) -> (f64, f64) {
        (self.alpha1 * self.n as f64, self.alpha2 * self.n as f64)
    }

    /// One-body weight powers (g₁, g₂).
    pub fn weight_powers(&self) -> (f64, f64) {
        let (a1, a2) = self.exponents();
        (
            self.beta * a1 / 2.0 + self.beta / 2.0 - 1.0,
            self.beta * a2 / 2.0 + self.beta / 2.0 - 1.0,
        )
    }

    /// Limiting support (c₁, c₂) from the rates (α₁, α₂).
    pub fn support(&self) -> (f64, f64) {
        jacobi_support(self.alpha1, self.alpha2)
    }

    pub fn ln_weight(&self, lambda: f64) -> f64 {
        let (g1, g2) = self.weight_powers();
        g1 * lambda.ln() + g2 * (-lambda).ln_1p()
    }

    pub fn ln_normalization(&self) -> f64 {
        let (g1, g2) = self.weight_powers();
        ln_selberg_jacobi(self.n, g1, g2, self.beta)
    }
}

/// Position of a point relative to the limiting support.
///
/// `EdgeBand` is a configurable exclusion zone around either edge: the
/// tail formulas contain `log |u|` and diverge there, so points within
/// `delta` of an edge are flagged rather than silently evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    LeftTail,
    Bulk,
    RightTail,
    EdgeBand,
}

/// Default edge-band half-width as a fraction of the support width.
pub const EDGE_BAND_FRACTION: f64 = 1e-6;

/// Classify `x` relative to the support `(lo, hi)` with edge half-width
/// `delta`. The caller is responsible for `x` lying in the natural domain.
pub fn classify_region(x: f64, lo: f64, hi: f64, delta: f64) -> Region {
    assert!(delta > 0.0);
    if (x - lo).abs() < delta || (x - hi).abs() < delta {
        Region::EdgeBand
    } else if x < lo {
        Region::LeftTail
    } else if x > hi {
        Region::RightTail
    } else {
        Region::Bulk
    }
}

/// Signed tail coordinate `u = ±√((x-lo)(x-hi))`: positive above the
/// support, negative below, zero at the edges. Panics (debug) for
/// strictly interior x, where the product under the root is negative.
pub fn u_signed(x: f64, lo: f64, hi: f64) -> f64 {
    let p = (x - lo) * (x - hi);
    debug_assert!(p >= -1e-30, "u is only defined outside the support");
    let v = p.max(0.0).sqrt();
    if x > hi {
        v
    } else {
        -v
    }
}

/// Support (c₁, c₂) of the Jacobi ensemble with rates (α₁, α₂); numerically
/// stable root extraction (larger root by formula, smaller via the product).
pub fn jacobi_support(alpha1: f64, alpha2: f64) -> (f64, f64) {
    let t = alpha1 + alpha2 + 2.0;
    let sum = 1.0 + (alpha1 * alpha1 - alpha2 * alpha2) / (t * t);
    let prod = (alpha1 / t) * (alpha1 / t);
    let disc = (sum * sum - 4.0 * prod).max(0.0).sqrt();
    let c2 = (sum + disc) / 2.0;
    let c1 = if c2 > 0.0 { prod / c2 } else { 0.0 };
    (c1, c2)
}

/// ln ∫_{(0,∞)^N} ∏ λ^q e^{-cλ} ∏_{j<k}|λ_k-λ_j|^β dλ (Selberg, Laguerre form).
pub fn ln_selberg_laguerre(n: usize, q: f64, c: f64, beta: f64) -> f64 {
    let g = beta / 2.0;
    let nf = n as f64;
    let mut s = -(nf * q + nf + beta * nf * (nf - 1.0) / 2.0) * c.ln();
    for j in 0..n {
        let jf = j as f64;
        s += ln_gamma(q + 1.0 + jf * g) + ln_gamma(1.0 + (jf + 1.0) * g) - ln_gamma(1.0 + g);
    }
    s
}

/// ln ∫_{(0,1)^N} ∏ λ^p (1-λ)^q ∏_{j<k}|λ_k-λ_j|^β dλ (Selberg integral).
pub fn ln_selberg_jacobi(n: usize, p: f64, q: f64, beta: f64) -> f64 {
    let g = beta / 2.0;
    let nf = n as f64;
    let mut s = 0.0;
    for j in 0..n {
        let jf = j as f64;
        s += ln_gamma(p + 1.0 + jf * g) + ln_gamma(q + 1.0 + jf * g)
            + ln_gamma(1.0 + (jf + 1.0) * g)
            - ln_gamma(p + q + 2.0 + (nf + jf - 1.0) * g)
            - ln_gamma(1.0 + g);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn laguerre_support_alpha_one() {
        let ens = LaguerreEnsemble::new(2.0, 1.0, 6).unwrap();
        let (lo, hi) = ens.support();
        assert_relative_eq!(lo, 0.171_572_875_253_809_9, epsilon = 1e-12);
        assert_relative_eq!(hi, 5.828_427_124_746_19, epsilon = 1e-12);
        // midpoint alpha + 2, width 4 sqrt(alpha+1), product alpha^2
        assert_relative_eq!((lo + hi) / 2.0, 3.0, epsilon = 1e-12);
        assert_relative_eq!(hi - lo, 4.0 * 2f64.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(lo * hi, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn jacobi_support_five_five() {
        let (c1, c2) = jacobi_support(5.0, 5.0);
        assert_relative_eq!(c1, (1.0 - 11f64.sqrt() / 6.0) / 2.0, epsilon = 1e-14);
        assert_relative_eq!(c2, (1.0 + 11f64.sqrt() / 6.0) / 2.0, epsilon = 1e-14);
        assert!((c1 - 0.2236).abs() < 5e-4 && (c2 - 0.7764).abs() < 5e-4);
    }

    #[test]
    fn jacobi_support_inter_relations_and_symmetry() {
        for (a1, a2) in [(5.0, 5.0), (0.5, 2.0), (3.0, 0.25), (1e-6, 4.0)] {
            let (c1, c2) = jacobi_support(a1, a2);
            let t = a1 + a2 + 2.0;
            assert_relative_eq!(
                c1.sqrt() + c2.sqrt(),
                2.0 * ((1.0 + a1) * (1.0 + a1 + a2)).sqrt() / t,
                epsilon = 1e-12
            );
            assert_relative_eq!(
                c2 - c1,
                4.0 * ((1.0 + a1) * (1.0 + a2) * (1.0 + a1 + a2)).sqrt() / (t * t),
                epsilon = 1e-12
            );
            // parameter swap mirrors the support through x -> 1-x
            let (d1, d2) = jacobi_support(a2, a1);
            assert_relative_eq!(d1, 1.0 - c2, epsilon = 1e-12);
            assert_relative_eq!(d2, 1.0 - c1, epsilon = 1e-12);
        }
    }

    #[test]
    fn weight_powers_reduce_to_classical_values() {
        let l2 = LaguerreEnsemble::new(2.0, 1.0, 6).unwrap();
        assert_relative_eq!(l2.weight_power(), 6.0, epsilon = 1e-14); // lambda^a e^{-lambda}
        let l1 = LaguerreEnsemble::new(1.0, 1.0, 6).unwrap();
        assert_relative_eq!(l1.weight_power(), 2.5, epsilon = 1e-14); // (a-1)/2
        let j1 = JacobiEnsemble::new(1.0, 5.0, 5.0, 6).unwrap();
        assert_relative_eq!(j1.weight_powers().0, 14.5, epsilon = 1e-14); // (30-1)/2
    }

    #[test]
    fn selberg_laguerre_n1_is_gamma_integral() {
        // N = 1: int x^q e^{-cx} = Gamma(q+1)/c^{q+1}
        let got = ln_selberg_laguerre(1, 2.5, 0.5, 1.0);
        let expect = ln_gamma(3.5) - 3.5 * 0.5f64.ln();
        assert_relative_eq!(got, expect, epsilon = 1e-12);
    }

    #[test]
    fn selberg_jacobi_n2_vs_quadrature() {
        // N = 2, beta = 2: int x^p(1-x)^q (x-y)^2 over the unit square,
        // exact via expanding (x-y)^2 into Beta moments.
        let (p, q) = (2.0, 3.0);
        let m = |k: f64| {
            (ln_gamma(p + 1.0 + k) + ln_gamma(q + 1.0) - ln_gamma(p + q + 2.0 + k)).exp()
        };
        let expect = 2.0 * (m(0.0) * m(2.0) - m(1.0) * m(1.0));
        assert_relative_eq!(ln_selberg_jacobi(2, p, q, 2.0).exp(), expect, max_relative = 1e-12);
    }

    #[test]
    fn tail_coordinate_signs_and_zeros() {
        let (lo, hi) = LaguerreEnsemble::new(2.0, 1.0, 6).unwrap().support();
        assert_relative_eq!(u_signed(hi, lo, hi), 0.0, epsilon = 1e-15);
        assert!(u_signed(10.0, lo, hi) > 0.0);
        assert!(u_signed(0.1, lo, hi) < 0.0);
        // alpha = 0: edges (0,4), u(5) = +sqrt(5)
        assert_relative_eq!(u_signed(5.0, 0.0, 4.0), 5f64.sqrt(), epsilon = 1e-14);
        // recover |u| = sqrt((x-lo)(x-hi)) numerically below the support
        let x = 0.1;
        assert_relative_eq!(
            u_signed(x, lo, hi),
            -((x - lo) * (x - hi)).sqrt(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn region_classification() {
        let (lo, hi) = LaguerreEnsemble::new(2.0, 1.0, 6).unwrap().support();
        assert_eq!(classify_region(10.0, lo, hi, 1e-3), Region::RightTail);
        assert_eq!(classify_region(5.8285, lo, hi, 1e-2), Region::EdgeBand);
        assert_eq!(classify_region(2.0, lo, hi, 1e-3), Region::Bulk);
        assert_eq!(classify_region(0.05, lo, hi, 1e-3), Region::LeftTail);
    }

    #[test]
    fn constructor_rejects_bad_parameters() {
        assert!(LaguerreEnsemble::new(0.0, 1.0, 4).is_err());
        assert!(LaguerreEnsemble::new(2.0, -0.5, 4).is_err());
        assert!(LaguerreEnsemble::new(2.0, 1.0, 0).is_err());
        assert!(JacobiEnsemble::new(1.0, 5.0, -1.0, 4).is_err());
    }
}
