//! Large-deviation density asymptotics outside the limiting support.
//!
//! The headline objects are the asymptotic expansions of the density in the
//! exponentially small region, assembled from three displayed factors:
//!
//! 1. the N-linear exponential (the large-deviation rate),
//! 2. the algebraic correction in powers of `|u|` and the weight
//!    combination,
//! 3. an N- and β-dependent prefactor containing `Γ(1+β/2)`.
//!
//! For the Laguerre ensemble the expansion gives `log(N·ρ(Nx))`; for Jacobi
//! it gives `log ρ(x)` directly (the eigenvalues are already O(1)).
//!
//! The module also exposes the leading rate in three independent
//! derivations — the direct log-gas form, the constrained-minimization form
//! valid on the left tail, and the arcosh form with algebraic prefactor —
//! together with a cross-check report, plus the characteristic-polynomial
//! moment asymptote and the normalization-ratio asymptote that the headline
//! expansion is assembled from.  The assembly is an exact algebraic
//! refactoring (after relabelling N in one prefactor), which the test suite
//! checks to rounding accuracy.
//!
//! One transcription note is load-bearing: in the arcosh form of the rate
//! the sign of the `u` term must be `+u` (with `u` the signed tail
//! coordinate) for the identity with the log-gas form to hold on both
//! tails; the alternative sign fails by exactly `2|u|`.

use crate::ensemble::{
    classify_region, jacobi_support, u_signed, JacobiEnsemble, LaguerreEnsemble, Region,
    EDGE_BAND_FRACTION,
};
use crate::numeric::{arcosh_abs, ln_gamma, LogValue};

/// Error for tail-only operations evaluated at a non-tail point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("point is {0:?}; this quantity is defined only in the tails")]
pub struct NotInTail(pub Region);

/// Asymptotic log-density split into its three displayed factors:
/// `factors[0]` is the N-linear exponent, `factors[1]` the algebraic
/// correction, `factors[2]` the prefactor; `log_density` is their sum.
#[derive(Clone, Copy, Debug)]
pub struct AsymptoticDensity {
    pub region: Region,
    pub factors: [f64; 3],
    /// Coefficient of N in the exponent (per-eigenvalue rate).
    pub rate: f64,
}

impl AsymptoticDensity {
    pub fn log_density(&self) -> LogValue {
        LogValue::from_ln(self.factors.iter().sum())
    }
}

fn tail_region(x: f64, lo: f64, hi: f64) -> Result<Region, NotInTail> {
    let delta = EDGE_BAND_FRACTION * (hi - lo);
    match classify_region(x, lo, hi, delta) {
        r @ (Region::LeftTail | Region::RightTail) => Ok(r),
        r => Err(NotInTail(r)),
    }
}

// ---------------------------------------------------------------------------
// Rates
// ---------------------------------------------------------------------------

/// Leading Laguerre rate: the coefficient of N in `log ρ(Nx)`, log-gas
/// form, valid on both tails.
pub fn rate_laguerre(beta: f64, alpha: f64, x: f64) -> f64 {
    let (lo, hi) = LaguerreEnsemble::new(beta, alpha, 1).unwrap().support();
    let u = u_signed(x, lo, hi);
    let r = (alpha + 1.0).sqrt();
    (beta / 2.0)
        * (-u
            + alpha * ((alpha * (alpha + u - x) - 2.0 * x) / (2.0 * r * x)).abs().ln()
            + (2.0 + alpha) * ((u + x - 2.0 - alpha) / (2.0 * r)).abs().ln())
}

/// Left-tail rate from the constrained-minimization formula,
/// `-β·Φ_-^min(lo - x)`; defined only for `0 < x < lo`.
pub fn rate_laguerre_left(beta: f64, alpha: f64, x: f64) -> Option<f64> {
    let r = (alpha + 1.0).sqrt();
    let lo = (1.0 - r) * (1.0 - r);
    if x <= 0.0 || x >= lo {
        return None;
    }
    let y = lo - x;
    let root = (y + 4.0 * r).sqrt();
    let phi = -0.5 * (y * (y + 4.0 * r)).sqrt() - (alpha / 2.0) * (1.0 - y / lo).ln()
        + 2.0 * ((root - y.sqrt()) / (4.0 * r).sqrt()).ln()
        + alpha * (1.0 + (2.0 * y.sqrt() / (r - 1.0)) * ((root - y.sqrt()) / (4.0 * r))).ln();
    Some(-beta * phi)
}

/// Arcosh form of the Laguerre rate function (β-independent): the β = 2
/// rate equals `-κ`.  Note the `+u` sign on the first term.
pub fn kappa_laguerre(alpha: f64, x: f64) -> f64 {
    let (lo, hi) = LaguerreEnsemble::new(2.0, alpha, 1).unwrap().support();
    let u = u_signed(x, lo, hi);
    let t1 = alpha
        * arcosh_abs((1.0 / x - 0.5 * (1.0 / lo + 1.0 / hi)) / (0.5 * (1.0 / lo - 1.0 / hi)));
    let t2 = 0.5 * (lo + hi) * arcosh_abs((0.5 * (lo + hi) - x) / (0.5 * (lo - hi)));
    u + t1 - t2
}

/// Pairwise residuals between the three rate derivations at one point.
#[derive(Clone, Copy, Debug)]
pub struct RateResiduals {
    /// |log-gas − constrained| (left tail only; `None` on the right tail).
    pub gas_vs_constrained: Option<f64>,
    /// |log-gas at β = 2 − (−κ)|.
    pub gas_vs_arcosh: f64,
}

pub fn rate_identity_residuals(beta: f64, alpha: f64, x: f64) -> RateResiduals {
    let main = rate_laguerre(beta, alpha, x);
    RateResiduals {
        gas_vs_constrained: rate_laguerre_left(beta, alpha, x).map(|r| (main - r).abs()),
        gas_vs_arcosh: (rate_laguerre(2.0, alpha, x) + kappa_laguerre(alpha, x)).abs(),
    }
}

// ---------------------------------------------------------------------------
// Headline asymptotic densities
// ---------------------------------------------------------------------------

/// Asymptotic `log(N ρ(Nx))` for the Laguerre ensemble, x in a tail.
pub fn asym_density_laguerre(ens: &LaguerreEnsemble, x: f64) -> Result<AsymptoticDensity, NotInTail> {
    let (lo, hi) = ens.support();
    let region = tail_region(x, lo, hi)?;
    let (beta, alpha, n) = (ens.beta, ens.alpha, ens.n as f64);
    let u = u_signed(x, lo, hi);
    let r = (1.0 + alpha).sqrt();
    let f1 = (n * beta / 2.0)
        * (-u + 2.0 * ((u + x - 2.0 - alpha) / (2.0 * r)).abs().ln()
            - 2.0 * alpha * ((u - x - alpha) / (2.0 * x.sqrt() * r)).abs().ln());
    let f2 = (1.0 - 1.5 * beta) * u.abs().ln()
        - (1.0 - beta / 2.0) * (x * (u + x - 2.0 - alpha) / 2.0).abs().ln();
    let f3 = (n * r / (2.0 * std::f64::consts::PI)).ln()
        + (beta / 2.0) * (2.0 / (beta * n)).ln()
        + ln_gamma(1.0 + beta / 2.0);
    Ok(AsymptoticDensity {
        region,
        factors: [f1, f2, f3],
        rate: f1 / n,
    })
}

/// Asymptotic `log ρ(x)` for the Jacobi ensemble, x in a tail.
pub fn asym_density_jacobi(ens: &JacobiEnsemble, x: f64) -> Result<AsymptoticDensity, NotInTail> {
    let (c1, c2) = ens.support();
    let region = tail_region(x, c1, c2)?;
    let (beta, a1, a2, n) = (ens.beta, ens.alpha1, ens.alpha2, ens.n as f64);
    let u = u_signed(x, c1, c2);
    let t0 = ((x - (c1 + c2) / 2.0 + u) / ((c2 - c1) / 2.0)).abs().ln();
    let t1 = (((c1 * c2).sqrt() + x - u).abs() / ((c1.sqrt() + c2.sqrt()) * x.sqrt())).ln();
    let t2 = ((((1.0 - c1) * (1.0 - c2)).sqrt() - x + 1.0 + u).abs()
        / (((1.0 - c1).sqrt() + (1.0 - c2).sqrt()) * (1.0 - x).sqrt()))
    .ln();
    let f1 = n * beta * (t0 - a1 * t1 - a2 * t2);
    let f2 = (1.0 - 1.5 * beta) * u.abs().ln()
        - (1.0 - beta / 2.0)
            * (x * (1.0 - x) * (u + x - (c1 + c2) / 2.0) / (2.0 + a1 + a2))
                .abs()
                .ln();
    let f3 = (n * (c2 - c1) / (4.0 * std::f64::consts::PI)).ln()
        + (beta / 2.0) * (1.0 / (beta * n)).ln()
        + ln_gamma(1.0 + beta / 2.0);
    Ok(AsymptoticDensity {
        region,
        factors: [f1, f2, f3],
        rate: f1 / n,
    })
}

// ---------------------------------------------------------------------------
// Characteristic-polynomial moments and normalization ratios
// ---------------------------------------------------------------------------

/// Log of the asymptotic characteristic-polynomial moment
/// `⟨∏|x-λ|^β⟩` over the Laguerre ensemble whose weight carries the
/// multiplier `m` in its extensive exponent.  With `m = N+1` this both
/// enters the headline assembly and recomposes the size-N fluctuation
/// mean/variance as `exp(β·Δμ + β²·Δσ²/2)`.
pub fn char_poly_moment_laguerre(beta: f64, alpha: f64, m: f64, x: f64) -> LogValue {
    let (lo, hi) = LaguerreEnsemble::new(beta, alpha, 1).unwrap().support();
    let u = u_signed(x, lo, hi);
    let f1 = (m * beta / 2.0)
        * (x - u - alpha - 2.0 + 2.0 * ((u + x - 2.0 - alpha) / 2.0).abs().ln()
            - 2.0 * alpha * ((u - x - alpha) / (2.0 * (1.0 + alpha))).abs().ln());
    let f2 = (1.0 - 1.5 * beta) * u.abs().ln()
        - (1.0 - beta / 2.0) * ((u + x - 2.0 - alpha) / 2.0).abs().ln();
    LogValue::from_ln(f1 + f2)
}

/// Jacobi counterpart of [`char_poly_moment_laguerre`].
pub fn char_poly_moment_jacobi(beta: f64, a1: f64, a2: f64, m: f64, x: f64) -> LogValue {
    let (c1, c2) = jacobi_support(a1, a2);
    let u = u_signed(x, c1, c2);
    let t0 = ((x - (c1 + c2) / 2.0 + u).abs() / 2.0).ln();
    let t1 = (2.0 * ((c1 * c2).sqrt() + x - u).abs() / (c1.sqrt() + c2.sqrt()).powi(2)).ln();
    let t2 = (2.0 * (((1.0 - c1) * (1.0 - c2)).sqrt() - x + 1.0 + u).abs()
        / ((1.0 - c1).sqrt() + (1.0 - c2).sqrt()).powi(2))
    .ln();
    let f1 = m * beta * (t0 - a1 * t1 - a2 * t2);
    let f2 = (1.0 - 1.5 * beta) * u.abs().ln()
        - (1.0 - beta / 2.0) * ((u + x - (c1 + c2) / 2.0).abs() / 2.0).ln();
    LogValue::from_ln(f1 + f2)
}

/// Normalization ratio `C_{β,N}[w]/C_{β,N+1}[w]` in log form: the exact
/// log-gamma product and the printed Stirling asymptote side by side.
#[derive(Clone, Copy, Debug)]
pub struct NormRatio {
    pub exact_ln: f64,
    pub asym_ln: f64,
}

/// Laguerre normalization ratio for the size-(N+1)-scaled weight
/// `λ^{α(N+1)β/2 + β/2 - 1} e^{-(N+1)βλ/2}` with `N = ens.n`.
pub fn norm_ratio_laguerre(ens: &LaguerreEnsemble) -> NormRatio {
    let (beta, alpha, n) = (ens.beta, ens.alpha, ens.n);
    let m = (n + 1) as f64;
    let q = alpha * m * beta / 2.0 + beta / 2.0 - 1.0;
    let c = m * beta / 2.0;
    let exact_ln = crate::ensemble::ln_selberg_laguerre(n, q, c, beta)
        - crate::ensemble::ln_selberg_laguerre(n + 1, q, c, beta);
    let nf = n as f64;
    let asym_ln = -(2.0 * std::f64::consts::PI).ln()
        + (beta / 2.0) * (2.0 / (beta * nf)).ln()
        + beta * m * (1.0 + alpha / 2.0)
        + ln_gamma(1.0 + beta / 2.0)
        + (-m * (1.0 + alpha) * beta / 2.0 + 0.5) * (1.0 + alpha).ln();
    NormRatio { exact_ln, asym_ln }
}

/// Jacobi normalization ratio for the size-(N+1)-scaled weight.
pub fn norm_ratio_jacobi(ens: &JacobiEnsemble) -> NormRatio {
    let (beta, a1, a2, n) = (ens.beta, ens.alpha1, ens.alpha2, ens.n);
    let m = (n + 1) as f64;
    let q1 = a1 * m * beta / 2.0 + beta / 2.0 - 1.0;
    let q2 = a2 * m * beta / 2.0 + beta / 2.0 - 1.0;
    let exact_ln = crate::ensemble::ln_selberg_jacobi(n, q1, q2, beta)
        - crate::ensemble::ln_selberg_jacobi(n + 1, q1, q2, beta);
    let t = a1 + a2 + 2.0;
    let nf = n as f64;
    let e = beta
        * m
        * ((2.0 + a1 + a2) * t.ln()
            - ((1.0 + a1) / 2.0) * (1.0 + a1).ln()
            - ((1.0 + a2) / 2.0) * (1.0 + a2).ln()
            - ((1.0 + a1 + a2) / 2.0) * (1.0 + a1 + a2).ln());
    let asym_ln = ln_gamma(1.0 + beta / 2.0) - (2.0 * std::f64::consts::PI).ln()
        + (beta / 2.0) * (2.0 / (beta * nf)).ln()
        + 0.5 * ((1.0 + a1) * (1.0 + a2) * (1.0 + a1 + a2)).ln()
        - (beta / 2.0 + 1.0) * t.ln()
        + e;
    NormRatio { exact_ln, asym_ln }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fluctuation;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};

    #[test]
    fn left_tail_rate_identity() {
        // log-gas and constrained-minimization forms coincide on the left
        // tail for any beta
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for alpha in [0.5f64, 1.0, 2.0] {
            let lo = ((alpha + 1.0).sqrt() - 1.0).powi(2);
            for _ in 0..100 {
                let x = lo * rng.gen_range(0.05..0.95);
                let res = rate_identity_residuals(1.7, alpha, x);
                assert!(res.gas_vs_constrained.unwrap() < 1e-10);
            }
        }
    }

    #[test]
    fn arcosh_rate_identity_both_tails() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for alpha in [0.5f64, 1.0, 2.0] {
            let lo = ((alpha + 1.0).sqrt() - 1.0).powi(2);
            let hi = ((alpha + 1.0).sqrt() + 1.0).powi(2);
            for _ in 0..100 {
                let xl = lo * rng.gen_range(0.05..0.95);
                let xr = hi + rng.gen_range(0.1..10.0);
                assert!(rate_identity_residuals(2.0, alpha, xl).gas_vs_arcosh < 1e-10);
                assert!(rate_identity_residuals(2.0, alpha, xr).gas_vs_arcosh < 1e-10);
            }
        }
    }

    #[test]
    fn arcosh_agrees_with_log_form() {
        // arcosh(x) = log(x + sqrt(x^2 - 1)) for x > 1
        for i in 1..=10 {
            let x = 1.0 + 0.7 * i as f64;
            assert_relative_eq!(
                crate::numeric::arcosh_abs(x),
                (x + (x * x - 1.0).sqrt()).ln(),
                epsilon = 1e-13
            );
        }
    }

    #[test]
    fn asym_density_rejects_bulk_and_edge() {
        let ens = LaguerreEnsemble::new(2.0, 1.0, 6).unwrap();
        assert!(matches!(
            asym_density_laguerre(&ens, 2.0),
            Err(NotInTail(Region::Bulk))
        ));
        let (_, hi) = ens.support();
        assert!(matches!(
            asym_density_laguerre(&ens, hi + 1e-9),
            Err(NotInTail(Region::EdgeBand))
        ));
        assert!(asym_density_laguerre(&ens, 10.0).is_ok());
    }

    #[test]
    fn asym_density_factor_sum_matches_total() {
        let ens = LaguerreEnsemble::new(1.0, 1.0, 30).unwrap();
        let d = asym_density_laguerre(&ens, 0.1).unwrap();
        let total: f64 = d.factors.iter().sum();
        assert_relative_eq!(d.log_density().ln_abs, total, epsilon = 1e-14);
        assert_eq!(d.region, Region::LeftTail);
        // leading rate equals -kappa at beta = 2
        let e2 = LaguerreEnsemble::new(2.0, 1.0, 30).unwrap();
        let d2 = asym_density_laguerre(&e2, 10.0).unwrap();
        assert_relative_eq!(d2.rate, -kappa_laguerre(1.0, 10.0), epsilon = 1e-10);
    }

    #[test]
    fn jacobi_asym_density_swap_symmetry() {
        let a = JacobiEnsemble::new(1.0, 2.0, 7.0, 12).unwrap();
        let b = JacobiEnsemble::new(1.0, 7.0, 2.0, 12).unwrap();
        for x in [0.02, 0.97] {
            let da = asym_density_jacobi(&a, x).unwrap();
            let db = asym_density_jacobi(&b, 1.0 - x).unwrap();
            assert_relative_eq!(
                da.log_density().ln_abs,
                db.log_density().ln_abs,
                epsilon = 1e-11
            );
        }
    }

    #[test]
    fn char_poly_moment_tends_to_power_growth() {
        // far to the right the log-moment grows like (m - 1) beta log x:
        // the Gaussian correction factor eats one power of x
        let (beta, m) = (2.0, 20.0);
        let v1 = char_poly_moment_laguerre(beta, 1.0, m, 1e8).ln_abs;
        let v2 = char_poly_moment_laguerre(beta, 1.0, m, 2e8).ln_abs;
        let slope = (v2 - v1) / 2.0f64.ln();
        assert_relative_eq!(slope, (m - 1.0) * beta, epsilon = 1e-4);
        // frozen reference point
        assert_relative_eq!(
            char_poly_moment_laguerre(1.0, 1.0, 8.0, 10.0).ln_abs,
            14.614004681498384,
            epsilon = 1e-12
        );
    }

    #[test]
    fn char_poly_moment_recomposes_fluctuation_pieces() {
        // moment with multiplier m = N + 1 equals exp(β·Δμ + β²·Δσ²/2),
        // where the mean/variance differences are taken at size N
        for beta in [1.0, 2.0, 4.0] {
            for x in [10.0, 0.1] {
                let ens = LaguerreEnsemble::new(beta, 1.0, 8).unwrap();
                let lhs = char_poly_moment_laguerre(beta, 1.0, 9.0, x).ln_abs;
                let rhs = beta * fluctuation::mean_diff_laguerre(&ens, x)
                    + beta * beta * fluctuation::variance_diff_laguerre(beta, 1.0, x) / 2.0;
                assert_relative_eq!(lhs, rhs, epsilon = 1e-10);
            }
        }
        for beta in [1.0, 2.0, 4.0] {
            for x in [0.9, 0.1] {
                let ens = JacobiEnsemble::new(beta, 5.0, 5.0, 8).unwrap();
                let lhs = char_poly_moment_jacobi(beta, 5.0, 5.0, 9.0, x).ln_abs;
                let rhs = beta * fluctuation::mean_diff_jacobi(&ens, x)
                    + beta * beta * fluctuation::variance_diff_jacobi(beta, 5.0, 5.0, x) / 2.0;
                assert_relative_eq!(lhs, rhs, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn norm_ratio_asym_converges_to_exact() {
        // the Stirling display's error shrinks as N doubles
        for beta in [1.0, 2.0] {
            let mut prev = f64::INFINITY;
            for n in [6, 12, 24, 48] {
                let r = norm_ratio_laguerre(&LaguerreEnsemble::new(beta, 1.0, n).unwrap());
                let err = (r.exact_ln - r.asym_ln).abs();
                assert!(err < prev, "no improvement at n = {n}");
                prev = err;
            }
            let mut prevj = f64::INFINITY;
            for n in [6, 12, 24, 48] {
                let r = norm_ratio_jacobi(&JacobiEnsemble::new(beta, 5.0, 5.0, n).unwrap());
                let err = (r.exact_ln - r.asym_ln).abs();
                assert!(err < prevj, "no improvement at n = {n} (jacobi)");
                prevj = err;
            }
        }
    }

    #[test]
    fn headline_assembly_is_exact_refactoring() {
        // log(asym density at size M) == log M + asym norm ratio (with its
        // algebraic prefactor's N relabelled M) + log w(x) + log moment,
        // exactly, for both flavors
        for beta in [1.0, 2.0, 4.0] {
            for n in [6usize, 30] {
                let m = (n + 1) as f64;
                for x in [10.0, 0.1, 7.5] {
                    let ens_m = LaguerreEnsemble::new(beta, 1.0, n + 1).unwrap();
                    let lhs: f64 = asym_density_laguerre(&ens_m, x).unwrap().factors.iter().sum();
                    let r = norm_ratio_laguerre(&LaguerreEnsemble::new(beta, 1.0, n).unwrap());
                    let relabel = (beta / 2.0) * ((n as f64).ln() - m.ln());
                    let lw = (1.0 * m * beta / 2.0 + beta / 2.0 - 1.0) * x.ln() - m * beta * x / 2.0;
                    let rhs = m.ln()
                        + r.asym_ln
                        + relabel
                        + lw
                        + char_poly_moment_laguerre(beta, 1.0, m, x).ln_abs;
                    assert_relative_eq!(lhs, rhs, epsilon = 1e-10, max_relative = 1e-10);
                }
                for x in [0.9, 0.1, 0.97] {
                    let ens_m = JacobiEnsemble::new(beta, 5.0, 5.0, n + 1).unwrap();
                    let lhs: f64 = asym_density_jacobi(&ens_m, x).unwrap().factors.iter().sum();
                    let r = norm_ratio_jacobi(&JacobiEnsemble::new(beta, 5.0, 5.0, n).unwrap());
                    let relabel = (beta / 2.0) * ((n as f64).ln() - m.ln());
                    let q = 5.0 * m * beta / 2.0 + beta / 2.0 - 1.0;
                    let lw = q * x.ln() + q * (1.0 - x).ln();
                    let rhs = m.ln()
                        + r.asym_ln
                        + relabel
                        + lw
                        + char_poly_moment_jacobi(beta, 5.0, 5.0, m, x).ln_abs;
                    assert_relative_eq!(lhs, rhs, epsilon = 1e-9, max_relative = 1e-10);
                }
            }
        }
    }
}
