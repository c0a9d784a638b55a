//! Soft-edge scaling maps, the universal right-tail law, and the hard-edge
//! gap asymptote.
//!
//! Near either support endpoint the eigenvalue spacing becomes O(N^{-2/3})
//! on the macroscopic scale; mapping into the scaled edge variable X and
//! letting N grow, the tail of the large-deviation density collapses onto
//! the universal soft-edge largest-eigenvalue tail, independent of the
//! ensemble parameters.  [`scaling_limit_check_laguerre`] /
//! [`scaling_limit_check_jacobi`] verify that collapse numerically: the
//! ratio (scaled asymptotic density)/(universal tail) tends to 1, with an
//! observed O(N^{-1/3}) error.
//!
//! The Jacobian bookkeeping is pinned once here: with [`EdgeMap::width`]
//! carrying the full N^{-2/3} coefficient, the scaled-variable log-PDF is
//! `asym(map(X)) + ln(width)` for *both* flavors — the Laguerre chain-rule
//! factor N from λ = N·x cancels against the N built into its tail
//! asymptote.
//!
//! When the weight exponent is held fixed instead of growing with N, the
//! support reaches the origin and the natural edge quantity becomes the
//! probability that (0, s) is free of eigenvalues; [`hard_edge_tail`] gives
//! the known large-X asymptote of its hard-edge scaling limit (constant
//! term deliberately omitted — comparisons are slope-based).

use crate::ensemble::{
    jacobi_support, EnsembleError, JacobiEnsemble, LaguerreEnsemble, Region,
};
use crate::largedev::{asym_density_jacobi, asym_density_laguerre};
use crate::numeric::{ln_gamma, LogValue};

/// Which support endpoint to scale about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Edge {
    Largest,
    Smallest,
}

/// Affine map from the scaled edge variable X to the macroscopic variable:
/// `x(X) = center + orientation · width · X`.
#[derive(Clone, Copy, Debug)]
pub struct EdgeMap {
    /// Support endpoint the map is anchored at.
    pub center: f64,
    /// Full N^{-2/3} coefficient; always positive.
    pub width: f64,
    /// +1 maps outward past the largest eigenvalue, -1 past the smallest.
    pub orientation: f64,
}

impl EdgeMap {
    pub fn map(&self, x_scaled: f64) -> f64 {
        self.center + self.orientation * self.width * x_scaled
    }
}

/// Soft-edge map for the Laguerre ensemble in the macroscopic variable
/// (support `[(√(α+1)-1)², (√(α+1)+1)²]`).
///
/// Width coefficient `t_±^{2/3} / ((t₊-t₋)/4)^{1/3}`; the smallest-eigenvalue
/// edge is soft only for α > 0 (at α = 0 it collapses onto the hard wall).
pub fn soft_edge_map_laguerre(
    ens: &LaguerreEnsemble,
    which: Edge,
) -> Result<EdgeMap, EnsembleError> {
    let r = (ens.alpha + 1.0).sqrt();
    let (t_plus, t_minus) = ((r + 1.0).powi(2), (r - 1.0).powi(2));
    let (center, orientation) = match which {
        Edge::Largest => (t_plus, 1.0),
        Edge::Smallest => {
            if ens.alpha <= 0.0 {
                return Err(EnsembleError::OutOfDomain(ens.alpha));
            }
            (t_minus, -1.0)
        }
    };
    let coeff = center.powf(2.0 / 3.0) / ((t_plus - t_minus) / 4.0).cbrt();
    Ok(EdgeMap {
        center,
        width: (ens.n as f64).powf(-2.0 / 3.0) * coeff,
        orientation,
    })
}

/// Soft-edge map for the Jacobi ensemble (support `[c₁, c₂]` in `(0,1)`).
pub fn soft_edge_map_jacobi(ens: &JacobiEnsemble, which: Edge) -> Result<EdgeMap, EnsembleError> {
    if ens.alpha1 <= 0.0 || ens.alpha2 <= 0.0 {
        return Err(EnsembleError::OutOfDomain(ens.alpha1.min(ens.alpha2)));
    }
    let (c1, c2) = jacobi_support(ens.alpha1, ens.alpha2);
    let theta = (ens.alpha1 + 1.0) / (ens.alpha1 + ens.alpha2 + 2.0);
    let tau = 1.0 / (ens.alpha1 + ens.alpha2 + 2.0);
    let (t, orientation) = match which {
        Edge::Largest => (c2, 1.0),
        Edge::Smallest => (c1, -1.0),
    };
    let coeff = (tau * t * (1.0 - t)).powf(2.0 / 3.0)
        / (tau * theta * (1.0 - tau) * (1.0 - theta)).powf(1.0 / 6.0);
    if !(coeff > 0.0) {
        return Err(EnsembleError::ZeroRate {
            name: "edge width",
            value: coeff,
        });
    }
    Ok(EdgeMap {
        center: t,
        width: (ens.n as f64).powf(-2.0 / 3.0) * coeff,
        orientation,
    })
}

/// Log of the universal soft-edge largest-eigenvalue right tail,
/// `(1/π) Γ(1+β/2) (4β)^{-β/2} e^{-2βX^{3/2}/3} X^{-(3β/4-1/2)}`.
pub fn tw_right_tail(beta: f64, x_scaled: f64) -> Result<LogValue, EnsembleError> {
    if beta <= 0.0 {
        return Err(EnsembleError::NonPositiveBeta(beta));
    }
    if x_scaled <= 0.0 {
        return Err(EnsembleError::OutOfDomain(x_scaled));
    }
    let ln = -std::f64::consts::PI.ln() + ln_gamma(1.0 + beta / 2.0)
        - (beta / 2.0) * (4.0 * beta).ln()
        - 2.0 * beta * x_scaled.powf(1.5) / 3.0
        - (0.75 * beta - 0.5) * x_scaled.ln();
    Ok(LogValue::from_ln(ln))
}

/// One entry of a scaling-limit report: the ratio of the edge-mapped
/// asymptotic density (converted to the scaled variable) to the universal
/// tail.  `ratio` is `None` when the mapped point fell inside the support
/// or its edge guard band (X too small for the given N).
#[derive(Clone, Copy, Debug)]
pub struct ScalingPoint {
    pub x_scaled: f64,
    pub n: usize,
    pub ratio: Option<f64>,
}

fn scaled_ratio(
    log_density_at: impl Fn(f64) -> Result<f64, Region>,
    map: &EdgeMap,
    beta: f64,
    x_scaled: f64,
) -> Option<f64> {
    let x = map.map(x_scaled);
    let scaled_log = log_density_at(x).ok()? + map.width.ln();
    let tw = tw_right_tail(beta, x_scaled).ok()?.ln_abs;
    Some((scaled_log - tw).exp())
}

/// Evaluate the soft-edge collapse for the Laguerre ensemble over a grid of
/// scaled positions and sizes (largest-eigenvalue edge).
pub fn scaling_limit_check_laguerre(
    beta: f64,
    alpha: f64,
    x_grid: &[f64],
    n_grid: &[usize],
) -> Result<Vec<ScalingPoint>, EnsembleError> {
    let mut out = Vec::with_capacity(x_grid.len() * n_grid.len());
    for &x_scaled in x_grid {
        for &n in n_grid {
            let ens = LaguerreEnsemble::new(beta, alpha, n)?;
            let map = soft_edge_map_laguerre(&ens, Edge::Largest)?;
            let ratio = scaled_ratio(
                |x| {
                    asym_density_laguerre(&ens, x)
                        .map(|d| d.log_density().ln_abs)
                        .map_err(|e| e.0)
                },
                &map,
                beta,
                x_scaled,
            );
            out.push(ScalingPoint { x_scaled, n, ratio });
        }
    }
    Ok(out)
}

/// Jacobi counterpart of [`scaling_limit_check_laguerre`].
pub fn scaling_limit_check_jacobi(
    beta: f64,
    alpha1: f64,
    alpha2: f64,
    x_grid: &[f64],
    n_grid: &[usize],
) -> Result<Vec<ScalingPoint>, EnsembleError> {
    let mut out = Vec::with_capacity(x_grid.len() * n_grid.len());
    for &x_scaled in x_grid {
        for &n in n_grid {
            let ens = JacobiEnsemble::new(beta, alpha1, alpha2, n)?;
            let map = soft_edge_map_jacobi(&ens, Edge::Largest)?;
            let ratio = scaled_ratio(
                |x| {
                    asym_density_jacobi(&ens, x)
                        .map(|d| d.log_density().ln_abs)
                        .map_err(|e| e.0)
                },
                &map,
                beta,
                x_scaled,
            );
            out.push(ScalingPoint { x_scaled, n, ratio });
        }
    }
    Ok(out)
}

/// Large-X log asymptote of the hard-edge gap probability for fixed weight
/// exponent `a`: `-β(X/8 - a√X/2 + (a(a-1)/4 + a/(2β))·ln√X)`.
///
/// No constant term is included (it is not available in general), so only
/// slopes/differences of this quantity are meaningful.
pub fn hard_edge_tail(beta: f64, a: f64, x_scaled: f64) -> Result<LogValue, EnsembleError> {
    if beta <= 0.0 {
        return Err(EnsembleError::NonPositiveBeta(beta));
    }
    if x_scaled <= 0.0 || a < 0.0 {
        return Err(EnsembleError::OutOfDomain(x_scaled.min(a)));
    }
    let ln = -beta
        * (x_scaled / 8.0 - a * x_scaled.sqrt() / 2.0
            + (a * (a - 1.0) / 4.0 + a / (2.0 * beta)) * x_scaled.sqrt().ln());
    Ok(LogValue::from_ln(ln))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn laguerre_edge_map_dual_forms_agree() {
        // the per-edge printed coefficients equal the unified t_± form
        for alpha in [0.5f64, 1.0, 2.0] {
            for n in [100usize, 10_000] {
                let r = (alpha + 1.0).sqrt();
                let scale = (n as f64).powf(-2.0 / 3.0);
                let ens = LaguerreEnsemble::new(2.0, alpha, n).unwrap();
                let max = soft_edge_map_laguerre(&ens, Edge::Largest).unwrap();
                let w_max = (r + 1.0) * (1.0 + 1.0 / r).cbrt() * scale;
                assert_relative_eq!(max.width, w_max, max_relative = 1e-12);
                assert_relative_eq!(max.center, (r + 1.0).powi(2), max_relative = 1e-14);
                let min = soft_edge_map_laguerre(&ens, Edge::Smallest).unwrap();
                let w_min = (r - 1.0) * (1.0 - 1.0 / r).cbrt() * scale;
                assert_relative_eq!(min.width, w_min, max_relative = 1e-12);
                assert_eq!(min.orientation, -1.0);
            }
        }
    }

    #[test]
    fn hard_wall_rejects_soft_min_edge() {
        let ens = LaguerreEnsemble::new(2.0, 0.0, 100).unwrap();
        assert!(soft_edge_map_laguerre(&ens, Edge::Smallest).is_err());
        let max = soft_edge_map_laguerre(&ens, Edge::Largest).unwrap();
        assert_relative_eq!(max.center, 4.0, epsilon = 1e-14);
        assert_relative_eq!(
            max.width,
            4.0f64.powf(2.0 / 3.0) * (100.0f64).powf(-2.0 / 3.0),
            max_relative = 1e-13
        );
    }

    #[test]
    fn jacobi_edge_map_symmetry_and_rates() {
        let a = JacobiEnsemble::new(2.0, 5.0, 5.0, 50).unwrap();
        let theta = 6.0 / 12.0;
        let tau = 1.0 / 12.0;
        assert_relative_eq!((a.alpha1 + 1.0) / (a.alpha1 + a.alpha2 + 2.0), theta);
        assert_relative_eq!(1.0 / (a.alpha1 + a.alpha2 + 2.0), tau);
        // max edge of (α1, α2) mirrors min edge of (α2, α1) under x -> 1 - x
        let b = JacobiEnsemble::new(2.0, 2.0, 7.0, 50).unwrap();
        let c = JacobiEnsemble::new(2.0, 7.0, 2.0, 50).unwrap();
        let max_b = soft_edge_map_jacobi(&b, Edge::Largest).unwrap();
        let min_c = soft_edge_map_jacobi(&c, Edge::Smallest).unwrap();
        assert_relative_eq!(max_b.center, 1.0 - min_c.center, max_relative = 1e-13);
        assert_relative_eq!(max_b.width, min_c.width, max_relative = 1e-13);
        assert!(max_b.width > 0.0);
    }

    #[test]
    fn right_tail_log_value_at_reference_point() {
        // β = 2, X = 4: prefactor Γ(2)/8 = 1/8, exponent -2·2·8/3, power -1
        let v = tw_right_tail(2.0, 4.0).unwrap().ln_abs;
        let expect = (1.0 / (std::f64::consts::PI * 8.0)).ln() - 32.0 / 3.0 - 4.0f64.ln();
        assert_relative_eq!(v, expect, max_relative = 1e-14);
        assert!(tw_right_tail(2.0, -1.0).is_err());
    }

    #[test]
    fn edge_mapped_density_collapses_onto_universal_tail() {
        // β = 2: within 5% by N = 1e4; always closer at 1e4 than at 1e2
        for (check, flavor) in [
            (
                scaling_limit_check_laguerre(2.0, 1.0, &[4.0], &[100, 10_000]).unwrap(),
                "laguerre",
            ),
            (
                scaling_limit_check_jacobi(2.0, 5.0, 5.0, &[4.0], &[100, 10_000]).unwrap(),
                "jacobi",
            ),
        ] {
            let r_small = check[0].ratio.unwrap();
            let r_big = check[1].ratio.unwrap();
            assert!(
                (r_big - 1.0).abs() < 0.05,
                "{flavor}: ratio {r_big} at N = 1e4"
            );
            assert!(
                (r_big - 1.0).abs() < (r_small - 1.0).abs(),
                "{flavor}: no improvement ({r_small} -> {r_big})"
            );
        }
    }

    #[test]
    fn collapse_is_monotone_for_all_tested_couplings() {
        for beta in [1.0, 2.0, 4.0] {
            for x in [2.0, 4.0, 6.0] {
                let pts = scaling_limit_check_laguerre(beta, 1.0, &[x], &[100, 10_000]).unwrap();
                let devs: Vec<f64> =
                    pts.iter().map(|p| (p.ratio.unwrap() - 1.0).abs()).collect();
                assert!(devs[1] < devs[0], "beta {beta} X {x}: {devs:?}");
                // and all couplings land within 5% once N is large enough
                let far = scaling_limit_check_laguerre(beta, 1.0, &[x], &[100_000_000]).unwrap();
                assert!((far[0].ratio.unwrap() - 1.0).abs() < 0.05);
            }
        }
    }

    #[test]
    fn too_small_scaled_x_reports_none() {
        let pts = scaling_limit_check_laguerre(2.0, 1.0, &[1e-9], &[100]).unwrap();
        assert!(pts[0].ratio.is_none());
    }

    #[test]
    fn hard_edge_coefficients() {
        // a = 0: pure linear decay -βX/8
        for x in [5.0, 20.0, 40.0] {
            let v = hard_edge_tail(1.7, 0.0, x).unwrap().ln_abs;
            assert_relative_eq!(v, -1.7 * x / 8.0, max_relative = 1e-14);
        }
        // β = 2, a = 1: log√X coefficient is -β(0 + 1/4) = -1/2
        let x1 = 100.0;
        let x2 = 400.0;
        let lin = |x: f64| -2.0 * (x / 8.0 - x.sqrt() / 2.0);
        let d = hard_edge_tail(2.0, 1.0, x2).unwrap().ln_abs
            - hard_edge_tail(2.0, 1.0, x1).unwrap().ln_abs
            - (lin(x2) - lin(x1));
        assert_relative_eq!(d, -0.5 * (x2.sqrt().ln() - x1.sqrt().ln()), max_relative = 1e-12);
    }
}
