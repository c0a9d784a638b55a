//! Exact finite-N eigenvalue densities and a brute-force quadrature oracle.
//!
//! Four layers, in decreasing order of trust:
//!
//! * [`brute_force_density_laguerre`] / [`brute_force_density_jacobi`] —
//!   direct (N-1)-dimensional quadrature of the defining integral, N ≤ 6.
//!   Slow, but depends on nothing except the Selberg normalization; every
//!   other density in the crate is validated against it.
//! * [`cd_density_laguerre`] / [`cd_density_jacobi`] — β = 2 densities via
//!   the Christoffel–Darboux kernel diagonal (Laguerre in the classical
//!   polynomial form with the explicit Γ-ratio prefactor, Jacobi as the
//!   orthonormal square sum).
//! * [`SkewGramDensity::density`] — the true β = 1 density for even N via
//!   the skew-orthogonal Gram construction
//!   `ρ = -w₁ · pᵀ G⁻¹ Φ`, `G_jk = ∫ p_j w₁ Φ_k`,
//!   `Φ_k(x) = ∫ sgn(x-y) p_k(y) w₁(y) dy`,
//!   with any convenient polynomial basis p (here: the orthonormal basis of
//!   the squared weight). Integrates to N.
//! * [`SkewGramDensity::tail_matched_density`] — the one-term truncation
//!   `ρ₂[w₁²] + c_∞ · w₁ · p_{N-1} · Φ_{N-2}` with the tail coefficient
//!   `c_∞ = -(G⁻¹I)_{N-1} / I_{N-2}`, `I_k = ∫ p_k w₁`. This variant is
//!   exact as x → ∞ but wrong near the support edges and integrates to
//!   N + 1, not N; it is kept because the published β = 1 reference-table
//!   columns were computed from exactly this expression (for Laguerre its
//!   tail coefficient reduces to the closed form Γ(N)/(4Γ(a+N-1))).
//!
//! Polynomial recurrences use mantissa-exponent scaled arithmetic: the
//! extensive weight exponents (a = αN up to 150) drive raw recurrence
//! values far past f64 range.

use crate::ensemble::{EnsembleError, JacobiEnsemble, LaguerreEnsemble};
use crate::numeric::{kahan_sum, ln_gamma, LogValue};
use crate::quadrature::{gauss_legendre_on, GaussRule, Recurrence};
use rayon::prelude::*;

const LN_2: f64 = std::f64::consts::LN_2;

/// A float with an explicit wide exponent: value = `m · 2^e`.
#[derive(Clone, Copy, Debug)]
pub struct ScaledValue {
    pub m: f64,
    pub e: i32,
}

impl ScaledValue {
    pub fn ln_abs(self) -> f64 {
        self.m.abs().ln() + f64::from(self.e) * LN_2
    }

    pub fn to_log_value(self) -> LogValue {
        if self.m == 0.0 {
            LogValue::ZERO
        } else {
            LogValue::new(if self.m > 0.0 { 1 } else { -1 }, self.ln_abs())
        }
    }
}

/// Generalized Laguerre recurrence carrying the last three polynomials with
/// a shared power-of-two exponent; `bits` is the renormalization threshold.
/// Returns mantissas (L_{n-2}, L_{n-1}, L_n) and the shared exponent
/// (entries below index 0 are zero).
fn laguerre_triple(n: usize, a: f64, x: f64, bits: i32) -> (f64, f64, f64, i32) {
    let mut prev2 = 0.0;
    let mut prev = 0.0;
    let mut cur = 1.0;
    let mut e = 0i32;
    let hi = 2f64.powi(bits);
    for k in 0..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - x) * cur - (kf + a) * prev) / (kf + 1.0);
        prev2 = prev;
        prev = cur;
        cur = next;
        if cur.abs() > hi || prev.abs() > hi {
            let s = 2f64.powi(-bits);
            prev2 *= s;
            prev *= s;
            cur *= s;
            e += bits;
        }
    }
    (prev2, prev, cur, e)
}

/// `L_n^a(x)` and its derivative, overflow-free for extensive `a` and `x`.
pub fn laguerre_poly(n: usize, a: f64, x: f64) -> (ScaledValue, ScaledValue) {
    let (_, lm, ln_, e) = laguerre_triple(n, a, x, 512);
    let value = ScaledValue { m: ln_, e };
    let dm = if n == 0 {
        0.0
    } else {
        (n as f64 * ln_ - (n as f64 + a) * lm) / x
    };
    (value, ScaledValue { m: dm, e })
}

fn cd_combination_laguerre(n: usize, a: f64, x: f64, bits: i32) -> ScaledValue {
    // L_N (L_{N-1})' - L_{N-1} (L_N)', all sharing one exponent
    let (l2, l1, l0, e) = laguerre_triple(n, a, x, bits);
    let nf = n as f64;
    let d0 = (nf * l0 - (nf + a) * l1) / x;
    let d1 = ((nf - 1.0) * l1 - (nf - 1.0 + a) * l2) / x;
    ScaledValue { m: l0 * d1 - l1 * d0, e: 2 * e }
}

fn cd_density_laguerre_impl(n: usize, a: f64, x: f64, bits: i32) -> LogValue {
    let combo = cd_combination_laguerre(n, a, x, bits);
    let ln = ln_gamma(n as f64 + 1.0) - ln_gamma(n as f64 + a) + a * x.ln() - x + combo.ln_abs();
    LogValue::new(if combo.m >= 0.0 { 1 } else { -1 }, ln)
}

/// β = 2 Laguerre density with exponent `a = αN` taken from `ens`, at the
/// unscaled argument `x` (reference-table ratios evaluate this at `N·x`):
/// `(Γ(N+1)/Γ(N+a)) x^a e^{-x} (L_N (L_{N-1})' - L_{N-1} L_N')`.
pub fn cd_density_laguerre(ens: &LaguerreEnsemble, x: f64) -> Result<LogValue, EnsembleError> {
    if x <= 0.0 {
        return Err(EnsembleError::OutOfDomain(x));
    }
    Ok(cd_density_laguerre_impl(ens.n, ens.exponent(), x, 512))
}

/// β = 2 Jacobi density with exponents `(a₁, a₂) = (α₁N, α₂N)`:
/// weight times the orthonormal-polynomial square sum.
pub fn cd_density_jacobi(ens: &JacobiEnsemble, x: f64) -> Result<LogValue, EnsembleError> {
    if x <= 0.0 || x >= 1.0 {
        return Err(EnsembleError::OutOfDomain(x));
    }
    let (a1, a2) = ens.exponents();
    let rec = Recurrence::jacobi01(ens.n, a1, a2);
    let (vals, ls) = rec.orthonormal_scaled(x, ens.n);
    let s: f64 = vals.iter().map(|v| v * v).sum();
    Ok(LogValue::new(1, s.ln() + 2.0 * ls + a1 * x.ln() + a2 * (-x).ln_1p()))
}

// ---------------------------------------------------------------------------
// True beta = 1 density (skew-orthogonal Gram construction)
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug)]
enum WeightKind {
    /// `x^p e^{-x/2}` on (0, upper)
    Laguerre { p: f64 },
    /// `x^{p1} (1-x)^{p2}` on (0, 1)
    Jacobi { p1: f64, p2: f64 },
}

impl WeightKind {
    fn ln_w1(self, x: f64) -> f64 {
        match self {
            WeightKind::Laguerre { p } => p * x.ln() - x / 2.0,
            WeightKind::Jacobi { p1, p2 } => p1 * x.ln() + p2 * (-x).ln_1p(),
        }
    }
}

/// Precomputed β = 1 density for even N: basis recurrence, scaled grid
/// tables of `p_j w₁` and their sgn-integrals, and the inverse Gram matrix.
pub struct SkewGramDensity {
    n: usize,
    kind: WeightKind,
    rec: Recurrence,
    // for the beta = 2 part of the tail-matched variant
    cd_exponents: (f64, f64),
    grid_lo: f64,
    grid_step: f64,
    grid_len: usize,
    /// rows `Φ_k` in scaled units, tabulated on the grid
    phi: Vec<Vec<f64>>,
    ginv: Vec<Vec<f64>>,
    /// per-row scale factors and the global log shift of the tables
    row_scale: Vec<f64>,
    shift: f64,
    /// `I_k = ∫ p_k w₁` in scaled units
    tot: Vec<f64>,
}

fn invert(mut a: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut inv: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| f64::from(u8::from(i == j))).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col];
        assert!(d != 0.0, "singular Gram matrix");
        for j in 0..n {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for i in 0..n {
            if i != col {
                let f = a[i][col];
                if f != 0.0 {
                    for j in 0..n {
                        a[i][j] -= f * a[col][j];
                        inv[i][j] -= f * inv[col][j];
                    }
                }
            }
        }
    }
    inv
}

impl SkewGramDensity {
    /// Laguerre flavor: weight `x^{(a-1)/2} e^{-x/2}`, `a = αN`, N even.
    pub fn laguerre(ens: &LaguerreEnsemble) -> Result<Self, EnsembleError> {
        if ens.n % 2 != 0 {
            return Err(EnsembleError::OddSizeBetaOne(ens.n));
        }
        let a = ens.exponent();
        let upper = 4.0 * (a + 2.0 * ens.n as f64) + 120.0;
        let rec = Recurrence::laguerre(ens.n, a);
        Ok(Self::build(
            ens.n,
            WeightKind::Laguerre { p: (a - 1.0) / 2.0 },
            rec,
            (a, 0.0),
            1e-12,
            upper,
            200_001,
        ))
    }

    /// Jacobi flavor: weight `x^{(a₁-1)/2}(1-x)^{(a₂-1)/2}`, N even.
    pub fn jacobi(ens: &JacobiEnsemble) -> Result<Self, EnsembleError> {
        if ens.n % 2 != 0 {
            return Err(EnsembleError::OddSizeBetaOne(ens.n));
        }
        let (a1, a2) = ens.exponents();
        let rec = Recurrence::jacobi01(ens.n, a1, a2);
        Ok(Self::build(
            ens.n,
            WeightKind::Jacobi { p1: (a1 - 1.0) / 2.0, p2: (a2 - 1.0) / 2.0 },
            rec,
            (a1, a2),
            1e-12,
            1.0 - 1e-12,
            200_001,
        ))
    }

    fn build(
        n: usize,
        kind: WeightKind,
        rec: Recurrence,
        cd_exponents: (f64, f64),
        lo: f64,
        hi: f64,
        m: usize,
    ) -> Self {
        let step = (hi - lo) / (m - 1) as f64;
        // pass 1: basis values and combined log factor per grid point
        let mut vals = vec![0.0f64; n * m];
        let mut lf = vec![0.0f64; m];
        for i in 0..m {
            let x = lo + step * i as f64;
            let (v, ls) = rec.orthonormal_scaled(x, n);
            vals[i * n..(i + 1) * n].copy_from_slice(&v);
            lf[i] = ls + kind.ln_w1(x);
        }
        let shift = lf.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        // rows t_j = p_j w1 e^{-shift}, then rescaled to max 1
        let mut rows: Vec<Vec<f64>> = (0..n)
            .map(|j| (0..m).map(|i| vals[i * n + j] * (lf[i] - shift).exp()).collect())
            .collect();
        let row_scale: Vec<f64> = rows
            .iter()
            .map(|r| r.iter().fold(0.0f64, |acc, v| acc.max(v.abs())))
            .collect();
        for (r, &s) in rows.iter_mut().zip(&row_scale) {
            for v in r.iter_mut() {
                *v /= s;
            }
        }
        // cumulative trapezoid -> sgn-integrals Φ_k = 2∫₀ˣ - ∫₀^∞
        let mut phi: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut tot = Vec::with_capacity(n);
        for r in &rows {
            let mut cum = vec![0.0; m];
            for i in 1..m {
                cum[i] = cum[i - 1] + step * (r[i - 1] + r[i]) / 2.0;
            }
            let t = cum[m - 1];
            for c in cum.iter_mut() {
                *c = 2.0 * *c - t;
            }
            tot.push(t);
            phi.push(cum);
        }
        // Gram matrix in scaled units (trapezoid on the same grid)
        let gram: Vec<Vec<f64>> = (0..n)
            .into_par_iter()
            .map(|j| {
                (0..n)
                    .map(|k| {
                        let mut s = 0.0;
                        for i in 0..m {
                            let w = if i == 0 || i == m - 1 { 0.5 } else { 1.0 };
                            s += w * rows[j][i] * phi[k][i];
                        }
                        s * step
                    })
                    .collect()
            })
            .collect();
        let ginv = invert(gram);
        SkewGramDensity {
            n,
            kind,
            rec,
            cd_exponents,
            grid_lo: lo,
            grid_step: step,
            grid_len: m,
            phi,
            ginv,
            row_scale,
            shift,
            tot,
        }
    }

    /// Scaled basis-times-weight values at an arbitrary point.
    fn b_at(&self, x: f64) -> Vec<f64> {
        let (v, ls) = self.rec.orthonormal_scaled(x, self.n);
        let f = (ls + self.kind.ln_w1(x) - self.shift).exp();
        v.iter().zip(&self.row_scale).map(|(vi, s)| vi * f / s).collect()
    }

    fn phi_at(&self, k: usize, x: f64) -> f64 {
        let row = &self.phi[k];
        let t = (x - self.grid_lo) / self.grid_step;
        if t <= 0.0 {
            return row[0];
        }
        let i = t.floor() as usize;
        if i + 1 >= self.grid_len {
            return row[self.grid_len - 1];
        }
        let f = t - i as f64;
        row[i] * (1.0 - f) + row[i + 1] * f
    }

    /// The true β = 1 density at `x` (integrates to N).
    pub fn density(&self, x: f64) -> Result<LogValue, EnsembleError> {
        self.check_domain(x)?;
        let b = self.b_at(x);
        let ph: Vec<f64> = (0..self.n).map(|k| self.phi_at(k, x)).collect();
        let mut v = 0.0;
        for j in 0..self.n {
            let mut row = 0.0;
            for k in 0..self.n {
                row += self.ginv[j][k] * ph[k];
            }
            v += b[j] * row;
        }
        Ok(LogValue::from_f64(-v))
    }

    /// Tail coefficient `c_∞ = -(G⁻¹I)_{N-1}/I_{N-2}` in the scaled basis.
    pub fn tail_coefficient(&self) -> f64 {
        let n = self.n;
        let mut gi = 0.0;
        for k in 0..n {
            gi += self.ginv[n - 1][k] * self.tot[k];
        }
        -gi / self.tot[n - 2]
    }

    /// Tail coefficient converted to the orthonormal-basis normalization
    /// (for comparison with the Laguerre closed form `Γ(N)/(4Γ(a+N-1))`
    /// times `√(h_{N-1}h_{N-2})`).
    pub fn ln_abs_tail_coefficient_orthonormal(&self) -> f64 {
        let n = self.n;
        self.tail_coefficient().abs().ln() - 2.0 * self.shift
            - self.row_scale[n - 1].ln()
            - self.row_scale[n - 2].ln()
    }

    /// One-term tail-matched variant: the β = 2 density of the squared
    /// weight plus `c_∞ w₁ p_{N-1} Φ_{N-2}`. Exact for x → ∞; integrates
    /// to N + 1 rather than N.
    pub fn tail_matched_density(&self, x: f64) -> Result<LogValue, EnsembleError> {
        self.check_domain(x)?;
        let base = match self.kind {
            WeightKind::Laguerre { .. } => cd_density_laguerre_impl(self.n, self.cd_exponents.0, x, 512),
            WeightKind::Jacobi { .. } => {
                let (v, ls) = self.rec.orthonormal_scaled(x, self.n);
                let s: f64 = v.iter().map(|q| q * q).sum();
                LogValue::new(
                    1,
                    s.ln() + 2.0 * ls + self.cd_exponents.0 * x.ln()
                        + self.cd_exponents.1 * (-x).ln_1p(),
                )
            }
        };
        let b = self.b_at(x);
        let corr = self.tail_coefficient() * b[self.n - 1] * self.phi_at(self.n - 2, x);
        Ok(base.add(LogValue::from_f64(corr)))
    }

    fn check_domain(&self, x: f64) -> Result<(), EnsembleError> {
        let bad = match self.kind {
            WeightKind::Laguerre { .. } => x <= 0.0,
            WeightKind::Jacobi { .. } => x <= 0.0 || x >= 1.0,
        };
        if bad {
            Err(EnsembleError::OutOfDomain(x))
        } else {
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

/// β = 2 tensor-product integral over the (m_dims)-cube of
/// `∏ w(t_i) |x-t_i|² ∏_{i<j} |t_i-t_j|²` with normalized rule weights;
/// returns ln of the integral.
fn tensor_integral(rule: &GaussRule, ln_mu0: f64, x: f64, m_dims: usize) -> f64 {
    let wn: Vec<f64> = rule.ln_weights.iter().map(|lw| (lw - ln_mu0).exp()).collect();
    fn go(nodes: &[f64], wn: &[f64], x: f64, fixed: &mut Vec<f64>, rem: usize) -> f64 {
        if rem == 0 {
            return 1.0;
        }
        let mut s = 0.0;
        for (&t, &w) in nodes.iter().zip(wn) {
            let mut f = (x - t) * (x - t);
            for &g in fixed.iter() {
                f *= (g - t) * (g - t);
            }
            fixed.push(t);
            s += w * f * go(nodes, wn, x, fixed, rem - 1);
            fixed.pop();
        }
        s
    }
    if m_dims == 0 {
        return 0.0;
    }
    let parts: Vec<f64> = (0..rule.nodes.len())
        .into_par_iter()
        .map(|i| {
            let t = rule.nodes[i];
            let mut fixed = vec![t];
            let f = (x - t) * (x - t);
            wn[i] * f * go(&rule.nodes, &wn, x, &mut fixed, m_dims - 1)
        })
        .collect();
    kahan_sum(parts).ln() + m_dims as f64 * ln_mu0
}

/// Candidate quadrature points (node, weight-with-analytic-factors) for one
/// level of the ordered-region β = 1 integral.
enum TopPanel {
    /// Laguerre: `(x, ∞)` via the shifted exponential rule
    LaguerreTail,
    /// Jacobi: `(x, 1)` via the `(1-y)^{p2}`-weighted rule
    JacobiUpper,
}

struct OrderedSimplex {
    x: f64,
    kind: WeightKind,
    /// rule for weight `y^p` on (0,1) (absorbs the lower-endpoint power)
    p_rule: (Vec<f64>, Vec<f64>),
    p_pow: f64,
    gl: (Vec<f64>, Vec<f64>),
    top_rule: (Vec<f64>, Vec<f64>),
    top_kind: TopPanel,
    top_pow: f64,
}

impl OrderedSimplex {
    fn new_laguerre(p: f64, x: f64, nodes: usize) -> Self {
        let pr = Recurrence::jacobi01(nodes, p, 0.0);
        let prule = GaussRule::from_recurrence(&pr, nodes);
        let lr = Recurrence::laguerre(nodes, 0.0);
        let lrule = GaussRule::from_recurrence(&lr, nodes);
        OrderedSimplex {
            x,
            kind: WeightKind::Laguerre { p },
            p_rule: (prule.nodes.clone(), prule.weights()),
            p_pow: p,
            gl: gauss_legendre_on(-1.0, 1.0, nodes),
            top_rule: (lrule.nodes.clone(), lrule.weights()),
            top_kind: TopPanel::LaguerreTail,
            top_pow: 0.0,
        }
    }

    fn new_jacobi(p1: f64, p2: f64, x: f64, nodes: usize) -> Self {
        let pr = Recurrence::jacobi01(nodes, p1, 0.0);
        let prule = GaussRule::from_recurrence(&pr, nodes);
        let qr = Recurrence::jacobi01(nodes, 0.0, p2);
        let qrule = GaussRule::from_recurrence(&qr, nodes);
        OrderedSimplex {
            x,
            kind: WeightKind::Jacobi { p1, p2 },
            p_rule: (prule.nodes.clone(), prule.weights()),
            p_pow: p1,
            gl: gauss_legendre_on(-1.0, 1.0, nodes),
            top_rule: (qrule.nodes.clone(), qrule.weights()),
            top_kind: TopPanel::JacobiUpper,
            top_pow: p2,
        }
    }

    /// Remaining weight factor once the panel rule has absorbed its part.
    fn rest_after_p(&self, t: f64) -> f64 {
        match self.kind {
            WeightKind::Laguerre { .. } => (-t / 2.0).exp(),
            WeightKind::Jacobi { p2, .. } => (1.0 - t).powf(p2),
        }
    }

    fn full_w1(&self, t: f64) -> f64 {
        self.kind.ln_w1(t).exp()
    }

    /// All (node, weight) pairs for a level with upper limit `upper`
    /// (`None` = the outermost level, unbounded above for Laguerre /
    /// bounded by 1 for Jacobi).
    fn level_points(&self, upper: Option<f64>) -> Vec<(f64, f64)> {
        let x = self.x;
        let mut pts = Vec::new();
        let m = upper.map_or(x, |u| x.min(u));
        // (0, m): rule with weight t^p, remaining weight factors explicit
        let scale = m.powf(self.p_pow + 1.0);
        for (&y, &w) in self.p_rule.0.iter().zip(&self.p_rule.1) {
            let t = m * y;
            pts.push((t, scale * w * self.rest_after_p(t)));
        }
        match upper {
            None => match self.top_kind {
                TopPanel::LaguerreTail => {
                    // (x, ∞): t = x + 2s against e^{-s}
                    let pre = 2.0 * (-x / 2.0).exp();
                    for (&s, &w) in self.top_rule.0.iter().zip(&self.top_rule.1) {
                        let t = x + 2.0 * s;
                        pts.push((t, pre * w * t.powf(self.p_pow)));
                    }
                }
                TopPanel::JacobiUpper => {
                    // (x, 1): t = x + (1-x)y against (1-y)^{p2}
                    let pre = (1.0 - x).powf(self.top_pow + 1.0);
                    for (&y, &w) in self.top_rule.0.iter().zip(&self.top_rule.1) {
                        let t = x + (1.0 - x) * y;
                        pts.push((t, pre * w * t.powf(self.p_pow)));
                    }
                }
            },
            Some(u) if u > x => {
                // (x, u): plain Gauss-Legendre panels, full weight explicit
                let len_scale = match self.kind {
                    WeightKind::Laguerre { .. } => 15.0,
                    WeightKind::Jacobi { .. } => 0.3,
                };
                let npan = (((u - x) / len_scale).ceil() as usize).clamp(1, 3);
                let pl = (u - x) / npan as f64;
                for k in 0..npan {
                    let (lo, hi) = (x + pl * k as f64, x + pl * (k + 1) as f64);
                    let (mid, half) = ((lo + hi) / 2.0, (hi - lo) / 2.0);
                    for (&y, &w) in self.gl.0.iter().zip(&self.gl.1) {
                        let t = mid + half * y;
                        pts.push((t, half * w * self.full_w1(t)));
                    }
                }
            }
            Some(_) => {}
        }
        pts
    }

    fn go(&self, upper: Option<f64>, fixed: &mut Vec<f64>, rem: usize) -> f64 {
        if rem == 0 {
            return 1.0;
        }
        let mut s = 0.0;
        for (t, w) in self.level_points(upper) {
            let mut f = (self.x - t).abs();
            for &g in fixed.iter() {
                f *= g - t; // ancestors are all larger on the ordered region
            }
            fixed.push(t);
            s += w * f * self.go(Some(t), fixed, rem - 1);
            fixed.pop();
        }
        s
    }

    /// ln of the full (m_dims)-dimensional integral (ordered region × m!).
    fn ln_integral(&self, m_dims: usize) -> f64 {
        if m_dims == 0 {
            return 0.0;
        }
        let top = self.level_points(None);
        let parts: Vec<f64> = top
            .into_par_iter()
            .map(|(t, w)| {
                let mut fixed = vec![t];
                w * (self.x - t).abs() * self.go(Some(t), &mut fixed, m_dims - 1)
            })
            .collect();
        kahan_sum(parts).ln() + ln_gamma(m_dims as f64 + 1.0)
    }
}

fn check_brute(n: usize, beta: f64) -> Result<(), EnsembleError> {
    if n > 6 {
        return Err(EnsembleError::BruteForceTooLarge(n));
    }
    if beta != 1.0 && beta != 2.0 {
        return Err(EnsembleError::UnsupportedBeta(beta));
    }
    Ok(())
}

/// Direct quadrature of the defining density integral,
/// `ρ(x) = N w(x) ∫ ∏ w(t_i)|x-t_i|^β ∏|Δ|^β dt / Z`, for N ≤ 6 and
/// β ∈ {1, 2}. `nodes` is the per-dimension rule size (β = 2 is
/// degree-exact from ~16 nodes; for β = 1 compare two sizes to monitor
/// convergence).
pub fn brute_force_density_laguerre(
    ens: &LaguerreEnsemble,
    x: f64,
    nodes: usize,
) -> Result<f64, EnsembleError> {
    check_brute(ens.n, ens.beta)?;
    if x <= 0.0 {
        return Err(EnsembleError::OutOfDomain(x));
    }
    let m_dims = ens.n - 1;
    let g = ens.weight_power();
    let ln_i = if ens.beta == 2.0 {
        let rec = Recurrence::laguerre(nodes, g);
        let rule = GaussRule::from_recurrence(&rec, nodes);
        tensor_integral(&rule, rec.ln_mu0, x, m_dims)
    } else {
        OrderedSimplex::new_laguerre(g, x, nodes).ln_integral(m_dims)
    };
    Ok(((ens.n as f64).ln() + ens.ln_weight(x) + ln_i - ens.ln_normalization()).exp())
}

/// Jacobi counterpart of [`brute_force_density_laguerre`].
pub fn brute_force_density_jacobi(
    ens: &JacobiEnsemble,
    x: f64,
    nodes: usize,
) -> Result<f64, EnsembleError> {
    check_brute(ens.n, ens.beta)?;
    if x <= 0.0 || x >= 1.0 {
        return Err(EnsembleError::OutOfDomain(x));
    }
    let m_dims = ens.n - 1;
    let (g1, g2) = ens.weight_powers();
    let ln_i = if ens.beta == 2.0 {
        let rec = Recurrence::jacobi01(nodes, g1, g2);
        let rule = GaussRule::from_recurrence(&rec, nodes);
        tensor_integral(&rule, rec.ln_mu0, x, m_dims)
    } else {
        OrderedSimplex::new_jacobi(g1, g2, x, nodes).ln_integral(m_dims)
    };
    Ok(((ens.n as f64).ln() + ens.ln_weight(x) + ln_i - ens.ln_normalization()).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use crate::numeric::rel_err;

    #[test]
    fn laguerre_poly_base_cases_and_orthogonality() {
        let a = 2.0;
        let (l0, d0) = laguerre_poly(0, a, 1.3);
        assert_relative_eq!(l0.m * 2f64.powi(l0.e), 1.0);
        assert_eq!(d0.m, 0.0);
        let (l1, d1) = laguerre_poly(1, a, 1.3);
        assert_relative_eq!(l1.m * 2f64.powi(l1.e), 1.0 + a - 1.3, epsilon = 1e-14);
        assert_relative_eq!(d1.m * 2f64.powi(d1.e), -1.0, epsilon = 1e-14);
        // orthogonality under the matching Gauss rule
        let rec = Recurrence::laguerre(24, a);
        let rule = GaussRule::from_recurrence(&rec, 24);
        for mth in 0..=10usize {
            for nth in 0..=10usize {
                let s = rule.integrate(|t| {
                    let (u, _) = laguerre_poly(mth, a, t);
                    let (v, _) = laguerre_poly(nth, a, t);
                    u.m * v.m * 2f64.powi(u.e + v.e)
                });
                let diag = (ln_gamma(nth as f64 + a + 1.0) - ln_gamma(nth as f64 + 1.0)).exp();
                if mth == nth {
                    assert_relative_eq!(s, diag, max_relative = 1e-10);
                } else {
                    assert!(s.abs() / diag < 1e-8, "m={mth} n={nth}: {s}");
                }
            }
        }
    }

    #[test]
    fn recurrence_survives_extensive_parameters() {
        let (v, d) = laguerre_poly(30, 30.0, 60.0);
        assert!(v.m.is_finite() && d.m.is_finite());
        assert!(v.ln_abs().is_finite());
    }

    #[test]
    fn density_invariant_under_renormalization_threshold() {
        for &x in &[0.5, 6.0, 60.0, 300.0] {
            let a = cd_density_laguerre_impl(30, 30.0, x, 256);
            let b = cd_density_laguerre_impl(30, 30.0, x, 512);
            let c = cd_density_laguerre_impl(30, 30.0, x, 1024);
            assert_relative_eq!(a.ln_abs, b.ln_abs, max_relative = 1e-12);
            assert_relative_eq!(c.ln_abs, b.ln_abs, max_relative = 1e-12);
        }
    }

    #[test]
    fn cd_laguerre_equals_orthonormal_square_sum() {
        // the Γ-prefactor polynomial form is the kernel diagonal
        let ens = LaguerreEnsemble::new(2.0, 1.0, 6).unwrap();
        let a = ens.exponent();
        let rec = Recurrence::laguerre(ens.n, a);
        for &x in &[0.5, 3.0, 9.0, 25.0] {
            let d = cd_density_laguerre(&ens, x).unwrap();
            let (v, ls) = rec.orthonormal_scaled(x, ens.n);
            let s: f64 = v.iter().map(|q| q * q).sum();
            let alt = s.ln() + 2.0 * ls + a * x.ln() - x;
            assert_relative_eq!(d.ln_abs, alt, max_relative = 1e-10);
        }
    }

    fn integrate_laguerre_density(f: impl Fn(f64) -> f64, a: f64, points: usize) -> f64 {
        // rule matched to x^a e^{-x}; integrand divided by the weight
        let rec = Recurrence::laguerre(points, a);
        let rule = GaussRule::from_recurrence(&rec, points);
        let terms: Vec<f64> = rule
            .nodes
            .iter()
            .zip(&rule.ln_weights)
            .map(|(&t, &lw)| (lw - a * t.ln() + t).exp() * f(t))
            .collect();
        kahan_sum(terms)
    }

    #[test]
    fn beta2_laguerre_integrates_to_n() {
        for n in [6usize, 30] {
            let ens = LaguerreEnsemble::new(2.0, 1.0, n).unwrap();
            let a = ens.exponent();
            let total = integrate_laguerre_density(
                |t| cd_density_laguerre(&ens, t).unwrap().to_f64(),
                a,
                2 * n + 8,
            );
            assert_relative_eq!(total, n as f64, max_relative = 1e-8);
        }
    }

    #[test]
    fn beta2_jacobi_integrates_to_n() {
        for n in [6usize, 30] {
            let ens = JacobiEnsemble::new(2.0, 5.0, 5.0, n).unwrap();
            let (a1, a2) = ens.exponents();
            let rec = Recurrence::jacobi01(2 * n + 8, a1, a2);
            let rule = GaussRule::from_recurrence(&rec, 2 * n + 8);
            let total: f64 = rule
                .nodes
                .iter()
                .zip(&rule.ln_weights)
                .map(|(&t, &lw)| {
                    let d = cd_density_jacobi(&ens, t).unwrap();
                    (lw - a1 * t.ln() - a2 * (-t).ln_1p() + d.ln_abs).exp()
                })
                .sum();
            assert_relative_eq!(total, n as f64, max_relative = 1e-8);
        }
    }

    #[test]
    fn beta2_brute_force_agrees_with_kernel_densities() {
        // Laguerre N = 2, alpha = 0
        let ens = LaguerreEnsemble::new(2.0, 0.0, 2).unwrap();
        for &x in &[0.5, 2.0, 6.0] {
            let bf = brute_force_density_laguerre(&ens, x, 16).unwrap();
            let cd = cd_density_laguerre(&ens, x).unwrap().to_f64();
            assert_relative_eq!(bf, cd, max_relative = 1e-10);
        }
        // Jacobi N = 3, small exponents
        let jens = JacobiEnsemble::new(2.0, 1.0, 2.0 / 3.0, 3).unwrap();
        for &x in &[0.2, 0.5, 0.8] {
            let bf = brute_force_density_jacobi(&jens, x, 16).unwrap();
            let cd = cd_density_jacobi(&jens, x).unwrap().to_f64();
            assert_relative_eq!(bf, cd, max_relative = 1e-9);
        }
    }

    #[test]
    fn brute_force_single_eigenvalue_is_normalized_weight() {
        let ens = LaguerreEnsemble::new(2.0, 1.0, 1).unwrap();
        let x = 1.7;
        let bf = brute_force_density_laguerre(&ens, x, 8).unwrap();
        let expect = (ens.ln_weight(x) - ens.ln_normalization()).exp();
        assert_relative_eq!(bf, expect, max_relative = 1e-12);
    }

    #[test]
    fn skew_density_matches_brute_force_n2() {
        let ens = LaguerreEnsemble::new(1.0, 2.0, 2).unwrap(); // a = 4
        let skew = SkewGramDensity::laguerre(&ens).unwrap();
        for &x in &[0.5, 2.0, 5.0, 12.0] {
            let bf = brute_force_density_laguerre(&ens, x, 40).unwrap();
            let sk = skew.density(x).unwrap().to_f64();
            assert!(rel_err(sk, bf) < 1e-6, "x={x}: skew={sk} brute={bf}");
        }
        let jens = JacobiEnsemble::new(1.0, 2.5, 2.5, 2).unwrap(); // a = 5
        let jskew = SkewGramDensity::jacobi(&jens).unwrap();
        for &x in &[0.2, 0.4, 0.6, 0.8] {
            let bf = brute_force_density_jacobi(&jens, x, 40).unwrap();
            let sk = jskew.density(x).unwrap().to_f64();
            assert!(rel_err(sk, bf) < 1e-6, "x={x}: skew={sk} brute={bf}");
        }
    }

    #[test]
    fn beta1_brute_force_converges_in_node_count() {
        let ens = LaguerreEnsemble::new(1.0, 1.0, 4).unwrap();
        for &x in &[2.0, 9.0] {
            let lo = brute_force_density_laguerre(&ens, x, 20).unwrap();
            let hi = brute_force_density_laguerre(&ens, x, 28).unwrap();
            assert!(rel_err(lo, hi) < 1e-7, "x={x}: {lo} vs {hi}");
        }
    }

    #[test]
    fn skew_density_integrates_to_n() {
        let ens = LaguerreEnsemble::new(1.0, 1.0, 6).unwrap();
        let skew = SkewGramDensity::laguerre(&ens).unwrap();
        let upper = 4.0 * (6.0 + 12.0) + 120.0;
        let m = 20_001;
        let step = upper / m as f64;
        let total: f64 = (1..=m)
            .map(|i| {
                let x = step * i as f64;
                let w = if i == m { 0.5 } else { 1.0 };
                w * skew.density(x).unwrap().to_f64()
            })
            .sum::<f64>()
            * step;
        assert_relative_eq!(total, 6.0, max_relative = 1e-6);
    }

    #[test]
    fn tail_matched_variant_integrates_to_n_plus_one() {
        // the tail-exact truncation carries one extra unit of mass
        let ens = LaguerreEnsemble::new(1.0, 1.0, 4).unwrap();
        let skew = SkewGramDensity::laguerre(&ens).unwrap();
        let upper = 4.0 * (4.0 + 8.0) + 120.0;
        let m = 20_001;
        let step = upper / m as f64;
        let total: f64 = (1..=m)
            .map(|i| {
                let x = step * i as f64;
                let w = if i == m { 0.5 } else { 1.0 };
                w * skew.tail_matched_density(x).unwrap().to_f64()
            })
            .sum::<f64>()
            * step;
        assert_relative_eq!(total, 5.0, max_relative = 1e-5);
    }

    #[test]
    fn laguerre_tail_coefficient_matches_closed_form() {
        // c_∞ in orthonormal units equals Γ(N)/(4Γ(a+N-1))·√(h_{N-1}h_{N-2}),
        // h_j = Γ(j+a+1)/Γ(j+1)
        for (n, alpha) in [(4usize, 1.0), (6, 1.0), (6, 1.5)] {
            let ens = LaguerreEnsemble::new(1.0, alpha, n).unwrap();
            let a = ens.exponent();
            let skew = SkewGramDensity::laguerre(&ens).unwrap();
            let nf = n as f64;
            let expect = ln_gamma(nf) - ln_gamma(a + nf - 1.0) - 4f64.ln()
                + 0.5 * (ln_gamma(nf + a) - ln_gamma(nf) + ln_gamma(nf - 1.0 + a)
                    - ln_gamma(nf - 1.0));
            let got = skew.ln_abs_tail_coefficient_orthonormal();
            assert!((got - expect).abs() < 1e-4, "n={n} a={a}: {got} vs {expect}");
        }
    }

    #[test]
    fn rejects_invalid_inputs() {
        let ens = LaguerreEnsemble::new(2.0, 1.0, 8).unwrap();
        assert!(cd_density_laguerre(&ens, -1.0).is_err());
        let odd = LaguerreEnsemble::new(1.0, 1.0, 5).unwrap();
        assert!(matches!(
            SkewGramDensity::laguerre(&odd),
            Err(EnsembleError::OddSizeBetaOne(5))
        ));
        let big = LaguerreEnsemble::new(2.0, 1.0, 7).unwrap();
        assert!(matches!(
            brute_force_density_laguerre(&big, 1.0, 16),
            Err(EnsembleError::BruteForceTooLarge(7))
        ));
        let b4 = LaguerreEnsemble::new(4.0, 1.0, 4).unwrap();
        assert!(matches!(
            brute_force_density_laguerre(&b4, 1.0, 16),
            Err(EnsembleError::UnsupportedBeta(_))
        ));
    }
}
