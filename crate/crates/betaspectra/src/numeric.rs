//! Log-domain scalars and small numeric helpers.
//!
//! Densities in the large-deviation regime underflow f64 already at modest N
//! (the exponent scales like -N), so every density-valued quantity in this
//! crate is carried as a [`LogValue`]: a sign together with the natural log
//! of the magnitude.  Arithmetic on `LogValue`s never leaves the log domain;
//! conversion to f64 happens only at the output boundary.

use std::ops::{Div, Mul};

/// A real number stored as `sign * exp(ln_abs)`.
///
/// `sign` is -1, 0 or +1; for `sign == 0` the magnitude is ignored.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogValue {
    pub sign: i8,
    pub ln_abs: f64,
}

impl LogValue {
    pub const ZERO: LogValue = LogValue {
        sign: 0,
        ln_abs: f64::NEG_INFINITY,
    };

    pub fn new(sign: i8, ln_abs: f64) -> Self {
        if sign == 0 {
            Self::ZERO
        } else {
            LogValue { sign, ln_abs }
        }
    }

    /// Exact representation of an ordinary float.
    pub fn from_f64(v: f64) -> Self {
        if v == 0.0 {
            Self::ZERO
        } else {
            LogValue {
                sign: if v > 0.0 { 1 } else { -1 },
                ln_abs: v.abs().ln(),
            }
        }
    }

    /// `exp(x)` as a positive `LogValue`; never overflows.
    pub fn from_ln(ln_abs: f64) -> Self {
        LogValue { sign: 1, ln_abs }
    }

    /// Collapse to f64 (may under/overflow — intended for output only).
    pub fn to_f64(self) -> f64 {
        f64::from(self.sign) * self.ln_abs.exp()
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn abs(self) -> Self {
        LogValue {
            sign: self.sign.abs(),
            ln_abs: self.ln_abs,
        }
    }

    /// Sum of two log-domain numbers via the usual log-sum-exp shift.
    pub fn add(self, other: Self) -> Self {
        if self.sign == 0 {
            return other;
        }
        if other.sign == 0 {
            return self;
        }
        let (hi, lo) = if self.ln_abs >= other.ln_abs {
            (self, other)
        } else {
            (other, self)
        };
        let r = (lo.ln_abs - hi.ln_abs).exp(); // in [0, 1]
        if hi.sign == lo.sign {
            LogValue::new(hi.sign, hi.ln_abs + r.ln_1p())
        } else {
            let diff = 1.0 - r;
            if diff <= 0.0 {
                Self::ZERO
            } else {
                LogValue::new(hi.sign, hi.ln_abs + diff.ln())
            }
        }
    }

    /// Integer power.
    pub fn powi(self, k: i32) -> Self {
        if self.sign == 0 {
            return if k == 0 { Self::from_f64(1.0) } else { Self::ZERO };
        }
        let sign = if k % 2 == 0 { self.sign.abs() } else { self.sign };
        LogValue::new(sign, self.ln_abs * f64::from(k))
    }
}

impl Mul for LogValue {
    type Output = LogValue;
    fn mul(self, rhs: Self) -> Self {
        LogValue::new(self.sign * rhs.sign, self.ln_abs + rhs.ln_abs)
    }
}

impl Div for LogValue {
    type Output = LogValue;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.sign != 0, "division of LogValue by zero");
        LogValue::new(self.sign * rhs.sign, self.ln_abs - rhs.ln_abs)
    }
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

/// arcosh for |t| ≥ 1 applied to |t| (the branch used by the rate-function
/// displays, which wrap their arguments in absolute values).
pub fn arcosh_abs(t: f64) -> f64 {
    let t = t.abs();
    debug_assert!(t >= 1.0 - 1e-12);
    let t = t.max(1.0);
    (t + (t * t - 1.0).sqrt()).ln()
}

/// Compensated (Kahan) summation of an f64 sequence.
pub fn kahan_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut s = 0.0;
    let mut c = 0.0;
    for v in values {
        let y = v - c;
        let t = s + y;
        c = (t - s) - y;
        s = t;
    }
    s
}

/// Relative deviation |a - b| / max(|a|, |b|, floor).
pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn log_value_roundtrip_and_arithmetic() {
        let a = LogValue::from_f64(3.5);
        let b = LogValue::from_f64(-1.25);
        assert_relative_eq!((a * b).to_f64(), -4.375, max_relative = 1e-14);
        assert_relative_eq!((a / b).to_f64(), -2.8, max_relative = 1e-14);
        assert_relative_eq!(a.add(b).to_f64(), 2.25, max_relative = 1e-12);
        assert_relative_eq!(b.add(a).to_f64(), 2.25, max_relative = 1e-12);
        assert!(a.add(LogValue::from_f64(-3.5)).is_zero());
        assert_relative_eq!(b.powi(3).to_f64(), -1.953125, max_relative = 1e-13);
    }

    #[test]
    fn log_value_handles_huge_exponents() {
        let big = LogValue::from_ln(5000.0);
        let bigger = LogValue::from_ln(5001.0);
        let s = big.add(bigger);
        assert_eq!(s.sign, 1);
        assert_relative_eq!(s.ln_abs, 5001.0 + (1.0 + (-1.0f64).exp()).ln(), epsilon = 1e-12);
        let d = bigger.add(LogValue::new(-1, 5000.0));
        assert_relative_eq!(d.ln_abs, 5000.0 + ((-1.0f64).exp_m1()).abs().ln() + 1.0, epsilon = 1e-9);
    }

    #[test]
    fn arcosh_matches_reference() {
        assert_relative_eq!(arcosh_abs(1.0), 0.0, epsilon = 1e-15);
        // cosh(2) = 3.7621956910836314
        assert_relative_eq!(arcosh_abs(3.762_195_691_083_631_4), 2.0, epsilon = 1e-12);
        assert_relative_eq!(arcosh_abs(-3.762_195_691_083_631_4), 2.0, epsilon = 1e-12);
    }
}
