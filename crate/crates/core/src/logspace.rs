//! Log-space scalar arithmetic for magnitudes far beyond binary64 range.
//!
//! Every radius in this crate is carried as its natural log, so quantities
//! like `R_{n+1} = M(R_n)` stay representable after repeated exponentiation.

use crate::error::{Error, Result};

/// Natural log of the largest finite f64.
pub const MAX_LOG: f64 = f64::MAX;

/// A positive magnitude stored as its natural logarithm.
///
/// Ordering of `LogReal`s equals ordering of the represented magnitudes.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct LogReal {
    log_value: f64,
}

impl LogReal {
    /// Wraps a finite natural log.
    pub fn from_log(log_value: f64) -> Result<Self> {
        if log_value.is_finite() {
            Ok(LogReal { log_value })
        } else {
            Err(Error::NonFiniteLog(log_value))
        }
    }

    /// Builds from a linear positive magnitude.
    pub fn from_linear(value: f64) -> Result<Self> {
        if value > 0.0 && value.is_finite() {
            Self::from_log(value.ln())
        } else {
            Err(Error::NonpositiveRadius)
        }
    }

    pub fn log(self) -> f64 {
        self.log_value
    }

    /// The linear magnitude; `+inf` when it exceeds binary64 range.
    pub fn linear(self) -> f64 {
        self.log_value.exp()
    }
}

/// Stable `ln(1 + e^x)`.
#[inline]
pub fn softplus(x: f64) -> f64 {
    let e = (-x.abs()).exp();
    x.max(0.0) + e.ln_1p()
}

/// Stable `ln(ln(1 + e^x))`, usable for x anywhere in f64 range.
///
/// For very negative x, `ln(softplus(x)) -> x`; for large x it is `ln(x)`.
#[inline]
pub fn ln_softplus(x: f64) -> f64 {
    if x < -36.0 {
        // softplus(x) = e^x (1 - e^x/2 + ...), correction below 1e-16
        x
    } else {
        softplus(x).ln()
    }
}

/// Stable `ln|1 - e^x|`; `-inf` at x = 0.
#[inline]
pub fn ln_abs_one_minus_exp(x: f64) -> f64 {
    if x == 0.0 {
        f64::NEG_INFINITY
    } else if x < 0.0 {
        // 1 - e^x in (0, 1)
        (-x.exp_m1()).ln()
    } else {
        // e^x - 1 = e^x (1 - e^-x)
        x + (-(-x).exp_m1()).ln()
    }
}

/// Sign and log-magnitude of `ln|1 - e^x|`, usable when the value itself
/// underflows binary64 (x very negative gives `ln|1-e^x| ~ -e^x`).
///
/// Returns `(sign, ln|ln|1 - e^x||)`; the zero at x = ln 2 comes back as
/// `(1, -inf)`. Callers must handle x = 0 (where the product vanishes).
pub fn signed_ln_abs_ln_one_minus_exp(x: f64) -> (f64, f64) {
    if x < -36.0 {
        (-1.0, x)
    } else if x > 36.0 {
        (1.0, x.ln())
    } else {
        let t = ln_abs_one_minus_exp(x);
        if t == 0.0 {
            (1.0, f64::NEG_INFINITY)
        } else {
            (t.signum(), t.abs().ln())
        }
    }
}

/// Logistic sigmoid `1 / (1 + e^{-x})`.
#[inline]
pub fn sigmoid(x: f64) -> f64 {
    let e = (-x.abs()).exp();
    let recip = 1.0 / (1.0 + e);
    if x >= 0.0 {
        recip
    } else {
        e * recip
    }
}

/// `ln(sum of e^{x_i})` without overflow; `-inf` on an empty slice.
pub fn log_sum_exp(terms: &[f64]) -> f64 {
    let m = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    let sum: f64 = terms.iter().map(|&t| (t - m).exp()).sum();
    m + sum.ln()
}

/// Stable `ln|1 - w|` and `arg(1 - w)` for `w = e^{log_mod + i*angle}`.
///
/// Valid for any `log_mod`, including magnitudes far outside f64 range.
pub fn log_one_minus_complex(log_mod: f64, angle: f64) -> (f64, f64) {
    use num_complex::Complex64;
    if log_mod <= 0.0 {
        let w = Complex64::from_polar(log_mod.exp(), angle);
        let c = Complex64::new(1.0 - w.re, -w.im);
        (c.norm().ln(), c.arg())
    } else {
        // 1 - w = -w (1 - 1/w)
        let winv = Complex64::from_polar((-log_mod).exp(), -angle);
        let c = Complex64::new(1.0 - winv.re, -winv.im);
        (log_mod + c.norm().ln(), wrap_angle(angle + std::f64::consts::PI + c.arg()))
    }
}

/// Wraps an angle into (-pi, pi].
pub fn wrap_angle(theta: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut t = theta % two_pi;
    if t > std::f64::consts::PI {
        t -= two_pi;
    } else if t <= -std::f64::consts::PI {
        t += two_pi;
    }
    t
}
