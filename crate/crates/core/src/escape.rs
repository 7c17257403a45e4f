//! Escape-time grid sampler for the iteration of a truncated canonical
//! product: records, per grid point, the first iterate whose modulus exceeds
//! the escape radius.
//!
//! Iterates are carried as (log-modulus, angle) pairs so orbits can pass
//! through magnitudes far outside binary64 range before being flagged.
//! Truncation of far-out zeros is certified by [`crate::growth::tail_bound`].

use crate::error::{Error, Result};
use crate::growth::{geometric_grid, log_min_modulus, tail_bound};
use crate::logspace::{log_one_minus_complex, wrap_angle, LogReal};
use crate::zeroset::ZeroSet;
use rayon::prelude::*;

/// Default bound on the dropped-tail contribution to `log |f|`.
pub const DEFAULT_TRUNCATION_BUDGET: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct EscapeGrid {
    /// (re_min, re_max, im_min, im_max).
    pub window: (f64, f64, f64, f64),
    /// (nx, ny).
    pub resolution: (usize, usize),
    /// Row-major, ny rows of nx entries; -1 = not escaped within n_max.
    pub escape_iteration: Vec<i64>,
    pub n_max: usize,
    pub escape_log_radius: f64,
    /// Tail bound for the dropped zeros at the escape radius.
    pub truncation_error: f64,
    /// Number of leading zero entries actually iterated.
    pub kept_zeros: usize,
    /// Whether `log m(r) >= log r + 1` held at all sampled radii in
    /// `[escape radius, e * escape radius]` (monotone-escape evidence; a
    /// sampled check, not a proof).
    pub certified: bool,
}

impl EscapeGrid {
    /// CSV of raw escape iterations, one row per line.
    pub fn to_csv(&self) -> String {
        let (nx, _) = self.resolution;
        let mut out = String::new();
        for row in self.escape_iteration.chunks(nx) {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Plain PGM (P2), max value `n_max + 1`, -1 mapped to 0.
    pub fn to_pgm(&self) -> String {
        let (nx, ny) = self.resolution;
        let mut out = format!("P2\n{} {}\n{}\n", nx, ny, self.n_max + 1);
        for row in self.escape_iteration.chunks(nx) {
            let line: Vec<String> = row.iter().map(|&v| (v + 1).to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// One application of the truncated product to `z = e^{log_mod + i angle}`.
fn apply(kept: &[crate::zeroset::ZeroEntry], log_mod: f64, angle: f64) -> (f64, f64) {
    let mut out_log = 0.0;
    let mut out_arg = 0.0;
    for e in kept {
        let (lm, arg) = log_one_minus_complex(log_mod - e.log_radius, angle - e.angle);
        if lm == f64::NEG_INFINITY {
            return (f64::NEG_INFINITY, 0.0);
        }
        let k = e.multiplicity();
        out_log += k * lm;
        out_arg += k * arg;
    }
    (out_log, wrap_angle(out_arg))
}

/// Smallest scanned radius (64 grid points per decade) such that
/// `log m(r) >= log r + 1` holds at 64 sampled radii across `[r, e r]`.
/// Scans up to 40 decades beyond the outermost zero.
pub fn default_escape_log_radius(zeros: &ZeroSet) -> Result<f64> {
    let start = zeros.last_log_radius().max(0.0) + std::f64::consts::LN_2;
    let scan = geometric_grid(start, start + 40.0 * std::f64::consts::LN_10, 64.0, 1_000_000);
    let ok_at = |elr: f64| {
        (0..=64).all(|i| {
            let lr = elr + i as f64 / 64.0;
            log_min_modulus(zeros, LogReal::from_log(lr).unwrap()).unwrap() >= lr + 1.0
        })
    };
    for &elr in &scan {
        if ok_at(elr) {
            return Ok(elr);
        }
    }
    Err(Error::NotFound {
        context: "no radius with log m(r) >= log r + 1 across [r, e r] in 40 decades".into(),
        achieved: f64::NAN,
    })
}

/// Samples escape iterations over a rectangular window.
///
/// Each entry is the first `n in [0, n_max]` with `|f^n(z)| > e^{elr}`
/// (n = 0 checks the grid point itself), or -1. Rows are computed in
/// parallel and assembled in fixed order, so output is identical for any
/// worker count.
pub fn escape_grid(
    zeros: &ZeroSet,
    window: (f64, f64, f64, f64),
    resolution: (usize, usize),
    n_max: usize,
    escape_log_radius: f64,
    truncation_budget: f64,
) -> Result<EscapeGrid> {
    let (re_min, re_max, im_min, im_max) = window;
    let (nx, ny) = resolution;
    if !(re_max > re_min && im_max > im_min) || nx < 2 || ny < 2 {
        return Err(Error::PreconditionFail(
            "window must be a nonempty rectangle with at least 2x2 resolution".into(),
        ));
    }
    if !(truncation_budget > 0.0) {
        return Err(Error::BudgetUnsatisfiable);
    }
    if !escape_log_radius.is_finite() {
        return Err(Error::NonFiniteLog(escape_log_radius));
    }
    let elr = escape_log_radius;
    let z_mod = LogReal::from_log(elr)?;

    // drop the longest suffix of far-out zeros whose tail bound fits the
    // budget; dropping requires r_m >= 2 e^{elr}
    let min_droppable = zeros
        .entries()
        .iter()
        .position(|e| e.log_radius >= elr + std::f64::consts::LN_2)
        .unwrap_or(zeros.len());
    let mut cutoff = min_droppable;
    let mut trunc = tail_bound(zeros, cutoff, z_mod)?;
    while trunc > truncation_budget && cutoff < zeros.len() {
        cutoff += 1;
        trunc = tail_bound(zeros, cutoff, z_mod)?;
    }
    let kept = &zeros.entries()[..cutoff];
    if let Some(last) = kept.last() {
        if elr < last.log_radius + std::f64::consts::LN_2 {
            return Err(Error::EscapeRadiusTooSmall);
        }
    }

    // monotone-escape evidence on the truncated product
    let kept_set = ZeroSet::new(kept.to_vec(), "")?;
    let certified = (0..=64).all(|i| {
        let lr = elr + i as f64 / 64.0;
        log_min_modulus(&kept_set, LogReal::from_log(lr).unwrap()).unwrap() >= lr + 1.0
    });

    let dx = (re_max - re_min) / (nx - 1) as f64;
    let dy = (im_max - im_min) / (ny - 1) as f64;
    let escape_iteration: Vec<i64> = (0..ny)
        .into_par_iter()
        .flat_map_iter(|iy| {
            let y = im_min + iy as f64 * dy;
            (0..nx).map(move |ix| {
                let x = re_min + ix as f64 * dx;
                let r = x.hypot(y);
                let mut log_mod = r.ln(); // -inf at the origin is fine
                let mut angle = y.atan2(x);
                for n in 0..=n_max {
                    if log_mod > elr {
                        return n as i64;
                    }
                    if n < n_max {
                        let (lm, a) = apply(kept, log_mod, angle);
                        log_mod = lm;
                        angle = a;
                    }
                }
                -1
            })
        })
        .collect();

    Ok(EscapeGrid {
        window,
        resolution,
        escape_iteration,
        n_max,
        escape_log_radius: elr,
        truncation_error: trunc,
        kept_zeros: cutoff,
        certified,
    })
}
