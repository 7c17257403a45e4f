//! Iteration-side diagnostics: maximum-modulus orbits, the annulus
//! minimum-modulus criterion for orbit unboundedness, and checkers for the
//! sufficient growth conditions.
//!
//! Infinite-sum conditions are never decided from a finite window; those
//! reports carry partial sums and a fitted decay exponent, and the verdict
//! stays `Inconclusive` unless a concrete window violation exists.

use crate::error::{Error, Result};
use crate::growth::{
    epsilon_at, geometric_grid, golden_max, log_max_modulus, log_min_modulus, max_epsilon_on,
};
use crate::logspace::{LogReal, MAX_LOG};
use crate::zeroset::ZeroSet;
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    StepsDone,
    /// The next iterate's log would exceed `MAX_LOG / 2`; one more
    /// multiplication by a Lemma-2.1 exponent must stay representable.
    LogOverflow,
}

/// Orbit of `R_{n+1} = M(R_n)` carried in log-space.
#[derive(Clone, Debug)]
pub struct OrbitRecord {
    /// `log R_n` for n = 1..=N.
    pub log_r: Vec<f64>,
    pub stopped_reason: StopReason,
    /// Whether the recorded orbit is strictly increasing.
    pub monotone: bool,
}

/// Iterates `log R_{n+1} = log M(R_n)` for `steps` steps (orbit holds at most
/// `steps + 1` entries). Truncation at `MAX_LOG / 2` is reported, not thrown.
pub fn m_orbit(zeros: &ZeroSet, log_r1: f64, steps: usize) -> Result<OrbitRecord> {
    if steps == 0 {
        return Err(Error::PreconditionFail("steps must be at least 1".into()));
    }
    if !log_r1.is_finite() {
        return Err(Error::NonFiniteLog(log_r1));
    }
    let mut log_r = vec![log_r1];
    let mut stopped_reason = StopReason::StepsDone;
    for _ in 0..steps {
        let cur = *log_r.last().unwrap();
        let next = log_max_modulus(zeros, LogReal::from_log(cur)?)?;
        if next > MAX_LOG / 2.0 {
            stopped_reason = StopReason::LogOverflow;
            break;
        }
        log_r.push(next);
    }
    let monotone = log_r.windows(2).all(|w| w[1] > w[0]);
    Ok(OrbitRecord { log_r, stopped_reason, monotone })
}

/// Per-step outcome of the annulus criterion.
#[derive(Clone, Debug)]
pub struct Lemma21Report {
    pub pass: bool,
    /// One witness per completed step: `rho_n` with
    /// `log m(rho_n) >= c(n+1) log R_{n+1}` and `R_n <= rho_n <= R_n^{c(n)}`.
    pub witnesses: Vec<LogReal>,
    /// First failing step (0-based) with the best achieved `log m`.
    pub failed_step: Option<(usize, f64)>,
}

/// Checks the orbit-unboundedness criterion: for each consecutive orbit pair,
/// a radius `rho_n` in `(R_n, R_n^{c(n)})` whose minimum modulus reaches
/// `R_{n+1}^{c(n+1)}`.
pub fn check_lemma21(zeros: &ZeroSet, orbit: &OrbitRecord, c: &[f64]) -> Result<Lemma21Report> {
    if orbit.log_r.len() < 2 {
        return Err(Error::PreconditionFail("orbit must have at least 2 entries".into()));
    }
    if c.len() < orbit.log_r.len() {
        return Err(Error::PreconditionFail(format!(
            "need {} exponents c(n), got {}",
            orbit.log_r.len(),
            c.len()
        )));
    }
    if let Some(bad) = c.iter().find(|&&x| !(x > 1.0)) {
        return Err(Error::PreconditionFail(format!("c(n) = {bad} must exceed 1")));
    }
    let mut witnesses = Vec::new();
    for n in 0..orbit.log_r.len() - 1 {
        let target = c[n + 1] * orbit.log_r[n + 1];
        let r = match LogReal::from_log(orbit.log_r[n]) {
            Ok(r) => r,
            Err(_) => return Ok(Lemma21Report { pass: false, witnesses, failed_step: Some((n, f64::NEG_INFINITY)) }),
        };
        match crate::minmod::find_annulus_min_ge(zeros, r, target, c[n]) {
            Ok(rho) => witnesses.push(rho),
            Err(Error::NotFound { achieved, .. }) => {
                return Ok(Lemma21Report { pass: false, witnesses, failed_step: Some((n, achieved)) });
            }
            Err(Error::PreconditionFail(_)) => {
                // empty annulus (R_n <= 1): the step cannot produce a witness
                return Ok(Lemma21Report {
                    pass: false,
                    witnesses,
                    failed_step: Some((n, f64::NEG_INFINITY)),
                });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Lemma21Report { pass: true, witnesses, failed_step: None })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionId {
    Theorem1,
    Hinkkanen,
    Theorem3,
    Theorem4,
    Theorem5,
    Theorem6,
    Cond72,
    Cond73,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    SatisfiedOnWindow,
    Violated,
    Inconclusive,
}

/// Windowed verdict on one sufficient condition. `witnesses` pairs an index
/// or log-radius with a margin; a `Violated` report always carries at least
/// one witness.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub condition_id: ConditionId,
    pub verdict: Verdict,
    pub witnesses: Vec<(f64, f64)>,
    pub partial_sums: Option<Vec<f64>>,
    /// Partial sums of the explicit-constant chain terms
    /// `a_n = 232 sqrt(delta_n) + 2/log R_n` (summability conditions only).
    pub chain_partial_sums: Option<Vec<f64>>,
    /// Least-squares slope of ln(term) against ln(n); a decay-rate hint.
    pub decay_exponent: Option<f64>,
    pub notes: String,
}

/// Parameters for [`check_condition`].
#[derive(Clone, Debug)]
pub enum ConditionSpec {
    /// Needs `l > 1`; `grid_per_step` radii per orbit window.
    Theorem1 { l: f64, grid_per_step: usize },
    /// Needs `l > 1`, `c > 0`, `0 < delta <= 1`.
    Hinkkanen { l: f64, c: f64, delta: f64 },
    Theorem3,
    /// Iterated-log condition `log log M(r) < log r / log^m r`, with the
    /// convention that `log^1 r = log r`; scanned over `[log_lo, log_hi]`.
    Theorem4 { m: u32, log_lo: f64, log_hi: f64 },
}

fn fit_decay_exponent(terms: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = terms
        .iter()
        .enumerate()
        .filter(|&(_, &t)| t > 0.0)
        .map(|(i, &t)| (((i + 1) as f64).ln(), t.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-30 {
        None
    } else {
        Some((n * sxy - sx * sy) / denom)
    }
}

/// Max of `log m` over `(e^{log_lo}, e^{log_hi})`: 256-per-decade scan plus
/// golden refinement. Returns (log rho at max, max value).
fn max_log_min_on(zeros: &ZeroSet, log_lo: f64, log_hi: f64) -> (f64, f64) {
    let grid = geometric_grid(log_lo, log_hi, 256.0, 2_000_000);
    let interior = &grid[1..grid.len().saturating_sub(1)];
    let vals: Vec<f64> = interior
        .par_iter()
        .map(|&lr| log_min_modulus(zeros, LogReal::from_log(lr).unwrap()).unwrap())
        .collect();
    let mut best_i = 0;
    let mut best = f64::NEG_INFINITY;
    for (i, &v) in vals.iter().enumerate() {
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let lo = if best_i > 0 { interior[best_i - 1] } else { interior[best_i] };
    let hi = if best_i + 1 < interior.len() { interior[best_i + 1] } else { interior[best_i] };
    let f = |lr: f64| log_min_modulus(zeros, LogReal::from_log(lr).unwrap()).unwrap();
    let (at, v) = golden_max(f, lo, hi, 80);
    if v >= best {
        (at, v)
    } else {
        (interior[best_i], best)
    }
}

/// Evaluates one sufficient condition against an orbit (or, for the
/// iterated-log condition, a log-radius window).
pub fn check_condition(
    zeros: &ZeroSet,
    orbit: &OrbitRecord,
    condition: &ConditionSpec,
) -> Result<CriterionReport> {
    match *condition {
        ConditionSpec::Theorem1 { l, grid_per_step } => {
            if !(l > 1.0) {
                return Err(Error::PreconditionFail(format!("L {l} must exceed 1")));
            }
            if grid_per_step == 0 {
                return Err(Error::PreconditionFail("grid_per_step must be positive".into()));
            }
            if orbit.log_r.len() < 2 {
                return Err(Error::PreconditionFail("orbit must have at least 2 entries".into()));
            }
            let mut a_terms = Vec::new();
            let mut witnesses = Vec::new();
            for n in 0..orbit.log_r.len() - 1 {
                let (w_lo, w_hi) = (orbit.log_r[n], orbit.log_r[n + 1]);
                let mut worst = f64::NEG_INFINITY;
                for k in 0..grid_per_step {
                    // r spans [R_n, R_{n+1}) uniformly in log r
                    let lr = w_lo + (w_hi - w_lo) * k as f64 / grid_per_step as f64;
                    let log_m_r = log_max_modulus(zeros, LogReal::from_log(lr)?)?;
                    if log_m_r <= 0.0 {
                        worst = worst.max(1.0);
                        continue;
                    }
                    let (_, best_t) = max_log_min_on(zeros, lr, l * lr);
                    let a_needed = 1.0 - best_t / (l * log_m_r);
                    worst = worst.max(a_needed);
                }
                a_terms.push(worst);
                witnesses.push((n as f64 + 1.0, worst));
            }
            let violated = a_terms.iter().any(|&a| a >= 1.0);
            let sums: Vec<f64> = a_terms
                .iter()
                .scan(0.0, |acc, &a| {
                    *acc += a;
                    Some(*acc)
                })
                .collect();
            Ok(CriterionReport {
                condition_id: ConditionId::Theorem1,
                verdict: if violated { Verdict::Violated } else { Verdict::Inconclusive },
                witnesses,
                decay_exponent: fit_decay_exponent(&a_terms),
                partial_sums: Some(sums),
                chain_partial_sums: None,
                notes: "a_n is the smallest admissible per-window value; summability is not decided"
                    .into(),
            })
        }
        ConditionSpec::Hinkkanen { l, c, delta } => {
            if !(l > 1.0) || !(c > 0.0) || !(delta > 0.0 && delta <= 1.0) {
                return Err(Error::PreconditionFail(format!(
                    "need L > 1, C > 0, 0 < delta <= 1; got L={l} C={c} delta={delta}"
                )));
            }
            if orbit.log_r.len() < 2 {
                return Err(Error::PreconditionFail("orbit must have at least 2 entries".into()));
            }
            let lo = orbit.log_r[0];
            let hi = *orbit.log_r.last().unwrap();
            let grid = geometric_grid(lo, hi, 8.0, 4096);
            let mut witnesses = Vec::new();
            let mut violated = false;
            for &lr in &grid {
                if lr <= 0.0 {
                    continue;
                }
                let log_m_r = log_max_modulus(zeros, LogReal::from_log(lr)?)?;
                let required = l * (1.0 - c / lr.powf(delta)) * log_m_r;
                let (_, best_t) = max_log_min_on(zeros, lr, l * lr);
                let margin = best_t - required;
                witnesses.push((lr, margin));
                if margin < 0.0 {
                    violated = true;
                }
            }
            Ok(CriterionReport {
                condition_id: ConditionId::Hinkkanen,
                verdict: if violated { Verdict::Violated } else { Verdict::SatisfiedOnWindow },
                witnesses,
                partial_sums: None,
                chain_partial_sums: None,
                decay_exponent: None,
                notes: format!("per-radius margin of log m(t) over L(1 - {c}/(log r)^{delta}) log M(r)"),
            })
        }
        ConditionSpec::Theorem3 => {
            if orbit.log_r.len() < 2 {
                return Err(Error::PreconditionFail("orbit must have at least 2 entries".into()));
            }
            let mut eps = Vec::new();
            for n in 0..orbit.log_r.len() - 1 {
                let (_, e) = max_epsilon_on(zeros, orbit.log_r[n], orbit.log_r[n + 1])?;
                eps.push(e);
            }
            let roots: Vec<f64> = eps.iter().map(|&e| e.max(0.0).sqrt()).collect();
            let sums: Vec<f64> = roots
                .iter()
                .scan(0.0, |acc, &x| {
                    *acc += x;
                    Some(*acc)
                })
                .collect();
            // explicit chain terms need the next window's epsilon
            let chain: Vec<f64> = (0..eps.len().saturating_sub(1))
                .map(|n| 232.0 * eps[n].max(eps[n + 1]).max(0.0).sqrt() + 2.0 / orbit.log_r[n])
                .collect();
            let chain_sums: Vec<f64> = chain
                .iter()
                .scan(0.0, |acc, &x| {
                    *acc += x;
                    Some(*acc)
                })
                .collect();
            let nonpositive = eps.iter().any(|&e| e <= 0.0);
            Ok(CriterionReport {
                condition_id: ConditionId::Theorem3,
                verdict: Verdict::Inconclusive,
                witnesses: eps.iter().enumerate().map(|(n, &e)| (n as f64 + 1.0, e)).collect(),
                decay_exponent: fit_decay_exponent(&roots),
                partial_sums: Some(sums),
                chain_partial_sums: Some(chain_sums),
                notes: if nonpositive {
                    "some window epsilon is nonpositive; the positivity hypothesis fails here".into()
                } else {
                    "partial sums of sqrt(eps_n); summability is not decided".into()
                },
            })
        }
        ConditionSpec::Theorem4 { m, log_lo, log_hi } => {
            if m == 0 {
                return Err(Error::PreconditionFail("iterated-log depth m must be >= 1".into()));
            }
            if !(log_hi >= log_lo) {
                return Err(Error::PreconditionFail("empty scan window".into()));
            }
            // log^1 r = log r; the input x already is log r
            let iter_log = |x: f64| {
                let mut v = x;
                for _ in 1..m {
                    if v <= 0.0 {
                        return f64::NAN;
                    }
                    v = v.ln();
                }
                v
            };
            let grid = geometric_grid(log_lo, log_hi, 64.0, 1_000_000);
            let mut witnesses = Vec::new();
            let mut violated = false;
            let mut scanned = 0usize;
            for &lr in &grid {
                let il = iter_log(lr);
                if !il.is_finite() || il <= 0.0 {
                    continue;
                }
                let Ok(llm) = crate::growth::log_log_max_modulus(zeros, LogReal::from_log(lr)?)
                else {
                    continue;
                };
                scanned += 1;
                let margin = lr / il - llm;
                if margin <= 0.0 {
                    violated = true;
                    witnesses.push((lr, margin));
                } else if witnesses.len() < 8 {
                    witnesses.push((lr, margin));
                }
            }
            if scanned == 0 {
                return Err(Error::PreconditionFail(
                    "no scan point has both sides defined; enlarge the window".into(),
                ));
            }
            Ok(CriterionReport {
                condition_id: ConditionId::Theorem4,
                verdict: if violated { Verdict::Violated } else { Verdict::SatisfiedOnWindow },
                witnesses,
                partial_sums: None,
                chain_partial_sums: None,
                decay_exponent: None,
                notes: format!(
                    "log log M(r) < log r / log^{m} r with log^1 = log, scanned on [{log_lo}, {log_hi}]"
                ),
            })
        }
    }
}

/// Max margin of `log m(t) - (1 - 230 sqrt(eps(r))) log M(t)` over
/// `t in (r, r^L)`, with the argmax. Positive margin reproduces the
/// explicit-constant inequality chain at this radius.
pub fn explicit_chain_margin(zeros: &ZeroSet, r: LogReal, l: f64) -> Result<(LogReal, f64)> {
    if !(l > 1.0) {
        return Err(Error::PreconditionFail(format!("L {l} must exceed 1")));
    }
    let eps = epsilon_at(zeros, r.log())?;
    let factor = 1.0 - 230.0 * eps.max(0.0).sqrt();
    let grid = geometric_grid(r.log(), l * r.log(), 256.0, 2_000_000);
    let interior = &grid[1..grid.len().saturating_sub(1)];
    let margin_at = |lt: f64| {
        let t = LogReal::from_log(lt).unwrap();
        let lm = log_min_modulus(zeros, t).unwrap();
        let cap = log_max_modulus(zeros, t).unwrap();
        lm - factor * cap
    };
    let vals: Vec<f64> = interior.par_iter().map(|&lt| margin_at(lt)).collect();
    let (best_i, &best) = vals
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .expect("interior grid is nonempty");
    let lo = if best_i > 0 { interior[best_i - 1] } else { interior[best_i] };
    let hi = if best_i + 1 < interior.len() { interior[best_i + 1] } else { interior[best_i] };
    let (at, v) = golden_max(margin_at, lo, hi, 80);
    if v >= best {
        Ok((LogReal::from_log(at)?, v))
    } else {
        Ok((LogReal::from_log(interior[best_i])?, best))
    }
}

/// Log-space growth evaluator: maps `log r` to `log M(r)`.
pub type Evaluator<'a> = &'a (dyn Fn(f64) -> f64 + Sync);

/// Evaluator backed by a zero set's maximum modulus.
pub fn log_m_evaluator(zeros: &ZeroSet) -> impl Fn(f64) -> f64 + Sync + '_ {
    move |lr: f64| log_max_modulus(zeros, LogReal::from_log(lr).unwrap()).unwrap()
}

/// Composition-regularity check `log M(psi(r)) >= m log psi(M(r))` at each
/// grid radius. `log_m` maps log r to log M(r); `log_psi` maps log r to
/// log psi(r). Margins are evaluated entirely in log-space.
pub fn check_regularity(
    log_m: Evaluator,
    log_psi: Evaluator,
    m: f64,
    r_grid: &[LogReal],
) -> Result<CriterionReport> {
    if !(m > 1.0) {
        return Err(Error::PreconditionFail(format!("m {m} must exceed 1")));
    }
    if r_grid.is_empty() {
        return Err(Error::PreconditionFail("empty radius grid".into()));
    }
    let mut witnesses = Vec::new();
    let mut violated = false;
    for r in r_grid {
        let x = r.log();
        let px = log_psi(x);
        if px < x {
            return Err(Error::PsiBelowIdentity(x));
        }
        let margin = log_m(px) - m * log_psi(log_m(x));
        witnesses.push((x, margin));
        if margin < 0.0 {
            violated = true;
        }
    }
    Ok(CriterionReport {
        condition_id: ConditionId::Theorem5,
        verdict: if violated { Verdict::Violated } else { Verdict::SatisfiedOnWindow },
        witnesses,
        partial_sums: None,
        chain_partial_sums: None,
        decay_exponent: None,
        notes: format!("margin log M(psi(r)) - {m} log psi(M(r)) per grid radius"),
    })
}

/// Builder for the iterated-exponential regularity function
/// `psi(r) = exp^n((log r)^p)` in log form (maps log r to log psi(r)).
/// The pairing constraint `p q > 1` is validated here.
pub fn theorem6_psi(n: u32, p: f64, q: f64) -> Result<impl Fn(f64) -> f64 + Sync> {
    if n == 0 {
        return Err(Error::PreconditionFail("iteration depth n must be >= 1".into()));
    }
    if !(p * q > 1.0) {
        return Err(Error::PreconditionFail(format!("need p*q > 1, got p={p} q={q}")));
    }
    Ok(move |x: f64| {
        // log psi = exp^{n-1}(x^p)
        let mut v = x.powf(p);
        for _ in 0..n - 1 {
            v = v.exp();
        }
        v
    })
}

/// Doubling-ratio probe `log M(2r) / log M(r)` per grid radius; a trend
/// report, never a verdict on the limit.
pub fn ratio_probe_72(log_m: Evaluator, r_grid: &[LogReal]) -> Result<CriterionReport> {
    if r_grid.is_empty() {
        return Err(Error::PreconditionFail("empty radius grid".into()));
    }
    let witnesses: Vec<(f64, f64)> = r_grid
        .iter()
        .map(|r| {
            let x = r.log();
            let denom = log_m(x);
            let ratio = if denom > 0.0 { log_m(x + std::f64::consts::LN_2) / denom } else { f64::NAN };
            (x, ratio)
        })
        .collect();
    Ok(CriterionReport {
        condition_id: ConditionId::Cond72,
        verdict: Verdict::Inconclusive,
        witnesses,
        partial_sums: None,
        chain_partial_sums: None,
        decay_exponent: None,
        notes: "doubling ratio log M(2r)/log M(r); convergence is a limit statement".into(),
    })
}

/// Spacing of the centered difference used by [`log_derivative_probe_73`].
pub const PROBE_73_SPACING: f64 = 1e-3;

/// Discrete logarithmic-derivative probe of `phi(x) = log M(e^x)`:
/// checks `phi'(x)/phi(x) >= (1+c)/x` by centered differences.
pub fn log_derivative_probe_73(
    log_m: Evaluator,
    c: f64,
    r_grid: &[LogReal],
) -> Result<CriterionReport> {
    if !(c > 0.0) {
        return Err(Error::PreconditionFail(format!("c {c} must be positive")));
    }
    if r_grid.is_empty() {
        return Err(Error::PreconditionFail("empty radius grid".into()));
    }
    let h = PROBE_73_SPACING;
    let mut witnesses = Vec::new();
    let mut violated = false;
    for r in r_grid {
        let x = r.log();
        if x <= h {
            continue;
        }
        let phi = log_m(x);
        if phi <= 0.0 {
            continue;
        }
        let d = (log_m(x + h) - log_m(x - h)) / (2.0 * h);
        let margin = d / phi - (1.0 + c) / x;
        witnesses.push((x, margin));
        if margin < 0.0 {
            violated = true;
        }
    }
    if witnesses.is_empty() {
        return Err(Error::PreconditionFail(
            "no grid point admits the derivative probe; radii too small".into(),
        ));
    }
    Ok(CriterionReport {
        condition_id: ConditionId::Cond73,
        verdict: if violated { Verdict::Violated } else { Verdict::SatisfiedOnWindow },
        witnesses,
        partial_sums: None,
        chain_partial_sums: None,
        decay_exponent: None,
        notes: format!("centered difference at spacing {h} in x = log r"),
    })
}
