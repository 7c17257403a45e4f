//! The order-zero product family `f(z) = prod (1 - z/r_m)^{k_m}` with
//! `k_m = r_m^{eps_m}` integral, doubly-exponential radius gaps, and a
//! decreasing exponent sequence whose sum diverges.
//!
//! Construction order: the multiplicity is picked first
//! (`k_{m+1} = ceil(e^{r_m})`) and the radius defined as
//! `r_{m+1} = k_{m+1}^{1/eps_{m+1}}`, which makes the integrality constraint
//! exact by construction. Radii grow so fast that the fourth term already
//! exceeds binary64 log range for the default rule; truncation is recorded on
//! the spec, never thrown.

use crate::error::{Error, Result};
use crate::growth::{log_log_max_modulus, log_max_modulus, log_min_modulus};
use crate::logspace::LogReal;
use crate::zeroset::{ZeroEntry, ZeroSet, EXACT_MULT_MAX};

/// Exponent rule `eps_m`, strictly decreasing in m with values in (0, 1).
#[derive(Clone, Debug, PartialEq)]
pub enum EpsRule {
    /// `eps_m = 1/(2 sqrt(m))`; sum diverges like sqrt(K).
    InvSqrt,
    /// `eps_m = c/m` with `0 < c < 1`; sum diverges like c log K.
    InvLinear(f64),
    /// Explicit table, 1-based.
    Custom(Vec<f64>),
}

impl EpsRule {
    /// `eps_m` for 1-based m; None past a custom table's end.
    pub fn eps(&self, m: usize) -> Option<f64> {
        match self {
            EpsRule::InvSqrt => Some(0.5 / (m as f64).sqrt()),
            EpsRule::InvLinear(c) => Some(c / m as f64),
            EpsRule::Custom(t) => t.get(m - 1).copied(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            EpsRule::InvSqrt => Ok(()),
            EpsRule::InvLinear(c) => {
                if *c > 0.0 && *c < 1.0 {
                    Ok(())
                } else {
                    Err(Error::RuleNotDecreasing)
                }
            }
            EpsRule::Custom(t) => {
                let ok = !t.is_empty()
                    && t.iter().all(|&e| e > 0.0 && e < 1.0)
                    && t.windows(2).all(|w| w[1] < w[0]);
                if ok {
                    Ok(())
                } else {
                    Err(Error::RuleNotDecreasing)
                }
            }
        }
    }
}

/// One term of the family: zero radius `e^{log_r}` with multiplicity
/// `e^{log_k}`; `log_k = eps * log_r` exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CexTerm {
    pub log_r: f64,
    pub log_k: f64,
    pub eps: f64,
    /// Present iff the multiplicity fits in 2^53.
    pub exact_k: Option<u64>,
}

/// Per-consecutive-pair growth certificates, all in exact log arithmetic:
/// `c68`: `log k_{m+1} >= r_m` (the strongest), `c64`: `>= (m+1) log r_m`,
/// `c61`: `>= 2 log r_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertFlags {
    pub c61: bool,
    pub c64: bool,
    pub c68: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CounterexampleSpec {
    pub r1: LogReal,
    pub eps_rule: EpsRule,
    pub terms: Vec<CexTerm>,
    /// One entry per consecutive term pair.
    pub certificates: Vec<CertFlags>,
    /// Nonempty when fewer than the requested terms were representable.
    pub truncation_note: String,
    pub requested_terms: usize,
}

impl CounterexampleSpec {
    /// The zero set of the product (positive real zeros).
    pub fn to_zeroset(&self) -> Result<ZeroSet> {
        let entries = self
            .terms
            .iter()
            .map(|t| ZeroEntry::new(t.log_r, t.log_k, t.exact_k, 0.0))
            .collect::<Result<Vec<_>>>()?;
        ZeroSet::new(entries, self.truncation_note.clone())
    }

    pub fn term(&self, k: usize) -> Result<&CexTerm> {
        if k == 0 || k > self.terms.len() {
            Err(Error::IndexOutOfRange(k))
        } else {
            Ok(&self.terms[k - 1])
        }
    }

    /// `N_k = sum_{m < k} k_m`; `+inf` once a lower multiplicity exceeds
    /// binary64 range.
    pub fn n_below(&self, k: usize) -> f64 {
        self.terms[..k - 1].iter().map(|t| match t.exact_k {
            Some(v) => v as f64,
            None => t.log_k.exp(),
        }).sum()
    }
}

fn ceil_exp(x: f64) -> (f64, Option<u64>) {
    // ceil(e^x), exact below 2^53
    if x < (EXACT_MULT_MAX as f64).ln() {
        let k = x.exp().ceil() as u64;
        ((k as f64).ln(), Some(k))
    } else {
        // the +1 from the ceiling is below one ulp of log k here
        (x, None)
    }
}

/// Builds `k` terms of the family from `r1` and the exponent rule, certifying
/// the growth conditions per consecutive pair. Terms past binary64 log range
/// are dropped with a truncation note.
pub fn build_family(r1: LogReal, eps_rule: EpsRule, k: usize) -> Result<CounterexampleSpec> {
    if k == 0 {
        return Err(Error::PreconditionFail("term count K must be at least 1".into()));
    }
    if r1.linear() < 4.0 {
        return Err(Error::PreconditionFail(format!(
            "r1 = {} must be at least 4",
            r1.linear()
        )));
    }
    eps_rule.validate()?;
    let eps_cap = eps_rule.eps(1).ok_or(Error::IndexOutOfRange(1))?;
    // largest eps_1 <= rule value making r1^{eps_1} integral
    let k1 = (eps_cap * r1.log()).exp().floor();
    if k1 < 2.0 {
        return Err(Error::PreconditionFail(
            "r1^{eps_1} < 2: no integral multiplicity below the rule value".into(),
        ));
    }
    let log_k1 = k1.ln();
    let eps1 = log_k1 / r1.log();
    let mut terms = vec![CexTerm { log_r: r1.log(), log_k: log_k1, eps: eps1, exact_k: Some(k1 as u64) }];
    let mut truncation_note = String::new();
    for m in 1..k {
        let prev = terms[m - 1];
        let r_prev = prev.log_r.exp();
        if !r_prev.is_finite() {
            truncation_note = format!(
                "truncated at {} of {} terms: e^(r_{}) exceeds binary64 log range",
                m, k, m
            );
            break;
        }
        let eps_next = match eps_rule.eps(m + 1) {
            Some(e) => e,
            None => {
                truncation_note = format!("truncated at {m} of {k} terms: exponent table exhausted");
                break;
            }
        };
        if !(eps_next > 0.0 && eps_next < prev.eps) {
            return Err(Error::RuleNotDecreasing);
        }
        let (log_k_next, exact_k) = ceil_exp(r_prev);
        let log_r_next = log_k_next / eps_next;
        if !log_r_next.is_finite() {
            truncation_note = format!(
                "truncated at {} of {} terms: log r_{} exceeds binary64 range",
                m,
                k,
                m + 1
            );
            break;
        }
        terms.push(CexTerm { log_r: log_r_next, log_k: log_k_next, eps: eps_next, exact_k });
    }
    let certificates = certificates_for(&terms);
    Ok(CounterexampleSpec {
        r1,
        eps_rule,
        terms,
        certificates,
        truncation_note,
        requested_terms: k,
    })
}

/// Growth certificates for each consecutive term pair, in exact log
/// arithmetic; a pure function of the terms, so parsed specs recompute them.
pub fn certificates_for(terms: &[CexTerm]) -> Vec<CertFlags> {
    terms
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let m = i + 1; // pair (m, m+1), 1-based
            let r_m = w[0].log_r.exp();
            CertFlags {
                c61: w[1].log_k >= 2.0 * w[0].log_r,
                c64: w[1].log_k >= (m + 1) as f64 * w[0].log_r,
                c68: w[1].log_k >= r_m,
            }
        })
        .collect()
}

/// Which family property to verify.
#[derive(Clone, Debug)]
pub enum CexCheck {
    /// Order-zero bound `log M(r) <= 3 r^{eps_k} log r` sampled on each
    /// radius window `[r_k, r_{k+1})`.
    OrderZero { samples_per_window: usize },
    /// The minimum/maximum modulus ratio bound at index `k` with exponent
    /// `L`, plus its two algebraic sub-inequalities.
    Lemma62 { k: usize, l: f64, t_samples: usize },
    /// Radius spacing `M(r_k) < r_{k+1}^{1/L}` per representable pair.
    Lemma63 { l: f64 },
    /// Partial sums of `eps_m` up to `k_max` (rule-level, beyond built terms).
    SumDiverges { k_max: usize },
    /// Values of `eps_k (log r_k)^{1/k}`; trend only, never asserted.
    Cond610,
}

/// Verification outcome. `pass` covers only the assertable finite
/// inequalities; `below_regime` marks sub-inequalities skipped because their
/// explicit large-k side conditions fail at this index.
#[derive(Clone, Debug)]
pub struct CexReport {
    pub check: String,
    pub pass: bool,
    pub below_regime: bool,
    /// (index or log t, value or margin) pairs; meaning per check, see notes.
    pub values: Vec<(f64, f64)>,
    pub notes: String,
}

pub fn verify_counterexample(spec: &CounterexampleSpec, check: &CexCheck) -> Result<CexReport> {
    match *check {
        CexCheck::OrderZero { samples_per_window } => order_zero(spec, samples_per_window),
        CexCheck::Lemma62 { k, l, t_samples } => lemma_6_2(spec, k, l, t_samples),
        CexCheck::Lemma63 { l } => lemma_6_3(spec, l),
        CexCheck::SumDiverges { k_max } => sum_diverges(spec, k_max),
        CexCheck::Cond610 => cond_6_10(spec),
    }
}

fn order_zero(spec: &CounterexampleSpec, samples_per_window: usize) -> Result<CexReport> {
    if samples_per_window == 0 {
        return Err(Error::PreconditionFail("samples_per_window must be positive".into()));
    }
    if spec.terms.len() < 2 {
        return Err(Error::IndexOutOfRange(2));
    }
    let zeros = spec.to_zeroset()?;
    let mut pass = true;
    let mut values = Vec::new();
    for k in 1..spec.terms.len() {
        let (lo, hi) = (spec.terms[k - 1].log_r, spec.terms[k].log_r);
        let eps_k = spec.terms[k - 1].eps;
        for i in 0..samples_per_window {
            let lr = lo + (hi - lo) * i as f64 / samples_per_window as f64;
            // log-space form of log M(r) <= 3 r^{eps_k} log r
            let lhs = log_log_max_modulus(&zeros, LogReal::from_log(lr)?)?;
            let rhs = 3f64.ln() + eps_k * lr + lr.ln();
            let margin = rhs - lhs;
            if margin < 0.0 {
                pass = false;
            }
            values.push((lr, margin));
        }
    }
    let min_margin = values.iter().map(|v| v.1).fold(f64::INFINITY, f64::min);
    Ok(CexReport {
        check: "ORDER_ZERO".into(),
        pass,
        below_regime: false,
        values,
        notes: format!(
            "margin of log(3 r^eps_k log r) over log log M(r) per sample; min {min_margin:.6e}"
        ),
    })
}

fn lemma_6_2(spec: &CounterexampleSpec, k: usize, l: f64, t_samples: usize) -> Result<CexReport> {
    if !(l > 1.0) {
        return Err(Error::PreconditionFail(format!("L {l} must exceed 1")));
    }
    if k < 2 || k > spec.terms.len() {
        return Err(Error::IndexOutOfRange(k));
    }
    if t_samples == 0 {
        return Err(Error::PreconditionFail("t_samples must be positive".into()));
    }
    let zeros = spec.to_zeroset()?;
    let term_k = spec.terms[k - 1];
    let n_k = spec.n_below(k);
    if !n_k.is_finite() {
        return Err(Error::IndexOutOfRange(k));
    }
    let log_rk = term_k.log_r;
    let eps_k = term_k.eps;
    let bound = l * (1.0 - eps_k / 4.0);
    let log_m_base = log_max_modulus(&zeros, LogReal::from_log(log_rk / l)?)?;

    // sub-inequality M(r_k^{1/L}) >= r_k^{(1/L)(1-eps_k/8) N_k}: its
    // derivation needs every lower radius below r_k^{eps_k/(8L)}
    let side_65 = spec.terms[k - 2].log_r <= eps_k / (8.0 * l) * log_rk;
    let rhs_65 = (1.0 / l) * (1.0 - eps_k / 8.0) * n_k * log_rk;
    let ok_65 = log_m_base >= rhs_65;

    // ratio bound side condition: log N_k <= (2 eps_k / k) log r_k and the
    // lower radii clear of the t-window
    let side_ratio =
        n_k.ln() <= 2.0 * eps_k / k as f64 * log_rk && spec.terms[k - 2].log_r < log_rk / l;

    let mut ok_66 = true;
    let mut max_ratio = f64::NEG_INFINITY;
    let mut values = Vec::new();
    for i in 1..t_samples {
        let log_t = log_rk / l + (log_rk - log_rk / l) * i as f64 / t_samples as f64;
        let log_m_t = log_min_modulus(&zeros, LogReal::from_log(log_t)?)?;
        let ratio = log_m_t / log_m_base;
        max_ratio = max_ratio.max(ratio);
        // m(t) <= t^{N_k} (1 - t/r_k)^{k_k} in log-space; t < r_k so the
        // second factor's log is negative with magnitude exp(log_k + ln|ln|)
        let ln_term = crate::logspace::ln_abs_one_minus_exp(log_t - log_rk);
        let rhs_66 = n_k * log_t
            + if ln_term == f64::NEG_INFINITY {
                f64::NEG_INFINITY
            } else {
                -((term_k.log_k + (-ln_term).ln()).exp())
            };
        if log_m_t > rhs_66 + 1e-9 * (1.0 + rhs_66.abs()) {
            ok_66 = false;
        }
        values.push((log_t, ratio));
    }
    let ratio_ok = max_ratio <= bound;
    let below_regime = !side_65 || !side_ratio;
    let pass = ok_66 && (!side_65 || ok_65) && (!side_ratio || ratio_ok);
    Ok(CexReport {
        check: "LEMMA_6_2".into(),
        pass,
        below_regime,
        values,
        notes: format!(
            "max ratio {max_ratio:.9} vs bound {bound:.9} (side condition {}); \
             envelope m(t) <= t^N_k (1-t/r_k)^k_k: {}; \
             base bound M(r_k^(1/L)) >= r_k^((1/L)(1-eps/8)N_k): {} (side condition {})",
            if side_ratio { "met" } else { "not met, ratio reported only" },
            if ok_66 { "holds at all samples" } else { "VIOLATED" },
            if ok_65 { "holds" } else { "fails" },
            if side_65 { "met" } else { "not met at this k, not asserted" },
        ),
    })
}

fn lemma_6_3(spec: &CounterexampleSpec, l: f64) -> Result<CexReport> {
    if !(l > 1.0) {
        return Err(Error::PreconditionFail(format!("L {l} must exceed 1")));
    }
    if spec.terms.len() < 2 {
        return Err(Error::IndexOutOfRange(2));
    }
    let zeros = spec.to_zeroset()?;
    let mut pass = true;
    let mut below_regime = false;
    let mut values = Vec::new();
    for k in 1..spec.terms.len() {
        let log_rk = spec.terms[k - 1].log_r;
        let eps_k = spec.terms[k - 1].eps;
        let log_m_rk = log_max_modulus(&zeros, LogReal::from_log(log_rk)?)?;
        let spacing_margin = spec.terms[k].log_r / l - log_m_rk;
        if spacing_margin <= 0.0 {
            pass = false;
        }
        // intermediate chain M(r_k) <= exp(3 r_k^{eps_k} log r_k) < exp(r_k)
        // holds only for large k; record where it starts
        let chain = 3f64.ln() + eps_k * log_rk + log_rk.ln() < log_rk;
        if !chain {
            below_regime = true;
        }
        values.push((k as f64, spacing_margin));
    }
    Ok(CexReport {
        check: "LEMMA_6_3".into(),
        pass,
        below_regime,
        values,
        notes: "per-k margin of (1/L) log r_{k+1} over log M(r_k); below_regime marks \
                indices where the intermediate 3 r^eps log r < r chain has not kicked in"
            .into(),
    })
}

fn sum_diverges(spec: &CounterexampleSpec, k_max: usize) -> Result<CexReport> {
    if k_max == 0 {
        return Err(Error::PreconditionFail("k_max must be positive".into()));
    }
    let mut sum = 0.0;
    let mut values = Vec::with_capacity(k_max);
    for m in 1..=k_max {
        let e = spec.eps_rule.eps(m).ok_or(Error::IndexOutOfRange(m))?;
        sum += e;
        values.push((m as f64, sum));
    }
    let increasing = values.windows(2).all(|w| w[1].1 > w[0].1);
    Ok(CexReport {
        check: "SUM_DIVERGES".into(),
        pass: increasing,
        below_regime: false,
        values,
        notes: format!("partial sums of eps_m up to m = {k_max}; final sum {sum:.9}"),
    })
}

fn cond_6_10(spec: &CounterexampleSpec) -> Result<CexReport> {
    let values: Vec<(f64, f64)> = spec
        .terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let k = i + 1;
            (k as f64, t.eps * t.log_r.powf(1.0 / k as f64))
        })
        .collect();
    Ok(CexReport {
        check: "COND_6_10".into(),
        pass: true,
        below_regime: false,
        values,
        notes: "eps_k (log r_k)^(1/k) per term; a divergence trend, never asserted".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_spec(k: usize) -> CounterexampleSpec {
        build_family(LogReal::from_linear(4.0).unwrap(), EpsRule::InvSqrt, k).unwrap()
    }

    #[test]
    fn base_term_is_exact() {
        let spec = default_spec(1);
        let t = spec.terms[0];
        assert_eq!(t.exact_k, Some(2));
        assert!((t.eps - 0.5).abs() < 1e-15);
        assert!((t.log_r - 4f64.ln()).abs() < 1e-15);
        assert!((t.log_k - 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn second_term_oracle() {
        // k_2 = ceil(e^4) = 55, eps_2 = 1/(2 sqrt 2), log r_2 = ln 55 / eps_2
        let spec = default_spec(2);
        let t = spec.terms[1];
        assert_eq!(t.exact_k, Some(55));
        assert!((t.eps - 0.5 / 2f64.sqrt()).abs() < 1e-15);
        let oracle = 55f64.ln() * 2.0 * 2f64.sqrt();
        assert!((t.log_r - oracle).abs() < 1e-12);
        assert!((t.log_r - 11.3345).abs() < 1e-3);
    }

    #[test]
    fn third_term_log_form() {
        let spec = default_spec(3);
        let t = spec.terms[2];
        assert_eq!(t.exact_k, None);
        let r2 = spec.terms[1].log_r.exp();
        assert!((t.log_k - r2).abs() < 1e-9 * r2);
        assert!((t.eps - 0.5 / 3f64.sqrt()).abs() < 1e-15);
        let oracle = r2 * 2.0 * 3f64.sqrt();
        assert!((t.log_r - oracle).abs() < 1e-9 * oracle);
    }

    #[test]
    fn certificates_hold() {
        let spec = default_spec(3);
        assert_eq!(spec.certificates.len(), 2);
        for c in &spec.certificates {
            assert!(c.c61 && c.c64 && c.c68);
        }
        assert!(spec.truncation_note.is_empty());
    }

    #[test]
    fn fourth_term_truncates() {
        // log r_3 ~ 2.9e5, so r_3 = e^{log r_3} overflows: term 4 unbuildable
        let spec = default_spec(4);
        assert_eq!(spec.terms.len(), 3);
        assert!(!spec.truncation_note.is_empty());
        assert_eq!(spec.requested_terms, 4);
    }

    #[test]
    fn rule_validation() {
        let r1 = LogReal::from_linear(4.0).unwrap();
        assert!(matches!(
            build_family(r1, EpsRule::InvLinear(1.5), 2),
            Err(Error::RuleNotDecreasing)
        ));
        assert!(matches!(
            build_family(r1, EpsRule::Custom(vec![0.5, 0.6]), 2),
            Err(Error::RuleNotDecreasing)
        ));
        assert!(build_family(LogReal::from_linear(3.0).unwrap(), EpsRule::InvSqrt, 1).is_err());
    }

    #[test]
    fn order_zero_passes() {
        let spec = default_spec(3);
        let report =
            verify_counterexample(&spec, &CexCheck::OrderZero { samples_per_window: 64 }).unwrap();
        assert!(report.pass, "{}", report.notes);
        assert_eq!(report.values.len(), 128);
        // every margin positive
        assert!(report.values.iter().all(|&(_, m)| m > 0.0));
    }

    #[test]
    fn lemma_6_2_at_k2() {
        let spec = default_spec(3);
        let report = verify_counterexample(
            &spec,
            &CexCheck::Lemma62 { k: 2, l: 2.0, t_samples: 10_000 },
        )
        .unwrap();
        assert!(report.pass, "{}", report.notes);
        // the (6.5) side condition fails at k = 2: flagged, not asserted
        assert!(report.below_regime);
        let bound = 2.0 * (1.0 - (0.5 / 2f64.sqrt()) / 4.0);
        assert!((bound - 1.8232233).abs() < 1e-6);
        let max_ratio = report.values.iter().map(|v| v.1).fold(f64::NEG_INFINITY, f64::max);
        assert!(max_ratio <= bound, "ratio {max_ratio} vs {bound}");
        assert!(max_ratio > 1.0, "sanity: ratio should exceed 1 somewhere");
    }

    #[test]
    fn lemma_6_2_at_k3_full_regime() {
        let spec = default_spec(3);
        let report = verify_counterexample(
            &spec,
            &CexCheck::Lemma62 { k: 3, l: 2.0, t_samples: 2_000 },
        )
        .unwrap();
        assert!(report.pass, "{}", report.notes);
        assert!(!report.below_regime, "{}", report.notes);
    }

    #[test]
    fn lemma_6_3_spacing() {
        let spec = default_spec(3);
        let report = verify_counterexample(&spec, &CexCheck::Lemma63 { l: 2.0 }).unwrap();
        assert!(report.pass, "{}", report.notes);
        // k = 1 predates the 3 r^eps log r < r chain
        assert!(report.below_regime);
    }

    #[test]
    fn sum_diverges_fixture() {
        let spec = default_spec(2);
        let report =
            verify_counterexample(&spec, &CexCheck::SumDiverges { k_max: 10 }).unwrap();
        assert!(report.pass);
        let final_sum = report.values.last().unwrap().1;
        let oracle: f64 = (1..=10).map(|m| 0.5 / (m as f64).sqrt()).sum();
        assert!((final_sum - oracle).abs() < 1e-15);
        assert!(final_sum > 1.5);
    }

    #[test]
    fn cond_6_10_trend() {
        let spec = default_spec(3);
        let report = verify_counterexample(&spec, &CexCheck::Cond610).unwrap();
        let vals: Vec<f64> = report.values.iter().map(|v| v.1).collect();
        assert_eq!(vals.len(), 3);
        assert!(vals[2] > vals[1] && vals[1] > vals[0]);
    }

    #[test]
    fn theorem4_violated_at_r2() {
        // cross-module consistency: the family breaks the iterated-log bound
        let spec = default_spec(3);
        let zeros = spec.to_zeroset().unwrap();
        let log_r2 = spec.terms[1].log_r;
        let log_r3 = spec.terms[2].log_r;
        let orbit = crate::fatou::m_orbit(&zeros, log_r2, 1).unwrap();
        let run = |m: u32, lo: f64, hi: f64| {
            crate::fatou::check_condition(
                &zeros,
                &orbit,
                &crate::fatou::ConditionSpec::Theorem4 { m, log_lo: lo, log_hi: hi },
            )
            .unwrap()
            .verdict
        };
        // depth 1 breaks already at r_2 (eps(r_2) ~ eps_2 >> 1/log r_2);
        // depth 2 needs the next radius scale before the bound is beaten
        assert_eq!(run(1, log_r2, log_r2 + 1.0), crate::fatou::Verdict::Violated);
        assert_eq!(run(2, log_r3, log_r3 + 1.0), crate::fatou::Verdict::Violated);
        // epsilon at r_2 is about eps_2, far above 1/log r_2
        let eps = crate::growth::epsilon_at(&zeros, log_r2).unwrap();
        assert!(eps > 0.3 && eps < 0.45, "eps(r_2) = {eps}");
        assert!(eps > 1.0 / log_r2);
    }

    #[test]
    fn index_errors() {
        let spec = default_spec(3);
        assert!(matches!(
            verify_counterexample(&spec, &CexCheck::Lemma62 { k: 4, l: 2.0, t_samples: 10 }),
            Err(Error::IndexOutOfRange(4))
        ));
        assert!(matches!(
            verify_counterexample(&spec, &CexCheck::Lemma62 { k: 1, l: 2.0, t_samples: 10 }),
            Err(Error::IndexOutOfRange(1))
        ));
    }
}
