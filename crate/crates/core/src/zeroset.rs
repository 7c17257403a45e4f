//! Zero sequences of genus-0 canonical products, `f(z) = prod (1 - z/z_m)^{k_m}`.

use crate::error::{Error, Result};
use crate::logspace::LogReal;

/// Largest multiplicity representable exactly in an f64 integer.
pub const EXACT_MULT_MAX: u64 = 1 << 53;

/// One zero of the product: modulus `e^{log_radius}`, multiplicity `e^{log_multiplicity}`.
///
/// `exact_multiplicity` is present iff the multiplicity fits in 2^53; otherwise the
/// log form alone is carried (the construction in [`crate::counterexample`] needs
/// multiplicities around `e^{83000}`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZeroEntry {
    pub log_radius: f64,
    pub log_multiplicity: f64,
    pub exact_multiplicity: Option<u64>,
    /// Angle of the zero in radians, in [0, 2pi). Zeros default to the negative
    /// real axis, which makes `B(r) = log M(r)` exact.
    pub angle: f64,
}

impl ZeroEntry {
    pub fn new(log_radius: f64, log_multiplicity: f64, exact_multiplicity: Option<u64>, angle: f64) -> Result<Self> {
        if !log_radius.is_finite() {
            return Err(Error::InvalidEntry(format!("non-finite log_radius {log_radius}")));
        }
        if !(log_multiplicity >= 0.0) {
            return Err(Error::InvalidEntry(format!(
                "multiplicity below 1 (log_multiplicity {log_multiplicity})"
            )));
        }
        if let Some(k) = exact_multiplicity {
            if k == 0 || k > EXACT_MULT_MAX {
                return Err(Error::InvalidEntry(format!("exact multiplicity {k} out of range")));
            }
            let expect = (k as f64).ln();
            if (log_multiplicity - expect).abs() > 1e-12 * (1.0 + expect.abs()) {
                return Err(Error::InvalidEntry(format!(
                    "log_multiplicity {log_multiplicity} disagrees with exact multiplicity {k}"
                )));
            }
        }
        if !angle.is_finite() || !(0.0..std::f64::consts::TAU).contains(&angle) {
            return Err(Error::InvalidEntry(format!("angle {angle} outside [0, 2pi)")));
        }
        Ok(ZeroEntry { log_radius, log_multiplicity, exact_multiplicity, angle })
    }

    /// Simple zero at modulus `e^{log_radius}` on the negative real axis.
    pub fn simple(log_radius: f64) -> Self {
        ZeroEntry {
            log_radius,
            log_multiplicity: 0.0,
            exact_multiplicity: Some(1),
            angle: std::f64::consts::PI,
        }
    }

    pub fn with_angle(mut self, angle: f64) -> Self {
        self.angle = angle;
        self
    }

    pub fn with_multiplicity(mut self, k: u64) -> Self {
        self.log_multiplicity = (k as f64).ln();
        self.exact_multiplicity = Some(k);
        self
    }

    /// Multiplicity as f64; `+inf` if it exceeds binary64 range.
    pub fn multiplicity(&self) -> f64 {
        match self.exact_multiplicity {
            Some(k) => k as f64,
            None => self.log_multiplicity.exp(),
        }
    }

    /// `k_m * g` computed as `exp(log k_m + ln g)` when the multiplicity is not
    /// exactly representable. `ln_g` must equal `ln(g)` (callers have stable
    /// forms for it); `g >= 0`.
    pub fn scale(&self, g: f64, ln_g: f64) -> f64 {
        match self.exact_multiplicity {
            Some(k) => k as f64 * g,
            None => (self.log_multiplicity + ln_g).exp(),
        }
    }

    /// `ln(k_m * g)` from `ln g`.
    pub fn ln_scaled(&self, ln_g: f64) -> f64 {
        self.log_multiplicity + ln_g
    }
}

/// Finite truncation of a zero sequence, sorted by strictly increasing modulus.
///
/// The represented function is the canonical product over these zeros with
/// `f(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroSet {
    entries: Vec<ZeroEntry>,
    pub truncation_note: String,
}

impl ZeroSet {
    pub fn new(entries: Vec<ZeroEntry>, truncation_note: impl Into<String>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyZeroSet);
        }
        for w in entries.windows(2) {
            if w[1].log_radius == w[0].log_radius {
                return Err(Error::DuplicateRadius);
            }
            if w[1].log_radius < w[0].log_radius {
                return Err(Error::Unsorted);
            }
        }
        Ok(ZeroSet { entries, truncation_note: truncation_note.into() })
    }

    /// Simple zeros on a common ray from their log radii.
    pub fn from_log_radii(log_radii: impl IntoIterator<Item = f64>, angle: f64) -> Result<Self> {
        let entries = log_radii
            .into_iter()
            .map(|lr| ZeroEntry::simple(lr).with_angle(angle))
            .collect();
        ZeroSet::new(entries, "")
    }

    pub fn entries(&self) -> &[ZeroEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first_log_radius(&self) -> f64 {
        self.entries[0].log_radius
    }

    pub fn last_log_radius(&self) -> f64 {
        self.entries[self.entries.len() - 1].log_radius
    }

    /// The common angle of all zeros, if there is one. On a common ray the
    /// circle extrema of `|f|` have closed forms.
    pub fn common_angle(&self) -> Option<f64> {
        let a0 = self.entries[0].angle;
        self.entries.iter().all(|e| e.angle == a0).then_some(a0)
    }

    /// Log radii of zeros with log_radius in [lo, hi].
    pub fn log_radii_in(&self, lo: f64, hi: f64) -> impl Iterator<Item = f64> + '_ {
        self.entries
            .iter()
            .map(|e| e.log_radius)
            .filter(move |&lr| lr >= lo && lr <= hi)
    }

    /// Restriction to zeros with modulus strictly below `r`.
    pub fn take_below(&self, r: LogReal) -> Vec<ZeroEntry> {
        self.entries.iter().copied().filter(|e| e.log_radius < r.log()).collect()
    }
}

/// The desk fixture used across the crate's tests and examples: simple zeros at
/// moduli `e^{m^2}`, m = 1..=count, on a common ray.
pub fn square_exponent_fixture(count: u32, angle: f64) -> ZeroSet {
    ZeroSet::from_log_radii((1..=count).map(|m| (m as f64) * (m as f64)), angle).unwrap()
}
