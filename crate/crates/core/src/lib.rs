//! minmodlab: a numerical laboratory for entire functions of small growth
//! given by their zero sequences.
//!
//! The crate works with genus-0 canonical products `f(z) = prod (1 - z/z_m)^{k_m}`
//! whose radii and multiplicities may be far outside binary64 range, so all
//! magnitudes are carried in log space ([`LogReal`]). On top of the growth
//! kernel sit a constructive Cartan minimum-modulus machine, iteration
//! diagnostics for maximum-modulus orbits, a counterexample family with
//! doubly-exponential multiplicities, and an escape-time grid renderer.

pub mod error;
pub mod escape;
pub mod format;
pub mod logspace;
pub mod zeroset;

pub mod cartan;
pub mod counterexample;
pub mod fatou;
pub mod growth;
pub mod minmod;

pub use error::{Error, Result};
pub use escape::EscapeGrid;
pub use logspace::LogReal;
pub use zeroset::{ZeroEntry, ZeroSet};

pub use cartan::{CartanCover, CoverReport, Disc, IntervalSet};
pub use counterexample::{CexCheck, CexReport, CounterexampleSpec, EpsRule};
pub use fatou::{
    ConditionId, ConditionSpec, CriterionReport, Lemma21Report, OrbitRecord, StopReason, Verdict,
};
pub use growth::{GrowthProfile, GrowthQuantities, TypeClass};
pub use minmod::{GoodRadiusReport, Theorem2Report};
