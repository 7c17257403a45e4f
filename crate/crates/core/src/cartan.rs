//! Constructive Boutroux-Cartan covering and the exceptional-interval
//! machinery for minimum-modulus lower bounds.
//!
//! Given m points and h > 0, [`cartan_discs`] returns at most m discs with
//! radius sum 2eh such that outside their union the product of distances to
//! the points exceeds h^m. The construction is the classical greedy one:
//! with lambda = e h / m, repeatedly extract a maximal group of p remaining
//! points containable in a disc of radius p lambda, then double each
//! extraction disc. Outside the doubled discs the distances to the points,
//! sorted increasingly, exceed lambda, 2 lambda, ..., m lambda, so the product
//! exceeds lambda^m m! > (e h / m)^m (m/e)^m = h^m.

use crate::error::{Error, Result};
use crate::growth::growth_quantities;
use crate::logspace::LogReal;
use crate::zeroset::ZeroSet;
use num_complex::Complex64;
use rayon::prelude::*;

/// Group extraction is O(m^3) per step; desk scale only.
pub const MAX_CARTAN_POINTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disc {
    pub center: Complex64,
    pub radius: f64,
}

impl Disc {
    pub fn contains(&self, z: Complex64) -> bool {
        (z - self.center).norm() <= self.radius
    }
}

/// Output of [`cartan_discs`]: at most `point_count` discs, radius sum 2eh.
#[derive(Clone, Debug)]
pub struct CartanCover {
    pub discs: Vec<Disc>,
    pub h: f64,
    pub point_count: usize,
}

impl CartanCover {
    pub fn radius_sum(&self) -> f64 {
        self.discs.iter().map(|d| d.radius).sum()
    }

    pub fn covers(&self, z: Complex64) -> bool {
        self.discs.iter().any(|d| d.contains(z))
    }
}

/// Grid verification report for a cover; `pass` means every grid point
/// outside the (inflated) discs had distance product above `h^m`.
#[derive(Clone, Copy, Debug)]
pub struct CoverReport {
    pub pass: bool,
    /// ln of the smallest distance product found outside the cover; +inf if
    /// every grid point was excluded.
    pub min_log_product: f64,
    pub witness: Option<Complex64>,
    pub grid_points: usize,
}

/// Sorted, pairwise-disjoint closed intervals on the nonnegative axis.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct IntervalSet {
    intervals: Vec<(f64, f64)>,
}

impl IntervalSet {
    /// Merges overlapping or touching raw intervals; empty ones are dropped.
    pub fn from_raw(mut raw: Vec<(f64, f64)>) -> Self {
        raw.retain(|&(lo, hi)| hi > lo);
        raw.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut intervals: Vec<(f64, f64)> = Vec::with_capacity(raw.len());
        for (lo, hi) in raw {
            match intervals.last_mut() {
                Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                _ => intervals.push((lo, hi)),
            }
        }
        IntervalSet { intervals }
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn total_length(&self) -> f64 {
        self.intervals.iter().map(|&(lo, hi)| hi - lo).sum()
    }

    pub fn contains(&self, t: f64) -> bool {
        // intervals are sorted and disjoint
        self.intervals
            .binary_search_by(|&(lo, hi)| {
                if t < lo {
                    std::cmp::Ordering::Greater
                } else if t > hi {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Equal
                }
            })
            .is_ok()
    }
}

fn lex_less(a: Complex64, b: Complex64) -> bool {
    (a.re, a.im) < (b.re, b.im)
}

/// Best disc of radius `rho` over the remaining points: returns (count,
/// center) maximizing count, ties by lexicographically smallest center.
/// Candidate centers are the points themselves and, for each pair closer
/// than 2 rho, the two circle centers through both points.
fn best_disc(points: &[Complex64], rho: f64) -> (usize, Complex64) {
    let tol = 1e-9 * (1.0 + rho);
    let count_at = |c: Complex64| points.iter().filter(|&&p| (p - c).norm() <= rho + tol).count();
    let mut best = (0usize, Complex64::new(f64::INFINITY, f64::INFINITY));
    let mut consider = |c: Complex64| {
        let n = count_at(c);
        if n > best.0 || (n == best.0 && lex_less(c, best.1)) {
            best = (n, c);
        }
    };
    for &p in points {
        consider(p);
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let mid = (points[i] + points[j]) / 2.0;
            let half = (points[j] - points[i]) / 2.0;
            let d2 = half.norm_sqr();
            if d2 > rho * rho || d2 == 0.0 {
                continue;
            }
            let l = (rho * rho - d2).sqrt();
            let perp = Complex64::new(-half.im, half.re) / d2.sqrt();
            consider(mid + l * perp);
            consider(mid - l * perp);
        }
    }
    best
}

/// Constructive Cartan cover: every z with `prod |z - z_n| <= h^m` lies in the
/// union of the returned discs.
pub fn cartan_discs(points: &[Complex64], h: f64) -> Result<CartanCover> {
    if points.is_empty() {
        return Err(Error::EmptyPoints);
    }
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::NonpositiveH);
    }
    let m = points.len();
    if m > MAX_CARTAN_POINTS {
        return Err(Error::PointCountExceeded { max: MAX_CARTAN_POINTS, got: m });
    }
    let lambda = std::f64::consts::E * h / m as f64;
    let mut remaining: Vec<Complex64> = points.to_vec();
    let mut discs = Vec::new();
    while !remaining.is_empty() {
        // maximal rank p such that p remaining points fit in a disc of radius
        // p*lambda; p = 1 always succeeds (disc centered at a point)
        let mut chosen = None;
        for p in (1..=remaining.len()).rev() {
            let rho = p as f64 * lambda;
            let (count, center) = best_disc(&remaining, rho);
            if count >= p {
                chosen = Some((p, center));
                break;
            }
        }
        let (p, center) = chosen.expect("rank-1 disc always exists");
        let rho = p as f64 * lambda;
        let tol = 1e-9 * (1.0 + rho);
        let mut group = Vec::new();
        remaining.retain(|&z| {
            if (z - center).norm() <= rho + tol {
                group.push(z);
                false
            } else {
                true
            }
        });
        // tolerance may sweep in more than p points; a larger group with the
        // same center still satisfies the covering argument with its own rank
        let rank = group.len().max(p);
        discs.push(Disc { center, radius: 2.0 * rank as f64 * lambda });
    }
    Ok(CartanCover { discs, h, point_count: m })
}

/// Brute-force converse check: evaluates the distance product on a uniform
/// grid over the bounding box of the points inflated by 2eh, skipping grid
/// points inside any disc inflated by one `grid_step`, and passes iff the
/// minimum product exceeds `h^m`.
pub fn verify_cover(
    points: &[Complex64],
    h: f64,
    cover: &CartanCover,
    grid_step: f64,
) -> Result<CoverReport> {
    if points.is_empty() {
        return Err(Error::EmptyPoints);
    }
    if !(grid_step > 0.0) || !grid_step.is_finite() {
        return Err(Error::PreconditionFail(format!("grid_step {grid_step} must be positive")));
    }
    let pad = 2.0 * std::f64::consts::E * h;
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in points {
        x0 = x0.min(p.re);
        x1 = x1.max(p.re);
        y0 = y0.min(p.im);
        y1 = y1.max(p.im);
    }
    x0 -= pad;
    x1 += pad;
    y0 -= pad;
    y1 += pad;
    let nx = ((x1 - x0) / grid_step).ceil() as usize + 1;
    let ny = ((y1 - y0) / grid_step).ceil() as usize + 1;
    let threshold = points.len() as f64 * h.ln();

    // per-row minima collected in fixed row order: deterministic for any pool
    let rows: Vec<(f64, Option<Complex64>, usize)> = (0..ny)
        .into_par_iter()
        .map(|iy| {
            let y = y0 + iy as f64 * grid_step;
            let mut row_min = f64::INFINITY;
            let mut row_witness = None;
            let mut checked = 0usize;
            for ix in 0..nx {
                let z = Complex64::new(x0 + ix as f64 * grid_step, y);
                if cover.discs.iter().any(|d| (z - d.center).norm() <= d.radius + grid_step) {
                    continue;
                }
                checked += 1;
                let lp: f64 = points.iter().map(|&p| (z - p).norm().ln()).sum();
                if lp < row_min {
                    row_min = lp;
                    row_witness = Some(z);
                }
            }
            (row_min, row_witness, checked)
        })
        .collect();

    let mut min_log_product = f64::INFINITY;
    let mut witness = None;
    let mut grid_points = 0;
    for (row_min, row_witness, checked) in rows {
        grid_points += checked;
        if row_min < min_log_product {
            min_log_product = row_min;
            witness = row_witness;
        }
    }
    let pass = min_log_product > threshold;
    Ok(CoverReport {
        pass,
        min_log_product,
        witness: if pass { None } else { witness },
        grid_points,
    })
}

/// Exceptional intervals for the minimum modulus below radius `R`: outside the
/// returned intervals (total length at most `eta * R`), every radius `t` in
/// `[0, R/2]` satisfies `log m(t) > bound` with
/// `bound = N(R) - (1 + log(2e/eta)) Q(R)` once `R` is large enough for the
/// bound to bite; the bound is returned, not asserted.
///
/// Internally the Cartan cover runs at h = eta/(4e): the doubled construction
/// discs sum to eta/2 in scaled coordinates, and projecting discs to modulus
/// intervals doubles lengths again, landing exactly on the eta*R budget.
pub fn exceptional_intervals(
    zeros: &ZeroSet,
    r_outer: LogReal,
    eta: f64,
) -> Result<(IntervalSet, f64)> {
    if !(eta > 0.0 && eta < 0.5) {
        return Err(Error::EtaOutOfRange);
    }
    let log_r = r_outer.log();
    if log_r <= zeros.first_log_radius() {
        return Err(Error::PreconditionFail(
            "R must exceed the first zero radius".into(),
        ));
    }
    let r_lin = r_outer.linear();
    if !r_lin.is_finite() {
        return Err(Error::PreconditionFail(
            "R exceeds binary64 range; intervals are kept in linear moduli".into(),
        ));
    }
    let mut points = Vec::new();
    for e in zeros.entries() {
        if e.log_radius >= log_r {
            break;
        }
        let k = e.exact_multiplicity.ok_or_else(|| {
            Error::PreconditionFail(
                "zeros inside R need exact multiplicities for point replication".into(),
            )
        })?;
        if points.len() + k as usize > MAX_CARTAN_POINTS {
            return Err(Error::PointCountExceeded {
                max: MAX_CARTAN_POINTS,
                got: points.len() + k as usize,
            });
        }
        let scaled = Complex64::from_polar((e.log_radius - log_r).exp(), e.angle);
        for _ in 0..k {
            points.push(scaled);
        }
    }
    if points.is_empty() {
        return Err(Error::EmptyPoints);
    }
    let h = eta / (4.0 * std::f64::consts::E);
    let cover = cartan_discs(&points, h)?;
    let raw: Vec<(f64, f64)> = cover
        .discs
        .iter()
        .map(|d| {
            let c = d.center.norm();
            (((c - d.radius).max(0.0)) * r_lin, ((c + d.radius) * r_lin).min(r_lin / 2.0))
        })
        .collect();
    let intervals = IntervalSet::from_raw(raw);
    let q = growth_quantities(zeros, r_outer)?;
    let bound = q.big_n - (1.0 + (2.0 * std::f64::consts::E / eta).ln()) * q.q;
    Ok((intervals, bound))
}
