use rayon::prelude::*;
use serde::Serialize;

use super::config::{SweepConfig, UserLayout};
use crate::arrays::{AngleOfArrival, ArrayGeometry};
use crate::error::{Error, Result};
use crate::leakage::{
    deltas_3d, k1, leakage_bound, leakage_factors, predicted_limit_shrinking, BoundBreakdown, Separation,
};
use crate::sinr::sinr_from_leakage;

/// Leakage summary at one antenna count.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    #[serde(rename = "N")]
    pub n: usize,
    /// `sqrt(sum_{i>=2} |alpha_i|^2)`
    pub alpha_total: f64,
    /// `|alpha_2|`, zero for a single user.
    pub alpha_2: f64,
    /// Analytic bound on `|alpha_2|`; absent when user 2 projects onto user 1.
    pub bound_total: Option<f64>,
    pub sinr_db: f64,
    pub predicted_limit: Option<f64>,
}

fn bound_for(geometry: &ArrayGeometry, main: &AngleOfArrival, other: &AngleOfArrival) -> Result<BoundBreakdown> {
    // For stacked arrays |alpha| <= |alpha_h|, so the ring bound applies.
    let separation = match geometry {
        ArrayGeometry::Uca2d(_) => Separation::Azimuth(other.azimuth() - main.azimuth()),
        ArrayGeometry::Uca3d(g) => Separation::Spatial(deltas_3d(main, other, g)),
        ArrayGeometry::Ucla(g) => Separation::Spatial(deltas_3d(main, other, &g.uca)),
    };
    leakage_bound(geometry.uca(), separation)
}

fn optional_bound(result: Result<BoundBreakdown>) -> Result<Option<BoundBreakdown>> {
    match result {
        Ok(b) => Ok(Some(b)),
        Err(Error::BoundUndefined { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn predicted_limit(config: &SweepConfig) -> Result<Option<f64>> {
    match config.users {
        UserLayout::Shrinking | UserLayout::Dense => predicted_limit_shrinking(config.d).map(Some),
        _ => Ok(None),
    }
}

fn row_at(config: &SweepConfig, n: usize, limit: Option<f64>) -> Result<SweepRow> {
    let geometry = config.geometry_at(n)?;
    let aoas = config.aoas_at(n)?;
    let alphas = leakage_factors(&geometry, &aoas)?;
    let leak_sq: Vec<f64> = alphas.iter().map(|a| a.norm_sqr()).collect();
    let alpha_total = leak_sq.iter().sum::<f64>().sqrt();
    let alpha_2 = alphas.first().map_or(0.0, |a| a.norm());
    let bound_total = match aoas.get(1) {
        Some(other) => optional_bound(bound_for(&geometry, &aoas[0], other))?.map(|b| b.total),
        None => None,
    };
    let report = sinr_from_leakage(config.snr, std::iter::repeat(config.snr), leak_sq);
    Ok(SweepRow {
        n,
        alpha_total,
        alpha_2,
        bound_total,
        sinr_db: report.sinr_db(),
        predicted_limit: limit,
    })
}

/// One row per antenna count, in the config's order.
pub fn sweep_n(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let limit = predicted_limit(config)?;
    config
        .n_values
        .par_iter()
        .map(|&n| row_at(config, n, limit).map_err(|e| Error::AtN { n, source: Box::new(e) }))
        .collect()
}

/// One interferer at one antenna count.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheck {
    #[serde(rename = "N")]
    pub n: usize,
    /// Index into the user list (main user is 0).
    pub user: usize,
    pub alpha: f64,
    /// `None` when the bound is undefined for this pair.
    pub bound: Option<BoundBreakdown>,
}

impl BoundCheck {
    pub fn violated(&self) -> bool {
        self.bound.is_some_and(|b| self.alpha > b.total)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub k1: u32,
    pub checked: usize,
    pub violations: Vec<BoundCheck>,
    pub undefined: Vec<BoundCheck>,
    /// Smallest and largest `bound - |alpha|` over defined pairs.
    pub min_slack: Option<f64>,
    pub max_slack: Option<f64>,
    /// Largest `|alpha| / bound`.
    pub max_ratio: Option<f64>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn checks_at(config: &SweepConfig, n: usize) -> Result<Vec<BoundCheck>> {
    let geometry = config.geometry_at(n)?;
    let aoas = config.aoas_at(n)?;
    let alphas = leakage_factors(&geometry, &aoas)?;
    alphas
        .iter()
        .enumerate()
        .map(|(i, alpha)| {
            let bound = optional_bound(bound_for(&geometry, &aoas[0], &aoas[i + 1]))?;
            Ok(BoundCheck {
                n,
                user: i + 1,
                alpha: alpha.norm(),
                bound,
            })
        })
        .collect()
}

/// Checks `|alpha_i| <= A1 + A2` for every antenna count and interferer.
pub fn verify_bounds(config: &SweepConfig) -> Result<BoundReport> {
    config.validate()?;
    let per_n: Vec<Vec<BoundCheck>> = config
        .n_values
        .par_iter()
        .map(|&n| checks_at(config, n).map_err(|e| Error::AtN { n, source: Box::new(e) }))
        .collect::<Result<_>>()?;

    let mut report = BoundReport {
        k1: k1(config.d),
        checked: 0,
        violations: Vec::new(),
        undefined: Vec::new(),
        min_slack: None,
        max_slack: None,
        max_ratio: None,
    };
    for check in per_n.into_iter().flatten() {
        report.checked += 1;
        let Some(bound) = check.bound else {
            report.undefined.push(check);
            continue;
        };
        let slack = bound.total - check.alpha;
        let ratio = check.alpha / bound.total;
        report.min_slack = Some(report.min_slack.map_or(slack, |s| s.min(slack)));
        report.max_slack = Some(report.max_slack.map_or(slack, |s| s.max(slack)));
        report.max_ratio = Some(report.max_ratio.map_or(ratio, |r| r.max(ratio)));
        if check.violated() {
            report.violations.push(check);
        }
    }
    Ok(report)
}

/// Running maximum over consecutive pairs: `max(v[j], v[j+1])`.
pub fn pairwise_envelope(values: &[f64]) -> Vec<f64> {
    values.windows(2).map(|w| w[0].max(w[1])).collect()
}

pub fn is_non_increasing(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[1] <= w[0])
}

/// First row whose `alpha_total` is below `threshold`.
pub fn first_below(rows: &[SweepRow], threshold: f64) -> Option<usize> {
    rows.iter().find(|r| r.alpha_total < threshold).map(|r| r.n)
}
