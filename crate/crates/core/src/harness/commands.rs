//! The work behind each CLI subcommand, kept out of the binary so it can be
//! tested directly.

use std::f64::consts::PI;
use std::path::Path;

use serde::Serialize;

use super::config::{dyadic, load_scenario, SweepConfig, UserLayout};
use super::emit::{emit_csv, emit_svg};
use super::sweep::{sweep_n, verify_bounds, SweepRow};
use crate::arrays::UcaGeometry;
use crate::error::{Error, Result};
use crate::leakage::{
    fp_classify, fp_classify_counterexample, min_antennas, predicted_limit_shrinking, Counterexample, FpVerdict,
    MinAntennas,
};

/// Antenna count from which the shrinking-separation sweep must sit on its limit.
pub const LIMIT_SETTLE_N: usize = 1024;
pub const LIMIT_TOL: f64 = 1e-3;
pub const Z_IDENTITY_TOL: f64 = 1e-12;
/// Slack allowed when comparing computed leakage with its analytic bound.
pub const ROW_CHECK_SLACK: f64 = 1e-12;

/// Printable result of a subcommand plus whether its checks held.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: String,
    pub passed: bool,
}

impl Outcome {
    /// 0 when every check held, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

/// Human-readable reasons a row breaks a sweep invariant.
pub fn row_problems(row: &SweepRow) -> Vec<String> {
    let mut out = Vec::new();
    for (name, v) in [("alpha_total", row.alpha_total), ("alpha_2", row.alpha_2)] {
        if !v.is_finite() {
            out.push(format!("N={}: {name} is not finite", row.n));
        }
    }
    if row.alpha_2 > row.alpha_total * (1.0 + ROW_CHECK_SLACK) {
        out.push(format!(
            "N={}: alpha_2 {} exceeds alpha_total {}",
            row.n, row.alpha_2, row.alpha_total
        ));
    }
    if let Some(b) = row.bound_total {
        if row.alpha_2 > b + ROW_CHECK_SLACK {
            out.push(format!("N={}: alpha_2 {} exceeds bound {}", row.n, row.alpha_2, b));
        }
    }
    out
}

pub fn run_sweep(config: &Path, out: &Path, svg: Option<&Path>) -> Result<Outcome> {
    let config = load_scenario(config)?;
    let rows = sweep_n(&config)?;
    emit_csv(&rows, out)?;
    if let Some(svg) = svg {
        emit_svg(&rows, svg)?;
    }
    let problems: Vec<String> = rows.iter().flat_map(row_problems).collect();
    let mut report = format!("{} rows written to {}", rows.len(), out.display());
    for p in &problems {
        report.push('\n');
        report.push_str(p);
    }
    Ok(Outcome {
        report,
        passed: problems.is_empty(),
    })
}

pub fn run_verify_bounds(config: &Path) -> Result<Outcome> {
    let report = verify_bounds(&load_scenario(config)?)?;
    Ok(Outcome {
        report: json(&report),
        passed: report.passed(),
    })
}

/// One antenna count of the shrinking-separation check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitRow {
    #[serde(rename = "N")]
    pub n: usize,
    pub alpha: f64,
    /// `4 pi R sin(pi / N)`, which should equal `2 pi d`.
    pub z: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitReport {
    pub d: f64,
    pub predicted_limit: f64,
    pub settle_n: usize,
    pub rows: Vec<LimitRow>,
    /// Largest `| |alpha| - limit |` over rows with `N >= settle_n`.
    pub max_limit_error: Option<f64>,
    pub max_z_error: f64,
    pub passed: bool,
}

/// Sweeps two users at azimuths `0` and `2 pi / N` and compares with `|J_0(2 pi d)|`.
pub fn limit_check(d: f64, n_max: usize) -> Result<LimitReport> {
    if n_max < 8 {
        return Err(Error::config("n-max", format!("must be >= 8, got {n_max}")));
    }
    let config = SweepConfig::shrinking(d, dyadic(8, n_max));
    let limit = predicted_limit_shrinking(d)?;
    let rows = sweep_n(&config)?
        .into_iter()
        .map(|r| {
            let geom = UcaGeometry::new(r.n, d)?;
            let z = 4.0 * PI * geom.radius() * (PI / r.n as f64).sin();
            Ok(LimitRow {
                n: r.n,
                alpha: r.alpha_2,
                z,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let target_z = 2.0 * PI * d;
    let max_z_error = rows.iter().map(|r| (r.z - target_z).abs()).fold(0.0, f64::max);
    let max_limit_error = rows
        .iter()
        .filter(|r| r.n >= LIMIT_SETTLE_N)
        .map(|r| (r.alpha - limit).abs())
        .reduce(f64::max);
    let passed = max_z_error <= Z_IDENTITY_TOL && max_limit_error.is_none_or(|e| e <= LIMIT_TOL);
    Ok(LimitReport {
        d,
        predicted_limit: limit,
        settle_n: LIMIT_SETTLE_N,
        rows,
        max_limit_error,
        max_z_error,
        passed,
    })
}

pub fn run_limit_check(d: f64, n_max: usize) -> Result<Outcome> {
    let report = limit_check(d, n_max)?;
    Ok(Outcome {
        report: json(&report),
        passed: report.passed,
    })
}

/// Classifies the scenario's user set at its largest antenna count.
pub fn fp_check(config: &SweepConfig) -> Result<FpVerdict> {
    config.validate()?;
    match config.users {
        UserLayout::Shrinking => return fp_classify_counterexample(Counterexample::Shrinking, config.d),
        UserLayout::Dense => return fp_classify_counterexample(Counterexample::DenseUniform, config.d),
        _ => {}
    }
    let n = *config.n_values.last().expect("validated grid is non-empty");
    fp_classify(&config.geometry_at(n)?, &config.aoas_at(n)?, config.expansion)
}

/// Always passes: a verdict that FP fails is an answer, not an error.
pub fn run_fp_check(config: &Path) -> Result<Outcome> {
    let verdict = fp_check(&load_scenario(config)?)?;
    Ok(Outcome {
        report: json(&verdict),
        passed: true,
    })
}

pub fn min_n(config: &SweepConfig, margin: f64) -> Result<MinAntennas> {
    config.validate()?;
    if matches!(config.users, UserLayout::Shrinking | UserLayout::Dense) {
        return Err(Error::config(
            "aoa_mode",
            "min-n needs a user set that does not depend on N",
        ));
    }
    let n = *config.n_values.first().expect("validated grid is non-empty");
    min_antennas(&config.aoas_at(n)?, config.d, margin)
}

pub fn run_min_n(config: &Path, margin: f64) -> Result<Outcome> {
    let result = min_n(&load_scenario(config)?, margin)?;
    Ok(Outcome {
        report: json(&result),
        passed: true,
    })
}
