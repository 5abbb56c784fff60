//! Matched-filter SINR of the main user in a multi-user uplink.

use crate::arrays::{AngleOfArrival, ArrayGeometry};
use crate::error::{Error, Result};
use crate::leakage::leakage_factors;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct User {
    pub aoa: AngleOfArrival,
    /// Receive SNR `gamma`, linear, noise power normalized to one.
    pub snr: f64,
}

impl User {
    pub fn new(aoa: AngleOfArrival, snr: f64) -> Result<Self> {
        if !(snr.is_finite() && snr >= 0.0) {
            return Err(Error::domain("snr", snr, "finite, >= 0"));
        }
        Ok(Self { aoa, snr })
    }
}

/// Users seen by one array; `users[0]` is the main user.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiUserScenario {
    pub geometry: ArrayGeometry,
    pub users: Vec<User>,
}

impl MultiUserScenario {
    pub fn new(geometry: ArrayGeometry, users: Vec<User>) -> Result<Self> {
        if users.is_empty() {
            return Err(Error::NoUsers);
        }
        Ok(Self { geometry, users })
    }

    pub fn aoas(&self) -> Vec<AngleOfArrival> {
        self.users.iter().map(|u| u.aoa).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SinrReport {
    pub sinr: f64,
    pub gamma1: f64,
    /// `sum_{i>=2} |alpha_i|^2`, unweighted.
    pub aggregate_leakage_sq: f64,
    /// `|alpha_i|^2` for each interferer, in user order.
    pub per_user_leakage_sq: Vec<f64>,
}

impl SinrReport {
    pub fn sinr_db(&self) -> f64 {
        10.0 * self.sinr.log10()
    }
}

/// `gamma_1 / (sum_i |alpha_i|^2 gamma_i + 1)`.
pub fn sinr_matched_filter(scenario: &MultiUserScenario) -> Result<SinrReport> {
    let (main, rest) = scenario.users.split_first().ok_or(Error::NoUsers)?;
    let alphas = leakage_factors(&scenario.geometry, &scenario.aoas())?;
    let per_user_leakage_sq: Vec<f64> = alphas.iter().map(|a| a.norm_sqr()).collect();
    Ok(sinr_from_leakage(
        main.snr,
        rest.iter().map(|u| u.snr),
        per_user_leakage_sq,
    ))
}

/// Assembles the report from precomputed `|alpha_i|^2` values.
pub fn sinr_from_leakage(
    gamma1: f64,
    interferer_snr: impl IntoIterator<Item = f64>,
    per_user_leakage_sq: Vec<f64>,
) -> SinrReport {
    let interference: f64 = per_user_leakage_sq.iter().zip(interferer_snr).map(|(l, g)| l * g).sum();
    SinrReport {
        sinr: gamma1 / (interference + 1.0),
        gamma1,
        aggregate_leakage_sq: per_user_leakage_sq.iter().sum(),
        per_user_leakage_sq,
    }
}
