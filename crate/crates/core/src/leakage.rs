//! Inter-user interference leakage `alpha = h_1^H h_i / N`.
//!
//! Three independent routes are provided: the direct phasor sum, the Bessel
//! series obtained from the Jacobi-Anger expansion (only orders that are
//! multiples of `N` survive the average over a full circle), and the
//! Kronecker factorization for stacked arrays. The analytic head/tail bound
//! and the favorable-propagation classifier live here as well.

use std::f64::consts::{E, PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arrays::{AngleOfArrival, ArrayGeometry, SteeringVector, UcaGeometry, UclaGeometry, UlaGeometry};
use crate::bessel::{j, landau_bound};
use crate::error::{Error, Result};
use crate::sum::ComplexSum;

/// Two angles closer than this (circularly, for azimuths) are treated as equal.
pub const EPS_ANGLE: f64 = 1e-12;
/// Projected separations `delta` at or below this are treated as zero.
pub const EPS_DELTA: f64 = 1e-12;
/// Series truncation tolerance used when no other is given.
pub const DEFAULT_SERIES_TOL: f64 = 1e-12;

/// `(1/N) sum_n conj(h1[n]) hi[n]` with compensated accumulation.
pub fn alpha_direct(h1: &SteeringVector, hi: &SteeringVector) -> Result<Complex64> {
    if h1.len() != hi.len() {
        return Err(Error::LengthMismatch {
            left: h1.len(),
            right: hi.len(),
        });
    }
    if h1.is_empty() {
        return Err(Error::Geometry("empty steering vectors".into()));
    }
    let acc: ComplexSum = h1
        .entries()
        .iter()
        .zip(hi.entries())
        .map(|(a, b)| a.conj() * b)
        .collect();
    Ok(acc.total() / h1.len() as f64)
}

/// Projected separation of an interferer from the main user.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Deltas {
    pub delta1: f64,
    pub delta2: f64,
    /// `sqrt(delta1^2 + delta2^2)`
    pub delta: f64,
    /// `arg(delta2 + j delta1)`, principal value in `(-pi, pi]`.
    pub beta: f64,
    /// Series argument `2 pi R_N delta`.
    pub z: f64,
}

pub fn deltas_3d(aoa1: &AngleOfArrival, aoa_i: &AngleOfArrival, geom: &UcaGeometry) -> Deltas {
    let (s1, si) = (aoa1.elevation().sin(), aoa_i.elevation().sin());
    let delta1 = si * aoa_i.azimuth().cos() - s1 * aoa1.azimuth().cos();
    let delta2 = si * aoa_i.azimuth().sin() - s1 * aoa1.azimuth().sin();
    let delta = delta1.hypot(delta2);
    let mut beta = delta1.atan2(delta2);
    if beta == -PI {
        beta = PI;
    }
    Deltas {
        delta1,
        delta2,
        delta,
        beta,
        z: TAU * geom.radius() * delta,
    }
}

fn series_order(k: u32, n: usize) -> Result<u32> {
    u32::try_from(n)
        .ok()
        .and_then(|n| n.checked_mul(k))
        .ok_or_else(|| Error::Geometry(format!("series order {k} x {n} overflows")))
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("tol", tol, "tol > 0"))
    }
}

/// Planar leakage from the Bessel series, with the main user at azimuth 0
/// and the interferer at `phi_rel`.
pub fn alpha_series_2d(geom: &UcaGeometry, phi_rel: f64, tol: f64) -> Result<Complex64> {
    check_tol(tol)?;
    if !phi_rel.is_finite() {
        return Err(Error::NonFinite {
            what: "azimuth difference",
            value: phi_rel,
        });
    }
    let n = geom.n_elements();
    let z = 4.0 * PI * geom.radius() * (0.5 * phi_rel).sin();
    let k_max = truncation_k(geom, tol)?;
    let mut acc = ComplexSum::default();
    acc += Complex64::new(j(0, z), 0.0);
    for k in 1..=k_max {
        let order = series_order(k, n)?;
        let jk = j(order, z);
        if jk == 0.0 {
            continue;
        }
        let half_phase = f64::from(order) * phi_rel / 2.0;
        let sign = if order % 2 == 0 { 1.0 } else { -1.0 };
        // J_{-kN} = (-1)^{kN} J_{kN}
        acc += (Complex64::cis(-half_phase) + sign * Complex64::cis(half_phase)) * jk;
    }
    Ok(acc.total())
}

/// Leakage for an arbitrary pair of directions from the Bessel series in
/// `(delta, beta, z)`.
pub fn alpha_series_3d(geom: &UcaGeometry, deltas: &Deltas, tol: f64) -> Result<Complex64> {
    check_tol(tol)?;
    if deltas.delta == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let n = geom.n_elements();
    let z = deltas.z;
    let k_max = truncation_k(geom, tol)?;
    let mut acc = ComplexSum::default();
    acc += Complex64::new(j(0, z), 0.0);
    for k in 1..=k_max {
        let order = series_order(k, n)?;
        let jk = j(order, z);
        if jk == 0.0 {
            continue;
        }
        let phase = f64::from(order) * deltas.beta;
        let sign = if order % 2 == 0 { 1.0 } else { -1.0 };
        acc += (Complex64::cis(phase) + sign * Complex64::cis(-phase)) * jk;
    }
    Ok(acc.total())
}

/// Vertical leakage `(1/N_c) sum_m exp(j m u)`, `u = 2 pi d_v (cos theta_i - cos theta_1)`,
/// in closed Dirichlet-kernel form.
pub fn alpha_ula(geom: &UlaGeometry, theta1: f64, theta_i: f64) -> Complex64 {
    let u = TAU * geom.spacing() * (theta_i.cos() - theta1.cos());
    // exp(j m u) depends on u only modulo 2 pi.
    let u = u - TAU * (u / TAU).round();
    if u == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let nc = geom.n_elements() as f64;
    let ratio = (0.5 * nc * u).sin() / (nc * (0.5 * u).sin());
    Complex64::cis(0.5 * (nc - 1.0) * u) * ratio
}

/// `alpha_h * alpha_v` for a cylindrical array.
pub fn alpha_ucla_factored(geom: &UclaGeometry, aoa1: &AngleOfArrival, aoa_i: &AngleOfArrival) -> Result<Complex64> {
    let horizontal = alpha_direct(&geom.uca.steering_3d(aoa1), &geom.uca.steering_3d(aoa_i))?;
    let vertical = alpha_ula(&geom.ula, aoa1.elevation(), aoa_i.elevation());
    Ok(horizontal * vertical)
}

/// Leakage of every interferer (`aoas[1..]`) into the main user `aoas[0]`.
pub fn leakage_factors(geometry: &ArrayGeometry, aoas: &[AngleOfArrival]) -> Result<Vec<Complex64>> {
    let (main, rest) = aoas.split_first().ok_or(Error::NoUsers)?;
    let h1 = geometry.steering(main);
    rest.iter()
        .map(|aoa| alpha_direct(&h1, &geometry.steering(aoa)))
        .collect()
}

/// Head/tail decomposition of the analytic leakage bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundBreakdown {
    /// `2 k1 z_lower^(-1/3)`, covering orders `0..k1`.
    pub a1: f64,
    /// `2 (1/2)^(N k1) / (1 - (1/2)^N)`, covering orders `k1..`.
    pub a2: f64,
    pub k1: u32,
    /// Series truncation order at [`DEFAULT_SERIES_TOL`].
    pub k_max: u32,
    pub total: f64,
}

/// How the interferer is specified for [`leakage_bound`].
#[derive(Clone, Copy, Debug)]
pub enum Separation {
    /// Planar azimuth difference `phi_i - phi_1`.
    Azimuth(f64),
    Spatial(Deltas),
}

/// `ceil(e pi d)`, the split point between the two bound pieces.
pub fn k1(d: f64) -> u32 {
    (E * PI * d).ceil() as u32
}

/// Geometric ratio `e pi d / (2 k1)`; never above 1/2.
pub fn tail_ratio(d: f64) -> f64 {
    E * PI * d / (2.0 * f64::from(k1(d)))
}

pub fn leakage_bound(geom: &UcaGeometry, separation: Separation) -> Result<BoundBreakdown> {
    let n = geom.n_elements() as f64;
    let d = geom.spacing();
    // z >= N d delta because 2 pi R_N = N d / sinc(1/N) >= N d.
    let delta = match separation {
        Separation::Azimuth(phi) => 2.0 * (0.5 * phi).sin().abs(),
        Separation::Spatial(deltas) => deltas.delta,
    };
    if delta.is_nan() || delta <= EPS_DELTA {
        return Err(Error::BoundUndefined { delta });
    }
    let z_lower = n * d * delta;
    let k1 = k1(d);
    let a1 = 2.0 * f64::from(k1) * landau_bound(z_lower)?;
    let half_n = 0.5f64.powf(n);
    let a2 = 2.0 * 0.5f64.powf(n * f64::from(k1)) / (1.0 - half_n);
    Ok(BoundBreakdown {
        a1,
        a2,
        k1,
        k_max: truncation_k(geom, DEFAULT_SERIES_TOL)?,
        total: a1 + a2,
    })
}

/// Smallest `K >= k1` whose geometric tail `2 q^(N K) / (1 - q^N)` is below `tol`.
pub fn truncation_k(geom: &UcaGeometry, tol: f64) -> Result<u32> {
    check_tol(tol)?;
    let d = geom.spacing();
    let n = geom.n_elements() as f64;
    let q = tail_ratio(d);
    let ln_q = q.ln();
    let ln_denom = (-(n * ln_q).exp()).ln_1p();
    let ln_tol = tol.ln();
    let mut k = k1(d);
    while std::f64::consts::LN_2 + n * f64::from(k) * ln_q - ln_denom >= ln_tol {
        k += 1;
    }
    Ok(k)
}

/// Array growth direction under which the limit is taken.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expansion {
    #[default]
    Horizontal,
    Vertical,
}

/// Reason favorable propagation fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ViolatedCondition {
    /// Planar interferer at the main user's azimuth.
    SameAzimuth2D,
    /// Equal azimuths with `theta_i = theta_1` or `theta_i = pi - theta_1`.
    DeltaZero3D,
    /// Both users on the array axis.
    OnAxisPair,
    VerticalSameElevation,
    /// Vertical spacing of half a wavelength or more.
    VerticalSpacingTooLarge,
    /// Interferer azimuth `2 pi / N` closes in on the main user as `N` grows.
    ShrinkingSeparation,
    /// `M = N` uniformly spread users.
    UnboundedUsers,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FpVerdict {
    pub holds: bool,
    pub violated_condition: Option<ViolatedCondition>,
    /// Limit of `|alpha_2|`, known only for the two counterexample scenarios.
    pub predicted_limit: Option<f64>,
    /// Indices into the user list (main user is 0).
    pub violating_user_indices: Vec<usize>,
    /// Interferers for which one user sits on the axis yet `delta > 0`: the
    /// literal "theta = 0 or pi" wording would flag them, the projected
    /// separation does not.
    pub on_axis_discrepancies: Vec<usize>,
}

impl FpVerdict {
    fn holds() -> Self {
        Self {
            holds: true,
            violated_condition: None,
            predicted_limit: None,
            violating_user_indices: Vec::new(),
            on_axis_discrepancies: Vec::new(),
        }
    }

    fn fails(condition: ViolatedCondition, users: Vec<usize>) -> Self {
        Self {
            holds: false,
            violated_condition: Some(condition),
            violating_user_indices: users,
            ..Self::holds()
        }
    }
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let diff = (a - b).rem_euclid(TAU);
    diff.min(TAU - diff)
}

fn on_axis(aoa: &AngleOfArrival) -> bool {
    aoa.elevation() < EPS_ANGLE || PI - aoa.elevation() < EPS_ANGLE
}

/// Decides whether `|alpha| -> 0` as the array grows with fixed user directions.
pub fn fp_classify(geometry: &ArrayGeometry, aoas: &[AngleOfArrival], expansion: Expansion) -> Result<FpVerdict> {
    let (main, rest) = aoas.split_first().ok_or(Error::NoUsers)?;
    let interferers = || rest.iter().enumerate().map(|(i, aoa)| (i + 1, aoa));

    match (geometry, expansion) {
        (ArrayGeometry::Uca2d(_), Expansion::Horizontal) => {
            let bad: Vec<usize> = interferers()
                .filter(|(_, a)| circular_distance(a.azimuth(), main.azimuth()) < EPS_ANGLE)
                .map(|(i, _)| i)
                .collect();
            Ok(if bad.is_empty() {
                FpVerdict::holds()
            } else {
                FpVerdict::fails(ViolatedCondition::SameAzimuth2D, bad)
            })
        }
        (ArrayGeometry::Uca3d(g), Expansion::Horizontal)
        | (ArrayGeometry::Ucla(UclaGeometry { uca: g, .. }), Expansion::Horizontal) => {
            let mut bad = Vec::new();
            let mut label = None;
            let mut discrepancies = Vec::new();
            for (i, aoa) in interferers() {
                let deltas = deltas_3d(main, aoa, g);
                if deltas.delta <= EPS_DELTA {
                    bad.push(i);
                    label.get_or_insert(if on_axis(main) && on_axis(aoa) {
                        ViolatedCondition::OnAxisPair
                    } else {
                        ViolatedCondition::DeltaZero3D
                    });
                } else if on_axis(main) || on_axis(aoa) {
                    discrepancies.push(i);
                }
            }
            let mut verdict = match label {
                None => FpVerdict::holds(),
                Some(label) => FpVerdict::fails(label, bad),
            };
            verdict.on_axis_discrepancies = discrepancies;
            Ok(verdict)
        }
        (ArrayGeometry::Ucla(g), Expansion::Vertical) => {
            if rest.is_empty() {
                return Ok(FpVerdict::holds());
            }
            let same: Vec<usize> = interferers()
                .filter(|(_, a)| (a.elevation() - main.elevation()).abs() < EPS_ANGLE)
                .map(|(i, _)| i)
                .collect();
            if !same.is_empty() {
                return Ok(FpVerdict::fails(ViolatedCondition::VerticalSameElevation, same));
            }
            // Exactly half a wavelength is counted as too large.
            if g.ula.spacing() >= 0.5 {
                return Ok(FpVerdict::fails(ViolatedCondition::VerticalSpacingTooLarge, Vec::new()));
            }
            Ok(FpVerdict::holds())
        }
        (_, Expansion::Vertical) => Err(Error::Geometry("vertical expansion needs a cylindrical array".into())),
    }
}

/// `|J_0(2 pi d)|`: the limit of `|alpha_2|` when the interferer sits at
/// azimuth `2 pi / N`.
pub fn predicted_limit_shrinking(d: f64) -> Result<f64> {
    if !(d.is_finite() && d > 0.0) {
        return Err(Error::domain("d", d, "d > 0"));
    }
    Ok(j(0, TAU * d).abs())
}

/// Planar scenarios whose interferer separation vanishes with `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// Two users, interferer at `2 pi / N`.
    Shrinking,
    /// `M = N` users at `2 pi (i-1) / N`.
    DenseUniform,
}

/// Verdict for the non-FP scenarios; both share the `|J_0(2 pi d)|` limit
/// for the nearest interferer.
pub fn fp_classify_counterexample(kind: Counterexample, d: f64) -> Result<FpVerdict> {
    let limit = predicted_limit_shrinking(d)?;
    let condition = match kind {
        Counterexample::Shrinking => ViolatedCondition::ShrinkingSeparation,
        Counterexample::DenseUniform => ViolatedCondition::UnboundedUsers,
    };
    let mut verdict = FpVerdict::fails(condition, vec![1]);
    verdict.predicted_limit = Some(limit);
    Ok(verdict)
}

/// Antenna count for which `N d` clears `margin / min_i |sin((phi_i - phi_1)/2)|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MinAntennas {
    pub n: usize,
    /// Set when `e pi d >= M`, outside the regime where the rule is meaningful.
    pub large_spacing_warning: bool,
}

pub fn min_antennas(aoas: &[AngleOfArrival], d: f64, margin: f64) -> Result<MinAntennas> {
    if !(d.is_finite() && d > 0.0) {
        return Err(Error::domain("d", d, "d > 0"));
    }
    if !(margin >= 1.0 && margin.is_finite()) {
        return Err(Error::domain("margin", margin, "margin >= 1"));
    }
    let (main, rest) = aoas.split_first().ok_or(Error::NoUsers)?;
    if rest.is_empty() {
        return Err(Error::Geometry("min_antennas needs at least one interferer".into()));
    }
    let mut min_sin = f64::INFINITY;
    for (i, aoa) in rest.iter().enumerate() {
        let sep = circular_distance(aoa.azimuth(), main.azimuth());
        if sep < EPS_ANGLE {
            return Err(Error::Unsatisfiable { user: i + 1 });
        }
        min_sin = min_sin.min((0.5 * sep).sin());
    }
    let n = (margin / (d * min_sin)).ceil().max(2.0) as usize;
    Ok(MinAntennas {
        n,
        large_spacing_warning: E * PI * d >= aoas.len() as f64,
    })
}

/// Shortcut `ceil(margin M / (pi d))` for `M` uniformly spread users.
pub fn min_antennas_uniform(m: usize, d: f64, margin: f64) -> usize {
    (margin * m as f64 / (PI * d)).ceil() as usize
}
