//! Sweep scenarios and their JSON file format.
//!
//! ```json
//! {
//!   "kind": "uca2d",
//!   "d": 0.5,
//!   "M": 10,
//!   "aoa_mode": "uniform",
//!   "n": { "min": 8, "max": 4096 }
//! }
//! ```
//!
//! Keys: `kind` (`uca2d` | `uca3d` | `ucla`), `d`, `d_v` and `n_c` (ucla
//! only), `M`, `aoa_mode` (`uniform` | `explicit` | `shrinking` | `dense`),
//! `aoas` (explicit only, list of `{azimuth_deg, elevation_deg}`),
//! `elevation_deg` (uniform mode on 3-D kinds), `n` (list, or
//! `{min, max}` for a doubling grid), `snr` (linear, default 100), `tol`
//! (series tolerance, default 1e-12) and `expansion` (`horizontal` |
//! `vertical`). Angles in files are degrees. Unknown keys are rejected.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::path::Path;

use serde::Deserialize;

use crate::arrays::{AngleOfArrival, ArrayGeometry, UcaGeometry, UclaGeometry, UlaGeometry};
use crate::error::{Error, Result};
use crate::leakage::{Expansion, DEFAULT_SERIES_TOL};

pub const DEFAULT_SNR: f64 = 100.0;
pub const DEFAULT_N_MIN: usize = 8;
pub const DEFAULT_N_MAX: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrayKind {
    Uca2d,
    Uca3d,
    Ucla,
}

/// Vertical stacking of a cylindrical array; the sweep varies only the
/// ring size.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerticalStack {
    pub n_c: usize,
    pub d_v: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum UserLayout {
    /// `M` users at azimuths `2 pi (i-1) / M`, all at one elevation.
    Uniform {
        m: usize,
        elevation: f64,
    },
    Explicit(Vec<AngleOfArrival>),
    /// Two users, the interferer at azimuth `2 pi / N`.
    Shrinking,
    /// `M = N` users at azimuths `2 pi (i-1) / N`.
    Dense,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub kind: ArrayKind,
    pub d: f64,
    pub vertical: Option<VerticalStack>,
    pub users: UserLayout,
    pub n_values: Vec<usize>,
    /// Common receive SNR of every user, linear.
    pub snr: f64,
    pub tol: f64,
    pub expansion: Expansion,
}

/// `min, 2 min, 4 min, ...` up to and including `max`.
pub fn dyadic(min: usize, max: usize) -> Vec<usize> {
    std::iter::successors(Some(min), |&n| n.checked_mul(2))
        .take_while(|&n| n <= max)
        .collect()
}

impl SweepConfig {
    /// Planar UCA with `m` uniformly spread users.
    pub fn uniform_planar(d: f64, m: usize, n_values: Vec<usize>) -> Self {
        Self {
            kind: ArrayKind::Uca2d,
            d,
            vertical: None,
            users: UserLayout::Uniform {
                m,
                elevation: FRAC_PI_2,
            },
            n_values,
            snr: DEFAULT_SNR,
            tol: DEFAULT_SERIES_TOL,
            expansion: Expansion::Horizontal,
        }
    }

    pub fn shrinking(d: f64, n_values: Vec<usize>) -> Self {
        Self {
            users: UserLayout::Shrinking,
            ..Self::uniform_planar(d, 2, n_values)
        }
    }

    pub fn dense(d: f64, n_values: Vec<usize>) -> Self {
        Self {
            users: UserLayout::Dense,
            ..Self::uniform_planar(d, 2, n_values)
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: RawConfig = serde_path_to_error::deserialize(de).map_err(|e| {
            let key = e.path().to_string();
            Error::config(
                if key == "." { "<root>".to_string() } else { key },
                e.inner().to_string(),
            )
        })?;
        raw.validate()
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.d.is_finite() && self.d > 0.0) {
            return Err(Error::config("d", format!("must be > 0, got {}", self.d)));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::config("tol", format!("must be > 0, got {}", self.tol)));
        }
        if !(self.snr.is_finite() && self.snr >= 0.0) {
            return Err(Error::config(
                "snr",
                format!("must be finite and >= 0, got {}", self.snr),
            ));
        }
        if self.n_values.is_empty() {
            return Err(Error::config("n", "needs at least one antenna count"));
        }
        if self.n_values[0] < 2 {
            return Err(Error::config("n", "antenna counts must be >= 2"));
        }
        if self.n_values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::config("n", "antenna counts must be strictly increasing"));
        }
        match (self.kind, &self.vertical) {
            (ArrayKind::Ucla, None) => return Err(Error::config("n_c", "required for kind = ucla")),
            (ArrayKind::Ucla, Some(v)) => {
                if v.n_c < 2 {
                    return Err(Error::config("n_c", format!("must be >= 2, got {}", v.n_c)));
                }
                if !(v.d_v.is_finite() && v.d_v > 0.0) {
                    return Err(Error::config("d_v", format!("must be > 0, got {}", v.d_v)));
                }
            }
            (_, Some(_)) => return Err(Error::config("d_v", "only valid for kind = ucla")),
            _ => {}
        }
        if self.expansion == Expansion::Vertical && self.kind != ArrayKind::Ucla {
            return Err(Error::config("expansion", "vertical expansion needs kind = ucla"));
        }
        match &self.users {
            UserLayout::Uniform { m, .. } if *m < 1 => Err(Error::config("M", "must be >= 1")),
            UserLayout::Explicit(list) if list.is_empty() => Err(Error::config("aoas", "must not be empty")),
            UserLayout::Shrinking | UserLayout::Dense if self.kind != ArrayKind::Uca2d => Err(Error::config(
                "aoa_mode",
                "shrinking and dense layouts are planar; use kind = uca2d",
            )),
            _ => Ok(()),
        }
    }

    /// Number of users at antenna count `n`.
    pub fn user_count(&self, n: usize) -> usize {
        match &self.users {
            UserLayout::Uniform { m, .. } => *m,
            UserLayout::Explicit(list) => list.len(),
            UserLayout::Shrinking => 2,
            UserLayout::Dense => n,
        }
    }

    pub fn geometry_at(&self, n: usize) -> Result<ArrayGeometry> {
        let uca = UcaGeometry::new(n, self.d)?;
        Ok(match (self.kind, self.vertical) {
            (ArrayKind::Uca2d, _) => ArrayGeometry::Uca2d(uca),
            (ArrayKind::Uca3d, _) => ArrayGeometry::Uca3d(uca),
            (ArrayKind::Ucla, Some(v)) => ArrayGeometry::Ucla(UclaGeometry::new(uca, UlaGeometry::new(v.n_c, v.d_v)?)),
            (ArrayKind::Ucla, None) => return Err(Error::config("n_c", "required for kind = ucla")),
        })
    }

    pub fn aoas_at(&self, n: usize) -> Result<Vec<AngleOfArrival>> {
        let spread = |count: usize, elevation: f64| -> Result<Vec<AngleOfArrival>> {
            (0..count)
                .map(|i| AngleOfArrival::new(TAU * i as f64 / count as f64, elevation))
                .collect()
        };
        match &self.users {
            UserLayout::Uniform { m, elevation } => spread(*m, *elevation),
            UserLayout::Explicit(list) => Ok(list.clone()),
            UserLayout::Shrinking => Ok(vec![
                AngleOfArrival::planar(0.0)?,
                AngleOfArrival::planar(TAU / n as f64)?,
            ]),
            UserLayout::Dense => spread(n, FRAC_PI_2),
        }
    }
}

/// Reads and validates a scenario file.
pub fn load_scenario(path: impl AsRef<Path>) -> Result<SweepConfig> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    SweepConfig::from_json_str(&text)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    kind: ArrayKind,
    d: f64,
    #[serde(default)]
    d_v: Option<f64>,
    #[serde(default)]
    n_c: Option<usize>,
    #[serde(rename = "M", default)]
    m: Option<usize>,
    aoa_mode: RawAoaMode,
    #[serde(default)]
    aoas: Option<Vec<RawAoa>>,
    #[serde(default)]
    elevation_deg: Option<f64>,
    #[serde(default)]
    n: Option<RawN>,
    #[serde(default)]
    snr: Option<f64>,
    #[serde(default)]
    tol: Option<f64>,
    #[serde(default)]
    expansion: Option<Expansion>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
enum RawAoaMode {
    Uniform,
    Explicit,
    Shrinking,
    Dense,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAoa {
    azimuth_deg: f64,
    #[serde(default)]
    elevation_deg: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawN {
    List(Vec<usize>),
    Range(RawRange),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRange {
    min: usize,
    max: usize,
}

impl RawConfig {
    fn validate(self) -> Result<SweepConfig> {
        let planar = self.kind == ArrayKind::Uca2d;
        let elevation_of = |key: String, deg: Option<f64>| -> Result<f64> {
            match deg {
                None => Ok(FRAC_PI_2),
                Some(v) if planar && v != 90.0 => Err(Error::config(key, "planar arrays need elevation 90")),
                Some(v) if !(0.0..=180.0).contains(&v) => {
                    Err(Error::config(key, format!("must lie in [0, 180], got {v}")))
                }
                Some(v) => Ok(v.to_radians()),
            }
        };

        let vertical = match (self.kind, self.n_c, self.d_v) {
            (ArrayKind::Ucla, Some(n_c), Some(d_v)) => Some(VerticalStack { n_c, d_v }),
            (ArrayKind::Ucla, None, _) => return Err(Error::config("n_c", "required for kind = ucla")),
            (ArrayKind::Ucla, _, None) => return Err(Error::config("d_v", "required for kind = ucla")),
            (_, Some(_), _) => return Err(Error::config("n_c", "only valid for kind = ucla")),
            (_, _, Some(_)) => return Err(Error::config("d_v", "only valid for kind = ucla")),
            _ => None,
        };

        if self.aoas.is_some() && self.aoa_mode != RawAoaMode::Explicit {
            return Err(Error::config("aoas", "only valid with aoa_mode = explicit"));
        }
        if self.elevation_deg.is_some() && self.aoa_mode != RawAoaMode::Uniform {
            return Err(Error::config("elevation_deg", "only valid with aoa_mode = uniform"));
        }

        let users = match self.aoa_mode {
            RawAoaMode::Uniform => {
                let m = self
                    .m
                    .ok_or_else(|| Error::config("M", "required for aoa_mode = uniform"))?;
                UserLayout::Uniform {
                    m,
                    elevation: elevation_of("elevation_deg".into(), self.elevation_deg)?,
                }
            }
            RawAoaMode::Explicit => {
                let raw = self
                    .aoas
                    .ok_or_else(|| Error::config("aoas", "required for aoa_mode = explicit"))?;
                if let Some(m) = self.m {
                    if m != raw.len() {
                        return Err(Error::config("M", format!("is {m} but aoas lists {} users", raw.len())));
                    }
                }
                let mut list = Vec::with_capacity(raw.len());
                for (i, a) in raw.into_iter().enumerate() {
                    let theta = elevation_of(format!("aoas[{i}].elevation_deg"), a.elevation_deg)?;
                    let aoa = AngleOfArrival::new(a.azimuth_deg.to_radians(), theta)
                        .map_err(|e| Error::config(format!("aoas[{i}]"), e.to_string()))?;
                    list.push(aoa);
                }
                UserLayout::Explicit(list)
            }
            RawAoaMode::Shrinking => {
                if matches!(self.m, Some(m) if m != 2) {
                    return Err(Error::config("M", "shrinking layout always has 2 users"));
                }
                UserLayout::Shrinking
            }
            RawAoaMode::Dense => {
                if self.m.is_some() {
                    return Err(Error::config("M", "dense layout sets M = N; omit M"));
                }
                UserLayout::Dense
            }
        };

        let n_values = match self.n {
            None => dyadic(DEFAULT_N_MIN, DEFAULT_N_MAX),
            Some(RawN::List(list)) => list,
            Some(RawN::Range(RawRange { min, max })) => {
                if min < 2 || max < min {
                    return Err(Error::config(
                        "n",
                        format!("range needs 2 <= min <= max, got {min}..{max}"),
                    ));
                }
                dyadic(min, max)
            }
        };

        let config = SweepConfig {
            kind: self.kind,
            d: self.d,
            vertical,
            users,
            n_values,
            snr: self.snr.unwrap_or(DEFAULT_SNR),
            tol: self.tol.unwrap_or(DEFAULT_SERIES_TOL),
            expansion: self.expansion.unwrap_or_default(),
        };
        config.validate()?;
        Ok(config)
    }
}
