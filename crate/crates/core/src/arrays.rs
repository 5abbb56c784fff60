//! Array geometries and their line-of-sight steering vectors.
//!
//! All spacings are in wavelengths and all angles in radians. Each user's
//! common phase term is dropped, so every entry is a pure phase `e^{j psi}`
//! and a vector of `N` entries has squared norm `N`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Direction of a user as seen from the array centre.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngleOfArrival {
    azimuth: f64,
    elevation: f64,
}

impl AngleOfArrival {
    /// `azimuth` is wrapped into `[0, 2pi)`; `elevation` must lie in `[0, pi]`.
    pub fn new(azimuth: f64, elevation: f64) -> Result<Self> {
        if !azimuth.is_finite() {
            return Err(Error::NonFinite {
                what: "azimuth",
                value: azimuth,
            });
        }
        if !elevation.is_finite() {
            return Err(Error::NonFinite {
                what: "elevation",
                value: elevation,
            });
        }
        if !(0.0..=PI).contains(&elevation) {
            return Err(Error::domain("elevation", elevation, "[0, pi]"));
        }
        Ok(Self {
            azimuth: wrap_azimuth(azimuth),
            elevation,
        })
    }

    /// A user in the plane of the array (`elevation = pi/2`).
    pub fn planar(azimuth: f64) -> Result<Self> {
        Self::new(azimuth, FRAC_PI_2)
    }

    pub fn from_degrees(azimuth_deg: f64, elevation_deg: f64) -> Result<Self> {
        Self::new(azimuth_deg.to_radians(), elevation_deg.to_radians())
    }

    pub fn azimuth(&self) -> f64 {
        self.azimuth
    }

    pub fn elevation(&self) -> f64 {
        self.elevation
    }
}

fn wrap_azimuth(phi: f64) -> f64 {
    let w = phi.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs.
    if w >= TAU {
        0.0
    } else {
        w
    }
}

fn check_spacing(what: &str, d: f64) -> Result<()> {
    if d.is_finite() && d > 0.0 {
        Ok(())
    } else {
        Err(Error::Geometry(format!("{what} must be positive and finite, got {d}")))
    }
}

/// Uniform circular array of `n` elements with arc-chord spacing `d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UcaGeometry {
    n: usize,
    d: f64,
}

impl UcaGeometry {
    pub fn new(n: usize, d: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Geometry(format!("UCA needs at least 2 elements, got {n}")));
        }
        check_spacing("element spacing", d)?;
        Ok(Self { n, d })
    }

    pub fn n_elements(&self) -> usize {
        self.n
    }

    pub fn spacing(&self) -> f64 {
        self.d
    }

    /// Circle radius in wavelengths, `d / (2 sin(pi/N))`.
    pub fn radius(&self) -> f64 {
        self.d / (2.0 * (PI / self.n as f64).sin())
    }

    /// Azimuth of element `idx`, `2 pi idx / N`.
    pub fn element_angle(&self, idx: usize) -> f64 {
        TAU * idx as f64 / self.n as f64
    }

    /// Steering vector of an in-plane user at azimuth `phi`.
    pub fn steering_2d(&self, phi: f64) -> SteeringVector {
        self.steering_scaled(phi, 1.0)
    }

    /// Steering vector of a user anywhere on the sphere.
    pub fn steering_3d(&self, aoa: &AngleOfArrival) -> SteeringVector {
        self.steering_scaled(aoa.azimuth, aoa.elevation.sin())
    }

    fn steering_scaled(&self, phi: f64, sin_theta: f64) -> SteeringVector {
        let k = TAU * self.radius() * sin_theta;
        (0..self.n)
            .map(|idx| Complex64::cis(k * (phi - self.element_angle(idx)).cos()))
            .collect()
    }
}

/// Free-function form of [`UcaGeometry::radius`].
pub fn uca_radius(geom: &UcaGeometry) -> f64 {
    geom.radius()
}

/// Free-function form of [`UcaGeometry::steering_2d`].
pub fn steering_uca_2d(geom: &UcaGeometry, phi: f64) -> SteeringVector {
    geom.steering_2d(phi)
}

/// Free-function form of [`UcaGeometry::steering_3d`].
pub fn steering_uca_3d(geom: &UcaGeometry, aoa: &AngleOfArrival) -> SteeringVector {
    geom.steering_3d(aoa)
}

/// Vertical uniform linear array of `n` elements spaced `d_v` apart.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UlaGeometry {
    n: usize,
    d_v: f64,
}

impl UlaGeometry {
    pub fn new(n: usize, d_v: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Geometry(format!("ULA needs at least 2 elements, got {n}")));
        }
        check_spacing("vertical spacing", d_v)?;
        Ok(Self { n, d_v })
    }

    pub fn n_elements(&self) -> usize {
        self.n
    }

    pub fn spacing(&self) -> f64 {
        self.d_v
    }

    /// Entry `m` is `exp(j 2 pi m d_v cos(theta))`, `m = 0..N_c`.
    pub fn steering(&self, theta: f64) -> SteeringVector {
        let step = TAU * self.d_v * theta.cos();
        (0..self.n).map(|m| Complex64::cis(step * m as f64)).collect()
    }
}

pub fn steering_ula_vertical(geom: &UlaGeometry, theta: f64) -> SteeringVector {
    geom.steering(theta)
}

/// A stack of identical UCAs, one per element of a vertical ULA.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UclaGeometry {
    pub uca: UcaGeometry,
    pub ula: UlaGeometry,
}

impl UclaGeometry {
    pub fn new(uca: UcaGeometry, ula: UlaGeometry) -> Self {
        Self { uca, ula }
    }

    pub fn n_elements(&self) -> usize {
        self.uca.n_elements() * self.ula.n_elements()
    }

    /// `h_h (x) h_v`: block `i` (length `N_c`) is `h_h[i] * h_v`.
    pub fn steering(&self, aoa: &AngleOfArrival) -> SteeringVector {
        let horizontal = self.uca.steering_3d(aoa);
        let vertical = self.ula.steering(aoa.elevation);
        horizontal.kron(&vertical)
    }
}

pub fn steering_ucla(geom: &UclaGeometry, aoa: &AngleOfArrival) -> SteeringVector {
    geom.steering(aoa)
}

/// Any of the supported receive arrays.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ArrayGeometry {
    /// Circular array with users confined to its plane; only azimuths matter.
    Uca2d(UcaGeometry),
    Uca3d(UcaGeometry),
    Ucla(UclaGeometry),
}

impl ArrayGeometry {
    pub fn n_elements(&self) -> usize {
        match self {
            ArrayGeometry::Uca2d(g) | ArrayGeometry::Uca3d(g) => g.n_elements(),
            ArrayGeometry::Ucla(g) => g.n_elements(),
        }
    }

    pub fn uca(&self) -> &UcaGeometry {
        match self {
            ArrayGeometry::Uca2d(g) | ArrayGeometry::Uca3d(g) => g,
            ArrayGeometry::Ucla(g) => &g.uca,
        }
    }

    pub fn steering(&self, aoa: &AngleOfArrival) -> SteeringVector {
        match self {
            ArrayGeometry::Uca2d(g) => g.steering_2d(aoa.azimuth()),
            ArrayGeometry::Uca3d(g) => g.steering_3d(aoa),
            ArrayGeometry::Ucla(g) => g.steering(aoa),
        }
    }
}

/// Per-element phase terms of one user at one array.
#[derive(Clone, Debug, PartialEq)]
pub struct SteeringVector(Vec<Complex64>);

impl SteeringVector {
    pub fn new(entries: Vec<Complex64>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Kronecker product with `self` as the outer factor.
    pub fn kron(&self, inner: &SteeringVector) -> SteeringVector {
        self.0
            .iter()
            .flat_map(|&a| inner.0.iter().map(move |&b| a * b))
            .collect()
    }

    pub fn into_inner(self) -> Vec<Complex64> {
        self.0
    }
}

impl FromIterator<Complex64> for SteeringVector {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl std::ops::Index<usize> for SteeringVector {
    type Output = Complex64;

    fn index(&self, idx: usize) -> &Complex64 {
        &self.0[idx]
    }
}
