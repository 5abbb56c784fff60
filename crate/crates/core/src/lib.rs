//! Interference leakage between users seen by uniform circular (UCA) and
//! cylindrical (UCLA) antenna arrays, and whether it vanishes as the array
//! grows.
//!
//! The pieces, roughly bottom up:
//!
//! - [`bessel`]: `J_n(x)` plus the two envelopes that bound it.
//! - [`arrays`]: geometries, angles of arrival and steering vectors.
//! - [`leakage`]: the leakage factor `alpha` by direct inner product or by
//!   Bessel series, its analytic bound, and the favorable-propagation
//!   classifier.
//! - [`sinr`]: matched-filter SINR for a multi-user scenario.
//! - [`harness`]: JSON scenarios, N sweeps, CSV and SVG output.
//!
//! Each has a runnable program under `examples/`:
//!
//! ```text
//! cargo run --example bessel_bounds
//! cargo run --example steering_vectors
//! cargo run --example leakage_series
//! cargo run --example ucla_kronecker
//! cargo run --example sinr_report
//! cargo run --example figure_sweep
//! cargo run --example non_fp_limit
//! cargo run --example fp_classify
//! cargo run --example min_antennas
//! ```
//!
//! ```
//! use favprop::arrays::{AngleOfArrival, ArrayGeometry, UcaGeometry};
//! use favprop::leakage::leakage_factors;
//!
//! let geom = ArrayGeometry::Uca2d(UcaGeometry::new(64, 0.5).unwrap());
//! let users = [AngleOfArrival::planar(0.0).unwrap(), AngleOfArrival::planar(1.0).unwrap()];
//! let alpha = leakage_factors(&geom, &users).unwrap();
//! assert!(alpha[0].norm() < 1.0);
//! ```

pub mod arrays;
pub mod bessel;
pub mod error;
pub mod harness;
pub mod leakage;
pub mod sinr;
pub mod sum;

pub use error::{Error, Result};
