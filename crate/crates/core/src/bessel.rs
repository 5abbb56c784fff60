//! Integer-order Bessel functions of the first kind and the two bound
//! envelopes used by the leakage analysis.
//!
//! Small arguments with small orders use the ascending power series. Every
//! other case runs Miller's backward recurrence from an order well past the
//! turning point and normalizes with `J_0 + 2 sum_k J_{2k} = 1`. Very deep
//! orders, where the Kapteyn-type envelope `|x e / 2n|^n` is already below
//! `1e-300`, return zero without recurring at all.

use std::f64::consts::E;

use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

/// Largest `|x|` handled by the power series.
pub const SERIES_MAX_ARG: f64 = 12.0;
/// Largest order handled by the power series.
pub const SERIES_MAX_ORDER: u32 = 30;
/// Envelope level below which a value is reported as exactly zero.
pub const SHORT_CIRCUIT_LEVEL: f64 = 1e-300;

// Rescale the recurrence by 2^-RESCALE_BITS whenever a value passes 2^RESCALE_BITS.
const RESCALE_BITS: i32 = 830;

/// `J_n(x)` together with how it was obtained.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BesselValue {
    pub value: f64,
    pub order: u32,
    pub argument: f64,
    /// The envelope proved `|J_n(x)| < 1e-300` and zero was returned.
    pub short_circuited: bool,
}

/// Evaluates `J_n(x)` for integer `n >= 0` and finite real `x`.
pub fn bessel_j(n: u32, x: f64) -> Result<BesselValue> {
    if !x.is_finite() {
        return Err(Error::NonFinite {
            what: "Bessel argument",
            value: x,
        });
    }
    let (value, short_circuited) = eval(n, x);
    Ok(BesselValue {
        value,
        order: n,
        argument: x,
        short_circuited,
    })
}

/// Unchecked fast path for internal callers that already hold a finite `x`.
pub(crate) fn j(n: u32, x: f64) -> f64 {
    debug_assert!(x.is_finite());
    eval(n, x).0
}

/// `|x e / 2|^n`, an upper bound on `|J_n(n x)|` whenever `|x| <= 1`.
pub fn lemma1_bound(n: u32, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite {
            what: "bound argument",
            value: x,
        });
    }
    if n == 0 {
        return Err(Error::domain("order", 0.0, "n >= 1"));
    }
    if x.abs() > 1.0 {
        return Err(Error::domain("x", x, "|x| <= 1"));
    }
    let base = x.abs() * E / 2.0;
    Ok(match i32::try_from(n) {
        Ok(p) => base.powi(p),
        Err(_) => base.powf(f64::from(n)),
    })
}

/// `|x|^(-1/3)`, which bounds `|J_k(x)|` for every integer order `k`.
pub fn landau_bound(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite {
            what: "bound argument",
            value: x,
        });
    }
    if x == 0.0 {
        return Err(Error::domain("x", x, "x != 0"));
    }
    Ok(1.0 / x.abs().cbrt())
}

fn eval(n: u32, x: f64) -> (f64, bool) {
    if x == 0.0 {
        return (if n == 0 { 1.0 } else { 0.0 }, false);
    }
    let ax = x.abs();
    if below_envelope(n, ax) {
        return (0.0, true);
    }
    let magnitude = if ax <= SERIES_MAX_ARG && n <= SERIES_MAX_ORDER {
        power_series(n, ax)
    } else {
        miller(n, ax)
    };
    let odd_reflection = x < 0.0 && n % 2 == 1;
    (if odd_reflection { -magnitude } else { magnitude }, false)
}

// n >= |x| and (|x| e / 2n)^n < 1e-300, tested in log space to avoid underflow.
fn below_envelope(n: u32, ax: f64) -> bool {
    let nf = f64::from(n);
    if n == 0 || nf < ax {
        return false;
    }
    nf * (ax * E / (2.0 * nf)).ln() < SHORT_CIRCUIT_LEVEL.ln()
}

fn power_series(n: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut lead = 1.0;
    for k in 1..=n {
        lead *= half / f64::from(k);
    }
    let q = half * half;
    let mut term = 1.0;
    let mut acc = NeumaierSum::default();
    acc += 1.0;
    for k in 1..200u32 {
        term *= -q / (f64::from(k) * f64::from(n + k));
        acc += term;
        if term.abs() < 1e-18 * acc.total().abs() {
            break;
        }
    }
    lead * acc.total()
}

fn miller(n: u32, x: f64) -> f64 {
    let top = f64::from(n).max(x);
    let mut start = (top + 20.0 + 10.0 * top.cbrt()).ceil() as u64;
    start += start % 2;

    let up = 2f64.powi(RESCALE_BITS);
    let down = 2f64.powi(-RESCALE_BITS);
    let target = u64::from(n);

    let mut j_above = 0.0;
    let mut j_here = 1.0;
    let mut picked = if start == target { j_here } else { 0.0 };
    let mut norm = NeumaierSum::default();

    for k in (1..=start).rev() {
        let j_below = (2.0 * k as f64 / x) * j_here - j_above;
        j_above = j_here;
        j_here = j_below;
        let order = k - 1;
        if order == target {
            picked = j_here;
        }
        if order > 0 && order % 2 == 0 {
            norm += 2.0 * j_here;
        }
        if j_here.abs() > up {
            j_here *= down;
            j_above *= down;
            picked *= down;
            norm = scaled(norm, down);
        }
    }
    norm += j_here;
    picked / norm.total()
}

fn scaled(acc: NeumaierSum, factor: f64) -> NeumaierSum {
    // Power-of-two scaling is exact, so re-seeding from the total is lossless enough.
    let mut out = NeumaierSum::default();
    out += acc.total() * factor;
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel_j(0, 0.0).unwrap().value, 1.0);
        assert_eq!(bessel_j(1, 0.0).unwrap().value, 0.0);
        assert_eq!(bessel_j(7, 0.0).unwrap().value, 0.0);
    }

    #[test]
    fn j0_at_pi() {
        // 40-digit reference: -0.30424217764409386420203491281770492397
        let v = bessel_j(0, PI).unwrap().value;
        assert!((v - (-0.304_242_177_644_093_86)).abs() < 1e-15, "{v}");
    }

    #[test]
    fn non_finite_argument_rejected() {
        assert!(matches!(bessel_j(0, f64::NAN), Err(Error::NonFinite { .. })));
        assert!(bessel_j(3, f64::INFINITY).is_err());
    }

    #[test]
    fn deep_order_short_circuits() {
        let v = bessel_j(4000, 10.0).unwrap();
        assert!(v.short_circuited);
        assert_eq!(v.value, 0.0);
        assert!(!bessel_j(20, 10.0).unwrap().short_circuited);
    }

    #[test]
    fn odd_order_reflects() {
        let a = bessel_j(5, 17.25).unwrap().value;
        let b = bessel_j(5, -17.25).unwrap().value;
        assert_eq!(a, -b);
        let c = bessel_j(4, -17.25).unwrap().value;
        assert_eq!(c, bessel_j(4, 17.25).unwrap().value);
    }

    #[test]
    fn lemma1_examples() {
        assert_eq!(lemma1_bound(1, 0.0).unwrap(), 0.0);
        let want = (0.5 * E / 2.0) * (0.5 * E / 2.0);
        assert_eq!(lemma1_bound(2, 0.5).unwrap(), want);
        assert!((lemma1_bound(2, 0.5).unwrap() - (E / 4.0).powi(2)).abs() < 1e-16);
        assert!(matches!(lemma1_bound(3, 1.5), Err(Error::Domain { .. })));
        assert!(lemma1_bound(0, 0.5).is_err());
    }

    #[test]
    fn landau_examples() {
        assert_eq!(landau_bound(1.0).unwrap(), 1.0);
        assert_eq!(landau_bound(8.0).unwrap(), 0.5);
        assert_eq!(landau_bound(-8.0).unwrap(), 0.5);
        assert!(matches!(landau_bound(0.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn series_and_recurrence_agree_at_the_seam() {
        for n in 0..=SERIES_MAX_ORDER {
            for x in [0.3, 1.0, 4.5, 9.9, SERIES_MAX_ARG] {
                let a = power_series(n, x);
                let b = miller(n, x);
                assert!((a - b).abs() < 1e-12, "n={n} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn normalization_identity() {
        for &x in &[0.1, 1.0, 7.3, 42.0, 99.5] {
            let mut acc = NeumaierSum::default();
            acc += j(0, x);
            let mut k = 1;
            while 2 * k <= (x as u32) + 60 {
                acc += 2.0 * j(2 * k, x);
                k += 1;
            }
            assert!((acc.total() - 1.0).abs() < 1e-10, "x={x}: {}", acc.total());
        }
    }

    #[test]
    fn huge_argument_is_bounded() {
        let v = bessel_j(0, 1e5).unwrap().value;
        assert!(v.abs() <= landau_bound(1e5).unwrap());
        let w = bessel_j(100_000, 1e5).unwrap().value;
        // J_n(n) ~ 0.4473 n^(-1/3)
        assert!((w - 0.447_307_2 / 1e5f64.cbrt()).abs() < 1e-4, "{w}");
    }
}
