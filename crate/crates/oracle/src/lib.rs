//! Reference evaluators for favprop's test suites.
//!
//! Nothing here is used by the library itself. The Bessel evaluator sums the
//! ascending series
//!
//! ```text
//! J_n(x) = sum_k (-1)^k (x/2)^(2k+n) / (k! (n+k)!)
//! ```
//!
//! exactly in binary fixed point, with enough fractional bits to absorb the
//! cancellation between terms (bounded by `e^|x|`). The input `x` is a
//! dyadic rational, so every multiplication is exact and only the divisions
//! by `(k+1)(n+k+1)` truncate.

use num_bigint::{BigInt, BigUint, Sign};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Bits of relative precision carried by the leading factor `(x/2)^n / n!`.
const LEAD_BITS: u64 = 192;

/// Guard bits on top of the cancellation allowance.
const GUARD_BITS: u64 = 160;

/// `J_n(x)` from the ascending series, summed in fixed point.
///
/// The result is correctly rounded to within a few ulps of f64 for every
/// finite `x`; cost grows roughly like `|x|^2` bits-times-terms, so keep
/// `|x|` below a few times `10^4`.
pub fn bessel_j_series(n: u32, x: f64) -> f64 {
    assert!(x.is_finite(), "oracle needs finite x");
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let negate = x < 0.0 && n % 2 == 1;
    let (mant, exp) = decompose(x.abs());
    let half_exp = exp - 1; // x/2 = mant * 2^half_exp

    // Leading factor (x/2)^n / n! as a big-mantissa float.
    let mut lead_mant = BigUint::one() << LEAD_BITS;
    let mut lead_exp: i64 = -(LEAD_BITS as i64);
    for j in 1..=u64::from(n) {
        lead_mant *= mant;
        lead_exp += half_exp;
        lead_mant /= j;
        let bits = lead_mant.bits();
        if bits > LEAD_BITS + 64 {
            let drop = bits - LEAD_BITS;
            lead_mant >>= drop;
            lead_exp += drop as i64;
        }
    }

    // Ratio series S = sum_k (-1)^k r_k, r_0 = 1,
    // r_{k+1} = r_k (x/2)^2 / ((k+1)(n+k+1)).
    // sum |r_k| * lead = I_n(|x|) <= e^|x|, so |x| log2(e) bits cover the cancellation.
    let cancel_bits = (x.abs() * std::f64::consts::LOG2_E).ceil() as u64;
    let frac = GUARD_BITS + cancel_bits;
    let sq_exp = 2 * half_exp;
    let n64 = u64::from(n);
    let mut term = BigUint::one() << frac;
    let mut plus = term.clone();
    let mut minus = BigUint::zero();
    let mut k: u64 = 0;
    let quarter_sq = (x / 2.0) * (x / 2.0);
    loop {
        term *= mant;
        term *= mant;
        if sq_exp >= 0 {
            term <<= sq_exp as u64;
        } else {
            term >>= (-sq_exp) as u64;
        }
        term /= (k + 1) * (n64 + k + 1);
        k += 1;
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            minus += &term;
        } else {
            plus += &term;
        }
        // Terms decrease monotonically once (x/2)^2 < (k+1)(n+k+1).
        if quarter_sq < ((k + 1) * (n64 + k + 1)) as f64 && term.bits() < 8 {
            break;
        }
    }
    let sum = BigInt::from_biguint(Sign::Plus, plus) - BigInt::from_biguint(Sign::Plus, minus);

    let product = sum * BigInt::from_biguint(Sign::Plus, lead_mant);
    let value = to_f64(&product, lead_exp - frac as i64);
    if negate {
        -value
    } else {
        value
    }
}

/// `(1/N) sum_n conj(a_n) b_n` with plain left-to-right accumulation.
pub fn naive_inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    assert_eq!(a.len(), b.len());
    let total: Complex64 = a.iter().zip(b).map(|(x, y)| x.conj() * y).sum();
    total / a.len() as f64
}

/// Bisection for a sign change of `f` in `[lo, hi]`.
pub fn bisect(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    let mut f_lo = f(lo);
    assert!(f_lo * f(hi) <= 0.0, "no sign change in bracket");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn decompose(x: f64) -> (u64, i64) {
    let bits = x.to_bits();
    let raw_exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    if raw_exp == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), raw_exp - 1075)
    }
}

fn to_f64(v: &BigInt, exp: i64) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    let bits = v.bits();
    let (top, exp) = if bits > 64 {
        (v.abs() >> (bits - 64), exp + (bits - 64) as i64)
    } else {
        (v.abs(), exp)
    };
    let mag = ldexp(top.to_u64().unwrap() as f64, exp);
    if v.is_negative() {
        -mag
    } else {
        mag
    }
}

fn ldexp(mut f: f64, mut exp: i64) -> f64 {
    while exp > 1000 {
        f *= 2f64.powi(1000);
        exp -= 1000;
    }
    while exp < -1000 {
        f *= 2f64.powi(-1000);
        exp += 1000;
        if f == 0.0 {
            return 0.0;
        }
    }
    f * 2f64.powi(exp as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_values() {
        assert_eq!(bessel_j_series(0, 0.0), 1.0);
        assert_eq!(bessel_j_series(3, 0.0), 0.0);
    }

    #[test]
    #[allow(clippy::excessive_precision)]
    fn matches_published_digits() {
        // J_0(pi), J_8(1), J_0(12), J_3(7.5) to 40 digits from an independent CAS.
        let cases = [
            (0, std::f64::consts::PI, -0.304_242_177_644_093_864_202_034_912_8),
            (8, 1.0, 9.422_344_172_604_500_545_385_401_466_982_6e-8),
            (0, 12.0, 0.047_689_310_796_833_536_623_811_689_141_4),
            (3, 7.5, -0.258_060_913_193_460_311_662_659_323_233_3),
        ];
        for (n, x, want) in cases {
            let got = bessel_j_series(n, x);
            assert!(
                (got - want).abs() <= 1e-16 + 1e-15 * want.abs(),
                "J_{n}({x}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn odd_order_negative_argument() {
        let a = bessel_j_series(3, 2.5);
        let b = bessel_j_series(3, -2.5);
        assert_eq!(a, -b);
    }

    #[test]
    fn large_argument_stays_bounded() {
        let v = bessel_j_series(5, 2000.0);
        assert!(v.abs() < 0.02, "{v}");
    }

    #[test]
    fn bisect_finds_root() {
        let r = bisect(1.0, 2.0, |x| x * x - 2.0);
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-15);
    }
}
