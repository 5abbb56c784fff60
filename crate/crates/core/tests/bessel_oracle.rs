use favprop::bessel::{bessel_j, landau_bound, lemma1_bound};
use favprop::leakage::predicted_limit_shrinking;
use favprop_oracle::{bessel_j_series, bisect};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

const ORDERS: [u32; 25] = [
    0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 15, 20, 25, 30, 31, 40, 50, 64, 80, 100, 128, 160, 200, 256,
];

fn j(n: u32, x: f64) -> f64 {
    bessel_j(n, x).unwrap().value
}

#[test]
fn thousand_point_grid_matches_oracle() {
    let args: Vec<f64> = (0..40).map(|i| 0.05 * 10f64.powf(i as f64 * 4.0 / 39.0)).collect();
    let mut checked = 0;
    for &n in &ORDERS {
        for &x in &args {
            let want = bessel_j_series(n, x);
            let got = j(n, x);
            assert!((got - want).abs() <= 1e-12, "J_{n}({x}): {got} vs {want}");
            checked += 1;
        }
    }
    assert_eq!(checked, 1000);
}

#[test]
#[allow(clippy::excessive_precision)]
fn reference_values() {
    // 40-digit references
    let j0_pi = -0.304_242_177_644_093_864_202_034_912_817_704_923_97;
    let j8_1 = 9.422_344_172_604_500_545_385_401_466_982_582_667_7e-8;
    let j0_12 = 0.047_689_310_796_833_536_623_811_689_141_429_138_461;
    let j3_7_5 = -0.258_060_913_193_460_311_662_659_323_233_361_160_9;
    for (n, x, want) in [(0, PI, j0_pi), (8, 1.0, j8_1), (0, 12.0, j0_12), (3, 7.5, j3_7_5)] {
        assert!((bessel_j_series(n, x) - want).abs() < 1e-15, "oracle J_{n}({x})");
        assert!((j(n, x) - want).abs() < 1e-12, "J_{n}({x})");
    }
    assert!((j(8, 1.0) - bessel_j_series(8, 1.0)).abs() < 1e-12);
}

#[test]
fn lemma1_holds_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2000 {
        let n: u32 = rng.gen_range(1..=200);
        let x: f64 = rng.gen_range(-1.0..=1.0);
        let exact = bessel_j_series(n, f64::from(n) * x).abs();
        assert!(exact <= lemma1_bound(n, x).unwrap(), "n={n} x={x}");
    }
}

#[test]
fn landau_holds_on_moderate_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..500 {
        let k: u32 = rng.gen_range(0..=100);
        let x = 10f64.powf(rng.gen_range(-1.0..2.5));
        assert!(bessel_j_series(k, x).abs() <= landau_bound(x).unwrap(), "k={k} x={x}");
    }
}

#[test]
fn negative_order_symmetry() {
    // J_{-k} = (-1)^k J_k, with J_{-k} from the backward recurrence
    // J_{k-1} + J_{k+1} = (2k/x) J_k run past zero.
    for &x in &[0.7, 3.3, 18.0, 55.5] {
        let mut prev = j(1, x);
        let mut here = j(0, x);
        for k in 0..50u32 {
            // J_{-(k+1)} = (2(-k)/x) J_{-k} - J_{-(k-1)}
            let next = -2.0 * f64::from(k) / x * here - prev;
            let sign = if (k + 1) % 2 == 0 { 1.0 } else { -1.0 };
            let want = sign * j(k + 1, x);
            // Upward recurrence is unstable past the turning point; compare where it is not.
            if want.abs() > 1e-6 {
                assert!((next - want).abs() <= 1e-8, "x={x} k={}", k + 1);
            }
            prev = here;
            here = next;
        }
    }
}

#[test]
fn normalization_over_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let x: f64 = rng.gen_range(0.1..100.0);
        let mut total = j(0, x);
        for k in 1..=((x as u32) / 2 + 40) {
            total += 2.0 * j(2 * k, x);
        }
        assert!((total - 1.0).abs() < 1e-10, "x={x}: {total}");
    }
}

#[test]
fn values_within_both_envelopes() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..5000 {
        let n: u32 = rng.gen_range(0..2000);
        let x = 10f64.powf(rng.gen_range(-2.0..4.5)) * if rng.gen_bool(0.5) { -1.0 } else { 1.0 };
        let v = bessel_j(n, x).unwrap();
        assert!(
            v.value.abs() <= 1.0_f64.min(landau_bound(x).unwrap()) + 1e-15,
            "J_{n}({x}) = {}",
            v.value
        );
        if v.short_circuited {
            assert_eq!(v.value, 0.0);
        }
    }
}

#[test]
fn first_null_of_j0_gives_zero_limit() {
    let root = bisect(2.0, 3.0, |x| bessel_j_series(0, x));
    assert!((root - 2.404_825_557_695_773).abs() < 1e-14);
    let d = root / (2.0 * PI);
    assert!((d - 0.382_739_874_781_006_2).abs() < 1e-14);
    assert!(predicted_limit_shrinking(d).unwrap() < 1e-14);
    assert!((predicted_limit_shrinking(1e-9).unwrap() - 1.0).abs() < 1e-15);
    let want = bessel_j_series(0, PI).abs();
    assert!((predicted_limit_shrinking(0.5).unwrap() - want).abs() < 1e-15);
}

#[test]
fn large_order_and_argument_match_oracle() {
    for (n, x) in [(3, 5e4), (99_000, 1e5)] {
        let want = bessel_j_series(n, x);
        assert!((j(n, x) - want).abs() <= 1e-12, "J_{n}({x})");
    }
}
