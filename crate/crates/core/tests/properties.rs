use std::f64::consts::{FRAC_PI_2, PI, TAU};

use favprop::arrays::{AngleOfArrival, ArrayGeometry, UcaGeometry, UclaGeometry, UlaGeometry};
use favprop::leakage::{
    alpha_direct, alpha_series_2d, alpha_series_3d, alpha_ucla_factored, alpha_ula, deltas_3d, fp_classify,
    leakage_bound, leakage_factors, truncation_k, Expansion, Separation, DEFAULT_SERIES_TOL,
};
use favprop::sinr::{sinr_matched_filter, MultiUserScenario, User};
use favprop_oracle::{bessel_j_series, naive_inner};
use num_complex::Complex64;
use proptest::prelude::*;

fn aoa() -> impl Strategy<Value = AngleOfArrival> {
    (0.0..TAU, 0.0..=PI).prop_map(|(az, el)| AngleOfArrival::new(az, el).unwrap())
}

fn planar() -> impl Strategy<Value = AngleOfArrival> {
    (0.0..TAU).prop_map(|az| AngleOfArrival::planar(az).unwrap())
}

fn uca() -> impl Strategy<Value = UcaGeometry> {
    (2usize..=128, 0.05..1.5f64).prop_map(|(n, d)| UcaGeometry::new(n, d).unwrap())
}

fn ucla() -> impl Strategy<Value = UclaGeometry> {
    (uca(), 2usize..=12, 0.05..1.0f64).prop_map(|(h, nc, dv)| UclaGeometry::new(h, UlaGeometry::new(nc, dv).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn steering_entries_are_unit_phasors(g in ucla(), a in aoa(), phi in 0.0..TAU) {
        for v in [g.uca.steering_2d(phi), g.uca.steering_3d(&a), g.ula.steering(a.elevation()), g.steering(&a)] {
            for e in v.entries() {
                prop_assert!((e.norm() - 1.0).abs() < 1e-14);
            }
            prop_assert!((v.norm_sqr() - v.len() as f64).abs() < 1e-10);
        }
    }

    #[test]
    fn horizontal_user_matches_planar(g in uca(), phi in 0.0..TAU) {
        let flat = g.steering_2d(phi);
        let tilted = g.steering_3d(&AngleOfArrival::new(phi, FRAC_PI_2).unwrap());
        for (a, b) in flat.entries().iter().zip(tilted.entries()) {
            prop_assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn ucla_is_explicit_double_loop(g in ucla(), a in aoa()) {
        let full = g.steering(&a);
        let h = g.uca.steering_3d(&a);
        let v = g.ula.steering(a.elevation());
        for i in 0..h.len() {
            for m in 0..v.len() {
                prop_assert!((full[i * v.len() + m] - h[i] * v[m]).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn planar_series_matches_direct(g in uca(), phi in 0.0..TAU) {
        let direct = alpha_direct(&g.steering_2d(0.0), &g.steering_2d(phi)).unwrap();
        let series = alpha_series_2d(&g, phi, DEFAULT_SERIES_TOL).unwrap();
        prop_assert!((direct - series).norm() <= 1e-9, "{direct} vs {series}");
    }

    #[test]
    fn spatial_series_matches_direct(g in uca(), a in aoa(), b in aoa()) {
        let direct = alpha_direct(&g.steering_3d(&a), &g.steering_3d(&b)).unwrap();
        let series = alpha_series_3d(&g, &deltas_3d(&a, &b, &g), DEFAULT_SERIES_TOL).unwrap();
        prop_assert!((direct - series).norm() <= 1e-9, "{direct} vs {series}");
    }

    #[test]
    fn direct_matches_naive_sum(g in uca(), a in aoa(), b in aoa()) {
        let (ha, hb) = (g.steering_3d(&a), g.steering_3d(&b));
        let naive = naive_inner(ha.entries(), hb.entries());
        prop_assert!((alpha_direct(&ha, &hb).unwrap() - naive).norm() < 1e-12);
    }

    #[test]
    fn hermitian_symmetry(g in uca(), a in aoa(), b in aoa()) {
        let (ha, hb) = (g.steering_3d(&a), g.steering_3d(&b));
        let ab = alpha_direct(&ha, &hb).unwrap();
        let ba = alpha_direct(&hb, &ha).unwrap();
        prop_assert!((ab - ba.conj()).norm() < 1e-14);
    }

    #[test]
    fn kronecker_factorization(g in ucla(), a in aoa(), b in aoa()) {
        let full = alpha_direct(&g.steering(&a), &g.steering(&b)).unwrap();
        let factored = alpha_ucla_factored(&g, &a, &b).unwrap();
        prop_assert!((full - factored).norm() < 1e-12);
        let h = alpha_direct(&g.uca.steering_3d(&a), &g.uca.steering_3d(&b)).unwrap();
        let v = alpha_ula(&g.ula, a.elevation(), b.elevation());
        prop_assert!(full.norm() <= h.norm().min(v.norm()) + 1e-12);
    }

    #[test]
    fn ula_closed_form_matches_direct(nc in 2usize..=64, dv in 0.05..2.0f64, t1 in 0.0..=PI, t2 in 0.0..=PI) {
        let g = UlaGeometry::new(nc, dv).unwrap();
        let direct = alpha_direct(&g.steering(t1), &g.steering(t2)).unwrap();
        prop_assert!((direct - alpha_ula(&g, t1, t2)).norm() < 1e-13);
    }

    #[test]
    fn coincident_users_leak_fully(g in ucla(), a in aoa()) {
        for geom in [ArrayGeometry::Uca2d(g.uca), ArrayGeometry::Uca3d(g.uca), ArrayGeometry::Ucla(g)] {
            let alpha = leakage_factors(&geom, &[a, a]).unwrap()[0];
            prop_assert!((alpha.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn z_sandwich(g in uca(), phi in 0.0..TAU) {
        let main = AngleOfArrival::planar(0.0).unwrap();
        let z = deltas_3d(&main, &AngleOfArrival::planar(phi).unwrap(), &g).z;
        let (n, d) = (g.n_elements() as f64, g.spacing());
        let s = (0.5 * phi).sin().abs();
        prop_assert!(z >= 2.0 * n * d * s * (1.0 - 1e-12));
        prop_assert!(z <= n * PI * d * s * (1.0 + 1e-12));
        prop_assert!(z <= n * PI * d * (1.0 + 1e-12));
    }

    #[test]
    fn shrinking_pair_keeps_z_fixed(n in 2usize..1_000_000, d in 0.01..2.0f64) {
        let g = UcaGeometry::new(n, d).unwrap();
        let z = 4.0 * PI * g.radius() * (PI / n as f64).sin();
        prop_assert!((z - TAU * d).abs() <= 1e-12 * z.max(1.0));
    }

    #[test]
    fn bound_holds(n in 2usize..=2048, d in 0.05..1.5f64, a in aoa(), b in aoa(), phi in 1e-3..(TAU - 1e-3)) {
        let g = UcaGeometry::new(n, d).unwrap();
        let flat = alpha_direct(&g.steering_2d(0.0), &g.steering_2d(phi)).unwrap();
        prop_assert!(flat.norm() <= leakage_bound(&g, Separation::Azimuth(phi)).unwrap().total);
        let deltas = deltas_3d(&a, &b, &g);
        prop_assume!(deltas.delta > 1e-9);
        let spatial = alpha_series_3d(&g, &deltas, DEFAULT_SERIES_TOL).unwrap();
        prop_assert!(spatial.norm() <= leakage_bound(&g, Separation::Spatial(deltas)).unwrap().total);
    }

    #[test]
    fn verdict_flags_agree(g in ucla(), users in prop::collection::vec(aoa(), 1..6), vertical in any::<bool>()) {
        let expansion = if vertical { Expansion::Vertical } else { Expansion::Horizontal };
        let v = fp_classify(&ArrayGeometry::Ucla(g), &users, expansion).unwrap();
        prop_assert_eq!(v.holds, v.violated_condition.is_none());
        prop_assert!(v.predicted_limit.is_none());
        prop_assert!(v.violating_user_indices.iter().all(|&i| i >= 1 && i < users.len()));
    }

    #[test]
    fn sinr_never_beats_single_user(g in uca(), users in prop::collection::vec((planar(), 0.0..1e4f64), 1..8)) {
        let users: Vec<User> = users.into_iter().map(|(a, s)| User::new(a, s).unwrap()).collect();
        let gamma1 = users[0].snr;
        let single = users.len() == 1;
        let r = sinr_matched_filter(&MultiUserScenario::new(ArrayGeometry::Uca2d(g), users).unwrap()).unwrap();
        prop_assert!(r.sinr <= gamma1);
        if single {
            prop_assert_eq!(r.sinr, gamma1);
        }
    }

    #[test]
    fn sinr_drops_with_extra_interferer(g in uca(), main in planar(), rest in prop::collection::vec(planar(), 0..5), extra in planar()) {
        let make = |list: &[AngleOfArrival]| {
            let users = list.iter().map(|a| User::new(*a, 100.0).unwrap()).collect();
            sinr_matched_filter(&MultiUserScenario::new(ArrayGeometry::Uca2d(g), users).unwrap()).unwrap().sinr
        };
        let mut base = vec![main];
        base.extend(&rest);
        let mut more = base.clone();
        more.push(extra);
        prop_assert!(make(&more) <= make(&base) * (1.0 + 1e-12));
    }

    #[test]
    fn sinr_ignores_interferer_order(g in uca(), users in prop::collection::vec((planar(), 0.0..1e3f64), 3..7)) {
        let users: Vec<User> = users.into_iter().map(|(a, s)| User::new(a, s).unwrap()).collect();
        let mut reversed = users.clone();
        reversed[1..].reverse();
        let geom = ArrayGeometry::Uca2d(g);
        let a = sinr_matched_filter(&MultiUserScenario::new(geom, users).unwrap()).unwrap().sinr;
        let b = sinr_matched_filter(&MultiUserScenario::new(geom, reversed).unwrap()).unwrap().sinr;
        prop_assert!((a - b).abs() <= 1e-12 * a);
    }
}

#[test]
fn truncated_tail_is_below_tolerance() {
    let g = UcaGeometry::new(4, 0.5).unwrap();
    let tol = 1e-30;
    let k = truncation_k(&g, tol).unwrap();
    // Largest z the planar series can see at this geometry is 4 pi R.
    let z = 4.0 * PI * g.radius();
    let tail: f64 = (k + 1..k + 40).map(|m| 2.0 * bessel_j_series(m * 4, z).abs()).sum();
    assert!(tail < tol, "K={k} tail={tail}");
    assert_eq!(truncation_k(&g, 1.0).unwrap(), favprop::leakage::k1(0.5));
}

#[test]
fn rotation_by_one_element_permutes_entries() {
    let g = UcaGeometry::new(12, 0.5).unwrap();
    let a = g.steering_2d(0.4);
    let b = g.steering_2d(0.4 + TAU / 12.0);
    let shifted: Vec<Complex64> = (0..12).map(|i| a[(i + 11) % 12]).collect();
    for (x, y) in b.entries().iter().zip(&shifted) {
        assert!((x - y).norm() < 1e-14);
    }
}
