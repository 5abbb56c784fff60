//! Leakage between two users computed two ways: the direct inner product of
//! steering vectors and the Bessel series, which costs O(K) instead of O(N).

use favprop::arrays::{AngleOfArrival, UcaGeometry};
use favprop::leakage::{
    alpha_direct, alpha_series_2d, alpha_series_3d, deltas_3d, leakage_bound, truncation_k, Separation,
    DEFAULT_SERIES_TOL,
};

fn main() -> favprop::Result<()> {
    let phi = 0.7;
    println!(
        "{:>6} {:>14} {:>14} {:>10} {:>4} {:>10}",
        "N", "|direct|", "|series|", "diff", "K", "bound"
    );
    for n in [8usize, 32, 128, 512, 2048] {
        let geom = UcaGeometry::new(n, 0.5)?;
        let direct = alpha_direct(&geom.steering_2d(0.0), &geom.steering_2d(phi))?;
        let series = alpha_series_2d(&geom, phi, DEFAULT_SERIES_TOL)?;
        let bound = leakage_bound(&geom, Separation::Azimuth(phi))?;
        println!(
            "{n:>6} {:>14.9} {:>14.9} {:>10.1e} {:>4} {:>10.4}",
            direct.norm(),
            series.norm(),
            (direct - series).norm(),
            truncation_k(&geom, DEFAULT_SERIES_TOL)?,
            bound.total
        );
    }

    let geom = UcaGeometry::new(64, 0.5)?;
    let u1 = AngleOfArrival::from_degrees(0.0, 70.0)?;
    let u2 = AngleOfArrival::from_degrees(40.0, 110.0)?;
    let deltas = deltas_3d(&u1, &u2, &geom);
    let series = alpha_series_3d(&geom, &deltas, DEFAULT_SERIES_TOL)?;
    let direct = alpha_direct(&geom.steering_3d(&u1), &geom.steering_3d(&u2))?;
    println!("\n3-D, N = 64: delta = {:.6}, beta = {:.6}", deltas.delta, deltas.beta);
    println!("  series {series:.10}\n  direct {direct:.10}");
    Ok(())
}
