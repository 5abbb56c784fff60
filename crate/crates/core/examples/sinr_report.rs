use favprop::arrays::{AngleOfArrival, ArrayGeometry, UcaGeometry};
use favprop::sinr::{sinr_matched_filter, MultiUserScenario, User};

fn main() -> favprop::Result<()> {
    let snrs_db = [20.0, 15.0, 25.0, 10.0];
    for n in [16usize, 64, 256, 1024] {
        let users = snrs_db
            .iter()
            .enumerate()
            .map(|(i, db)| User::new(AngleOfArrival::planar(0.9 * i as f64)?, 10f64.powf(db / 10.0)))
            .collect::<favprop::Result<Vec<_>>>()?;
        let scenario = MultiUserScenario::new(ArrayGeometry::Uca2d(UcaGeometry::new(n, 0.5)?), users)?;
        let report = sinr_matched_filter(&scenario)?;
        println!(
            "N = {n:>5}: SINR {:6.2} dB (interference-free {:.2} dB), sum |alpha|^2 gamma = {:.4}",
            report.sinr_db(),
            10.0 * report.gamma1.log10(),
            report.aggregate_leakage_sq
        );
    }
    Ok(())
}
