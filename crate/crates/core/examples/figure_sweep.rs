//! Leakage against N for 10 and 100 uniformly spread users at half-wavelength
//! spacing. Writes `sweep_m10.csv`, `sweep_m100.csv` and matching SVG charts
//! into the directory given as the first argument (default: current directory).

use std::path::PathBuf;

use favprop::harness::{dyadic, emit_csv, emit_svg, first_below, sweep_n, SweepConfig};

fn main() -> favprop::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let grid = dyadic(8, 16384);
    let mut crossings = Vec::new();
    for m in [10usize, 100] {
        let rows = sweep_n(&SweepConfig::uniform_planar(0.5, m, grid.clone()))?;
        emit_csv(&rows, dir.join(format!("sweep_m{m}.csv")))?;
        emit_svg(&rows, dir.join(format!("sweep_m{m}.svg")))?;
        println!("M = {m}");
        for r in &rows {
            println!("  N = {:>5}  |alpha_N| = {:.4}", r.n, r.alpha_total);
        }
        crossings.push(first_below(&rows, 0.1));
    }
    if let [Some(a), Some(b)] = crossings[..] {
        println!("first N below 0.1: {a} (M = 10), {b} (M = 100), ratio {}", b / a);
    }
    Ok(())
}
