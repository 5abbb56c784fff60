//! Two users whose separation shrinks as 2 pi / N never decouple: the leakage
//! settles at |J_0(2 pi d)| instead of going to zero.

use favprop::harness::commands::limit_check;

fn main() -> favprop::Result<()> {
    for d in [0.5, 0.25] {
        let report = limit_check(d, 4096)?;
        println!("d = {d}: predicted limit {:.12}", report.predicted_limit);
        for r in &report.rows {
            println!("  N = {:>5}  |alpha| = {:.12}  z = {:.12}", r.n, r.alpha, r.z);
        }
    }
    Ok(())
}
