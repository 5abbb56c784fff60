use favprop::arrays::AngleOfArrival;
use favprop::leakage::{min_antennas, min_antennas_uniform};

fn main() -> favprop::Result<()> {
    let users = [0.0, 5.0, 40.0, 180.0]
        .into_iter()
        .map(|a| AngleOfArrival::from_degrees(a, 90.0))
        .collect::<favprop::Result<Vec<_>>>()?;
    for margin in [1.0, 4.0, 16.0] {
        let r = min_antennas(&users, 0.5, margin)?;
        println!("margin {margin:>4}: N >= {}", r.n);
    }
    for m in [10usize, 100] {
        println!(
            "{m} uniform users, margin 4: N >= {}",
            min_antennas_uniform(m, 0.5, 4.0)
        );
    }
    Ok(())
}
