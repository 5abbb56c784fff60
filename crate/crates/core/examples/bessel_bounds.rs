//! Tabulates J_n(x) next to the two envelopes that bound it.

use favprop::bessel::{bessel_j, landau_bound, lemma1_bound};

fn main() -> favprop::Result<()> {
    println!("{:>5} {:>10} {:>14} {:>12}", "n", "x", "J_n(x)", "|x|^(-1/3)");
    for &(n, x) in &[(0, 3.0), (1, 2.5), (8, 1.0), (40, 35.0), (200, 190.0), (1000, 5000.0)] {
        let v = bessel_j(n, x)?;
        println!("{n:>5} {x:>10.3} {:>14.6e} {:>12.6}", v.value, landau_bound(x)?);
    }

    println!();
    println!("J_n(n x) against (x e / 2)^n");
    for n in [1u32, 4, 16, 64] {
        for x in [0.25, 0.5, 0.9] {
            let v = bessel_j(n, f64::from(n) * x)?.value;
            println!(
                "  n={n:<3} x={x:<5} |J|={:.3e}  bound={:.3e}",
                v.abs(),
                lemma1_bound(n, x)?
            );
        }
    }

    // Deep orders never touch the recurrence.
    let tiny = bessel_j(5000, 20.0)?;
    println!(
        "\nJ_5000(20) = {} (short-circuited: {})",
        tiny.value, tiny.short_circuited
    );
    Ok(())
}
