use favprop::arrays::{AngleOfArrival, UcaGeometry, UclaGeometry, UlaGeometry};

fn main() -> favprop::Result<()> {
    let uca = UcaGeometry::new(8, 0.5)?;
    println!("N = 8, d = 0.5: radius {:.6} wavelengths", uca.radius());

    let planar = uca.steering_2d(0.3);
    for (i, a) in planar.entries().iter().enumerate() {
        println!("  a[{i}] = {:+.6} {:+.6}j  (angle {:+.4})", a.re, a.im, a.arg());
    }
    println!("  ||a||^2 = {:.12}", planar.norm_sqr());

    let aoa = AngleOfArrival::from_degrees(30.0, 60.0)?;
    let tilted = uca.steering_3d(&aoa);
    println!("elevated user, first entry {:.6}", tilted.entries()[0]);

    let ucla = UclaGeometry::new(uca, UlaGeometry::new(4, 0.4)?);
    let stacked = ucla.steering(&aoa);
    println!(
        "UCLA 8 x 4: {} entries, ||a||^2 = {:.6}",
        stacked.len(),
        stacked.norm_sqr()
    );
    Ok(())
}
