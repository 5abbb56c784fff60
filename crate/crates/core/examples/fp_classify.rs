use favprop::arrays::{AngleOfArrival, ArrayGeometry, UcaGeometry, UclaGeometry, UlaGeometry};
use favprop::leakage::{fp_classify, fp_classify_counterexample, Counterexample, Expansion};

fn show(label: &str, verdict: &favprop::leakage::FpVerdict) {
    println!("{label:<34} {}", serde_json::to_string(verdict).unwrap());
}

fn main() -> favprop::Result<()> {
    let uca = UcaGeometry::new(64, 0.5)?;
    let deg = AngleOfArrival::from_degrees;

    let planar = [deg(0.0, 90.0)?, deg(30.0, 90.0)?, deg(360.0, 90.0)?];
    show(
        "2-D, interferer on main azimuth",
        &fp_classify(&ArrayGeometry::Uca2d(uca), &planar, Expansion::Horizontal)?,
    );

    let mirrored = [deg(20.0, 60.0)?, deg(20.0, 120.0)?];
    show(
        "3-D, mirrored elevations",
        &fp_classify(&ArrayGeometry::Uca3d(uca), &mirrored, Expansion::Horizontal)?,
    );

    let stacked = [deg(0.0, 60.0)?, deg(90.0, 80.0)?];
    for d_v in [0.4, 0.5] {
        let g = ArrayGeometry::Ucla(UclaGeometry::new(uca, UlaGeometry::new(8, d_v)?));
        show(
            &format!("UCLA vertical, d_v = {d_v}"),
            &fp_classify(&g, &stacked, Expansion::Vertical)?,
        );
    }

    show(
        "shrinking separation",
        &fp_classify_counterexample(Counterexample::Shrinking, 0.5)?,
    );
    show(
        "M = N users",
        &fp_classify_counterexample(Counterexample::DenseUniform, 0.5)?,
    );
    Ok(())
}
