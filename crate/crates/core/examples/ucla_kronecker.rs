use favprop::arrays::{AngleOfArrival, UcaGeometry, UclaGeometry, UlaGeometry};
use favprop::leakage::{alpha_direct, alpha_series_3d, alpha_ucla_factored, alpha_ula, deltas_3d, DEFAULT_SERIES_TOL};

fn main() -> favprop::Result<()> {
    let geom = UclaGeometry::new(UcaGeometry::new(16, 0.5)?, UlaGeometry::new(8, 0.4)?);
    let u1 = AngleOfArrival::from_degrees(10.0, 80.0)?;

    for (az, el) in [(50.0, 80.0), (10.0, 100.0), (200.0, 45.0)] {
        let ui = AngleOfArrival::from_degrees(az, el)?;
        let full = alpha_direct(&geom.steering(&u1), &geom.steering(&ui))?;
        let factored = alpha_ucla_factored(&geom, &u1, &ui)?;
        let h = alpha_series_3d(&geom.uca, &deltas_3d(&u1, &ui, &geom.uca), DEFAULT_SERIES_TOL)?;
        let v = alpha_ula(&geom.ula, u1.elevation(), ui.elevation());
        println!("user at ({az}, {el}) deg");
        println!("  |alpha| full {:.12}  factored {:.12}", full.norm(), factored.norm());
        println!("  |alpha_h| {:.6}  |alpha_v| {:.6}", h.norm(), v.norm());
    }
    Ok(())
}
