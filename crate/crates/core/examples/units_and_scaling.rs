//! Converting a physical setup to the dimensionless coordinates used everywhere else.
use compensating_media::units::{self, PhysicalParams};

fn main() -> compensating_media::Result<()> {
    // an electron-like particle in atomic units
    let p = PhysicalParams::new(1.0, 0.125, 1.0)?;
    println!("de Broglie length: {}", p.lambda_bar());
    for x in [0.5, 1.0, 4.0] {
        let s = units::to_scaled(x, &p);
        println!(
            "x = {x:<4} -> x/lambda = {:.6}, zeta = {:.6}, sqrtE = {:.6}",
            units::to_dimensionless(x, &p),
            s.zeta,
            s.sqrt_e
        );
    }
    // energy at which the medium's unit length equals 2 physical units
    let e = PhysicalParams::energy_for_length(1.0, 1.0, 2.0)?;
    println!("energy for lambda = 2: {e}");
    Ok(())
}
