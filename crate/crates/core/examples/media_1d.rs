//! The 1D medium n = 1/x² and its wave x sin(1/x).
use compensating_media::{MediumKind, MediumSpec};

fn main() -> compensating_media::Result<()> {
    let m = MediumSpec::new(MediumKind::Compensating1D);
    println!("{:>6} {:>12} {:>12} {:>12} {:>12}", "x", "n", "V/E", "S", "psi");
    for x in [0.25, 0.5, 1.0, 2.0, 4.0] {
        println!(
            "{x:>6} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            m.index(x)?,
            m.potential(x)?,
            m.action(x)?,
            m.psi(x)?
        );
    }
    println!("psi(2/pi) = {}", m.psi(2.0 / std::f64::consts::PI)?);
    Ok(())
}
