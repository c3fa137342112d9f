use compensating_media::specfun::{self, BesselOrder};

fn main() -> compensating_media::Result<()> {
    println!("Gamma(7/6) = {:.17}", specfun::gamma(7.0 / 6.0)?);
    println!("Gamma(7/6) Gamma(5/6) - pi/3 = {:e}", specfun::gamma(7.0 / 6.0)? * specfun::gamma(5.0 / 6.0)? - std::f64::consts::PI / 3.0);
    for z in [0.5, 5.0, 19.9, 20.1, 40.0] {
        let jp = specfun::bessel_j(BesselOrder::PLUS_SIXTH, z)?;
        let jm = specfun::bessel_j(BesselOrder::MINUS_SIXTH, z)?;
        println!("z = {z:>5}: J_1/6 = {jp:+.15}, J_-1/6 = {jm:+.15}");
    }
    println!("first zero of J_1/6: {:.15}", specfun::bessel_j_first_zero(BesselOrder::PLUS_SIXTH)?);
    println!(
        "series/asymptotic mismatch at the crossover: {:e}",
        specfun::crossover_discrepancy(BesselOrder::PLUS_SIXTH, specfun::SERIES_CROSSOVER)?
    );
    Ok(())
}
