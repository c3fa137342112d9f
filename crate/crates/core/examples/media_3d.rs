//! The 3D medium n = r²: the regular s-wave, its first node and its r⁻² envelope.
use compensating_media::media;

fn main() -> compensating_media::Result<()> {
    println!("psi(0)        = {:.16}", media::psi_3d_origin(1.0));
    println!("series coeffs = {:?}", media::local_series_coefficients(3));
    println!("first node    = {:.15}", media::first_node_3d()?);
    let k = media::envelope_constant_3d(1.0);
    println!("envelope      = {k:.15}");
    for r in [0.0, 0.5, 1.0, 2.0, 3.0, 5.0, 8.0] {
        let psi = media::psi_3d(r, 1.0)?;
        println!("r = {r:<4} psi = {psi:+.12}  |psi| r^2 / K = {:.4}", psi.abs() * r * r / k);
    }
    // with an irregular part the wave diverges at the origin
    println!("C1 = 1 at r = 0.1: {:+.6}", media::psi_3d_general(0.1, 1.0, 1.0)?);
    Ok(())
}
