//! Nodes of the 1D wave at 1/(kπ) and the first node of the 3D wave.
use compensating_media::media;
use compensating_media::odesolve::{self, WaveKind};

fn main() -> compensating_media::Result<()> {
    let g = odesolve::resolved_grid(WaveKind::Wave1D, 0.03, 1.0, 20)?;
    let nodes = odesolve::node_locations(WaveKind::Wave1D, |x| media::psi_1d(x, 1.0), &g)?;
    for (k, x) in nodes.iter().rev().enumerate() {
        let k = k + 1;
        println!("k = {k:>2}: x = {x:.15}  kπx - 1 = {:+.1e}", k as f64 * std::f64::consts::PI * x - 1.0);
    }
    let g = odesolve::resolved_grid(WaveKind::Wave3D, 0.1, 4.0, 20)?;
    let nodes = odesolve::node_locations(WaveKind::Wave3D, |r| media::psi_3d(r, 1.0).unwrap(), &g)?;
    println!("3D nodes below r = 4: {nodes:.6?}");
    // too coarse a grid is refused
    let coarse = compensating_media::Grid::uniform(0.03, 1.0, 50)?;
    if let Err(e) = odesolve::node_locations(WaveKind::Wave1D, |x| media::psi_1d(x, 1.0), &coarse) {
        println!("coarse grid: {e}");
    }
    Ok(())
}
