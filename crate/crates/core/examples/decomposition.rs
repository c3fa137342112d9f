//! Splitting a sampled real wave into amplitude and phase.
use compensating_media::odesolve::{self, WaveKind};
use compensating_media::{media, quantumhj, Dim, ScalarField};

fn main() -> compensating_media::Result<()> {
    let g = odesolve::resolved_grid(WaveKind::Wave1D, 0.3, 5.0, 4000)?;
    let psi = ScalarField::from_fn(g.clone(), |x| media::psi_1d(x, 1.5));
    let p = ScalarField::try_from_fn(g, media::momentum_1d)?;
    let d = quantumhj::decompose(&psi, &p, Dim::D1, -1.0 / 0.3)?;
    println!("1D: A^2 S' = {:.10}, fit residual {:.1e}", d.flux_const, d.fit_residual);

    let g = odesolve::resolved_grid(WaveKind::Wave3D, 3.0, 6.0, 200)?;
    let psi = ScalarField::try_from_fn(g.clone(), |r| media::psi_3d(r, 1.0))?;
    let p = ScalarField::try_from_fn(g, media::momentum_3d)?;
    let d = quantumhj::decompose(&psi, &p, Dim::D3, 9.0)?;
    let t = d.transport_product();
    println!(
        "3D: r^2 A^2 S' = {:.6}; pointwise A^2 S' runs from {:.4} to {:.4}",
        d.flux_const,
        t.first().unwrap(),
        t.last().unwrap()
    );
    Ok(())
}
