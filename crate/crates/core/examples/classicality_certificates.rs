//! The quantum correction vanishes for both media, analytically and by finite differences.
use compensating_media::deriv::{ClosedForm, FiniteDiff};
use compensating_media::{media, quantumhj, Grid};

fn main() -> compensating_media::Result<()> {
    let g = Grid::uniform(0.2, 10.0, 200)?;
    let (mut a1, mut a3, mut f1, mut f3) = (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
    for &x in g.nodes() {
        a1 = a1.max(quantumhj::quantum_correction_1d(&ClosedForm(media::momentum_1d_jet), x)?.abs());
        a3 = a3.max(quantumhj::quantum_correction_3d(&ClosedForm(media::momentum_3d_jet), x)?.abs());
        let h = 1e-3 * x.min(1.0);
        f1 = f1.max(quantumhj::quantum_correction_1d(&FiniteDiff::with_step(|t: f64| 1.0 / (t * t), h), x)?.abs());
        f3 = f3.max(quantumhj::quantum_correction_3d(&FiniteDiff::with_step(|t: f64| t * t, h), x)?.abs());
    }
    println!("1D: analytic {a1:.2e}, finite difference {f1:.2e}");
    println!("3D: analytic {a3:.2e}, finite difference {f3:.2e}");
    // a medium that is not compensating, for contrast
    let p = ClosedForm(|x: f64| Ok(compensating_media::deriv::Jet::new(1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x))));
    println!("n = 1/x at x = 1: correction {:.6}", quantumhj::quantum_correction_1d(&p, 1.0)?);
    Ok(())
}
