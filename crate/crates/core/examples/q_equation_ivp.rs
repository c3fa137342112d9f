//! Solving the Q-equations numerically, and what happens past a Riccati pole.
use compensating_media::quantumhj::{self, QBoundary};
use compensating_media::Dim;

fn main() -> compensating_media::Result<()> {
    let q1 = quantumhj::solve_q_ivp(Dim::D1, QBoundary::at_unit(-2.0), (0.5, 3.0), 1e-12, 1e-12)?;
    println!("1D max |Q + 2 ln x| = {:.2e}", q1.field().max_abs_error(|x| -2.0 * x.ln()));
    let q3 = quantumhj::solve_q_ivp(Dim::D3, QBoundary::at_unit(2.0), (0.5, 3.0), 1e-12, 1e-12)?;
    println!("3D max |Q - 2 ln r| = {:.2e}", q3.field().max_abs_error(|r| 2.0 * r.ln()));

    // Q' = 1 at x = 1 puts a pole at x = 3
    let b = QBoundary::at_unit(1.0);
    println!("predicted pole: {:?}", quantumhj::riccati_pole(Dim::D1, &b));
    match quantumhj::solve_q_ivp(Dim::D1, b, (0.5, 4.0), 1e-10, 1e-12) {
        Ok(_) => println!("unexpectedly crossed the pole"),
        Err(e) => println!("solver stopped: {e}"),
    }
    Ok(())
}
