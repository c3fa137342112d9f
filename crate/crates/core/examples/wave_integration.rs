//! Adaptive integration of both wave equations against their closed forms.
use compensating_media::media;
use compensating_media::odesolve::{self, IvpProblem};

fn main() -> compensating_media::Result<()> {
    for tol in [1e-6, 1e-8, 1e-10] {
        let p1 = IvpProblem::wave1d_from_closed_form(10.0, 0.05, 1.0)?;
        let s1 = odesolve::integrate(&p1, tol, 1e-12)?;
        let e1 = s1.field().max_abs_error(|x| media::psi_1d(x, 1.0));
        let p3 = IvpProblem::wave3d_regular(4.0, media::psi_3d_origin(1.0))?;
        let s3 = odesolve::integrate(&p3, tol, 1e-12)?;
        let e3 = s3.field().max_abs_error(|r| media::psi_3d(r, 1.0).unwrap());
        println!(
            "rel_tol {tol:.0e}: 1D error {e1:.2e} ({} steps), 3D error {e3:.2e} ({} steps)",
            s1.stats().accepted,
            s3.stats().accepted
        );
    }
    Ok(())
}
