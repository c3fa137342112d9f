//! Bracketed bisection.

use crate::{Error, Result};

const MAX_ITER: usize = 200;

/// Root of `f` in `[a, b]`, which must bracket a sign change.
///
/// Iterates until the bracket is narrower than `tol` (or until it stops
/// shrinking in floating point when `tol` is zero).
pub fn bisect<F>(f: F, a: f64, b: f64, tol: f64, what: &'static str) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if !(flo.signum() != fhi.signum()) || flo.is_nan() || fhi.is_nan() {
        return Err(Error::NoBracket { what, a: lo, b: hi });
    }
    for _ in 0..MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= tol {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
