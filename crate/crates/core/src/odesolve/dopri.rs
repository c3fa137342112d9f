//! Dormand-Prince 5(4) with cubic Hermite dense output.
//!
//! Small fixed-size systems `y' = f(x, y)`; integration in either direction.

use crate::{Error, Result};

// Butcher tableau
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// b - b*, the embedded 4th-order error weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_steps: usize,
    /// Upper bound on `|h|`; `None` leaves it at the span length.
    pub max_step: Option<f64>,
}

impl SolverOptions {
    pub fn new(rel_tol: f64, abs_tol: f64) -> Self {
        Self { rel_tol, abs_tol, max_steps: 2_000_000, max_step: None }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct SolverStats {
    pub accepted: usize,
    pub rejected: usize,
    pub evaluations: usize,
}

/// Accepted steps of an integration, with dense output between them.
#[derive(Debug, Clone)]
pub struct Trajectory<const N: usize> {
    xs: Vec<f64>,
    ys: Vec<[f64; N]>,
    dys: Vec<[f64; N]>,
    pub stats: SolverStats,
}

impl<const N: usize> Trajectory<N> {
    /// Trajectory seeded with a single state.
    pub(crate) fn seed(x: f64, y: [f64; N], dy: [f64; N]) -> Self {
        Self { xs: vec![x], ys: vec![y], dys: vec![dy], stats: SolverStats::default() }
    }

    pub(crate) fn push(&mut self, x: f64, y: [f64; N], dy: [f64; N]) {
        self.xs.push(x);
        self.ys.push(y);
        self.dys.push(dy);
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[[f64; N]] {
        &self.ys
    }

    pub fn start(&self) -> f64 {
        self.xs[0]
    }

    pub fn end(&self) -> f64 {
        self.xs[self.xs.len() - 1]
    }

    pub fn last(&self) -> [f64; N] {
        self.ys[self.ys.len() - 1]
    }

    /// Whether `x` lies inside the integrated span.
    pub fn covers(&self, x: f64) -> bool {
        let (a, b) = (self.start().min(self.end()), self.start().max(self.end()));
        x >= a && x <= b
    }

    /// Hermite interpolant at `x`; `None` outside the integrated span.
    pub fn eval(&self, x: f64) -> Option<[f64; N]> {
        if !self.covers(x) {
            return None;
        }
        let forward = self.end() >= self.start();
        // index of the step [xs[i], xs[i+1]] containing x
        let i = if forward {
            self.xs.partition_point(|&t| t <= x)
        } else {
            self.xs.partition_point(|&t| t >= x)
        };
        let i = i.clamp(1, self.xs.len().max(2) - 1) - 1;
        if self.xs.len() == 1 {
            return Some(self.ys[0]);
        }
        let (x0, x1) = (self.xs[i], self.xs[i + 1]);
        let h = x1 - x0;
        let t = (x - x0) / h;
        let h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
        let h10 = t * (1.0 - t) * (1.0 - t);
        let h01 = t * t * (3.0 - 2.0 * t);
        let h11 = t * t * (t - 1.0);
        let mut out = [0.0; N];
        for k in 0..N {
            out[k] = h00 * self.ys[i][k]
                + h10 * h * self.dys[i][k]
                + h01 * self.ys[i + 1][k]
                + h11 * h * self.dys[i + 1][k];
        }
        Some(out)
    }
}

fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    let mut out = *y;
    for (c, k) in terms {
        for i in 0..N {
            out[i] += h * c * k[i];
        }
    }
    out
}

/// Integrate from `(x0, y0)` to `x_end`.
///
/// `check` runs on every accepted state and may abort the integration.
pub fn integrate<F, G, const N: usize>(
    f: F,
    x0: f64,
    y0: [f64; N],
    x_end: f64,
    opts: &SolverOptions,
    check: G,
) -> Result<Trajectory<N>>
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
    G: Fn(f64, &[f64; N]) -> Result<()>,
{
    let span = x_end - x0;
    let dir = span.signum();
    let mut k1 = f(x0, &y0);
    let mut traj = Trajectory::seed(x0, y0, k1);
    traj.stats.evaluations = 1;
    if span == 0.0 {
        return Ok(traj);
    }
    let max_step = opts.max_step.unwrap_or(span.abs()).min(span.abs());

    // initial step from the size of y and y' (Hairer, Nørsett & Wanner II.4)
    let scale0: Vec<f64> = y0.iter().map(|v| opts.abs_tol + opts.rel_tol * v.abs()).collect();
    let d0 = rms(y0.iter().zip(&scale0).map(|(v, s)| v / s));
    let d1 = rms(k1.iter().zip(&scale0).map(|(v, s)| v / s));
    let mut h = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    h = h.min(max_step).max(1e-12 * span.abs());

    let mut x = x0;
    let mut y = y0;
    let mut last_rejected = false;
    while (x_end - x) * dir > 0.0 {
        if traj.stats.accepted + traj.stats.rejected >= opts.max_steps {
            return Err(Error::TooManySteps(opts.max_steps));
        }
        if h < 16.0 * f64::EPSILON * x.abs().max(1.0) {
            return Err(Error::StepUnderflow { coord: x, step: h });
        }
        let mut last = false;
        if (x + dir * h - x_end) * dir >= 0.0 {
            h = (x_end - x).abs();
            last = true;
        }
        let hs = dir * h;
        let k2 = f(x + C2 * hs, &axpy(&y, hs, &[(A21, &k1)]));
        let k3 = f(x + C3 * hs, &axpy(&y, hs, &[(A31, &k1), (A32, &k2)]));
        let k4 = f(x + C4 * hs, &axpy(&y, hs, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
        let k5 = f(x + C5 * hs, &axpy(&y, hs, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
        let k6 = f(
            x + hs,
            &axpy(&y, hs, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]),
        );
        let y_new = axpy(&y, hs, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
        let x_new = if last { x_end } else { x + hs };
        let k7 = f(x_new, &y_new);
        traj.stats.evaluations += 6;

        let err = rms((0..N).map(|i| {
            let e = hs * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sc = opts.abs_tol + opts.rel_tol * y[i].abs().max(y_new[i].abs());
            e / sc
        }));
        if !err.is_finite() {
            traj.stats.rejected += 1;
            h *= MIN_FACTOR;
            last_rejected = true;
            continue;
        }
        if err <= 1.0 {
            check(x_new, &y_new)?;
            x = x_new;
            y = y_new;
            k1 = k7;
            traj.push(x, y, k1);
            traj.stats.accepted += 1;
            let mut factor = if err == 0.0 { MAX_FACTOR } else { SAFETY * err.powf(-0.2) };
            factor = factor.clamp(MIN_FACTOR, MAX_FACTOR);
            if last_rejected {
                factor = factor.min(1.0);
            }
            h = (h * factor).min(max_step);
            last_rejected = false;
        } else {
            traj.stats.rejected += 1;
            h *= (SAFETY * err.powf(-0.2)).max(MIN_FACTOR);
            last_rejected = true;
        }
    }
    Ok(traj)
}

fn rms<I: Iterator<Item = f64>>(it: I) -> f64 {
    let (mut s, mut n) = (0.0, 0usize);
    for v in it {
        s += v * v;
        n += 1;
    }
    (s / n.max(1) as f64).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_check<const N: usize>(_: f64, _: &[f64; N]) -> Result<()> {
        Ok(())
    }

    #[test]
    fn exponential_decay() {
        let opts = SolverOptions::new(1e-10, 1e-12);
        let t = integrate(|_, y: &[f64; 1]| [-y[0]], 0.0, [1.0], 5.0, &opts, no_check).unwrap();
        assert!((t.last()[0] - (-5.0_f64).exp()).abs() < 1e-10);
        assert_eq!(t.end(), 5.0);
    }

    #[test]
    fn harmonic_oscillator_backwards_with_dense_output() {
        let opts = SolverOptions::new(1e-10, 1e-12);
        let t = integrate(|_, y: &[f64; 2]| [y[1], -y[0]], 3.0, [3.0_f64.sin(), 3.0_f64.cos()], -1.0, &opts, no_check)
            .unwrap();
        for i in 0..=100 {
            let x = -1.0 + 4.0 * i as f64 / 100.0;
            let y = t.eval(x).unwrap();
            assert!((y[0] - x.sin()).abs() < 1e-8, "x = {x}");
        }
        assert!(t.eval(3.5).is_none());
    }

    #[test]
    fn check_aborts() {
        let opts = SolverOptions::new(1e-8, 1e-10);
        let r = integrate(
            |_, y: &[f64; 1]| [y[0] * y[0]],
            0.0,
            [1.0],
            2.0,
            &opts,
            |x, y: &[f64; 1]| if y[0].abs() > 1e8 { Err(Error::BlowUp { pole: x }) } else { Ok(()) },
        );
        assert!(matches!(r, Err(Error::BlowUp { .. }) | Err(Error::StepUnderflow { .. })));
    }
}
