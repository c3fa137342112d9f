//! The stationary wave equations of the two media.
//!
//! - `Wave1D`: `ψ'' + ψ/x⁴ = 0`
//! - `Wave3D`: `ψ'' + (2/r)ψ' + r⁴ψ = 0` (s-wave)

use std::f64::consts::PI;

use super::dopri::{self, SolverOptions, SolverStats, Trajectory};
use crate::deriv::{field_derivatives, Profile, FIELD_STENCIL};
use crate::media::{local_series_coefficients, PSI_3D_SERIES_TERMS};
use crate::{Error, Grid, Result, ScalarField};

/// Radius at which the 3D integration leaves the local power series.
pub const STEP_OFF_RADIUS: f64 = 1e-2;

/// Minimum nodes per local wavelength for sampled-field operations.
pub const NODES_PER_WAVELENGTH: usize = 5;

/// Default dimensionless window for the 1D wave.
pub const DEFAULT_SPAN_1D: (f64, f64) = (0.05, 10.0);

/// Default window for the 3D wave.
pub const DEFAULT_SPAN_3D: (f64, f64) = (0.0, 4.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum WaveKind {
    Wave1D,
    Wave3D,
}

impl WaveKind {
    /// Coefficient `k(x)` of `ψ` in the equation.
    pub fn potential_term(self, x: f64) -> f64 {
        match self {
            WaveKind::Wave1D => 1.0 / x.powi(4),
            WaveKind::Wave3D => x.powi(4),
        }
    }

    /// Coefficient of `ψ'`.
    pub fn drift_term(self, x: f64) -> f64 {
        match self {
            WaveKind::Wave1D => 0.0,
            WaveKind::Wave3D => 2.0 / x,
        }
    }

    /// Local wavelength `2π/n`: `2πx²` in 1D, `2π/r²` in 3D.
    pub fn local_wavelength(self, x: f64) -> f64 {
        match self {
            WaveKind::Wave1D => 2.0 * PI * x * x,
            WaveKind::Wave3D => 2.0 * PI / (x * x),
        }
    }

    /// `ψ'' + drift·ψ' + k·ψ` for the given derivatives.
    pub fn apply(self, x: f64, psi: f64, d1: f64, d2: f64) -> f64 {
        match self {
            WaveKind::Wave1D => d2 + psi * self.potential_term(x),
            WaveKind::Wave3D => d2 + self.drift_term(x) * d1 + self.potential_term(x) * psi,
        }
    }

    fn rhs(self, x: f64, y: &[f64; 2]) -> [f64; 2] {
        match self {
            WaveKind::Wave1D => [y[1], -y[0] / x.powi(4)],
            WaveKind::Wave3D => [y[1], -2.0 * y[1] / x - x.powi(4) * y[0]],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct IvpProblem {
    pub kind: WaveKind,
    pub start: f64,
    pub end: f64,
    pub initial_value: f64,
    pub initial_slope: f64,
}

impl IvpProblem {
    pub fn new(kind: WaveKind, start: f64, end: f64, initial_value: f64, initial_slope: f64) -> Result<Self> {
        let p = Self { kind, start, end, initial_value, initial_slope };
        p.validate()?;
        Ok(p)
    }

    /// 1D problem seeded with `C x sin(1/x)` and its slope at `start`.
    pub fn wave1d_from_closed_form(start: f64, end: f64, c: f64) -> Result<Self> {
        let j = crate::media::psi_1d_jet(start, c)?;
        Self::new(WaveKind::Wave1D, start, end, j.value, j.d1)
    }

    /// Regular 3D problem from the origin, `ψ(0) = psi0`, `ψ'(0) = 0`.
    pub fn wave3d_regular(end: f64, psi0: f64) -> Result<Self> {
        Self::new(WaveKind::Wave3D, 0.0, end, psi0, 0.0)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidProblem(m.to_string()));
        if ![self.start, self.end, self.initial_value, self.initial_slope].iter().all(|v| v.is_finite()) {
            return bad("non-finite input");
        }
        if self.start == self.end {
            return bad("zero-length span");
        }
        match self.kind {
            WaveKind::Wave1D => {
                if self.start == 0.0 || self.end == 0.0 || self.start.signum() != self.end.signum() {
                    return bad("1D span must exclude the singular point x = 0");
                }
            }
            WaveKind::Wave3D => {
                if self.start < 0.0 || self.end <= 0.0 {
                    return bad("3D span must lie in r >= 0 and end at r > 0");
                }
                if self.start == 0.0 && self.initial_slope != 0.0 {
                    return bad("regularity at r = 0 requires zero initial slope");
                }
            }
        }
        Ok(())
    }
}

fn check_tolerance(t: f64) -> Result<()> {
    if (1e-12..=1e-3).contains(&t) {
        Ok(())
    } else {
        Err(Error::ToleranceOutOfRange(t))
    }
}

/// Numerical wave function with dense output.
#[derive(Debug, Clone)]
pub struct WaveSolution {
    pub problem: IvpProblem,
    trajectory: Trajectory<2>,
}

impl WaveSolution {
    pub fn stats(&self) -> SolverStats {
        self.trajectory.stats
    }

    /// `(ψ, ψ')` at `x` by Hermite interpolation.
    pub fn state(&self, x: f64) -> Option<[f64; 2]> {
        self.trajectory.eval(x)
    }

    pub fn eval(&self, x: f64) -> Option<f64> {
        self.state(x).map(|s| s[0])
    }

    pub fn slope(&self, x: f64) -> Option<f64> {
        self.state(x).map(|s| s[1])
    }

    /// Accepted-step values ordered by increasing coordinate.
    pub fn field(&self) -> ScalarField {
        let mut pts: Vec<(f64, f64)> = self.trajectory.xs().iter().copied().zip(self.trajectory.ys().iter().map(|y| y[0])).collect();
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        let (x, v): (Vec<f64>, Vec<f64>) = pts.into_iter().unzip();
        ScalarField::new(Grid::from_nodes(x).expect("accepted steps are strictly monotone"), v)
            .expect("lengths agree")
    }

    /// Dense output sampled on `grid`; every node must lie in the span.
    pub fn sample(&self, grid: &Grid) -> Result<ScalarField> {
        ScalarField::try_from_fn(grid.clone(), |x| {
            self.eval(x).ok_or(Error::Domain { what: "dense output span", value: x })
        })
    }
}

/// Adaptive Dormand-Prince integration of a wave problem.
///
/// A 3D problem starting at the origin is first advanced to
/// [`STEP_OFF_RADIUS`] with the local series
/// `ψ₀(1 - r⁶/42 + r¹²/6552)`.
pub fn integrate(problem: &IvpProblem, rel_tol: f64, abs_tol: f64) -> Result<WaveSolution> {
    problem.validate()?;
    check_tolerance(rel_tol)?;
    check_tolerance(abs_tol)?;
    let kind = problem.kind;
    let opts = SolverOptions::new(rel_tol, abs_tol);
    let finite = |x: f64, y: &[f64; 2]| {
        if y.iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(Error::BlowUp { pole: x })
        }
    };
    let rhs = move |x: f64, y: &[f64; 2]| kind.rhs(x, y);

    let trajectory = if kind == WaveKind::Wave3D && problem.start == 0.0 {
        let rs = STEP_OFF_RADIUS.min(problem.end);
        let psi0 = problem.initial_value;
        let a = local_series_coefficients(PSI_3D_SERIES_TERMS);
        let r6 = rs.powi(6);
        let value = psi0 * (a[0] + a[1] * r6 + a[2] * r6 * r6);
        let slope = psi0 * (6.0 * a[1] * rs.powi(5) + 12.0 * a[2] * rs.powi(11));
        let mut head = Trajectory::seed(0.0, [psi0, 0.0], [0.0, 0.0]);
        let rest = dopri::integrate(rhs, rs, [value, slope], problem.end, &opts, finite)?;
        for (x, y) in rest.xs().iter().zip(rest.ys()) {
            head.push(*x, *y, kind.rhs(*x, y));
        }
        head.stats = rest.stats;
        head
    } else {
        dopri::integrate(
            rhs,
            problem.start,
            [problem.initial_value, problem.initial_slope],
            problem.end,
            &opts,
            finite,
        )?
    };
    Ok(WaveSolution { problem: *problem, trajectory })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum DerivativeMode {
    /// Derivatives supplied by the candidate (analytic or Richardson).
    Profile,
    /// Five-point stencils on the sampled field.
    Stencil,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ResidualReport {
    pub kind: WaveKind,
    pub mode: DerivativeMode,
    pub grid: Vec<f64>,
    pub residuals: Vec<f64>,
    pub max_abs: f64,
    pub tolerance: f64,
    pub verdict: bool,
    pub fd_step: Option<f64>,
    pub solver_stats: Option<SolverStats>,
}

impl ResidualReport {
    fn build(kind: WaveKind, mode: DerivativeMode, grid: Vec<f64>, residuals: Vec<f64>, tolerance: f64) -> Self {
        let max_abs = residuals.iter().fold(0.0_f64, |m, r| m.max(r.abs()));
        Self {
            kind,
            mode,
            grid,
            residuals,
            max_abs,
            tolerance,
            verdict: max_abs <= tolerance,
            fd_step: None,
            solver_stats: None,
        }
    }

    pub fn with_fd_step(mut self, h: f64) -> Self {
        self.fd_step = Some(h);
        self
    }

    pub fn with_solver_stats(mut self, s: SolverStats) -> Self {
        self.solver_stats = Some(s);
        self
    }
}

/// Residual `|ψ'' + drift·ψ' + k·ψ|` of a candidate at every grid node.
pub fn residual<P: Profile + ?Sized>(kind: WaveKind, psi: &P, grid: &Grid, tolerance: f64) -> Result<ResidualReport> {
    let mut res = Vec::with_capacity(grid.len());
    for &x in grid.nodes() {
        let j = psi.jet(x)?;
        res.push(kind.apply(x, j.value, j.d1, j.d2).abs());
    }
    Ok(ResidualReport::build(kind, DerivativeMode::Profile, grid.nodes().to_vec(), res, tolerance))
}

/// Check the local-wavelength resolution criterion on a grid.
pub fn check_resolution(kind: WaveKind, grid: &Grid) -> Result<()> {
    for (i, &x) in grid.nodes().iter().enumerate() {
        let wl = kind.local_wavelength(x);
        let h = grid.local_spacing(i);
        if h > wl / NODES_PER_WAVELENGTH as f64 {
            return Err(Error::UnderResolved {
                coord: x,
                spacing: h,
                wavelength: wl,
                per_wavelength: NODES_PER_WAVELENGTH,
            });
        }
    }
    Ok(())
}

/// Grid on `[a, b]` meeting the resolution criterion with `per_wavelength` nodes.
pub fn resolved_grid(kind: WaveKind, a: f64, b: f64, per_wavelength: usize) -> Result<Grid> {
    Grid::resolved(a, b, |x| kind.local_wavelength(x), per_wavelength.max(NODES_PER_WAVELENGTH), FIELD_STENCIL * 4)
}

/// Residual of a sampled field, derivatives from five-point stencils.
pub fn residual_of_field(kind: WaveKind, field: &ScalarField, tolerance: f64) -> Result<ResidualReport> {
    check_resolution(kind, field.grid())?;
    let (d1, d2) = field_derivatives(field)?;
    let res = field
        .iter()
        .zip(d1.iter().zip(&d2))
        .map(|((x, v), (a, b))| kind.apply(x, v, *a, *b).abs())
        .collect();
    Ok(ResidualReport::build(kind, DerivativeMode::Stencil, field.grid().nodes().to_vec(), res, tolerance))
}

/// Sign changes of `psi` sampled on `grid`, refined by bisection.
///
/// The grid must meet the resolution criterion of `kind`. Roots closer than
/// 1e-10 are merged.
pub fn node_locations<F>(kind: WaveKind, psi: F, grid: &Grid) -> Result<Vec<f64>>
where
    F: Fn(f64) -> f64,
{
    check_resolution(kind, grid)?;
    let x = grid.nodes();
    let v: Vec<f64> = x.iter().map(|&t| psi(t)).collect();
    let mut roots = Vec::new();
    for i in 0..x.len() {
        if v[i] == 0.0 {
            roots.push(x[i]);
        } else if i + 1 < x.len() && v[i + 1] != 0.0 && v[i].signum() != v[i + 1].signum() {
            roots.push(crate::roots::bisect(&psi, x[i], x[i + 1], 0.0, "wave function")?);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-10);
    Ok(roots)
}
