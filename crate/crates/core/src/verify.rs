//! Verification suites: classicality certificates, Q-equation residuals,
//! wave-equation oracles and medium identities, collected as named checks.

use std::f64::consts::PI;

use crate::deriv::{richardson_d1, ClosedForm, FiniteDiff, Jet};
use crate::media::{self, MediumKind, MediumSpec};
use crate::odesolve::{self, IvpProblem, WaveKind};
use crate::output::{Cell, Table};
use crate::quantumhj::{self, QBoundary};
use crate::specfun::{self, BesselOrder};
use crate::{Dim, Error, Grid, Result, ScalarField};

pub const CLASSICALITY_ANALYTIC_TOL: f64 = 1e-12;
pub const CLASSICALITY_FD_TOL: f64 = 1e-6;
pub const Q_RESIDUAL_TOL: f64 = 1e-12;
pub const Q_IVP_TOL: f64 = 1e-9;
pub const WAVE_ORACLE_TOL: f64 = 1e-7;
pub const IDENTITY_TOL: f64 = 1e-14;
pub const ACTION_FD_TOL: f64 = 1e-8;
pub const RESIDUAL_1D_TOL: f64 = 1e-12;
pub const RESIDUAL_3D_TOL: f64 = 1e-10;
pub const NODE_TOL: f64 = 1e-9;
pub const FIRST_NODE_TOL: f64 = 1e-8;
pub const ANCHOR_TOL: f64 = 1e-10;
pub const WRONSKIAN_TOL: f64 = 1e-9;
pub const NUMERIC_WRONSKIAN_TOL: f64 = 1e-8;
pub const GAMMA_TOL: f64 = 1e-12;
pub const CROSSOVER_TOL: f64 = 1e-9;
pub const ENVELOPE_TOL: f64 = 0.05;
/// Error ratio required when the tolerance tightens by 100.
pub const CONVERGENCE_RATIO: f64 = 0.1;

/// Q-equation integrations run at this tolerance.
const Q_IVP_SOLVER_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct VerifyConfig {
    pub case: Dim,
    pub span: (f64, f64),
    pub points: usize,
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl VerifyConfig {
    pub fn new(case: Dim) -> Self {
        Self { case, span: (0.2, 10.0), points: 200, rel_tol: 1e-10, abs_tol: 1e-12 }
    }

    pub fn validate(&self) -> Result<()> {
        let (a, b) = self.span;
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::InvalidConfig(format!("span [{a}, {b}] is empty")));
        }
        if self.points < 2 {
            return Err(Error::InvalidConfig(format!("points must be >= 2, got {}", self.points)));
        }
        for t in [self.rel_tol, self.abs_tol] {
            if !(1e-12..=1e-3).contains(&t) {
                return Err(Error::InvalidConfig(format!("tolerance {t} outside [1e-12, 1e-3]")));
            }
        }
        match self.case {
            Dim::D1 if a <= 0.0 && b >= 0.0 => {
                Err(Error::InvalidConfig(format!("1D span [{a}, {b}] touches the singular point x = 0")))
            }
            Dim::D3 if a <= 0.0 => Err(Error::InvalidConfig(format!("3D span [{a}, {b}] must lie in r > 0"))),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Check {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    pub fn at_most(name: &str, max_residual: f64, tolerance: f64) -> Self {
        Self { name: name.to_string(), max_residual, tolerance, passed: max_residual <= tolerance }
    }

    /// A yes/no property, reported with residual 0 or 1.
    pub fn holds(name: &str, ok: bool) -> Self {
        Self { name: name.to_string(), max_residual: if ok { 0.0 } else { 1.0 }, tolerance: 0.0, passed: ok }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_table(&self) -> Table {
        let mut t = Table::new(["check", "max_residual", "tolerance", "passed"]);
        for c in &self.checks {
            t.push(c.into());
        }
        t
    }
}

fn max_over<I: IntoIterator<Item = Result<f64>>>(it: I) -> Result<f64> {
    let mut m = 0.0_f64;
    for v in it {
        m = m.max(v?.abs());
    }
    Ok(m)
}

pub fn run(cfg: &VerifyConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    let checks = match cfg.case {
        Dim::D1 => checks_1d(cfg)?,
        Dim::D3 => checks_3d(cfg)?,
    };
    Ok(VerifyReport { config: *cfg, checks })
}

/// Relative FD step that stays clear of the origin.
fn fd_step(x: f64, base: f64) -> f64 {
    base * x.abs().min(1.0)
}

fn checks_1d(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let (a, b) = cfg.span;
    let grid = Grid::uniform(a, b, cfg.points)?;
    let xs = grid.nodes();
    let medium = MediumSpec::new(MediumKind::Compensating1D);
    let mut out = Vec::new();

    let p = ClosedForm(media::momentum_1d_jet);
    out.push(Check::at_most(
        "classicality_analytic",
        max_over(xs.iter().map(|&x| quantumhj::quantum_correction_1d(&p, x)))?,
        CLASSICALITY_ANALYTIC_TOL,
    ));
    out.push(Check::at_most(
        "classicality_fd",
        max_over(xs.iter().map(|&x| {
            let fd = FiniteDiff::with_step(|t: f64| 1.0 / (t * t), fd_step(x, crate::deriv::DEFAULT_FD_STEP));
            quantumhj::quantum_correction_1d(&fd, x)
        }))?,
        CLASSICALITY_FD_TOL,
    ));
    out.push(Check::at_most(
        "hj_balance",
        max_over(xs.iter().map(|&x| Ok(quantumhj::hj_lhs(media::momentum_1d(x)?, media::index_1d(x)?))))?,
        0.0,
    ));
    out.push(Check::at_most(
        "q_residual",
        max_over(xs.iter().map(|&x| quantumhj::q_residual(Dim::D1, &ClosedForm(quantumhj::log_momentum_1d_jet), x)))?,
        Q_RESIDUAL_TOL,
    ));

    // Q(±1) = 0, Q'(±1) = ∓2
    let unit = a.signum();
    let boundary = QBoundary { coord: unit, value: 0.0, slope: -2.0 / unit };
    let q = quantumhj::solve_q_ivp(Dim::D1, boundary, (a.min(unit), b.max(unit)), Q_IVP_SOLVER_TOL, Q_IVP_SOLVER_TOL)?;
    out.push(Check::at_most("q_ivp", q.field().max_abs_error(|x| -2.0 * x.abs().ln()), Q_IVP_TOL));

    // wave oracle, integrated inward from the far end
    let (far, near) = if a > 0.0 { (b, a) } else { (a, b) };
    let oracle = |tol: f64| -> Result<f64> {
        let prob = IvpProblem::wave1d_from_closed_form(far, near, 1.0)?;
        let sol = odesolve::integrate(&prob, tol, cfg.abs_tol.min(tol))?;
        Ok(sol.field().max_abs_error(|x| media::psi_1d(x, 1.0)))
    };
    let err = oracle(cfg.rel_tol)?;
    out.push(Check::at_most("wave_oracle", err, WAVE_ORACLE_TOL));
    if cfg.rel_tol * 100.0 <= 1e-3 {
        let loose = oracle(cfg.rel_tol * 100.0)?;
        out.push(Check::at_most("wave_convergence", err / loose, CONVERGENCE_RATIO));
    }

    let psi = ClosedForm(|x| media::psi_1d_jet(x, 1.0));
    let rep = odesolve::residual(WaveKind::Wave1D, &psi, &grid, RESIDUAL_1D_TOL)?;
    // scaled by the size of the individual terms when they exceed one
    let scaled = rep
        .grid
        .iter()
        .zip(&rep.residuals)
        .map(|(&x, r)| r / (media::psi_1d(x, 1.0).abs() / x.powi(4)).max(1.0))
        .fold(0.0, f64::max);
    out.push(Check::at_most("wave_residual_analytic", scaled, RESIDUAL_1D_TOL));

    // nodes 1/(kπ) inside the span
    let (lo, hi) = (a.abs().min(b.abs()), a.abs().max(b.abs()));
    let ngrid = odesolve::resolved_grid(WaveKind::Wave1D, lo, hi, 20)?;
    let nodes = odesolve::node_locations(WaveKind::Wave1D, |x| media::psi_1d(x, 1.0), &ngrid)?;
    let expected: Vec<f64> = (1..)
        .map(|k| 1.0 / (k as f64 * PI))
        .take_while(|&x| x >= lo)
        .filter(|&x| x <= hi)
        .collect();
    let mut sorted = expected.clone();
    sorted.sort_by(f64::total_cmp);
    let node_err = if nodes.len() == sorted.len() {
        nodes.iter().zip(&sorted).map(|(u, v)| (u - v).abs()).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    out.push(Check::at_most("nodes_at_inverse_k_pi", node_err, NODE_TOL));

    out.extend(identity_checks(&medium, xs)?);
    out.push(Check::holds(
        "potential_sign_pattern",
        sign_pattern_ok(&medium, &Grid::uniform(-5.0, 5.0, 10_000)?),
    ));

    // amplitude transport A²S' = C²
    let dgrid = odesolve::resolved_grid(WaveKind::Wave1D, lo, hi, 4000)?;
    let psi_f = ScalarField::from_fn(dgrid.clone(), |x| media::psi_1d(x, 1.0));
    let p_f = ScalarField::try_from_fn(dgrid, media::momentum_1d)?;
    let d = quantumhj::decompose(&psi_f, &p_f, Dim::D1, -1.0 / lo)?;
    let transport = d.transport_product().iter().map(|t| (t - 1.0).abs()).fold(0.0, f64::max);
    out.push(Check::at_most("amplitude_transport", transport, 1e-6));
    out.push(Check::at_most("decomposition_fit", d.fit_residual / psi_f.max_abs(), 1e-6));

    // Wronskian of x sin(1/x) and x cos(1/x) equals 1
    let s1 = odesolve::integrate(&IvpProblem::wave1d_from_closed_form(far, near, 1.0)?, cfg.rel_tol, cfg.abs_tol)?;
    let cos_jet = |x: f64| {
        let (s, c) = (1.0 / x).sin_cos();
        (x * c, c + s / x)
    };
    let (v0, d0) = cos_jet(far);
    let s2 = odesolve::integrate(&IvpProblem::new(WaveKind::Wave1D, far, near, v0, d0)?, cfg.rel_tol, cfg.abs_tol)?;
    // both runs end exactly on `near`, where no interpolation is involved
    let wdev = match (s1.state(near), s2.state(near)) {
        (Some(u), Some(v)) => (u[0] * v[1] - u[1] * v[0] - 1.0).abs(),
        _ => f64::INFINITY,
    };
    out.push(Check::at_most("numeric_wronskian", wdev, NUMERIC_WRONSKIAN_TOL));
    Ok(out)
}

fn checks_3d(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let (a, b) = cfg.span;
    let grid = Grid::uniform(a, b, cfg.points)?;
    let rs = grid.nodes();
    let medium = MediumSpec::new(MediumKind::Compensating3D);
    let mut out = Vec::new();

    let p = ClosedForm(media::momentum_3d_jet);
    out.push(Check::at_most(
        "classicality_analytic",
        max_over(rs.iter().map(|&r| quantumhj::quantum_correction_3d(&p, r)))?,
        CLASSICALITY_ANALYTIC_TOL,
    ));
    out.push(Check::at_most(
        "classicality_fd",
        max_over(rs.iter().map(|&r| {
            let fd = FiniteDiff::with_step(|t: f64| t * t, fd_step(r, crate::deriv::DEFAULT_FD_STEP));
            quantumhj::quantum_correction_3d(&fd, r)
        }))?,
        CLASSICALITY_FD_TOL,
    ));
    let mut form_dev = 0.0_f64;
    for k in [1.0, 2.0, 3.0] {
        let pk = ClosedForm(move |r: f64| Ok(Jet::new(r.powf(k), k * r.powf(k - 1.0), k * (k - 1.0) * r.powf(k - 2.0))));
        for &r in rs {
            let a = quantumhj::quantum_correction_3d(&pk, r)?;
            let q = quantumhj::quantum_correction_3d_q_form(&pk, r)?;
            form_dev = form_dev.max((a - q).abs());
        }
    }
    let pe = ClosedForm(|r: f64| Ok(Jet::new((-r).exp(), -(-r).exp(), (-r).exp())));
    for &r in rs.iter().filter(|&&r| r <= 20.0) {
        let a = quantumhj::quantum_correction_3d(&pe, r)?;
        let q = quantumhj::quantum_correction_3d_q_form(&pe, r)?;
        form_dev = form_dev.max((a - q).abs());
    }
    out.push(Check::at_most("correction_forms_agree", form_dev, 1e-10));
    let mut eq25 = 0.0_f64;
    for &r in rs {
        let t = quantumhj::hj_rhs_3d(&p, r, 1.0)?;
        eq25 = eq25.max(t.flux_laplacian.abs()).max(t.flux_cross.abs());
        eq25 = eq25.max((t.momentum_bracket - quantumhj::quantum_correction_3d(&p, r)?).abs());
    }
    out.push(Check::at_most("constant_flux_reduction", eq25, CLASSICALITY_ANALYTIC_TOL));
    out.push(Check::at_most(
        "hj_balance",
        max_over(rs.iter().map(|&r| Ok(quantumhj::hj_lhs(media::momentum_3d(r)?, media::index_3d(r)?))))?,
        0.0,
    ));
    out.push(Check::at_most(
        "q_residual",
        max_over(rs.iter().map(|&r| quantumhj::q_residual(Dim::D3, &ClosedForm(quantumhj::log_momentum_3d_jet), r)))?,
        Q_RESIDUAL_TOL,
    ));
    let q = quantumhj::solve_q_ivp(
        Dim::D3,
        QBoundary::at_unit(2.0),
        (a.min(1.0), b.max(1.0)),
        Q_IVP_SOLVER_TOL,
        Q_IVP_SOLVER_TOL,
    )?;
    out.push(Check::at_most("q_ivp", q.field().max_abs_error(|r| 2.0 * r.ln()), Q_IVP_TOL));

    let oracle = |tol: f64| -> Result<f64> {
        let prob = IvpProblem::wave3d_regular(b, media::psi_3d_origin(1.0))?;
        let sol = odesolve::integrate(&prob, tol, cfg.abs_tol.min(tol))?;
        let f = sol.field();
        let mut m = 0.0_f64;
        for (r, v) in f.iter() {
            m = m.max((v - media::psi_3d(r, 1.0)?).abs());
        }
        Ok(m)
    };
    let err = oracle(cfg.rel_tol)?;
    out.push(Check::at_most("wave_oracle", err, WAVE_ORACLE_TOL));
    if cfg.rel_tol * 100.0 <= 1e-3 {
        let loose = oracle(cfg.rel_tol * 100.0)?;
        out.push(Check::at_most("wave_convergence", err / loose, CONVERGENCE_RATIO));
    }

    let psi = ClosedForm(|r| media::psi_3d_jet(r, 1.0));
    let rep = odesolve::residual(WaveKind::Wave3D, &psi, &grid, RESIDUAL_3D_TOL)?;
    let scaled = rep
        .grid
        .iter()
        .zip(&rep.residuals)
        .map(|(&r, res)| res / (r.powi(4) * media::psi_3d(r, 1.0).unwrap_or(0.0).abs()).max(1.0))
        .fold(0.0, f64::max);
    out.push(Check::at_most("wave_residual_analytic", scaled, RESIDUAL_3D_TOL));

    let origin_limit = (media::psi_3d_bessel(1e-6, 1.0)? - 6.0_f64.powf(-1.0 / 3.0)).abs();
    out.push(Check::at_most("origin_value", origin_limit, ANCHOR_TOL));
    let mut series_dev = 0.0_f64;
    for i in 1..=100 {
        let r = 0.5 * i as f64 / 100.0;
        series_dev = series_dev.max((media::psi_3d_series(r, 1.0, 3) - media::psi_3d_bessel(r, 1.0)?).abs());
    }
    out.push(Check::at_most("local_series", series_dev, ANCHOR_TOL));

    let r_star = media::first_node_3d()?;
    out.push(Check::holds("first_node_in_1.8_2.2", (1.8..=2.2).contains(&r_star)));
    if r_star > a && r_star < b {
        let ngrid = odesolve::resolved_grid(WaveKind::Wave3D, a, b.min(r_star + 1.0), 20)?;
        let nodes = odesolve::node_locations(WaveKind::Wave3D, |r| media::psi_3d(r, 1.0).unwrap_or(f64::NAN), &ngrid)?;
        let first = nodes.first().copied().unwrap_or(f64::INFINITY);
        out.push(Check::at_most("first_node_consistency", (first - r_star).abs(), FIRST_NODE_TOL));
    }

    let k = media::envelope_constant_3d(1.0);
    let egrid = odesolve::resolved_grid(WaveKind::Wave3D, 3.0, 6.0, 200)?;
    let mut env_dev = 0.0_f64;
    for &r in egrid.nodes() {
        env_dev = env_dev.max((media::envelope_3d(r, 1.0)? / k - 1.0).abs());
        let scaled = media::psi_3d(r, 1.0)?.abs() * r * r / k - 1.0;
        env_dev = env_dev.max(scaled.max(0.0));
    }
    out.push(Check::at_most("envelope_r_minus_two", env_dev, ENVELOPE_TOL));

    out.extend(identity_checks(&medium, rs)?);
    out.push(Check::holds("potential_sign_pattern", sign_pattern_ok(&medium, &Grid::uniform(0.0, 5.0, 10_000)?)));

    let dgrid = odesolve::resolved_grid(WaveKind::Wave3D, a, b, 50)?;
    let psi_f = ScalarField::try_from_fn(dgrid.clone(), |r| media::psi_3d(r, 1.0))?;
    let p_f = ScalarField::try_from_fn(dgrid, media::momentum_3d)?;
    let d = quantumhj::decompose(&psi_f, &p_f, Dim::D3, a * a * a / 3.0)?;
    let flux = d.radial_flux().iter().map(|f| (f - d.flux_const).abs()).fold(0.0, f64::max) / d.flux_const;
    out.push(Check::at_most("radial_flux_constant", flux, 1e-10));

    out.extend(special_function_checks()?);
    Ok(out)
}

fn identity_checks(medium: &MediumSpec, coords: &[f64]) -> Result<Vec<Check>> {
    let form = medium.singular_form();
    let mut n2 = 0.0_f64;
    let mut vu = 0.0_f64;
    let mut pn = 0.0_f64;
    let mut ds = 0.0_f64;
    for &c in coords {
        let n = medium.index(c)?;
        let v = medium.potential(c)?;
        n2 = n2.max((n * n - (1.0 - v)).abs() / (n * n).max(1.0));
        vu = vu.max((v - (1.0 + media::singular_potential(form, c)?)).abs());
        pn = pn.max((medium.momentum(c)? - n).abs());
        let h = fd_step(c, 1e-4);
        ds = ds.max((richardson_d1(|t| medium.action(t).unwrap_or(f64::NAN), c, h) - medium.momentum(c)?).abs());
    }
    Ok(vec![
        Check::at_most("index_potential_consistency", n2, IDENTITY_TOL),
        Check::at_most("potential_equals_one_plus_u", vu, 0.0),
        Check::at_most("momentum_equals_index", pn, 0.0),
        Check::at_most("action_gradient_is_momentum", ds, ACTION_FD_TOL),
    ])
}

/// V < 0 inside unit distance and V > 0 outside (1D); reversed in 3D; V = 0 at 1.
pub fn sign_pattern_ok(medium: &MediumSpec, grid: &Grid) -> bool {
    let inside_negative = medium.kind == MediumKind::Compensating1D;
    let zero_at_one = medium.potential(1.0).map(|v| v == 0.0).unwrap_or(false);
    zero_at_one
        && grid.nodes().iter().all(|&c| {
            let Ok(v) = medium.potential(c) else {
                return c == 0.0;
            };
            let d = c.abs();
            if d == 1.0 {
                v == 0.0
            } else if (d < 1.0) == inside_negative {
                v < 0.0
            } else {
                v > 0.0
            }
        })
}

/// Wronskian, reflection product and crossover consistency.
pub fn special_function_checks() -> Result<Vec<Check>> {
    let mut w = 0.0_f64;
    let grid = Grid::log_spaced(0.1, 40.0, 20)?;
    for &z in grid.nodes() {
        let wr = specfun::bessel_j(BesselOrder::PLUS_SIXTH, z)? * specfun::bessel_j_prime(BesselOrder::MINUS_SIXTH, z)?
            - specfun::bessel_j_prime(BesselOrder::PLUS_SIXTH, z)? * specfun::bessel_j(BesselOrder::MINUS_SIXTH, z)?;
        let want = -2.0 * (PI / 6.0).sin() / (PI * z);
        w = w.max(((wr - want) / want).abs());
    }
    let refl = specfun::gamma(7.0 / 6.0)? * specfun::gamma(5.0 / 6.0)?;
    let refl = ((refl - PI / 3.0) / (PI / 3.0)).abs();
    let mut cross = 0.0_f64;
    let zc = specfun::SERIES_CROSSOVER;
    for i in 0..=40 {
        let z = zc * (0.8 + 0.4 * i as f64 / 40.0);
        for o in [BesselOrder::PLUS_SIXTH, BesselOrder::MINUS_SIXTH] {
            cross = cross.max(specfun::crossover_discrepancy(o, z)?);
        }
    }
    Ok(vec![
        Check::at_most("bessel_wronskian", w, WRONSKIAN_TOL),
        Check::at_most("gamma_reflection", refl, GAMMA_TOL),
        Check::at_most("bessel_crossover", cross, CROSSOVER_TOL),
    ])
}

impl From<&Check> for Vec<Cell> {
    fn from(c: &Check) -> Self {
        vec![c.name.as_str().into(), c.max_residual.into(), c.tolerance.into(), c.passed.into()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        let mut c = VerifyConfig::new(Dim::D1);
        assert!(c.validate().is_ok());
        c.span = (0.0, 10.0);
        assert!(c.validate().is_err());
        c.span = (-3.0, -0.5);
        assert!(c.validate().is_ok());
        c.points = 1;
        assert!(c.validate().is_err());
        let mut c = VerifyConfig::new(Dim::D3);
        c.span = (0.0, 4.0);
        assert!(c.validate().is_err());
        c.span = (0.2, 4.0);
        c.rel_tol = 1e-2;
        assert!(c.validate().is_err());
    }

    #[test]
    fn sign_patterns() {
        let g = Grid::uniform(-3.0, 3.0, 601).unwrap();
        assert!(sign_pattern_ok(&MediumSpec::new(MediumKind::Compensating1D), &g));
        let g = Grid::uniform(0.0, 3.0, 301).unwrap();
        assert!(sign_pattern_ok(&MediumSpec::new(MediumKind::Compensating3D), &g));
    }

    #[test]
    fn negative_1d_span_passes() {
        let mut c = VerifyConfig::new(Dim::D1);
        c.span = (-5.0, -0.3);
        c.points = 50;
        let r = run(&c).unwrap();
        for ch in &r.checks {
            assert!(ch.passed, "{ch:?}");
        }
    }
}
