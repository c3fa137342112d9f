//! Plot data for the five wave figures, the numeric-solution table and the
//! table of derived constants.

use crate::media;
use crate::odesolve::{self, IvpProblem};
use crate::output::Table;
use crate::specfun::{self, BesselOrder};
use crate::units::{self, PhysicalParams, ScaledCoords};
use crate::{Dim, Error, Grid, Result};

pub const FIGURE_IDS: std::ops::RangeInclusive<u8> = 1..=5;

/// Default axes: `(start, end, points)`.
pub const FIG1_AXIS: (f64, f64, usize) = (-3.0, 3.0, 2001);
pub const FIG2_ZETA: (f64, f64, usize) = (-3.0, 3.0, 241);
pub const FIG3_AXIS: (f64, f64, usize) = (0.0, 4.0, 2001);
pub const FIG4_AXIS: (f64, f64, usize) = (-4.0, 4.0, 161);
pub const FIG5_ZETA: (f64, f64, usize) = (0.0, 4.0, 201);
pub const SQRT_E_AXIS: (f64, f64, usize) = (0.2, 2.0, 46);

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FigureConfig {
    /// Replaces the default coordinate interval (x, r or zeta).
    pub span: Option<(f64, f64)>,
    pub points: Option<usize>,
    /// When set, a physical-coordinate column is added next to `x` or `r`.
    pub params: Option<PhysicalParams>,
}

fn axis(default: (f64, f64, usize), cfg: &FigureConfig) -> Result<Grid> {
    let (a, b) = cfg.span.unwrap_or((default.0, default.1));
    let n = cfg.points.unwrap_or(default.2);
    if !(a < b) {
        return Err(Error::InvalidConfig(format!("span [{a}, {b}] is empty")));
    }
    Grid::uniform(a, b, n)
}

pub fn figure(id: u8, cfg: &FigureConfig) -> Result<Table> {
    match id {
        1 => line_figure(Dim::D1, axis(FIG1_AXIS, cfg)?, cfg.params),
        2 => surface_figure(Dim::D1, axis(FIG2_ZETA, cfg)?),
        3 => {
            let g = axis(FIG3_AXIS, cfg)?;
            if g.start() < 0.0 {
                return Err(Error::InvalidConfig("radial span must start at r >= 0".into()));
            }
            line_figure(Dim::D3, g, cfg.params)
        }
        4 => plane_figure(axis(FIG4_AXIS, cfg)?, cfg.params),
        5 => {
            let g = axis(FIG5_ZETA, cfg)?;
            if g.start() < 0.0 {
                return Err(Error::InvalidConfig("radial span must start at zeta >= 0".into()));
            }
            surface_figure(Dim::D3, g)
        }
        _ => Err(Error::InvalidConfig(format!("figure id must be 1..5, got {id}"))),
    }
}

fn psi(kind: Dim, c: f64) -> Result<f64> {
    match kind {
        Dim::D1 => Ok(media::psi_1d(c, 1.0)),
        Dim::D3 => media::psi_3d(c, 1.0),
    }
}

fn line_figure(kind: Dim, grid: Grid, params: Option<PhysicalParams>) -> Result<Table> {
    let name = if kind == Dim::D1 { "x" } else { "r" };
    let mut cols = vec![name.to_string()];
    if params.is_some() {
        cols.push(format!("{name}_phys"));
    }
    cols.push("psi".into());
    let mut t = Table::new(cols);
    for &c in grid.nodes() {
        let mut row = vec![c];
        if let Some(p) = &params {
            row.push(units::from_dimensionless(c, p));
        }
        row.push(psi(kind, c)?);
        t.push_nums(&row);
    }
    Ok(t)
}

fn surface_figure(kind: Dim, zeta: Grid) -> Result<Table> {
    let sqrt_e = Grid::uniform(SQRT_E_AXIS.0, SQRT_E_AXIS.1, SQRT_E_AXIS.2)?;
    let mut t = Table::new(["zeta", "sqrtE", "psi"]);
    for &s in sqrt_e.nodes() {
        for &z in zeta.nodes() {
            let sc = ScaledCoords::new(z, s)?;
            let v = match kind {
                Dim::D1 => media::psi_1d_scaled(sc, 1.0),
                Dim::D3 => media::psi_3d_scaled(sc, 1.0)?,
            };
            t.push_nums(&[z, s, v]);
        }
    }
    Ok(t)
}

/// The `θ = π/2` slice of the 3D wave.
fn plane_figure(axis: Grid, params: Option<PhysicalParams>) -> Result<Table> {
    let mut cols = vec!["x", "y"];
    if params.is_some() {
        cols.extend(["x_phys", "y_phys"]);
    }
    cols.push("psi");
    let mut t = Table::new(cols);
    for &y in axis.nodes() {
        for &x in axis.nodes() {
            let mut row = vec![x, y];
            if let Some(p) = &params {
                row.push(units::from_dimensionless(x, p));
                row.push(units::from_dimensionless(y, p));
            }
            row.push(media::psi_3d(x.hypot(y), 1.0)?);
            t.push_nums(&row);
        }
    }
    Ok(t)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveConfig {
    pub case: Dim,
    pub span: (f64, f64),
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl SolveConfig {
    pub fn new(case: Dim) -> Self {
        let span = match case {
            Dim::D1 => (odesolve::DEFAULT_SPAN_1D.0, odesolve::DEFAULT_SPAN_1D.1),
            Dim::D3 => odesolve::DEFAULT_SPAN_3D,
        };
        Self { case, span, rel_tol: 1e-10, abs_tol: 1e-12 }
    }
}

/// Numeric solution on the solver's accepted nodes next to the closed form.
///
/// 1D runs start from the closed form at the end farther from the origin; 3D
/// runs always start at the regular origin and report only nodes in the span.
pub fn solve(cfg: &SolveConfig) -> Result<Table> {
    let (a, b) = cfg.span;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::InvalidConfig(format!("span [{a}, {b}] is empty")));
    }
    let (prob, exact): (IvpProblem, fn(f64) -> Result<f64>) = match cfg.case {
        Dim::D1 => {
            if a <= 0.0 && b >= 0.0 {
                return Err(Error::InvalidConfig(format!("1D span [{a}, {b}] touches x = 0")));
            }
            let (far, near) = if a > 0.0 { (b, a) } else { (a, b) };
            (IvpProblem::wave1d_from_closed_form(far, near, 1.0)?, |x| Ok(media::psi_1d(x, 1.0)))
        }
        Dim::D3 => {
            if a < 0.0 {
                return Err(Error::InvalidConfig(format!("3D span [{a}, {b}] must lie in r >= 0")));
            }
            (IvpProblem::wave3d_regular(b, media::psi_3d_origin(1.0))?, |r| media::psi_3d(r, 1.0))
        }
    };
    let sol = odesolve::integrate(&prob, cfg.rel_tol, cfg.abs_tol)?;
    let mut t = Table::new(["coord", "psi_numeric", "psi_analytic", "abs_error"]);
    for (c, v) in sol.field().iter().filter(|(c, _)| *c >= a && *c <= b) {
        let e = exact(c)?;
        t.push_nums(&[c, v, e, (v - e).abs()]);
    }
    let st = sol.stats();
    Ok(t
        .meta("accepted_steps", st.accepted.to_string())
        .meta("rejected_steps", st.rejected.to_string()))
}

/// Derived constants of both media.
pub fn report(params: Option<&PhysicalParams>) -> Result<Table> {
    let j = specfun::bessel_j_first_zero(BesselOrder::PLUS_SIXTH)?;
    let series = media::local_series_coefficients(3);
    let mut rows: Vec<(&str, f64)> = vec![
        ("psi3d_origin", media::psi_3d_origin(1.0)),
        ("series_c1", series[1]),
        ("series_c2", series[2]),
        ("bessel_j_plus_sixth_first_zero", j),
        ("first_node_3d", media::first_node_3d()?),
        ("envelope_constant_3d", media::envelope_constant_3d(1.0)),
        ("gamma_7_6", specfun::gamma(7.0 / 6.0)?),
        ("gamma_5_6", specfun::gamma(5.0 / 6.0)?),
        ("gamma_1_6", specfun::gamma(1.0 / 6.0)?),
        ("first_node_1d", 1.0 / std::f64::consts::PI),
        ("series_asymptotic_crossover", specfun::SERIES_CROSSOVER),
    ];
    if let Some(p) = params {
        rows.push(("lambda_bar", p.lambda_bar()));
        rows.push(("first_node_3d_phys", units::from_dimensionless(media::first_node_3d()?, p)));
        rows.push(("first_node_1d_phys", units::from_dimensionless(1.0 / std::f64::consts::PI, p)));
    }
    let mut t = Table::new(["quantity", "value"]);
    for (k, v) in rows {
        t.push(vec![k.into(), v.into()]);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_shapes() {
        let c = FigureConfig::default();
        assert_eq!(figure(1, &c).unwrap().rows.len(), 2001);
        assert_eq!(figure(2, &c).unwrap().rows.len(), 241 * 46);
        assert_eq!(figure(3, &c).unwrap().rows.len(), 2001);
        assert_eq!(figure(4, &c).unwrap().rows.len(), 161 * 161);
        assert_eq!(figure(5, &c).unwrap().rows.len(), 201 * 46);
        assert!(figure(6, &c).is_err());
    }

    #[test]
    fn fig3_origin_and_fig4_centre() {
        let c = FigureConfig::default();
        let f3 = figure(3, &c).unwrap();
        let v3 = f3.rows[0][1].as_f64().unwrap();
        assert!((v3 - 0.5503212081491044473).abs() < 1e-15);
        let f4 = figure(4, &c).unwrap();
        let centre = f4.rows.iter().find(|r| r[0].as_f64() == Some(0.0) && r[1].as_f64() == Some(0.0)).unwrap();
        assert_eq!(centre[2].as_f64().unwrap(), v3);
    }

    #[test]
    fn physical_column() {
        let c = FigureConfig { params: Some(PhysicalParams::new(2.0, 8.0, 1.0).unwrap()), ..Default::default() };
        let t = figure(1, &c).unwrap();
        assert_eq!(t.columns, ["x", "x_phys", "psi"]);
        // λ = ħ/√(2mE) = 1/√32
        let r = &t.rows[0];
        assert!((r[1].as_f64().unwrap() - r[0].as_f64().unwrap() / 32.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn solve_spans() {
        let t = solve(&SolveConfig { span: (0.5, 3.0), ..SolveConfig::new(Dim::D1) }).unwrap();
        let worst = t.rows.iter().map(|r| r[3].as_f64().unwrap()).fold(0.0, f64::max);
        assert!(worst <= 1e-7, "{worst}");
        let t = solve(&SolveConfig::new(Dim::D3)).unwrap();
        let worst = t.rows.iter().map(|r| r[3].as_f64().unwrap()).fold(0.0, f64::max);
        assert!(worst <= 1e-7, "{worst}");
        assert!(solve(&SolveConfig { span: (1.0, 1.0), ..SolveConfig::new(Dim::D1) }).is_err());
    }
}
