//! Quantum corrections of the generalized Hamilton-Jacobi equation, the
//! Q-equations whose solutions make them vanish, and the phase-amplitude
//! decomposition `ψ = A exp(iS)`.
//!
//! With `p = exp Q` (dimensionless), the 1D correction is
//! `½[½(Q')² - Q'']` and the 3D s-wave correction (constant flux) is
//! `√p ∇²(p^{-1/2}) = ½[½(Q')² - Q'' - (2/r)Q']`. A momentum is classical when
//! the correction vanishes identically.

use crate::deriv::{field_derivatives, Jet, Profile};
use crate::odesolve::dopri::{self, SolverOptions, Trajectory};
use crate::{Dim, Error, Grid, Result, ScalarField};

fn positive(j: Jet, x: f64) -> Result<Jet> {
    if j.value > 0.0 {
        Ok(j)
    } else {
        Err(Error::NonPositiveMomentum { coord: x, value: j.value })
    }
}

fn positive_radius(r: f64) -> Result<f64> {
    if r > 0.0 {
        Ok(r)
    } else {
        Err(Error::Domain { what: "radial coordinate (must be > 0)", value: r })
    }
}

/// `Q = ln p` of a momentum profile.
pub struct LogOf<P>(pub P);

impl<P: Profile> Profile for LogOf<P> {
    fn jet(&self, x: f64) -> Result<Jet> {
        let p = positive(self.0.jet(x)?, x)?;
        let l1 = p.d1 / p.value;
        Ok(Jet::new(p.value.ln(), l1, p.d2 / p.value - l1 * l1))
    }
}

/// `Q = ln(1/x²)` with derivatives.
pub fn log_momentum_1d_jet(x: f64) -> Result<Jet> {
    if x == 0.0 {
        return Err(Error::Singularity { what: "Q = ln(1/x^2)", coord: x });
    }
    Ok(Jet::new(-2.0 * x.abs().ln(), -2.0 / x, 2.0 / (x * x)))
}

/// `Q = ln r²` with derivatives.
pub fn log_momentum_3d_jet(r: f64) -> Result<Jet> {
    let r = positive_radius(r)?;
    Ok(Jet::new(2.0 * r.ln(), 2.0 / r, -2.0 / (r * r)))
}

/// `½[(3/2)(p'/p)² - p''/p]`, the right-hand side of the 1D generalized
/// Hamilton-Jacobi equation in dimensionless form.
pub fn quantum_correction_1d<P: Profile + ?Sized>(p: &P, x: f64) -> Result<f64> {
    let j = positive(p.jet(x)?, x)?;
    let l = j.d1 / j.value;
    Ok(0.5 * (1.5 * l * l - j.d2 / j.value))
}

/// Same quantity from `Q = ln p`: `½[½(Q')² - Q'']`.
pub fn quantum_correction_1d_q_form<P: Profile + ?Sized>(p: &P, x: f64) -> Result<f64> {
    let q = LogOf(p).jet(x)?;
    Ok(0.5 * (0.5 * q.d1 * q.d1 - q.d2))
}

/// `√p (∂² + (2/r)∂)(p^{-1/2})`.
pub fn quantum_correction_3d<P: Profile + ?Sized>(p: &P, r: f64) -> Result<f64> {
    let r = positive_radius(r)?;
    let j = positive(p.jet(r)?, r)?;
    // g = p^{-1/2}
    let g = j.value.powf(-0.5);
    let g1 = -0.5 * g / j.value * j.d1;
    let g2 = 0.75 * g / (j.value * j.value) * j.d1 * j.d1 - 0.5 * g / j.value * j.d2;
    Ok(j.value.sqrt() * (g2 + 2.0 * g1 / r))
}

/// `½[½(Q')² - Q'' - (2/r)Q']`.
pub fn quantum_correction_3d_q_form<P: Profile + ?Sized>(p: &P, r: f64) -> Result<f64> {
    let r = positive_radius(r)?;
    let q = LogOf(p).jet(r)?;
    Ok(0.5 * (0.5 * q.d1 * q.d1 - q.d2 - 2.0 * q.d1 / r))
}

/// Terms of the full 3D quantum correction for a radial momentum and a
/// constant flux modulus `F`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HjRhs3D {
    /// `-½[∇²p/p - (3/2)(∇p/p)²]`
    pub momentum_bracket: f64,
    /// `(1/√F) ∇²√F`
    pub flux_laplacian: f64,
    /// `2√(p/F) ∇(1/√p)·∇√F`
    pub flux_cross: f64,
}

impl HjRhs3D {
    pub fn total(&self) -> f64 {
        self.momentum_bracket + self.flux_laplacian + self.flux_cross
    }
}

/// Evaluate the 3D correction term by term. `flux_const` is the constant
/// modulus of `F = A²∇S`; its gradient terms are evaluated from the constant
/// profile and therefore vanish.
pub fn hj_rhs_3d<P: Profile + ?Sized>(p: &P, r: f64, flux_const: f64) -> Result<HjRhs3D> {
    let r = positive_radius(r)?;
    if !(flux_const > 0.0) {
        return Err(Error::Domain { what: "flux modulus F", value: flux_const });
    }
    let j = positive(p.jet(r)?, r)?;
    let sf = Jet::constant(flux_const.sqrt());
    let lap_p = j.d2 + 2.0 * j.d1 / r;
    let l = j.d1 / j.value;
    let momentum_bracket = -0.5 * (lap_p / j.value - 1.5 * l * l);
    let flux_laplacian = (sf.d2 + 2.0 * sf.d1 / r) / sf.value;
    // ∇(1/√p) = -½ p^{-3/2} p'
    let grad_inv_sqrt_p = -0.5 * j.value.powf(-1.5) * j.d1;
    let flux_cross = 2.0 * (j.value / flux_const).sqrt() * grad_inv_sqrt_p * sf.d1;
    Ok(HjRhs3D { momentum_bracket, flux_laplacian, flux_cross })
}

/// Left-hand side `p² - n²` of the dimensionless Hamilton-Jacobi equation.
pub fn hj_lhs(p: f64, n: f64) -> f64 {
    p * p - n * n
}

fn positive_field(p: &ScalarField) -> Result<()> {
    match p.iter().find(|(_, v)| !(*v > 0.0)) {
        Some((x, v)) => Err(Error::NonPositiveMomentum { coord: x, value: v }),
        None => Ok(()),
    }
}

/// 1D correction at every node of a sampled momentum field.
pub fn quantum_correction_1d_field(p: &ScalarField) -> Result<ScalarField> {
    positive_field(p)?;
    let q = p.map(|_, v| v.ln());
    let (d1, d2) = field_derivatives(&q)?;
    let vals = d1.iter().zip(&d2).map(|(a, b)| 0.5 * (0.5 * a * a - b)).collect();
    ScalarField::new(p.grid().clone(), vals)
}

/// 3D correction at every node of a sampled radial momentum field.
pub fn quantum_correction_3d_field(p: &ScalarField) -> Result<ScalarField> {
    positive_field(p)?;
    positive_radius(p.grid().start())?;
    let q = p.map(|_, v| v.ln());
    let (d1, d2) = field_derivatives(&q)?;
    let vals = p
        .grid()
        .nodes()
        .iter()
        .zip(d1.iter().zip(&d2))
        .map(|(r, (a, b))| 0.5 * (0.5 * a * a - b - 2.0 * a / r))
        .collect();
    ScalarField::new(p.grid().clone(), vals)
}

/// Left-hand side of the Q-equation: `Q'' - ½(Q')²` (1D) or
/// `Q'' + (2/r)Q' - ½(Q')²` (3D).
pub fn q_residual<P: Profile + ?Sized>(kind: Dim, q: &P, coord: f64) -> Result<f64> {
    match kind {
        Dim::D1 => {
            let j = q.jet(coord)?;
            Ok(j.d2 - 0.5 * j.d1 * j.d1)
        }
        Dim::D3 => {
            let r = positive_radius(coord)?;
            let j = q.jet(r)?;
            Ok(j.d2 + 2.0 * j.d1 / r - 0.5 * j.d1 * j.d1)
        }
    }
}

/// Boundary data `Q(coord) = value`, `Q'(coord) = slope`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct QBoundary {
    pub coord: f64,
    pub value: f64,
    pub slope: f64,
}

impl QBoundary {
    /// `Q(1) = 0` with the given slope.
    pub fn at_unit(slope: f64) -> Self {
        Self { coord: 1.0, value: 0.0, slope }
    }
}

/// Movable pole of the Q'-equation's solution through the boundary data.
///
/// 1D: `u = -2/(x - a)` with `a = x₀ + 2/u₀`. 3D: `1/u = r/2 + c r²`, pole at
/// `r = -1/(2c)` for `c < 0`.
pub fn riccati_pole(kind: Dim, b: &QBoundary) -> Option<f64> {
    if b.slope == 0.0 {
        return None;
    }
    match kind {
        Dim::D1 => Some(b.coord + 2.0 / b.slope),
        Dim::D3 => {
            let c = (1.0 / b.slope - 0.5 * b.coord) / (b.coord * b.coord);
            if c < 0.0 {
                Some(-0.5 / c)
            } else {
                None
            }
        }
    }
}

/// Numerical solution of a Q-equation with dense output.
#[derive(Debug, Clone)]
pub struct LogMomentum {
    kind: Dim,
    legs: Vec<Trajectory<2>>,
}

impl LogMomentum {
    pub fn kind(&self) -> Dim {
        self.kind
    }

    /// `(Q, Q')` at `x`.
    pub fn state(&self, x: f64) -> Option<[f64; 2]> {
        self.legs.iter().find_map(|t| t.eval(x))
    }

    pub fn q(&self, x: f64) -> Option<f64> {
        self.state(x).map(|s| s[0])
    }

    /// `Q` at the accepted steps, increasing coordinate.
    pub fn field(&self) -> ScalarField {
        let mut pts: Vec<(f64, f64)> = self
            .legs
            .iter()
            .flat_map(|t| t.xs().iter().copied().zip(t.ys().iter().map(|y| y[0])))
            .collect();
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        pts.dedup_by(|a, b| a.0 == b.0);
        let (x, v): (Vec<f64>, Vec<f64>) = pts.into_iter().unzip();
        ScalarField::new(Grid::from_nodes(x).expect("monotone steps"), v).expect("lengths agree")
    }

    /// `p = exp Q` at the accepted steps.
    pub fn momentum(&self) -> ScalarField {
        self.field().map(|_, q| q.exp())
    }
}

/// Integrate the Q-equation as the system `(Q, u = Q')` over `span`, which
/// must contain the boundary coordinate and exclude the origin.
pub fn solve_q_ivp(kind: Dim, boundary: QBoundary, span: (f64, f64), rel_tol: f64, abs_tol: f64) -> Result<LogMomentum> {
    let (a, b) = span;
    let bad = |m: String| Err(Error::InvalidProblem(m));
    if !(a < b) || !(a <= boundary.coord && boundary.coord <= b) {
        return bad(format!("span [{a}, {b}] must be nonempty and contain the boundary coordinate {}", boundary.coord));
    }
    match kind {
        Dim::D1 if a <= 0.0 && b >= 0.0 => return bad("1D span must exclude x = 0".into()),
        Dim::D3 if a <= 0.0 => return bad("3D span must lie in r > 0".into()),
        _ => {}
    }
    if !boundary.slope.is_finite() || !boundary.value.is_finite() {
        return bad("non-finite boundary data".into());
    }
    if let Some(pole) = riccati_pole(kind, &boundary) {
        if pole >= a && pole <= b {
            return Err(Error::BlowUp { pole });
        }
    }
    let rhs = move |x: f64, y: &[f64; 2]| match kind {
        Dim::D1 => [y[1], 0.5 * y[1] * y[1]],
        Dim::D3 => [y[1], 0.5 * y[1] * y[1] - 2.0 * y[1] / x],
    };
    let guard = |x: f64, y: &[f64; 2]| {
        if y.iter().all(|v| v.is_finite()) && y[1].abs() < 1e12 {
            Ok(())
        } else {
            Err(Error::BlowUp { pole: x })
        }
    };
    let opts = SolverOptions::new(rel_tol, abs_tol);
    let y0 = [boundary.value, boundary.slope];
    let mut legs = Vec::new();
    for end in [a, b] {
        if end != boundary.coord {
            let leg = dopri::integrate(rhs, boundary.coord, y0, end, &opts, guard).map_err(|e| match e {
                Error::StepUnderflow { coord, .. } => Error::BlowUp { pole: coord },
                e => e,
            })?;
            legs.push(leg);
        }
    }
    Ok(LogMomentum { kind, legs })
}

/// `ψ = A exp(iS)` reconstructed from a real stationary wave and the
/// medium's momentum, with `S = S₀ + ∫p`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PhaseAmplitude {
    pub kind: Dim,
    pub grid: Grid,
    pub amplitude: Vec<f64>,
    pub phase: Vec<f64>,
    pub momentum: Vec<f64>,
    /// `A²S'` in 1D; the radial flux `r²A²S'` in 3D.
    pub flux_const: f64,
    /// Largest deviation of `A(α sin S + β cos S)/|C|` from the input wave.
    pub fit_residual: f64,
}

impl PhaseAmplitude {
    /// Pointwise `A²S'`.
    pub fn transport_product(&self) -> Vec<f64> {
        self.amplitude.iter().zip(&self.momentum).map(|(a, p)| a * a * p).collect()
    }

    /// Pointwise `r²A²S'`.
    pub fn radial_flux(&self) -> Vec<f64> {
        self.grid
            .nodes()
            .iter()
            .zip(self.transport_product())
            .map(|(r, t)| r * r * t)
            .collect()
    }

    /// `A√(S')`, constant for a 1D decomposition.
    pub fn amplitude_times_sqrt_momentum(&self) -> Vec<f64> {
        self.amplitude.iter().zip(&self.momentum).map(|(a, p)| a * p.sqrt()).collect()
    }
}

/// Integral of the cubic through four neighbouring nodes over one interval.
fn cumulative_integral(x: &[f64], y: &[f64], origin: f64) -> Vec<f64> {
    // 3-point Gauss-Legendre nodes and weights on [0, 1]
    let gl = [
        (0.5 - 0.5 * (0.6_f64).sqrt(), 5.0 / 18.0),
        (0.5, 8.0 / 18.0),
        (0.5 + 0.5 * (0.6_f64).sqrt(), 5.0 / 18.0),
    ];
    let n = x.len();
    let mut out = Vec::with_capacity(n);
    out.push(origin);
    for i in 0..n - 1 {
        let lo = i.saturating_sub(1).min(n.saturating_sub(4));
        let hi = (lo + 4).min(n);
        let (sx, sy) = (&x[lo..hi], &y[lo..hi]);
        let h = x[i + 1] - x[i];
        let mut acc = 0.0;
        for (t, w) in gl {
            let xt = x[i] + t * h;
            let mut v = 0.0;
            for j in 0..sx.len() {
                let mut l = 1.0;
                for k in 0..sx.len() {
                    if k != j {
                        l *= (xt - sx[k]) / (sx[j] - sx[k]);
                    }
                }
                v += l * sy[j];
            }
            acc += w * v;
        }
        out.push(out[i] + acc * h);
    }
    out
}

/// Decompose a sampled real wave `psi` given the momentum on the same grid.
///
/// `S` is integrated from `phase_origin` at the first node. The
/// normalization `|C|` is the least-squares amplitude of `psi` in the basis
/// `a(x) sin S, a(x) cos S` with `a = p^{-1/2}` (1D) or `a = 1/(r√p)` (3D);
/// then `A = |C|·a`.
pub fn decompose(psi: &ScalarField, momentum: &ScalarField, kind: Dim, phase_origin: f64) -> Result<PhaseAmplitude> {
    if psi.grid() != momentum.grid() {
        return Err(Error::GridMismatch);
    }
    if psi.grid().len() < 4 {
        return Err(Error::InsufficientGrid { needed: 4, got: psi.grid().len() });
    }
    positive_field(momentum)?;
    let x = psi.grid().nodes();
    if kind == Dim::D3 {
        positive_radius(x[0])?;
    }
    let p = momentum.values();
    let phase = cumulative_integral(x, p, phase_origin);
    let basis: Vec<f64> = x
        .iter()
        .zip(p)
        .map(|(r, p)| match kind {
            Dim::D1 => 1.0 / p.sqrt(),
            Dim::D3 => 1.0 / (r * p.sqrt()),
        })
        .collect();
    let (mut ss, mut sc, mut cc, mut ys, mut yc) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for ((a, s), y) in basis.iter().zip(&phase).zip(psi.values()) {
        let (si, co) = s.sin_cos();
        let (u, v) = (a * si, a * co);
        ss += u * u;
        sc += u * v;
        cc += v * v;
        ys += y * u;
        yc += y * v;
    }
    let det = ss * cc - sc * sc;
    if det.abs() <= 1e-14 * ss.max(cc) * ss.max(cc) {
        return Err(Error::InvalidGrid("phase does not vary enough to separate sin S and cos S".into()));
    }
    let alpha = (ys * cc - yc * sc) / det;
    let beta = (yc * ss - ys * sc) / det;
    let c = alpha.hypot(beta);
    let fit_residual = basis
        .iter()
        .zip(&phase)
        .zip(psi.values())
        .map(|((a, s), y)| (a * (alpha * s.sin() + beta * s.cos()) - y).abs())
        .fold(0.0, f64::max);
    let amplitude: Vec<f64> = basis.iter().map(|a| c * a).collect();
    Ok(PhaseAmplitude {
        kind,
        grid: psi.grid().clone(),
        amplitude,
        phase,
        momentum: p.to_vec(),
        flux_const: c * c,
        fit_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deriv::{ClosedForm, FiniteDiff};
    use crate::media;

    fn power(k: f64) -> impl Profile {
        ClosedForm(move |x: f64| Ok(Jet::new(x.powf(k), k * x.powf(k - 1.0), k * (k - 1.0) * x.powf(k - 2.0))))
    }

    #[test]
    fn compensating_1d_momentum_is_classical() {
        let p = ClosedForm(media::momentum_1d_jet);
        for x in [0.2, 0.5, 1.0, 3.0, -2.0] {
            assert!(quantum_correction_1d(&p, x).unwrap().abs() < 1e-12);
            assert!(quantum_correction_1d_q_form(&p, x).unwrap().abs() < 1e-12);
        }
        let c = ClosedForm(|_| Ok(Jet::constant(2.5)));
        assert_eq!(quantum_correction_1d(&c, 0.7).unwrap(), 0.0);
    }

    #[test]
    fn inverse_momentum_correction() {
        let p = power(-1.0);
        for x in [0.5, 1.0, 2.0] {
            let v = quantum_correction_1d(&p, x).unwrap();
            assert!((v + 0.25 / (x * x)).abs() < 1e-14, "x = {x}");
        }
        let fd = FiniteDiff::new(|x: f64| 1.0 / x);
        assert!((quantum_correction_1d(&fd, 1.0).unwrap() + 0.25).abs() < 1e-8);
    }

    #[test]
    fn three_d_corrections() {
        let p = ClosedForm(media::momentum_3d_jet);
        for r in [0.2, 1.0, 7.0] {
            assert!(quantum_correction_3d(&p, r).unwrap().abs() < 1e-12);
        }
        let lin = power(1.0);
        for r in [0.5, 1.0, 3.0] {
            let want = -0.25 / (r * r);
            assert!((quantum_correction_3d(&lin, r).unwrap() - want).abs() < 1e-14);
            assert!((quantum_correction_3d_q_form(&lin, r).unwrap() - want).abs() < 1e-14);
        }
        assert!(quantum_correction_3d(&p, 0.0).is_err());
    }

    #[test]
    fn nonpositive_momentum_rejected() {
        let p = ClosedForm(|x: f64| Ok(Jet::new(x, 1.0, 0.0)));
        assert!(matches!(quantum_correction_1d(&p, -1.0), Err(Error::NonPositiveMomentum { .. })));
        let f = ScalarField::from_fn(Grid::uniform(-1.0, 1.0, 11).unwrap(), |x| x);
        assert!(quantum_correction_1d_field(&f).is_err());
    }

    #[test]
    fn q_residual_examples() {
        assert!(q_residual(Dim::D1, &ClosedForm(log_momentum_1d_jet), 0.7).unwrap().abs() < 1e-14);
        assert!(q_residual(Dim::D3, &ClosedForm(log_momentum_3d_jet), 2.5).unwrap().abs() < 1e-14);
        let (a, b) = (0.3, 1.0);
        let shifted = ClosedForm(move |x: f64| {
            let d = x - a;
            Ok(Jet::new(-2.0 * d.abs().ln() + b, -2.0 / d, 2.0 / (d * d)))
        });
        assert!(q_residual(Dim::D1, &shifted, 1.7).unwrap().abs() < 1e-14);
        assert!(q_residual(Dim::D3, &ClosedForm(log_momentum_3d_jet), 0.0).is_err());
    }

    #[test]
    fn q_ivp_reproduces_closed_forms() {
        let s = solve_q_ivp(Dim::D1, QBoundary::at_unit(-2.0), (0.5, 2.0), 1e-12, 1e-12).unwrap();
        let err = s.field().max_abs_error(|x| -2.0 * x.ln());
        assert!(err < 1e-9, "{err:e}");
        let s = solve_q_ivp(Dim::D3, QBoundary::at_unit(2.0), (0.5, 3.0), 1e-12, 1e-12).unwrap();
        let err = s.field().max_abs_error(|r| 2.0 * r.ln());
        assert!(err < 1e-9, "{err:e}");
        assert!((s.q(1.0).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn q_ivp_general_solution() {
        // Q'(1) = -1 gives Q = -2 ln((x + 1)/2)
        let s = solve_q_ivp(Dim::D1, QBoundary::at_unit(-1.0), (0.2, 5.0), 1e-12, 1e-12).unwrap();
        let err = s.field().max_abs_error(|x| -2.0 * ((x + 1.0) / 2.0).ln());
        assert!(err < 1e-9, "{err:e}");
    }

    #[test]
    fn q_ivp_blow_up_detected() {
        // pole at a = 1 + 2/2 = 2
        let r = solve_q_ivp(Dim::D1, QBoundary::at_unit(2.0), (0.5, 3.0), 1e-10, 1e-12);
        assert!(matches!(r, Err(Error::BlowUp { pole }) if (pole - 2.0).abs() < 1e-12));
        assert_eq!(riccati_pole(Dim::D1, &QBoundary::at_unit(-2.0)), Some(0.0));
        assert_eq!(riccati_pole(Dim::D3, &QBoundary::at_unit(2.0)), None);
        assert!(solve_q_ivp(Dim::D1, QBoundary::at_unit(-2.0), (-1.0, 2.0), 1e-10, 1e-12).is_err());
        // 3D: u(1) = 4 gives c = -1/4, pole at r = 2
        let r = solve_q_ivp(Dim::D3, QBoundary::at_unit(4.0), (0.5, 3.0), 1e-10, 1e-12);
        assert!(matches!(r, Err(Error::BlowUp { pole }) if (pole - 2.0).abs() < 1e-12));
    }

    #[test]
    fn eq25_flux_terms_vanish_for_constant_flux() {
        for k in [1.0, 2.0, 3.0] {
            let p = power(k);
            for r in [0.4, 1.0, 2.5] {
                let t = hj_rhs_3d(&p, r, 0.7).unwrap();
                assert_eq!(t.flux_laplacian, 0.0);
                assert_eq!(t.flux_cross, 0.0);
                let q = quantum_correction_3d(&p, r).unwrap();
                assert!((t.total() - q).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn decomposition_of_1d_wave() {
        let g = Grid::uniform(0.3, 5.0, 4000).unwrap();
        let psi = ScalarField::from_fn(g.clone(), |x| media::psi_1d(x, 1.5));
        let p = ScalarField::from_fn(g, |x| media::momentum_1d(x).unwrap());
        let d = decompose(&psi, &p, Dim::D1, -1.0 / 0.3).unwrap();
        for (x, a) in d.grid.nodes().iter().zip(&d.amplitude) {
            assert!((a - 1.5 * x).abs() < 1e-8);
        }
        for t in d.transport_product() {
            assert!((t - 2.25).abs() < 1e-8);
        }
        for (x, s) in d.grid.nodes().iter().zip(&d.phase) {
            assert!((s + 1.0 / x).abs() < 1e-8);
        }
        assert!(d.fit_residual < 1e-8);
    }

    #[test]
    fn decomposition_of_3d_wave_conserves_radial_flux() {
        let g = Grid::uniform(3.0, 6.0, 6000).unwrap();
        let psi = ScalarField::try_from_fn(g.clone(), |r| media::psi_3d(r, 1.0)).unwrap();
        let p = ScalarField::try_from_fn(g, media::momentum_3d).unwrap();
        let d = decompose(&psi, &p, Dim::D3, 9.0).unwrap();
        let flux = d.radial_flux();
        for f in &flux {
            assert!((f - d.flux_const).abs() < 1e-10 * d.flux_const);
        }
        // the amplitude approaches the large-r envelope
        let k = media::envelope_constant_3d(1.0);
        assert!((d.flux_const.sqrt() / k - 1.0).abs() < 0.01);
    }

    #[test]
    fn degenerate_constant_momentum() {
        let g = Grid::uniform(0.0, 20.0, 2001).unwrap();
        let psi = ScalarField::from_fn(g.clone(), |x| 2.0 * (0.8 * x).sin());
        let p = ScalarField::from_fn(g, |_| 0.8);
        let d = decompose(&psi, &p, Dim::D1, 0.0).unwrap();
        let a0 = d.amplitude[0];
        assert!(d.amplitude.iter().all(|a| (a - a0).abs() < 1e-12));
        for (x, s) in d.grid.nodes().iter().zip(&d.phase) {
            assert!((s - 0.8 * x).abs() < 1e-12);
        }
        assert!((a0 - 2.0).abs() < 1e-10);
    }
}
