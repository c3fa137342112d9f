//! Closed forms for the two compensating media.
//!
//! 1D: `n = p = 1/x²`, `S = -1/x`, `V/E = 1 - 1/x⁴`, `ψ = C x sin(1/x)`.
//!
//! 3D (s-wave): `n = p = r²`, `S = r³/3`, `V/E = 1 - r⁴`,
//! `ψ = C₂ 6^{-1/6} r^{-1/2} Γ(7/6) J_{1/6}(r³/3)`.
//!
//! Coordinates are in units of the de Broglie length, potentials in units of
//! the energy `E`.

use crate::deriv::Jet;
use crate::specfun::{bessel_j, bessel_j_prime, BesselOrder};
use crate::units::ScaledCoords;
use crate::{Dim, Error, Result};

/// Below this radius [`psi_3d`] is evaluated from the local power series.
pub const PSI_3D_SERIES_RADIUS: f64 = 0.5;

/// Number of terms of the local series used by [`psi_3d`].
pub const PSI_3D_SERIES_TERMS: usize = 3;

fn nonzero(x: f64, what: &'static str) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        Err(Error::Singularity { what, coord: x })
    } else {
        Ok(x)
    }
}

fn nonnegative(r: f64, what: &'static str) -> Result<f64> {
    if r >= 0.0 && r.is_finite() {
        Ok(r)
    } else {
        Err(Error::Domain { what, value: r })
    }
}

// ---------------------------------------------------------------- 1D medium

pub fn index_1d(x: f64) -> Result<f64> {
    let x = nonzero(x, "index of refraction n = 1/x^2")?;
    Ok(1.0 / (x * x))
}

pub fn momentum_1d(x: f64) -> Result<f64> {
    let x = nonzero(x, "momentum p = 1/x^2")?;
    Ok(1.0 / (x * x))
}

/// `p = 1/x²` with its analytic derivatives.
pub fn momentum_1d_jet(x: f64) -> Result<Jet> {
    let x = nonzero(x, "momentum p = 1/x^2")?;
    let x2 = x * x;
    Ok(Jet::new(1.0 / x2, -2.0 / (x2 * x), 6.0 / (x2 * x2)))
}

pub fn action_1d(x: f64) -> Result<f64> {
    let x = nonzero(x, "action S = -1/x")?;
    Ok(-1.0 / x)
}

/// `V/E = 1 - 1/x⁴`.
pub fn potential_1d(x: f64) -> Result<f64> {
    let x = nonzero(x, "potential V/E = 1 - 1/x^4")?;
    let x2 = x * x;
    Ok(1.0 - 1.0 / (x2 * x2))
}

/// `C x sin(1/x)`, continued by `0` at the origin.
pub fn psi_1d(x: f64, c: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        c * x * (1.0 / x).sin()
    }
}

/// `ψ`, `ψ'` and `ψ'' = -C sin(1/x)/x³` for `x ≠ 0`.
pub fn psi_1d_jet(x: f64, c: f64) -> Result<Jet> {
    let x = nonzero(x, "derivative of x sin(1/x)")?;
    let (s, co) = (1.0 / x).sin_cos();
    Ok(Jet::new(c * x * s, c * (s - co / x), -c * s / (x * x * x)))
}

pub fn psi_1d_scaled(coords: ScaledCoords, c: f64) -> f64 {
    psi_1d(coords.product(), c)
}

// ---------------------------------------------------------------- 3D medium

pub fn index_3d(r: f64) -> Result<f64> {
    let r = nonnegative(r, "index of refraction n = r^2")?;
    Ok(r * r)
}

pub fn momentum_3d(r: f64) -> Result<f64> {
    let r = nonnegative(r, "momentum p = r^2")?;
    Ok(r * r)
}

pub fn momentum_3d_jet(r: f64) -> Result<Jet> {
    let r = nonnegative(r, "momentum p = r^2")?;
    Ok(Jet::new(r * r, 2.0 * r, 2.0))
}

pub fn action_3d(r: f64) -> Result<f64> {
    let r = nonnegative(r, "action S = r^3/3")?;
    Ok(r * r * r / 3.0)
}

/// `V/E = 1 - r⁴`.
pub fn potential_3d(r: f64) -> Result<f64> {
    let r = nonnegative(r, "potential V/E = 1 - r^4")?;
    let r2 = r * r;
    Ok(1.0 - r2 * r2)
}

/// `6^{-1/6} Γ(7/6)`.
fn regular_prefactor() -> f64 {
    6.0_f64.powf(-1.0 / 6.0) * crate::specfun::gamma(7.0 / 6.0).expect("no pole at 7/6")
}

/// `6^{-1/6} Γ(5/6)`.
fn irregular_prefactor() -> f64 {
    6.0_f64.powf(-1.0 / 6.0) * crate::specfun::gamma(5.0 / 6.0).expect("no pole at 5/6")
}

/// `ψ(0) = C₂ 6^{-1/3}`.
pub fn psi_3d_origin(c2: f64) -> f64 {
    c2 * 6.0_f64.powf(-1.0 / 3.0)
}

/// Coefficients `a_0, a_6, a_12, …` of `ψ(r)/ψ(0) = Σ a_n rⁿ`, from
/// `a_{n+6} = -a_n / ((n+6)(n+7))`.
pub fn local_series_coefficients(terms: usize) -> Vec<f64> {
    let mut a = Vec::with_capacity(terms);
    let mut cur = 1.0;
    for k in 0..terms {
        a.push(cur);
        let n = (6 * k) as f64;
        cur = -cur / ((n + 6.0) * (n + 7.0));
    }
    a
}

/// Truncated local series `ψ(0) Σ_{k<terms} a_{6k} r^{6k}`.
pub fn psi_3d_series(r: f64, c2: f64, terms: usize) -> f64 {
    let r6 = r.powi(6);
    let mut sum = 0.0;
    let mut pow = 1.0;
    for a in local_series_coefficients(terms) {
        sum += a * pow;
        pow *= r6;
    }
    psi_3d_origin(c2) * sum
}

/// Local series summed to convergence, with derivatives.
fn psi_3d_series_jet(r: f64, c2: f64) -> Jet {
    let r6 = r.powi(6);
    let (mut v, mut d1, mut d2) = (0.0, 0.0, 0.0);
    let mut a = 1.0;
    let mut pow = 1.0; // r^{6k}
    for k in 0..40 {
        let n = (6 * k) as f64;
        v += a * pow;
        if k > 0 {
            d1 += a * n * pow / r;
            d2 += a * n * (n - 1.0) * pow / (r * r);
        }
        if k > 0 && (a * pow).abs() < 1e-18 {
            break;
        }
        a = -a / ((n + 6.0) * (n + 7.0));
        pow *= r6;
    }
    let s = psi_3d_origin(c2);
    Jet::new(s * v, s * d1, s * d2)
}

/// Regular solution through the Bessel function, without the small-`r` switch.
pub fn psi_3d_bessel(r: f64, c2: f64) -> Result<f64> {
    let r = nonnegative(r, "radial wave function")?;
    if r == 0.0 {
        return Ok(psi_3d_origin(c2));
    }
    let z = r * r * r / 3.0;
    Ok(c2 * regular_prefactor() * bessel_j(BesselOrder::PLUS_SIXTH, z)? / r.sqrt())
}

/// The regular s-wave `ψ(r) = C₂ 6^{-1/6} r^{-1/2} Γ(7/6) J_{1/6}(r³/3)`.
///
/// Below [`PSI_3D_SERIES_RADIUS`] the three-term series
/// `ψ(0)(1 - r⁶/42 + r¹²/6552)` is used; `ψ(0) = C₂ 6^{-1/3}`.
pub fn psi_3d(r: f64, c2: f64) -> Result<f64> {
    let r = nonnegative(r, "radial wave function")?;
    if r < PSI_3D_SERIES_RADIUS {
        Ok(psi_3d_series(r, c2, PSI_3D_SERIES_TERMS))
    } else {
        psi_3d_bessel(r, c2)
    }
}

/// `ψ`, `ψ'`, `ψ''` of the regular s-wave at `r > 0`.
pub fn psi_3d_jet(r: f64, c2: f64) -> Result<Jet> {
    let r = nonnegative(r, "radial wave function")?;
    if r < PSI_3D_SERIES_RADIUS {
        return Ok(psi_3d_series_jet(r, c2));
    }
    let nu = BesselOrder::PLUS_SIXTH.nu();
    let z = r * r * r / 3.0;
    let j = bessel_j(BesselOrder::PLUS_SIXTH, z)?;
    let jp = bessel_j_prime(BesselOrder::PLUS_SIXTH, z)?;
    // Bessel's equation
    let jpp = -jp / z - (1.0 - nu * nu / (z * z)) * j;
    let k = c2 * regular_prefactor();
    let sr = r.sqrt();
    let value = k * j / sr;
    let d1 = k * (-0.5 * j / (r * sr) + r * sr * jp);
    let d2 = k * (0.75 * j / (r * r * sr) + sr * jp + r * r * r * sr * jpp);
    Ok(Jet::new(value, d1, d2))
}

/// Two-parameter solution
/// `(6^{-1/6}/√r)[C₁Γ(5/6)J_{-1/6}(r³/3) + C₂Γ(7/6)J_{1/6}(r³/3)]`.
pub fn psi_3d_general(r: f64, c1: f64, c2: f64) -> Result<f64> {
    if c1 == 0.0 {
        return psi_3d(r, c2);
    }
    let r = nonnegative(r, "radial wave function")?;
    if r == 0.0 {
        return Err(Error::Singularity { what: "irregular solution C1/r", coord: 0.0 });
    }
    let z = r * r * r / 3.0;
    let irregular = c1 * irregular_prefactor() * bessel_j(BesselOrder::MINUS_SIXTH, z)?;
    let regular = c2 * regular_prefactor() * bessel_j(BesselOrder::PLUS_SIXTH, z)?;
    Ok((irregular + regular) / r.sqrt())
}

pub fn psi_3d_scaled(coords: ScaledCoords, c2: f64) -> Result<f64> {
    if coords.zeta < 0.0 {
        return Err(Error::Domain { what: "radial scaled coordinate zeta", value: coords.zeta });
    }
    psi_3d(coords.product(), c2)
}

/// Large-`r` constant of `|ψ| r²`: `C₂ 6^{1/3} Γ(7/6)/√π`.
pub fn envelope_constant_3d(c2: f64) -> f64 {
    c2.abs() * 6.0_f64.cbrt() * crate::specfun::gamma(7.0 / 6.0).expect("no pole at 7/6")
        / std::f64::consts::PI.sqrt()
}

/// Smooth envelope of `|ψ| r²`, from the modulus `√(J² + Y²)` of order 1/6.
pub fn envelope_3d(r: f64, c2: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain { what: "envelope radius", value: r });
    }
    let z = r * r * r / 3.0;
    let m = crate::specfun::bessel_modulus(BesselOrder::PLUS_SIXTH, z)?;
    Ok(c2.abs() * regular_prefactor() * m * r * r / r.sqrt())
}

/// First node of the regular 3D wave, `(3 j_{1/6,1})^{1/3}`.
pub fn first_node_3d() -> Result<f64> {
    let j = crate::specfun::bessel_j_first_zero(BesselOrder::PLUS_SIXTH)?;
    Ok((3.0 * j).cbrt())
}

// ------------------------------------------------------ singular potentials

/// The zero-energy Schrödinger form `ψ'' (+ 2ψ'/r) - U ψ = -ε ψ` with
/// `U = -1/x⁴` (1D) or `U = -r⁴` (3D) and `ε = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingularPotentialForm {
    kind: Dim,
}

impl SingularPotentialForm {
    pub fn new(kind: Dim) -> Self {
        Self { kind }
    }

    pub fn kind(&self) -> Dim {
        self.kind
    }

    /// Always zero.
    pub fn binding_energy(&self) -> f64 {
        0.0
    }
}

/// `U/E`.
pub fn singular_potential(form: SingularPotentialForm, coord: f64) -> Result<f64> {
    match form.kind {
        Dim::D1 => {
            let x = nonzero(coord, "singular potential U = -1/x^4")?;
            let x2 = x * x;
            Ok(-1.0 / (x2 * x2))
        }
        Dim::D3 => {
            let r = nonnegative(coord, "potential U = -r^4")?;
            let r2 = r * r;
            Ok(-(r2 * r2))
        }
    }
}

// --------------------------------------------------------------- dispatch

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum MediumKind {
    Compensating1D,
    Compensating3D,
}

impl MediumKind {
    pub fn dim(self) -> Dim {
        match self {
            MediumKind::Compensating1D => Dim::D1,
            MediumKind::Compensating3D => Dim::D3,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MediumKind::Compensating1D => "1D",
            MediumKind::Compensating3D => "3D",
        }
    }
}

impl From<Dim> for MediumKind {
    fn from(d: Dim) -> Self {
        match d {
            Dim::D1 => MediumKind::Compensating1D,
            Dim::D3 => MediumKind::Compensating3D,
        }
    }
}

/// One of the two media with its normalization (`C` in 1D, `C₂` in 3D).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MediumSpec {
    pub kind: MediumKind,
    pub normalization: f64,
}

impl MediumSpec {
    pub fn new(kind: MediumKind) -> Self {
        Self { kind, normalization: 1.0 }
    }

    pub fn with_normalization(kind: MediumKind, normalization: f64) -> Self {
        Self { kind, normalization }
    }

    pub fn index(&self, c: f64) -> Result<f64> {
        match self.kind {
            MediumKind::Compensating1D => index_1d(c),
            MediumKind::Compensating3D => index_3d(c),
        }
    }

    pub fn momentum(&self, c: f64) -> Result<f64> {
        match self.kind {
            MediumKind::Compensating1D => momentum_1d(c),
            MediumKind::Compensating3D => momentum_3d(c),
        }
    }

    pub fn momentum_jet(&self, c: f64) -> Result<Jet> {
        match self.kind {
            MediumKind::Compensating1D => momentum_1d_jet(c),
            MediumKind::Compensating3D => momentum_3d_jet(c),
        }
    }

    pub fn action(&self, c: f64) -> Result<f64> {
        match self.kind {
            MediumKind::Compensating1D => action_1d(c),
            MediumKind::Compensating3D => action_3d(c),
        }
    }

    pub fn potential(&self, c: f64) -> Result<f64> {
        match self.kind {
            MediumKind::Compensating1D => potential_1d(c),
            MediumKind::Compensating3D => potential_3d(c),
        }
    }

    pub fn singular_form(&self) -> SingularPotentialForm {
        SingularPotentialForm::new(self.kind.dim())
    }

    pub fn psi(&self, c: f64) -> Result<f64> {
        match self.kind {
            MediumKind::Compensating1D => Ok(psi_1d(c, self.normalization)),
            MediumKind::Compensating3D => psi_3d(c, self.normalization),
        }
    }

    pub fn psi_jet(&self, c: f64) -> Result<Jet> {
        match self.kind {
            MediumKind::Compensating1D => psi_1d_jet(c, self.normalization),
            MediumKind::Compensating3D => psi_3d_jet(c, self.normalization),
        }
    }

    pub fn psi_scaled(&self, coords: ScaledCoords) -> Result<f64> {
        match self.kind {
            MediumKind::Compensating1D => Ok(psi_1d_scaled(coords, self.normalization)),
            MediumKind::Compensating3D => psi_3d_scaled(coords, self.normalization),
        }
    }

    /// Two-constant 3D solution; rejected for the 1D medium.
    pub fn psi_general(&self, r: f64, c1: f64) -> Result<f64> {
        match self.kind {
            MediumKind::Compensating3D => psi_3d_general(r, c1, self.normalization),
            k => Err(Error::KindMismatch { op: "psi_general", kind: k.name() }),
        }
    }

    /// First node of the 3D wave; rejected for the 1D medium, whose nodes
    /// accumulate at the origin.
    pub fn first_node(&self) -> Result<f64> {
        match self.kind {
            MediumKind::Compensating3D => first_node_3d(),
            k => Err(Error::KindMismatch { op: "first_node", kind: k.name() }),
        }
    }
}
