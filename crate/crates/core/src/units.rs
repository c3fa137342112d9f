//! Physical parameters and conversions to the dimensionless representation.
//!
//! Lengths are measured in units of the de Broglie length `λ = ħ/√(2mE)` and
//! momenta in units of `ħ/λ`; in these units the compensating momenta read
//! `p = 1/x²` and `p = r²`.

use crate::{Error, Result};

/// Mass, energy and action scale of a particle. Immutable after construction.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PhysicalParams {
    mass: f64,
    energy: f64,
    hbar: f64,
}

impl PhysicalParams {
    pub fn new(mass: f64, energy: f64, hbar: f64) -> Result<Self> {
        for (name, v) in [("mass", mass), ("energy", energy), ("hbar", hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParams(format!("{name} must be positive and finite, got {v}")));
            }
        }
        Ok(Self { mass, energy, hbar })
    }

    /// Parameters with `ħ = 1`.
    pub fn with_unit_hbar(mass: f64, energy: f64) -> Result<Self> {
        Self::new(mass, energy, 1.0)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Free-particle momentum `p₀ = √(2mE)`.
    pub fn free_momentum(&self) -> f64 {
        (2.0 * self.mass * self.energy).sqrt()
    }

    pub fn lambda_bar(&self) -> f64 {
        lambda_bar(self)
    }

    /// Energy of a state with this mass and `ħ` whose de Broglie length equals `length`.
    pub fn energy_for_length(mass: f64, hbar: f64, length: f64) -> Result<f64> {
        let e = hbar * hbar / (2.0 * mass * length * length);
        PhysicalParams::new(mass, e, hbar).map(|p| p.energy)
    }
}

impl Default for PhysicalParams {
    /// `m = 1/2`, `E = 1/2`, `ħ = 1`.
    fn default() -> Self {
        Self { mass: 0.5, energy: 0.5, hbar: 1.0 }
    }
}

/// Length and energy coordinates with dimensions `[E]^{-1/2}` and `[E]^{1/2}`.
///
/// Only the product `zeta * sqrt_e` (the dimensionless coordinate) enters the
/// wave functions.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ScaledCoords {
    pub zeta: f64,
    pub sqrt_e: f64,
}

impl ScaledCoords {
    pub fn new(zeta: f64, sqrt_e: f64) -> Result<Self> {
        if !(sqrt_e.is_finite() && sqrt_e > 0.0) {
            return Err(Error::InvalidParams(format!("sqrt(E) must be positive, got {sqrt_e}")));
        }
        if !zeta.is_finite() {
            return Err(Error::InvalidParams(format!("zeta must be finite, got {zeta}")));
        }
        Ok(Self { zeta, sqrt_e })
    }

    /// The dimensionless coordinate `x/λ = ζ·√E`.
    pub fn product(&self) -> f64 {
        self.zeta * self.sqrt_e
    }
}

pub fn lambda_bar(params: &PhysicalParams) -> f64 {
    params.hbar / params.free_momentum()
}

pub fn to_dimensionless(x: f64, params: &PhysicalParams) -> f64 {
    x / params.lambda_bar()
}

pub fn from_dimensionless(x: f64, params: &PhysicalParams) -> f64 {
    x * params.lambda_bar()
}

/// Momentum in units of `ħ/λ`.
pub fn momentum_to_dimensionless(p: f64, params: &PhysicalParams) -> f64 {
    p * params.lambda_bar() / params.hbar
}

pub fn momentum_from_dimensionless(p: f64, params: &PhysicalParams) -> f64 {
    p * params.hbar / params.lambda_bar()
}

pub fn to_scaled(x: f64, params: &PhysicalParams) -> ScaledCoords {
    ScaledCoords {
        zeta: (2.0 * params.mass).sqrt() / params.hbar * x,
        sqrt_e: params.energy.sqrt(),
    }
}
