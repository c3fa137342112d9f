//! Compensating media: potential fields in which the nonlinear quantum term of
//! the generalized Hamilton-Jacobi equation vanishes identically.
//!
//! The crate provides
//!
//! - [`units`]: the single boundary between physical and dimensionless units,
//! - [`specfun`]: Gamma and fractional-order Bessel functions,
//! - [`media`]: closed forms for the 1D (`n = 1/x²`) and 3D (`n = r²`) media,
//! - [`quantumhj`]: quantum-correction functionals, Q-equations and the
//!   phase-amplitude decomposition,
//! - [`odesolve`]: adaptive integration of the wave equations, residuals and
//!   node finding,
//! - [`verify`] and [`figures`]: the check suites and plot data driven by the
//!   `compmedia` binary.
//!
//! Everything outside [`units`] works in units of the de Broglie length.

pub mod cli;
pub mod deriv;
pub mod error;
pub mod figures;
pub mod grid;
pub mod media;
pub mod odesolve;
pub mod output;
pub mod quantumhj;
pub mod roots;
pub mod specfun;
pub mod units;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{Grid, ScalarField};
pub use media::{MediumKind, MediumSpec};
pub use units::{PhysicalParams, ScaledCoords};

/// Which of the two geometries a computation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dim {
    /// Motion along a line, coordinate `x` in units of the de Broglie length.
    D1,
    /// Central symmetry, s-wave, radial coordinate `r`.
    D3,
}

impl std::fmt::Display for Dim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dim::D1 => f.write_str("d1"),
            Dim::D3 => f.write_str("d3"),
        }
    }
}
