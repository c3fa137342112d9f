//! Numerical reproduction of the wave equations and residual checks.

pub mod dopri;
pub mod wave;

pub use dopri::{SolverOptions, SolverStats, Trajectory};
pub use wave::{
    check_resolution, integrate, node_locations, residual, residual_of_field, resolved_grid, DerivativeMode,
    IvpProblem, ResidualReport, WaveKind, WaveSolution, DEFAULT_SPAN_1D, DEFAULT_SPAN_3D, NODES_PER_WAVELENGTH,
    STEP_OFF_RADIUS,
};
