use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid physical parameters: {0}")]
    InvalidParams(String),

    #[error("singular point: {what} is undefined at {coord}")]
    Singularity { what: &'static str, coord: f64 },

    #[error("gamma function has a pole at {0}")]
    GammaPole(f64),

    #[error("J_{nu}(z) diverges at z = 0 for negative non-integer order")]
    BesselDivergence { nu: f64 },

    #[error("argument {value} outside the domain of {what}")]
    Domain { what: &'static str, value: f64 },

    #[error("cross-kind call: {op} is not defined for a {kind} medium")]
    KindMismatch { op: &'static str, kind: &'static str },

    #[error("momentum must be strictly positive, got {value} at {coord}")]
    NonPositiveMomentum { coord: f64, value: f64 },

    #[error("grid too small: need at least {needed} nodes, got {got}")]
    InsufficientGrid { needed: usize, got: usize },

    #[error(
        "grid under-resolved at {coord}: spacing {spacing} exceeds local wavelength {wavelength} / {per_wavelength}"
    )]
    UnderResolved {
        coord: f64,
        spacing: f64,
        wavelength: f64,
        per_wavelength: usize,
    },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grids of the paired fields differ")]
    GridMismatch,

    #[error("tolerance {0} outside [1e-12, 1e-3]")]
    ToleranceOutOfRange(f64),

    #[error("invalid initial value problem: {0}")]
    InvalidProblem(String),

    #[error("step size underflow at {coord} (h = {step})")]
    StepUnderflow { coord: f64, step: f64 },

    #[error("exceeded {0} integration steps")]
    TooManySteps(usize),

    #[error("solution blows up at {pole} inside the integration span")]
    BlowUp { pole: f64 },

    #[error("no sign change of {what} on [{a}, {b}]")]
    NoBracket { what: &'static str, a: f64, b: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("CSV: {0}")]
    Csv(#[from] csv::Error),
}
