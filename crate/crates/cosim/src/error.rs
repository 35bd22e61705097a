//! Error type shared across the crate.

use crate::shapes::ShapeKind;

/// Everything that can go wrong while building shapes, realizing signals,
/// or running a co-simulation.
#[derive(Debug, thiserror::Error)]
pub enum CosimError {
    #[error("non-finite {what}: {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("{kind:?} is not a hat kind")]
    NotAHat { kind: ShapeKind },

    #[error("derivative order {order} not supported for {kind:?}")]
    DerivativeUnsupported { kind: ShapeKind, order: u32 },

    #[error("degenerate interval [{t_start}, {t_end}]")]
    DegenerateInterval { t_start: f64, t_end: f64 },

    #[error("quadrature needs an even panel count >= 2, got {panels}")]
    InvalidPanels { panels: usize },

    #[error("non-finite integrand sample at t = {t}")]
    NonFiniteSample { t: f64 },

    #[error("sample history is empty")]
    EmptyHistory,

    #[error("duplicate sample time {t}")]
    DuplicateSampleTime { t: f64 },

    #[error("interval starts at {found} but must start at {expected}")]
    IntervalMismatch { expected: f64, found: f64 },

    #[error("state dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("step size underflow at t = {t}")]
    StepSizeUnderflow { t: f64 },

    #[error("non-finite state at t = {t}")]
    NonFiniteState { t: f64 },

    #[error("trace grids do not match: {0}")]
    GridMismatch(String),

    #[error("csv parse error at line {line}: {message}")]
    CsvParse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CosimError {
    /// Process exit code for the CLI: numeric failures map to 1, everything
    /// that amounts to a usage problem maps to 2.
    pub fn exit_code(&self) -> i32 {
        match self {
            CosimError::InvalidConfig(_) => 2,
            _ => 1,
        }
    }
}
