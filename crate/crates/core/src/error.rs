use thiserror::Error;

/// Errors raised by density, detector, diversity and simulation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("density vanishes at z = {0}; g(z) is undefined")]
    DegeneratePoint(f64),

    #[error("law has unbounded support; a finite right end point is required")]
    InfiniteSupport,

    #[error("law has infinite mean; the linear detector is degenerate")]
    InfiniteMean,

    #[error("unimodality condition could not be verified near the support boundary")]
    ConditionUnverified,

    #[error("quadrature did not reach tolerance (estimate {estimate:e}, error {abs_error:e})")]
    QuadratureFailure { estimate: f64, abs_error: f64 },

    #[error("argument {0} is outside the domain of the function")]
    OutsideDomain(f64),

    #[error("diversity gain is infinite")]
    InfiniteGain,

    #[error("no crossover found for tau up to {0}")]
    NoCrossover(f64),

    #[error("only {usable} grid points have enough error events; at least 3 are required")]
    InsufficientErrorEvents { usable: usize },

    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
}

impl Error {
    /// Variant name, stable for machine-readable error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::DegeneratePoint(_) => "DegeneratePoint",
            Error::InfiniteSupport => "InfiniteSupport",
            Error::InfiniteMean => "InfiniteMean",
            Error::ConditionUnverified => "ConditionUnverified",
            Error::QuadratureFailure { .. } => "QuadratureFailure",
            Error::OutsideDomain(_) => "OutsideDomain",
            Error::InfiniteGain => "InfiniteGain",
            Error::NoCrossover(_) => "NoCrossover",
            Error::InsufficientErrorEvents { .. } => "InsufficientErrorEvents",
            Error::Parse(_) => "Parse",
        }
    }
}

/// Failure to parse a textual law spec or a CLI grid argument.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at byte {position}")]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl ParseError {
    pub(crate) fn new(message: impl Into<String>, position: usize) -> Self {
        Self { message: message.into(), position }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
