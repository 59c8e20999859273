use std::fmt;

use thiserror::Error;

/// One violated parameter invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamViolation {
    pub name: &'static str,
    pub value: f64,
    pub rule: &'static str,
}

impl ParamViolation {
    pub fn new(name: &'static str, value: f64, rule: &'static str) -> Self {
        Self { name, value, rule }
    }
}

impl fmt::Display for ParamViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {} {}", self.name, self.value, self.rule)
    }
}

fn join(v: &[ParamViolation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {}", join(.0))]
    InvalidParams(Vec<ParamViolation>),

    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    /// Entry is unprofitable even with no rivals, Φ(0) ≤ 0.
    #[error("no entry: phi(0) = {phi0} <= 0")]
    NoEntry { phi0: f64 },

    #[error("no interior optimum: {0}")]
    NoInteriorOptimum(String),

    #[error("{what} did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { what: &'static str, iterations: usize, residual: f64 },

    #[error("period {period}: {source}")]
    AtPeriod {
        period: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },

    #[error("config: {0}")]
    ConfigValidation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Short machine-readable tag for error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParams(_) => "invalid_params",
            Error::Domain { .. } => "domain",
            Error::NoEntry { .. } => "no_entry",
            Error::NoInteriorOptimum(_) => "no_interior_optimum",
            Error::NonConvergence { .. } => "non_convergence",
            Error::AtPeriod { source, .. } => source.kind(),
            Error::Config { .. } => "config_parse",
            Error::ConfigValidation(_) => "config_validation",
            Error::Io(_) => "io",
            Error::Csv(_) => "csv",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
