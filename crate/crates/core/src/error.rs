//! Crate-wide error type.

use std::fmt;

use thiserror::Error;

/// A single violated parameter invariant, reported with the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Config-style field name, e.g. `membrane.R`.
    pub field: &'static str,
    pub message: String,
}

impl Violation {
    pub fn new(field: &'static str, message: impl Into<String>) -> Self {
        Self {
            field,
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

fn join_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(Violation::to_string)
        .collect::<Vec<_>>()
        .join("\n  ")
}

#[derive(Debug, Error)]
pub enum Error {
    /// One or more parameter invariants do not hold; every violation is listed.
    #[error("invalid parameters:\n  {}", join_violations(.0))]
    Invalid(Vec<Violation>),

    /// Config file could not be parsed.
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    /// Shot noise is unbounded without carrier light on the membrane.
    #[error("no signal: shot noise unbounded (zero reflected carrier power)")]
    NoSignal,

    /// The fringe slope vanishes at the bright-fringe operating point.
    #[error("zero fringe slope at phi0 = ±pi")]
    ZeroFringeSlope,

    /// The structural-damping force spectrum has a 1/f divergence at DC.
    #[error("structural damping model is undefined at f = 0")]
    StructuralDampingAtDc,

    /// The quadrature-field oracle only models a lossless membrane.
    #[error("oracle requires a lossless membrane (r^2 + t^2 = 1), got r^2 + t^2 = {0}")]
    LossyMembrane(f64),

    /// Sweep parameter name not in the config key set.
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),

    /// Sweep parameter exists but does not take numeric values.
    #[error("parameter `{0}` is not numeric")]
    NonNumericParameter(String),

    /// Channel ratio with a zero denominator.
    #[error("channel `{0}` is zero at the requested frequency")]
    ZeroDenominator(&'static str),

    /// A solver has no solution for the given inputs.
    #[error("no solution: {0}")]
    NoSolution(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// `true` for errors caused by user input (CLI exit code 2);
    /// `false` for internal failures (exit code 1).
    pub fn is_user_error(&self) -> bool {
        !matches!(self, Error::Io(_) | Error::Json(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
