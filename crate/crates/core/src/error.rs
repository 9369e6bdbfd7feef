use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid alternating sign matrix: {0}")]
    InvalidAsm(String),

    #[error("invalid six-vertex configuration at vertex (row {row}, col {col}): {reason}")]
    InvalidConfig {
        row: usize,
        col: usize,
        reason: String,
    },

    #[error("invalid height function: {0}")]
    InvalidHeight(String),

    #[error("size n = {n} is above the bound {max} ({what}); raise it explicitly to proceed")]
    BoundExceeded {
        n: usize,
        max: usize,
        what: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(
        "parameters (delta = {delta}, t = {t}) do not match a solvable case (q = 1, 2, 3 at t = 1)"
    )]
    UnsupportedParams { delta: String, t: String },

    #[error("factor {0} is not a unit series at the origin")]
    NonUnitFactor(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("quadrature did not converge: achieved error {achieved:e} > {requested:e}")]
    Quadrature { achieved: f64, requested: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
