use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A numeric argument fell outside its admissible range.
    #[error("{field} = {value} is out of range: {requirement}")]
    Range {
        field: &'static str,
        value: f64,
        requirement: &'static str,
    },

    /// The exponents of a Hölder-type bound must satisfy 1/p + 1/r = 1.
    #[error("exponents p = {p} and r = {r} are not conjugate: |1/p + 1/r - 1| exceeds 1e-12")]
    Conjugacy { p: f64, r: f64 },

    /// The Hölder-type bound was requested without its exponent p.
    #[error("the Hölder-type bound requires the exponent p")]
    MissingExponent,

    /// The adaptive integrator hit its subdivision cap before reaching the tolerance.
    #[error(
        "quadrature did not converge: error estimate {error_estimate:.3e} > tolerance \
         {tolerance:.3e} after {subdivisions} subdivisions"
    )]
    NoConvergence {
        error_estimate: f64,
        tolerance: f64,
        subdivisions: usize,
    },

    /// The integrand produced NaN or an infinity at an interior sample point.
    #[error("integrand returned a non-finite value at x = {x}")]
    NonFiniteSample { x: f64 },

    /// The requested operation needs a domain the arguments do not provide.
    #[error("domain error: {message}")]
    Domain { message: String },

    /// A quantity that must be nonnegative was negative.
    #[error("{field} = {value} must be nonnegative")]
    NegativeValue { field: &'static str, value: f64 },

    /// A Simpson-type remainder check needs a sup bound on the fourth derivative.
    #[error("no fourth-derivative bound is attached to `{label}`")]
    MissingFourthDerivativeBound { label: String },

    /// The catalog has no entry under this identifier.
    #[error("unknown catalog id `{id}`")]
    UnknownId { id: String },

    /// A sweep asked for more tuples than the configured cap.
    #[error("sweep of {requested} tuples exceeds the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },

    /// A supplied derivative disagrees with a finite-difference probe of f.
    #[error(
        "derivative of `{label}` disagrees with a central finite difference at x = {x}: \
         analytic {analytic}, measured {measured}"
    )]
    DerivativeMismatch {
        label: String,
        x: f64,
        analytic: f64,
        measured: f64,
    },

    /// A function selector or configuration value could not be parsed.
    #[error("parse error: {message}")]
    Parse { message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain {
            message: message.into(),
        }
    }

    pub(crate) fn parse(message: impl Into<String>) -> Self {
        Error::Parse {
            message: message.into(),
        }
    }
}
