use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed input data, with file/line context.
    #[error("{path}:{line}: {msg}")]
    Ingest {
        path: String,
        line: usize,
        msg: String,
    },

    /// Parameters outside the validity region of an asymptotic form.
    #[error("out of regime: {0}")]
    OutOfRegime(String),

    /// Degenerate configuration where a formula is singular.
    #[error("singular configuration: {0}")]
    Singular(String),

    /// Oscillator system violating its stability bound.
    #[error("unstable system: {0}")]
    Unstable(String),

    /// Iterative sum or quadrature exhausted its budget.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// Invalid construction parameters.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
