use thiserror::Error;

/// Errors produced by the numeric routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the domain of the operation (non-finite values,
    /// non-positive real part, malformed configuration, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter sits on a pole or removable singularity of the formula.
    #[error("singular parameter: {0}")]
    Singular(String),

    /// The configured effort could not push the error bound below the
    /// requested tolerance. Carries the bound that was achieved.
    #[error("requested tolerance {requested:.3e} not reached (achieved {achieved:.3e})")]
    AccuracyNotReached { requested: f64, achieved: f64 },

    /// Root bracketing or refinement failed.
    #[error("refinement failed: {0}")]
    Refinement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
