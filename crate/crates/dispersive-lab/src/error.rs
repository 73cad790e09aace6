use thiserror::Error;

/// Errors surfaced by the laboratory's operations.
///
/// The command-line front end maps these onto its exit-code contract:
/// `InvalidArgument` → 2, `NumericFailure` → 3, `UnsupportedRegime` → 4.
#[derive(Debug, Error)]
pub enum Error {
    /// An input violated a precondition (bad range, empty data, mismatched grids).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The parameters fall outside every regime for which a bound is stated.
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),
    /// A quadrature or scan failed to converge within its budget.
    #[error("numeric failure: {0}")]
    NumericFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn ensure(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg))
    }
}
