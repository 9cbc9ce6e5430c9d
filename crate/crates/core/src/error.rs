use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CapError {
    /// An argument lies outside the domain of a function.
    #[error("domain error: {0}")]
    Domain(String),
    /// The boundary description is invalid (crossing curves, cusps, bad orientation).
    #[error("geometry error: {0}")]
    Geometry(String),
    /// An iterative solver failed to reach its tolerance.
    #[error("solver error: {message}")]
    Solver { message: String, residuals: Vec<f64> },
    /// A numerical procedure broke down (singular system, failed bracketing).
    #[error("numerical error: {0}")]
    Numerical(String),
    /// Inconsistent or incomplete configuration.
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, CapError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(CapError::Domain(msg.into()))
}

pub(crate) fn geometry<T>(msg: impl Into<String>) -> Result<T> {
    Err(CapError::Geometry(msg.into()))
}
