use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An input violates a mathematical precondition (non-hermitian
    /// Hamiltonian, invalid projector, unnormalized density matrix, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// An argument is malformed (dimension mismatch, bad counts, negative time).
    #[error("argument error: {0}")]
    Argument(String),
    /// A quadrature window or refinement did not converge.
    #[error("not converged: {0}")]
    Convergence(String),
    /// The external eigensolver reported a failure.
    #[error("eigensolver failed with info = {0}")]
    Eigensolver(i32),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn argument<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
