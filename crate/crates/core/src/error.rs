//! Error type shared across the crate.

use std::fmt;

/// Everything that can go wrong when a precondition of one of the formulas is
/// violated or a truncated computation cannot certify its result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by zero or inversion of a non-invertible element.
    NotInvertible(String),
    /// A structural precondition was violated (wrong parity, wrong modulus, ...).
    InvalidArgument(String),
    /// A denominator of the closed form vanished; carries the offending index.
    VanishingDenominator { j: u32 },
    /// A truncated p-adic computation could not certify the requested precision.
    PrecisionLoss(String),
    /// A value cannot be realized in the requested ring.
    NotEmbeddable(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInvertible(s) => write!(f, "not invertible: {s}"),
            Error::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
            Error::VanishingDenominator { j } => {
                write!(f, "vanishing denominator 1 + xi*q^(h+j) at j = {j}")
            }
            Error::PrecisionLoss(s) => write!(f, "precision cannot be certified: {s}"),
            Error::NotEmbeddable(s) => write!(f, "not embeddable: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
