use alloc::string::String;

use crate::halfint::HalfInt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("Lorentz index {0} out of range 0..=3")]
    IndexOutOfRange(u8),
    #[error("matrix is singular")]
    Singular,
    #[error("point is not admissible: {0}")]
    InvalidPoint(String),
    #[error("matrix is not a Lorentz transformation (residual {0:e})")]
    NotLorentz(f64),
    #[error("invalid Wigner function: j = {j}, m' = {m_prime}, sigma = {sigma}")]
    InvalidWigner {
        j: HalfInt,
        m_prime: HalfInt,
        sigma: HalfInt,
    },
    #[error("negative radicand for j = {j}, kappa = {kappa}")]
    NegativeRadicand { j: HalfInt, kappa: HalfInt },
    #[error("inadmissible quantum numbers: {0}")]
    InvalidQuantumNumbers(String),
    #[error("separation failed: {0}")]
    SeparationFailure(String),
    #[error("mass must be nonzero")]
    ZeroMass,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("integration failed at r = {last_good_r}")]
    IntegrationFailure { last_good_r: f64 },
    #[error("grid has {0} points, at least 5 are needed")]
    GridTooCoarse(usize),
    #[error("pivot {0} vanishes at the supplied parameters")]
    DegeneratePivot(String),
    #[error("parse error: {0}")]
    Parse(String),
}
