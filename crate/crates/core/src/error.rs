use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor must be monic")]
    NotMonic,
    #[error("divisor must have degree at least 1")]
    ConstantDivisor,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division is not exact")]
    InexactDivision,
    #[error("degree {degree} exceeds the supported cap of {cap}")]
    UnsupportedDegree { degree: usize, cap: usize },
    #[error("root isolation could not be certified at {bits} bits")]
    IsolationFailed { bits: u32 },
    #[error("polynomial has roots on (or undecidably near) the unit circle")]
    UnimodularUnresolved,
    #[error("invalid digit set: {0}")]
    InvalidDigitSet(&'static str),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
