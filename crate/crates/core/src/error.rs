use thiserror::Error;

/// Errors shared by the coefficient ring, series and catalog layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series kinds do not match")]
    KindMismatch,
    #[error("coefficient modes do not match")]
    ModeMismatch,
    #[error("exp requires a zero constant term")]
    NonzeroConstantTerm,
    #[error("operation requires constant term 1")]
    ConstantTermNotOne,
    #[error("SCC family must not contain the empty digraph (c_0 must be 0)")]
    EmptyObjectInFamily,
    #[error("SCC family coefficients must not depend on the marker u")]
    MarkerCollision,
    #[error("numeric GGF numerator not divisible by (1+w)^C(n,2) at n={0}")]
    NonIntegerCount(u32),
    #[error("oracle enumeration capped at n <= {max}, got {n}")]
    LimitExceeded { n: u32, max: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
