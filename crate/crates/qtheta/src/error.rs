//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("divisor's lowest q-slice is not a single monomial")]
    NonMonomialLead,

    #[error("exponent off the 1/12 grid: {0}")]
    OffGrid(String),

    #[error("phase falls off the zeta_12 grid: {0}")]
    PhaseOffGrid(String),

    #[error("gram matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("parameter outside its domain: {0}")]
    ParamDomain(String),

    #[error("inner series must have positive q-valuation for composition")]
    NonpositiveValuation,

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown identity id: {0}")]
    UnknownId(String),

    #[error("unknown series name: {0}")]
    UnknownSeries(String),

    #[error("{0}")]
    Invalid(String),
}
