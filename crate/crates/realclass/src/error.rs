//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by field construction, enumeration guards, and the
/// arithmetic layers built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("argument must be positive")]
    NonPositive,

    #[error("{what} guard exceeded: {requested} > {limit}")]
    Guard {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("scalar must be nonzero")]
    ZeroScalar,

    #[error("monic polynomial must have a nonzero constant term")]
    ZeroConstantTerm,

    #[error("field of order {order} is not a quadratic extension with subfield of order {q}")]
    NotQuadraticExtension { q: u64, order: u64 },

    #[error("{q} is not the order of a subfield of the field of order {order}")]
    NotSubfield { q: u64, order: u64 },

    #[error("element does not lie in the ambient group")]
    NotInGroup,

    #[error("no non-square exists: the group of order {0} has odd order or trivial 2-part")]
    NoNonSquare(u64),

    #[error("q = {0} is even, so no non-square scalar exists")]
    EvenCharacteristic(u64),

    #[error("elements belong to different fields")]
    FieldMismatch,

    #[error("mixed fields in polynomial sequence")]
    MixedFields,

    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("series divisor must have constant term 1")]
    NonUnitDivisor,

    #[error("partition parts must be positive and weakly decreasing")]
    MalformedPartition,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
