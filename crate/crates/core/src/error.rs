//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a prime: {0}")]
    NotPrime(u64),
    #[error("prime context mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("invalid rational literal: {0:?}")]
    ParseRational(String),
    #[error("zero coefficient at index {0}: ratio undefined")]
    ZeroCoefficient(usize),
    #[error("all coefficient valuations are infinite: the zero function has no polygon")]
    ZeroFunction,
    #[error("prefix of length {available} cannot decide the query at log-radius {requested}")]
    InsufficientPrefix {
        available: usize,
        requested: String,
    },
    #[error("composition with a truncated inner series of nonzero constant term determines no output coefficient")]
    UncertainComposition,
    #[error("order {required} exceeds available precision {available}")]
    OrderTooLow { required: usize, available: usize },
    #[error("subject is not certified transcendental; primeness analysis applies to transcendental functions only")]
    NotTranscendental,
    #[error("no rational {0}-th root of unity other than on order 1 and 2")]
    NonRationalRootOfUnity(u32),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("commutant system leaves a free parameter: the truncated constraints do not pin a finite solution set")]
    InfiniteCommutantFamily,
    #[error("commutant search inconclusive at this truncation order: {0}")]
    InconclusiveAtOrder(String),
}

pub type Result<T> = std::result::Result<T, Error>;
