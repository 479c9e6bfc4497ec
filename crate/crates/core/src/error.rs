//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parameter `{0}` is not assigned a value")]
    UnassignedParam(String),
    #[error("invalid rational literal `{0}` (expected `p/q` or `p`)")]
    BadRational(String),
    #[error("not a partition: parts must be weakly decreasing and positive, got {0:?}")]
    BadPartition(Vec<i64>),
    #[error("partition {0:?} is not strict")]
    NotStrict(Vec<i64>),
    #[error("input is not supported on odd power sums only (found part {0})")]
    NotOdd(i64),
    #[error("Pfaffian requires even dimension, got {0}")]
    OddDimension(usize),
    #[error("Pfaffian dimension {0} exceeds the {1}x{1} cap")]
    PfaffianTooLarge(usize, usize),
    #[error("evaluation points must be pairwise distinct and nonzero")]
    BadEvalPoints,
    #[error("prefactor denominator vanishes: t^{0} = 1 for the given t")]
    PrefactorVanishes(u32),
    #[error("symmetrization over {0} variables exceeds the cap of {1}")]
    TooManyVariables(usize, usize),
    #[error("matrix builder needs at least {needed} parameters, {got} supplied")]
    NotEnoughParameters { needed: usize, got: usize },
    #[error("truncation did not stabilize at order {0}")]
    NonStabilizing(u32),
    #[error("malformed document: {0}")]
    BadDocument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
