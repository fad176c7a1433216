use thiserror::Error;

use crate::dynkin::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("not a Cartan matrix of finite type: {0}")]
    InvalidCartan(&'static str),

    #[error("cannot parse Dynkin type {0:?} (expected e.g. A3, B4, E6, F4, G2)")]
    ParseType(String),

    #[error("node {node} out of range 1..={rank}")]
    InvalidNode { node: usize, rank: usize },

    #[error("coweight has {got} entries, expected {expected}")]
    CoWeightLength { expected: usize, got: usize },

    #[error("coweight must be nonzero")]
    ZeroCoWeight,

    #[error("weight has {got} coefficients, expected {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("orbit has {required} elements, which exceeds the cap of {cap}; raise the cap to at least {required}")]
    OrbitCapExceeded { cap: usize, required: u128 },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("fixed points {first} and {second} of one transversal class have different normal profiles")]
    NonConstantProfile { first: usize, second: usize },

    #[error("decomposition identity failed: {0}")]
    DecompositionIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
