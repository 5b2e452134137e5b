use std::path::PathBuf;

use thiserror::Error;

/// Errors shared by the library and the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("a quiver must have at least one vertex")]
    EmptyQuiver,
    #[error("vertex {index} out of range for a quiver with {num_vertices} vertices")]
    VertexOutOfRange { index: usize, num_vertices: usize },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("invalid preset `{0}` (expected kronecker:n, cyclic:n or bipartite:p:q with positive parameters)")]
    InvalidPreset(String),
    #[error("lattice box of {points} points exceeds the budget of {budget}")]
    BudgetExceeded { points: u128, budget: u128 },
    #[error("operation is undefined for the zero dimension vector")]
    ZeroDimVector,
    #[error("decomposition must have at least one part")]
    EmptyDecomposition,
    #[error("decomposition part {index} is invalid: {reason}")]
    InvalidPart { index: usize, reason: String },
    #[error("decomposition part {index} is not theta-stable")]
    UnstablePart { index: usize },
    #[error(
        "computed arrow count {count} from part {from} to part {to} is negative: \
         the parts do not form a valid stable family"
    )]
    NegativeArrowCount { from: usize, to: usize, count: i64 },
    #[error("dimension vector is not theta-stable for this weight")]
    NotStable,
    #[error("margin sums differ: sum(a) = {a_total}, sum(b) = {b_total}")]
    UnequalMarginSums { a_total: u64, b_total: u64 },
    #[error("decomposition {axis} {index} sums to {got}, expected {expected}")]
    MarginMismatch {
        axis: &'static str,
        index: usize,
        expected: u64,
        got: u64,
    },
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {modulus} is not congruent to 1 modulo {order}, so the required roots of unity do not exist")]
    NoRootOfOrder { modulus: u64, order: u64 },
    #[error("total dimension {n} exceeds the oracle cap of {cap}")]
    OracleCapExceeded { n: u64, cap: u64 },
    #[error("invalid quiver description: {0}")]
    InvalidQuiver(String),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
