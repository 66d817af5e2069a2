//! Error types for the finite-structure operators.

use thiserror::Error;

/// Errors raised by operators on finite magmas and their subsets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subset of width {subset} used with a magma of size {magma}")]
    SizeMismatch { subset: usize, magma: usize },
    #[error("operation requires an associative table")]
    NotAssociative,
    #[error("generator set is empty")]
    EmptyGenerator,
    #[error("no subgroup of the magma contains the given set")]
    NoSubgroup,
    #[error("element {0} is not a left identity")]
    NotLeftIdentity(usize),
    #[error("the magma has no left identity")]
    NoLeftIdentity,
    #[error("element {0} has no left inverse relative to the chosen identity")]
    NotLeftInvertible(usize),
    #[error("subset is not a left subgroup")]
    NotLeftSubgroup,
    #[error("subset is not a left factor subgroup")]
    NotLeftFactor,
    #[error("set is not left periodic for the fixed subgroup")]
    NotPeriodic,
    #[error("set is not left upper periodic for B")]
    NotUpperPeriodic,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("{a}*{b} does not equal the group order {order}")]
    BadFactorization { a: usize, b: usize, order: usize },
    #[error("no factorization found: counterexample candidate to the subset-product conjecture")]
    FactorizationNotFound,
    #[error("the magma is not a group")]
    NotGroup,
    #[error("too many inverse pairs to enumerate: {0}")]
    TooManyPairs(usize),
    #[error("element {0} is not in the set")]
    NotInSet(usize),
    #[error("the given (D, E) pair is not a verified direct representation")]
    NotDirectRepresentation,
    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),
    #[error("the {kind} family is not a topology: {reason}")]
    NotATopology { kind: &'static str, reason: String },
    #[error("preorder condensation has {classes} classes, more than the limit {max}")]
    TooLarge { classes: usize, max: usize },
    #[error("exhaustive scope n = {n} exceeds the cap {cap}")]
    ScopeExceeded { n: usize, cap: usize },
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
