//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two partitions (or a partition and an ambient degree) disagree.
    #[error("degree mismatch: expected a partition of {expected}, got {found} ({context})")]
    DegreeMismatch {
        expected: usize,
        found: usize,
        context: String,
    },

    /// Brute-force enumeration would exceed the configured budget.
    #[error("enumeration budget exceeded: estimated {estimated} composed tuples > budget {budget}")]
    BudgetExceeded { estimated: u128, budget: u128 },

    /// Class-sum oracle asked for a degree above its cap.
    #[error("class-sum oracle degree {degree} exceeds cap {cap}")]
    ClassSumCapExceeded { degree: usize, cap: usize },

    /// Associativity split index out of range (must satisfy 1 <= split < profile count).
    #[error("invalid split {split} for {profiles} profiles")]
    InvalidSplit { split: usize, profiles: usize },

    /// Operator applied to a polynomial that is not homogeneous of its degree.
    #[error("polynomial is not homogeneous of degree {expected} in the p-alphabet: {context}")]
    NotHomogeneous { expected: usize, context: String },

    /// Normalization applied twice.
    #[error("operator is already normalized")]
    AlreadyNormalized,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
