use thiserror::Error;

use crate::relations::{CongruenceWitness, EquivalenceCheck};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier size must be between 1 and {max}, got {n}")]
    InvalidOrder { n: usize, max: usize },

    #[error("table shape mismatch: expected {expected} entries, found {found}")]
    TableShape { expected: usize, found: usize },

    #[error("closure violation at ({row}, {col}): {value} is not in a carrier of size {n}")]
    Closure {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("zero element {zero} is outside a carrier of size {n}")]
    ZeroOutOfRange { zero: usize, n: usize },

    #[error("element {element} is outside a carrier of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("element {0} appears more than once")]
    DuplicateElement(usize),

    #[error("element {element} appears in more than one class")]
    PartitionOverlap { element: usize },

    #[error("element {element} is not covered by any class")]
    PartitionCoverage { element: usize },

    #[error("class #{index} is empty")]
    EmptyClass { index: usize },

    #[error("element {element} has an empty image")]
    EmptyImage { element: usize },

    #[error("carrier size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("relation is not an equivalence ({0})")]
    NotEquivalence(EquivalenceCheck),

    #[error("partition is not a congruence ({0})")]
    NotCongruence(CongruenceWitness),

    #[error("order {n} exceeds the configured limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("model search needs at least one axiom")]
    EmptyAxiomSet,

    #[error("search budget exceeded ({reason}) after {count} models")]
    BudgetExceeded { count: u64, reason: &'static str },
}
