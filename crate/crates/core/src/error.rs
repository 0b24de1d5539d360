use std::fmt;

use thiserror::Error;

/// Group axiom reported by [`Error::NotAGroup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Shape,
    Range,
    Identity,
    Inverse,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Shape => "square shape",
            Axiom::Range => "entries in range",
            Axiom::Identity => "identity at index 0",
            Axiom::Inverse => "invertibility",
            Axiom::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("generated group exceeds the order cap of {cap}")]
    ClosureExceedsCap { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a group: {axiom} violated at {witness:?}")]
    NotAGroup { axiom: Axiom, witness: Vec<usize> },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("not an action: {0}")]
    NotAnAction(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("depth must be at least 1, got {0}")]
    BadDepth(usize),

    #[error("ordering {given:?} is not a permutation of {expected:?}")]
    BadOrdering { given: Vec<u64>, expected: Vec<u64> },

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("unknown selector `{0}`")]
    UnknownSelector(String),

    #[error("could not load group: {0}")]
    Load(String),

    #[error("residual quotient is not in its class: {0}")]
    FormationViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
