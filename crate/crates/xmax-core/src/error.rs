//! Error types shared across the engine.

use thiserror::Error;

/// Which configurable limit was exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapKind {
    Order,
    Elements,
    Degree,
    Lattice,
    Isomorphism,
}

impl std::fmt::Display for CapKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CapKind::Order => "order",
            CapKind::Elements => "elements",
            CapKind::Degree => "degree",
            CapKind::Lattice => "lattice",
            CapKind::Isomorphism => "isomorphism",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: u32, got: u32 },

    #[error("{kind} cap exceeded: needed {needed}, cap is {cap}")]
    CapExceeded { kind: CapKind, needed: u128, cap: u128 },

    #[error("element does not belong to the group: {0}")]
    NotAMember(String),

    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    #[error("group is not simple (order {order}, proper normal subgroup of order {witness})")]
    NotSimple { order: u64, witness: u64 },

    #[error("class {0} is not complete; operation requires a complete class")]
    ClassNotComplete(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("unknown catalog name: {0}")]
    UnknownName(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
