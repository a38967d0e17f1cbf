use thiserror::Error;

use crate::rootsystems::CartanType;

/// Errors raised by the combinatorial engines.
///
/// `BudgetExceeded` is the only variant that signals resource exhaustion; every
/// other variant means the input violated an operation's contract.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial has degree {degree}, above the symmetry center {center}")]
    DegreeAboveCenter { degree: isize, center: usize },

    #[error("polynomial is not symmetric about center {center}")]
    NotSymmetric { center: usize },

    #[error("gamma decomposition left a nonzero remainder: {remainder}")]
    GammaRemainder { remainder: String },

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("{what} = {requested} exceeds the budget of {limit}")]
    BudgetExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("type {0} is not supported here: {1}")]
    UnsupportedType(CartanType, &'static str),

    #[error("vertex {vertex} is not in the diagram of {ty}")]
    VertexOutOfRange { ty: CartanType, vertex: usize },

    #[error("{0} is not a singleton block of the partition")]
    NotSingleton(i64),

    #[error("index {index} is neither a double ascent nor a double descent of {perm}")]
    NotMovable { perm: String, index: usize },

    #[error("permutation {0} is not in E_n")]
    NotInE(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_budget(what: &'static str, requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        Err(Error::BudgetExceeded {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}
