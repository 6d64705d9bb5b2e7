use std::fmt;

/// First failing index tuple found when validating structure constants.
/// Indices are 1-based, matching the usual `c_{ij}^k` notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `c_{ij}^k ≠ -c_{ji}^k`.
    Antisymmetry { i: usize, j: usize, k: usize },
    /// The Jacobi sum for `(i, j, k)` has a nonzero `m`-th component.
    Jacobi { i: usize, j: usize, k: usize, m: usize },
    /// Wrong shape or inconsistent input.
    Malformed(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k } => {
                write!(f, "antisymmetry violated at (i,j,k) = ({i},{j},{k})")
            }
            Violation::Jacobi { i, j, k, m } => {
                write!(f, "Jacobi identity violated at (i,j,k,m) = ({i},{j},{k},{m})")
            }
            Violation::Malformed(msg) => write!(f, "malformed structure constants: {msg}"),
        }
    }
}

/// Errors raised by the algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("invalid Lie algebra: {0}")]
    Invalid(Violation),
    #[error("not a Lie algebra homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("not a representation: {0}")]
    InvalidRepresentation(String),
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("wrong ambient algebra: {0}")]
    WrongAlgebra(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch { expected, found })
    }
}
