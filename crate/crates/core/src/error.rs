use crate::functional::Functional;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("operator is not diagonalizable over the rationals")]
    NotSplitOverField,

    #[error("operators {first} and {second} do not commute")]
    NonCommuting { first: usize, second: usize },

    #[error("Jacobi identity fails on basis triple ({}, {}, {})", .triple.0, .triple.1, .triple.2)]
    JacobiViolation { triple: (usize, usize, usize) },

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("Cartan elements {first} and {second} do not commute")]
    CartanNotAbelian { first: usize, second: usize },

    #[error("zero-weight space has dimension {zero_dim} but the Cartan subalgebra has dimension {cartan_dim}")]
    NotSelfCentralizing { zero_dim: usize, cartan_dim: usize },

    #[error("module axiom fails for [e{}, e{}] acting on v{}", .pair.0, .pair.1, .vector)]
    ModuleAxiomViolation { pair: (usize, usize), vector: usize },

    #[error("Cartan action is not diagonalizable over the rationals: not a weight module")]
    NotWeightModule,

    #[error("{set} is not symmetric: {missing} is absent")]
    SymmetryViolation { set: &'static str, missing: Functional },

    #[error("{set} contains the zero functional")]
    ZeroFunctional { set: &'static str },

    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),

    #[error("decompositions were computed over different algebras")]
    MismatchedAlgebra,

    #[error("involution rejected: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    ValidationFailed(Vec<crate::involution::Violation>),
}
