//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Variables are ordered once, at context creation: index 0 is the greatest
//! variable. Monomials compare in graded reverse-lexicographic order.

mod change;
mod context;
mod monomial;
mod polynomial;

pub use change::CoordinateChange;
pub use context::VariableContext;
pub use monomial::{monomials_of_degree, num_monomials_of_degree, revlex_compare, Monomial};
pub use polynomial::{poly_arith, ArithOp, Polynomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable counts differ: {left} vs {right}")]
    ContextMismatch { left: usize, right: usize },
    #[error("a ring needs at least one variable")]
    EmptyContext,
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("coordinate change matrix is singular")]
    SingularMatrix,
    #[error("matrix must be {expected}x{expected}")]
    MatrixShape { expected: usize },
}
