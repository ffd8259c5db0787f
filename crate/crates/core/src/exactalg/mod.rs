//! Exact arithmetic foundation: rationals, Laurent polynomials in one
//! variable, rational functions, big-integer matrices, Smith normal form,
//! and Gaussian elimination over the function field.
//!
//! The ambient coefficient field everywhere else in the crate is `Q(A)`,
//! the field of rational functions in the Kauffman variable `A` over the
//! rationals, with the quantum parameter recovered as `q = A^2`. Working in
//! the function field makes "generic q" exact: an identity of rational
//! functions holds at every transcendental specialisation.

mod intmat;
mod laurent;
mod linalg;
mod ratfunc;
mod snf;

pub use intmat::IntMatrix;
pub use laurent::{LaurentPoly, Rat};
pub use linalg::QaMatrix;
pub use ratfunc::{ArithOp, RatFunc};
pub use snf::{snf, SnfDecomposition};

use core::fmt;

/// Errors from the exact-arithmetic layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactAlgError {
    /// Division of rational functions by the zero function.
    DivisionByZero,
    /// Matrix dimensions do not match the requested operation.
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for ExactAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactAlgError::DivisionByZero => write!(f, "division by zero rational function"),
            ExactAlgError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
        }
    }
}
