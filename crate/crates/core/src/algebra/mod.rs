//! Exact sparse multivariate polynomial ring over arbitrary-precision
//! rationals, with truncated power series and polynomial matrices.
//!
//! The variable universe is fixed: `x_1 .. x_n`, `t`, `v`, `q`, ordered
//! `x1 < x2 < ... < t < v < q`. Monomials are compared in graded
//! lexicographic order, which makes every rendering and iteration order
//! deterministic.

mod matrix;
mod perm;
mod poly;
mod series;

pub use matrix::{vandermonde, vandermonde_quotient, PolyMatrix, DETERMINANT_CAP};
pub use perm::Permutation;
pub use poly::{Coefficient, Monomial, Polynomial, Var};
pub use series::TruncatedSeries;

/// Errors raised by the polynomial layer.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    /// Exact division failed; carries the nonzero remainder as a witness.
    /// When raised while expanding a product formula this signals a
    /// falsified identity, not a numerical problem.
    #[error("not divisible: remainder {remainder}")]
    NotDivisible { remainder: Polynomial },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("matrix dimension {dim} exceeds the determinant cap {cap}")]
    DimensionTooLarge { dim: usize, cap: usize },

    /// `geometric_expand` was handed a polynomial with a constant x-term,
    /// so the geometric series does not truncate.
    #[error("series argument has a term of x-degree zero")]
    NonNilpotentArgument,

    #[error("variable {0} has no assignment")]
    UnassignedVariable(Var),
}
