//! Exact symbolic machinery for Schur function identities and plane
//! partition generating functions.
//!
//! Everything here is computed over arbitrary-precision rationals; there is
//! no floating point and no modular shortcut anywhere. The crate is split
//! into four layers:
//!
//! - [`algebra`]: sparse multivariate polynomials, truncated power series,
//!   determinants of polynomial matrices, exact division.
//! - [`schur`]: partitions, semistandard tableaux, Schur polynomials by two
//!   independent routes, and the two-parameter column weight.
//! - [`identities`]: both sides of each identity assembled exactly, with
//!   pass/fail checkers that report a witness monomial on failure.
//! - [`planepart`]: boxed plane partition enumeration, orbit structures,
//!   q-specializations and product generating functions.

pub mod algebra;
pub mod identities;
pub mod planepart;
pub mod schur;

pub use algebra::{AlgebraError, Polynomial, TruncatedSeries, Var};
pub use identities::{IdentityError, IdentityResult};
pub use schur::{Partition, PartitionFilter};
