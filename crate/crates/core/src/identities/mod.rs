//! Both sides of every identity assembled as exact polynomials (with
//! denominators cleared) or truncated series, plus pass/fail checkers.
//!
//! Quotient identities are verified in cross-multiplied form so everything
//! stays inside the polynomial ring. A failed check carries the difference
//! polynomial and reports its smallest monomial as a witness.

mod lemmas;
mod theorems;
mod weyl;

pub use lemmas::{check_lemma1, check_lemma2};
pub use theorems::{
    check_det_vanishing, check_littlewood, check_theorem1, check_theorem2, check_theorem3,
    check_theorem4, DetVanishing, LittlewoodFormula,
};
pub use weyl::{check_weyl_bn, WeylVariant};

pub use crate::algebra::Permutation;

use serde::Serialize;

use crate::algebra::{AlgebraError, Polynomial};
use crate::schur::{f_poly, partitions_in_box, schur_bialternant, PartitionFilter};

/// Structured pass/fail record binding one identity instance to computed
/// evidence. `holds` is true exactly when the witness difference is the
/// zero polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityResult {
    pub identity: String,
    /// Named parameters (n, m, D, variants) as rendered strings, in a
    /// deterministic order.
    pub params: Vec<(String, String)>,
    pub holds: bool,
    /// The smallest differing term when the identity fails.
    pub witness_monomial: Option<String>,
    /// Full difference polynomial (zero on success).
    #[serde(skip)]
    pub witness: Polynomial,
}

impl IdentityResult {
    /// Builds a result by comparing two polynomials exactly.
    pub fn compare(
        identity: impl Into<String>,
        params: &[(&str, String)],
        lhs: &Polynomial,
        rhs: &Polynomial,
    ) -> IdentityResult {
        IdentityResult::from_difference(identity, params, lhs - rhs)
    }

    pub fn from_difference(
        identity: impl Into<String>,
        params: &[(&str, String)],
        witness: Polynomial,
    ) -> IdentityResult {
        let witness_monomial = witness
            .smallest_term()
            .map(|(m, c)| Polynomial::term(m.clone(), c.clone()).to_string());
        IdentityResult {
            identity: identity.into(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            holds: witness.is_zero(),
            witness_monomial,
            witness,
        }
    }

    /// Merges sub-checks of one identity: holds iff all hold; the witness
    /// comes from the first failing part.
    pub fn all_of(
        identity: impl Into<String>,
        params: &[(&str, String)],
        parts: Vec<IdentityResult>,
    ) -> IdentityResult {
        let witness = parts
            .into_iter()
            .find(|r| !r.holds)
            .map(|r| r.witness)
            .unwrap_or_else(Polynomial::zero);
        IdentityResult::from_difference(identity, params, witness)
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Errors from checker preconditions.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IdentityError {
    #[error("n must be even here, got {0}")]
    OddN(usize),
    #[error("m must be even here, got {0}")]
    OddM(u32),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `sum_{lambda in m^n box} f_lambda(t,v) s_lambda(x1..xn)` as an exact
/// polynomial. This is an exploration aid for the bounded analogue of the
/// unrestricted weighted sum; no closed form is asserted.
pub fn bounded_f_sum(m: u32, n: usize) -> Result<Polynomial, AlgebraError> {
    let mut acc = Polynomial::zero();
    for lambda in partitions_in_box(m, n, PartitionFilter::All) {
        acc += &(&f_poly(&lambda) * &schur_bialternant(&lambda, n)?);
    }
    Ok(acc)
}

// Shared builders for the checkers.

/// `x1 * x2 * ... * xn`.
pub(crate) fn x_product(n: usize) -> Polynomial {
    let mut p = Polynomial::one();
    for i in 1..=n {
        p = &p * &Polynomial::x(i);
    }
    p
}

/// `prod_{1 <= i < j <= n} f(i, j)`.
pub(crate) fn pair_product(n: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Polynomial {
    let mut p = Polynomial::one();
    for i in 1..=n {
        for j in i + 1..=n {
            p = &p * &f(i, j);
        }
    }
    p
}

/// `prod_{i=1..n} f(i)`.
pub(crate) fn single_product(n: usize, mut f: impl FnMut(usize) -> Polynomial) -> Polynomial {
    let mut p = Polynomial::one();
    for i in 1..=n {
        p = &p * &f(i);
    }
    p
}

/// All subsets of `{1..n}` as sorted index vectors, in mask order.
pub(crate) fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0..1u32 << n)
        .map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect()
}
