//! Partitions, semistandard tableaux, and Schur polynomials.
//!
//! Schur polynomials are available by two independent routes: the tableau
//! generating sum and the bialternant determinant ratio. Their agreement is
//! the crate's core oracle equivalence.

mod partition;
mod tableau;

pub use partition::{partitions_in_box, ColumnCounts, Partition, PartitionFilter};
pub use tableau::{semistandard_tableaux, Tableau};

use num::BigRational;

use crate::algebra::{vandermonde, AlgebraError, PolyMatrix, Polynomial, Var};

/// The two-parameter column weight
/// `f_lambda(t,v) = prod_{j odd} (v^{a_j+1}-t^{a_j+1})/(v-t)
///                * prod_{j even} (1-(tv)^{a_j+1})/(1-tv)`,
/// built division-free from the homogeneous sums
/// `sum_{i=0}^{a_j} t^i v^{a_j-i}` (odd `j`) and
/// `sum_{i=0}^{a_j} (tv)^i` (even `j`), so it is valid even at `t = v`.
pub fn f_poly(lambda: &Partition) -> Polynomial {
    let mut out = Polynomial::one();
    for (j, a) in lambda.column_counts().iter() {
        let mut factor = Polynomial::zero();
        for i in 0..=a {
            let term = if j % 2 == 1 {
                &Polynomial::var(Var::T).pow(i) * &Polynomial::var(Var::V).pow(a - i)
            } else {
                (&Polynomial::var(Var::T) * &Polynomial::var(Var::V)).pow(i)
            };
            factor += &term;
        }
        out = &out * &factor;
    }
    out
}

/// Schur polynomial as the tableau generating sum
/// `sum_T prod_i x_i^{#occurrences of i in T}`. Returns 0 when `lambda`
/// has more than `n` parts, matching the convention `s_lambda(x1..xn) = 0`.
pub fn schur_ssyt(lambda: &Partition, n: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    tableau::visit_tableaux(lambda, n, &mut |rows| {
        let weight = crate::algebra::Monomial::from_exps(
            rows.iter()
                .flatten()
                .map(|&entry| (Var::x(entry as usize), 1)),
        );
        out += &Polynomial::term(weight, BigRational::from_integer(1.into()));
    });
    out
}

/// Schur polynomial as the bialternant ratio
/// `det(x_i^{lambda_j + n - j}) / prod_{i<j} (x_i - x_j)`.
///
/// The alternant is always divisible by the Vandermonde, so a
/// `NotDivisible` error here signals an implementation bug.
pub fn schur_bialternant(lambda: &Partition, n: usize) -> Result<Polynomial, AlgebraError> {
    if lambda.len() > n {
        return Ok(Polynomial::zero());
    }
    let alternant = PolyMatrix::from_fn(n, |i, j| {
        Polynomial::xpow(i, lambda.part(j) + (n - j) as u32)
    })
    .determinant()?;
    alternant.exact_div(&vandermonde(n))
}

/// `sum s_lambda(x1..xn)` over the partitions in the n x m box passing the
/// filter, computed via the bialternant.
pub fn schur_sum(m: u32, n: usize, filter: PartitionFilter) -> Result<Polynomial, AlgebraError> {
    let mut acc = Polynomial::zero();
    for lambda in partitions_in_box(m, n, filter) {
        acc += &schur_bialternant(&lambda, n)?;
    }
    Ok(acc)
}
