use num::BigRational;

use crate::algebra::{Monomial, Permutation, PolyMatrix, Polynomial, TruncatedSeries, Var};
use crate::schur::{
    f_poly, partitions_in_box, schur_bialternant, schur_sum, PartitionFilter,
};

use super::{pair_product, single_product, subsets, IdentityError, IdentityResult};

fn one_minus(p: &Polynomial) -> Polynomial {
    &Polynomial::one() - p
}

/// `x_i x_j - 1`.
fn xx_minus_one(i: usize, j: usize) -> Polynomial {
    &(&Polynomial::x(i) * &Polynomial::x(j)) - &Polynomial::one()
}

fn monomial_term(sign: i64, exps: impl IntoIterator<Item = (Var, u32)>) -> Polynomial {
    Polynomial::term(
        Monomial::from_exps(exps),
        BigRational::from_integer(sign.into()),
    )
}

/// `sum_sigma sum_S sign(sigma) * subset_sign^{|S|}
///   prod_{i in S} x_i^{in(sigma(i))} prod_{i not in S} x_i^{out(sigma(i))}`,
/// optionally restricted to even `|S|`.
fn signed_subset_sum(
    n: usize,
    subset_sign: i64,
    even_subsets_only: bool,
    in_exp: impl Fn(usize) -> u32,
    out_exp: impl Fn(usize) -> u32,
) -> Polynomial {
    let mut acc = Polynomial::zero();
    let all_subsets = subsets(n);
    for sigma in Permutation::all(n) {
        for subset in &all_subsets {
            if even_subsets_only && subset.len() % 2 != 0 {
                continue;
            }
            let mut in_set = vec![false; n + 1];
            for &i in subset {
                in_set[i] = true;
            }
            let sign = sigma.sign()
                * if subset_sign < 0 && subset.len() % 2 == 1 {
                    -1
                } else {
                    1
                };
            acc += &monomial_term(
                sign,
                (1..=n).map(|i| {
                    let image = sigma.image(i);
                    let e = if in_set[i] { in_exp(image) } else { out_exp(image) };
                    (Var::x(i), e)
                }),
            );
        }
    }
    acc
}

/// Theorem of the unrestricted boxed Schur sum, verified after clearing
/// denominators:
///
/// `schur_sum(m,n,All) * prod_i (1-x_i) * prod_{i<j} (x_i x_j - 1)(x_i - x_j)
///   = det(x_i^{j-1} - x_i^{m+2n-j})`.
pub fn check_theorem1(m: u32, n: usize) -> Result<IdentityResult, IdentityError> {
    assert!(n >= 1);
    let sum = schur_sum(m, n, PartitionFilter::All)?;
    let lhs = &(&sum * &single_product(n, |i| one_minus(&Polynomial::x(i))))
        * &pair_product(n, |i, j| {
            &xx_minus_one(i, j) * &(&Polynomial::x(i) - &Polynomial::x(j))
        });
    let rhs = PolyMatrix::from_fn(n, |i, j| {
        &Polynomial::xpow(i, j as u32 - 1) - &Polynomial::xpow(i, m + 2 * n as u32 - j as u32)
    })
    .determinant()?;
    Ok(IdentityResult::compare(
        "thm1",
        &[("n", n.to_string()), ("m", m.to_string())],
        &lhs,
        &rhs,
    ))
}

/// Even-parts boxed Schur sum (`m` even), verified in both shapes:
///
/// (a) the cleared alternant form
/// `sum_{lambda even} det(x_i^{lambda_j+n-j}) * prod (1-x_i^2) * prod_{i<j} (x_i x_j - 1)
///   = sum_{sigma,S} (-1)^{inv+|S|} prod_{S} x_i^{m+2n+1-sigma(i)} prod_{!S} x_i^{sigma(i)-1}`;
///
/// (b) the quotient form by cross-multiplication:
/// `schur_sum(m,n,EvenParts) * prod (1-x_i^2) * prod_{i<j} (x_i x_j - 1)(x_i - x_j)
///   = det(x_i^{j-1} - x_i^{m+2n+1-j})`.
pub fn check_theorem2(m: u32, n: usize) -> Result<IdentityResult, IdentityError> {
    assert!(n >= 1);
    if m % 2 != 0 {
        return Err(IdentityError::OddM(m));
    }
    let params = [("n", n.to_string()), ("m", m.to_string())];
    let n_u32 = n as u32;

    // (a) cleared alternant form
    let mut alternant_sum = Polynomial::zero();
    for lambda in partitions_in_box(m, n, PartitionFilter::EvenParts) {
        alternant_sum += &PolyMatrix::from_fn(n, |i, j| {
            Polynomial::xpow(i, lambda.part(j) + (n - j) as u32)
        })
        .determinant()?;
    }
    let lhs_a = &(&alternant_sum * &single_product(n, |i| one_minus(&Polynomial::xpow(i, 2))))
        * &pair_product(n, xx_minus_one);
    let rhs_a = signed_subset_sum(
        n,
        -1,
        false,
        |img| m + 2 * n_u32 + 1 - img as u32,
        |img| img as u32 - 1,
    );
    let form_a = IdentityResult::compare("thm2-cleared", &[], &lhs_a, &rhs_a);

    // (b) quotient form, cross-multiplied
    let sum = schur_sum(m, n, PartitionFilter::EvenParts)?;
    let lhs_b = &(&sum * &single_product(n, |i| one_minus(&Polynomial::xpow(i, 2))))
        * &pair_product(n, |i, j| {
            &xx_minus_one(i, j) * &(&Polynomial::x(i) - &Polynomial::x(j))
        });
    let rhs_b = PolyMatrix::from_fn(n, |i, j| {
        &Polynomial::xpow(i, j as u32 - 1) - &Polynomial::xpow(i, m + 2 * n_u32 + 1 - j as u32)
    })
    .determinant()?;
    let form_b = IdentityResult::compare("thm2-quotient", &[], &lhs_b, &rhs_b);

    Ok(IdentityResult::all_of("thm2", &params, vec![form_a, form_b]))
}

/// Even-column-length boxed Schur sum (`n` even), verified in both shapes:
///
/// (a) the cleared form
/// `sum_{lambda' even} sum_sigma (-1)^{inv} prod_i x_i^{lambda_{sigma(i)}+n-sigma(i)}
///    * prod_{i<j} (x_i x_j - 1)
///   = sum_sigma sum_{|S| even} (-1)^{inv} prod_S x_i^{m+2n-1-sigma(i)} prod_{!S} x_i^{sigma(i)-1}`;
///
/// (b) the half-sum-of-determinants form, with the 1/2 handled by doubling:
/// `2 * schur_sum(m,n,EvenConjugate) * prod_{i<j} (x_i x_j - 1)(x_i - x_j)
///   = det(x_i^{j-1} - x_i^{m+2n-1-j}) + det(x_i^{j-1} + x_i^{m+2n-1-j})`.
pub fn check_theorem3(m: u32, n: usize) -> Result<IdentityResult, IdentityError> {
    if n % 2 != 0 {
        return Err(IdentityError::OddN(n));
    }
    let params = [("n", n.to_string()), ("m", m.to_string())];
    let n_u32 = n as u32;

    // (a) cleared form
    let mut lhs_a = Polynomial::zero();
    let perms = Permutation::all(n);
    for lambda in partitions_in_box(m, n, PartitionFilter::EvenConjugate) {
        let mut alternant = Polynomial::zero();
        for sigma in &perms {
            alternant += &monomial_term(
                sigma.sign(),
                (1..=n).map(|i| {
                    let s = sigma.image(i);
                    (Var::x(i), lambda.part(s) + n_u32 - s as u32)
                }),
            );
        }
        lhs_a += &alternant;
    }
    lhs_a = &lhs_a * &pair_product(n, xx_minus_one);
    let rhs_a = signed_subset_sum(
        n,
        1,
        true,
        |img| m + 2 * n_u32 - 1 - img as u32,
        |img| img as u32 - 1,
    );
    let form_a = IdentityResult::compare("thm3-cleared", &[], &lhs_a, &rhs_a);

    // (b) doubled determinant form
    let sum = schur_sum(m, n, PartitionFilter::EvenConjugate)?;
    let lhs_b = &(&sum * &Polynomial::int(2))
        * &pair_product(n, |i, j| {
            &xx_minus_one(i, j) * &(&Polynomial::x(i) - &Polynomial::x(j))
        });
    let det_minus = PolyMatrix::from_fn(n, |i, j| {
        &Polynomial::xpow(i, j as u32 - 1) - &Polynomial::xpow(i, m + 2 * n_u32 - 1 - j as u32)
    })
    .determinant()?;
    let det_plus = PolyMatrix::from_fn(n, |i, j| {
        &Polynomial::xpow(i, j as u32 - 1) + &Polynomial::xpow(i, m + 2 * n_u32 - 1 - j as u32)
    })
    .determinant()?;
    let form_b = IdentityResult::compare("thm3-dets", &[], &lhs_b, &(&det_minus + &det_plus));

    Ok(IdentityResult::all_of("thm3", &params, vec![form_a, form_b]))
}

/// Right side of the unrestricted weighted sum:
/// `prod_i 1/((1-t x_i)(1-v x_i)) * prod_{i<j} 1/(1-x_i x_j)` as a
/// truncated series at x-degree `bound`.
fn weighted_product_series(n: usize, bound: u32) -> Result<TruncatedSeries, IdentityError> {
    let mut series = TruncatedSeries::one(bound);
    for i in 1..=n {
        for scalar in [Var::T, Var::V] {
            let u = &Polynomial::var(scalar) * &Polynomial::x(i);
            series = series.mul(&TruncatedSeries::geometric_expand(&u, bound)?);
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let u = &Polynomial::x(i) * &Polynomial::x(j);
            series = series.mul(&TruncatedSeries::geometric_expand(&u, bound)?);
        }
    }
    Ok(series)
}

/// The weighted Schur expansion
/// `sum_lambda f_lambda(t,v) s_lambda(x1..xn)
///   = prod_i 1/((1-t x_i)(1-v x_i)) * prod_{i<j} 1/(1-x_i x_j)`,
/// compared as truncated series at x-degree `bound`. Since the summand for
/// `lambda` is homogeneous of x-degree `|lambda|`, only `|lambda| <= bound`
/// contributes.
pub fn check_theorem4(n: usize, bound: u32) -> Result<IdentityResult, IdentityError> {
    assert!(n >= 1);
    let mut lhs = Polynomial::zero();
    for lambda in partitions_in_box(bound, n, PartitionFilter::All) {
        if lambda.size() > bound {
            continue;
        }
        lhs += &(&f_poly(&lambda) * &schur_bialternant(&lambda, n)?);
    }
    let lhs = TruncatedSeries::new(lhs, bound);
    let rhs = weighted_product_series(n, bound)?;
    Ok(IdentityResult::compare(
        "thm4",
        &[("n", n.to_string()), ("D", bound.to_string())],
        lhs.body(),
        rhs.body(),
    ))
}

/// Which of the three classical restricted-sum product formulas to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LittlewoodFormula {
    /// Unrestricted sum = `prod 1/(1-x_i) * prod 1/(1-x_i x_j)`.
    Unrestricted,
    /// Even-parts sum = `prod 1/(1-x_i^2) * prod 1/(1-x_i x_j)`.
    EvenParts,
    /// Even-conjugate sum = `prod 1/(1-x_i x_j)`.
    EvenConjugate,
}

impl LittlewoodFormula {
    pub fn label(self) -> &'static str {
        match self {
            LittlewoodFormula::Unrestricted => "1.5",
            LittlewoodFormula::EvenParts => "1.6",
            LittlewoodFormula::EvenConjugate => "1.7",
        }
    }

    fn filter(self) -> PartitionFilter {
        match self {
            LittlewoodFormula::Unrestricted => PartitionFilter::All,
            LittlewoodFormula::EvenParts => PartitionFilter::EvenParts,
            LittlewoodFormula::EvenConjugate => PartitionFilter::EvenConjugate,
        }
    }
}

/// The chosen product formula as a truncated-series equality. The left side
/// is a direct filtered Schur sum (not a specialization of the weighted
/// sum), so this independently confirms the weight-evaluation table.
pub fn check_littlewood(
    n: usize,
    bound: u32,
    which: LittlewoodFormula,
) -> Result<IdentityResult, IdentityError> {
    assert!(n >= 1);
    let mut lhs = Polynomial::zero();
    for lambda in partitions_in_box(bound, n, which.filter()) {
        if lambda.size() > bound {
            continue;
        }
        lhs += &schur_bialternant(&lambda, n)?;
    }
    let lhs = TruncatedSeries::new(lhs, bound);

    let mut rhs = TruncatedSeries::one(bound);
    match which {
        LittlewoodFormula::Unrestricted => {
            for i in 1..=n {
                rhs = rhs.mul(&TruncatedSeries::geometric_expand(&Polynomial::x(i), bound)?);
            }
        }
        LittlewoodFormula::EvenParts => {
            for i in 1..=n {
                rhs = rhs.mul(&TruncatedSeries::geometric_expand(
                    &Polynomial::xpow(i, 2),
                    bound,
                )?);
            }
        }
        LittlewoodFormula::EvenConjugate => {}
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let u = &Polynomial::x(i) * &Polynomial::x(j);
            rhs = rhs.mul(&TruncatedSeries::geometric_expand(&u, bound)?);
        }
    }

    Ok(IdentityResult::compare(
        "littlewood",
        &[
            ("which", which.label().to_string()),
            ("n", n.to_string()),
            ("D", bound.to_string()),
        ],
        lhs.body(),
        rhs.body(),
    ))
}

/// Which of the two vanishing facts to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DetVanishing {
    /// `det(x_i^{m+j+1} - x_i^{m+2n+1-j}) = 0`: the exponent multiset is
    /// symmetric under `j -> 2n - j`.
    Thm2,
    /// The even-subset signed sum with exponents `m+2n-sigma(i)-1` (in S)
    /// and `m+sigma(i)` (out of S) vanishes: swapping the inverse images of
    /// `n` and `n-1` while toggling membership negates the sign but fixes
    /// the monomial.
    Thm3,
}

impl DetVanishing {
    pub fn label(self) -> &'static str {
        match self {
            DetVanishing::Thm2 => "thm2",
            DetVanishing::Thm3 => "thm3",
        }
    }
}

/// Verifies the chosen signed sum is identically zero.
pub fn check_det_vanishing(
    m: u32,
    n: usize,
    which: DetVanishing,
) -> Result<IdentityResult, IdentityError> {
    assert!(n >= 2);
    let n_u32 = n as u32;
    let value = match which {
        DetVanishing::Thm2 => PolyMatrix::from_fn(n, |i, j| {
            &Polynomial::xpow(i, m + j as u32 + 1)
                - &Polynomial::xpow(i, m + 2 * n_u32 + 1 - j as u32)
        })
        .determinant()?,
        DetVanishing::Thm3 => signed_subset_sum(
            n,
            1,
            true,
            |img| m + 2 * n_u32 - img as u32 - 1,
            |img| m + img as u32,
        ),
    };
    Ok(IdentityResult::from_difference(
        "detvanish",
        &[
            ("which", which.label().to_string()),
            ("n", n.to_string()),
            ("m", m.to_string()),
        ],
        value,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem1_n1_is_geometric() {
        // (1 + x1 + x1^2)(1 - x1) = 1 - x1^3 = x1^0 - x1^{m+1} at m = 2
        assert!(check_theorem1(2, 1).unwrap().holds);
    }

    #[test]
    fn theorem1_small_grid() {
        assert!(check_theorem1(1, 2).unwrap().holds);
        assert!(check_theorem1(2, 3).unwrap().holds);
    }

    #[test]
    fn theorem2_base_case() {
        // n=1, m=2: (1 + x1^2)(1 - x1^2) = 1 - x1^4 = x1^0 - x1^{m+2}
        assert!(check_theorem2(2, 1).unwrap().holds);
    }

    #[test]
    fn theorem2_small_grid() {
        assert!(check_theorem2(2, 2).unwrap().holds);
        assert!(check_theorem2(4, 2).unwrap().holds);
    }

    #[test]
    fn theorem2_rejects_odd_m() {
        assert!(matches!(check_theorem2(3, 2), Err(IdentityError::OddM(3))));
    }

    #[test]
    fn theorem3_small_grid() {
        // n=2, m=1: left Schur sum is 1 + x1 x2
        assert!(check_theorem3(1, 2).unwrap().holds);
        assert!(check_theorem3(2, 2).unwrap().holds);
    }

    #[test]
    fn theorem3_rejects_odd_n() {
        assert!(matches!(check_theorem3(1, 3), Err(IdentityError::OddN(3))));
    }

    #[test]
    fn theorem4_base_case_series() {
        // n=1, D=2: both sides 1 + (t+v) x1 + (t^2+tv+v^2) x1^2
        let r = check_theorem4(1, 2).unwrap();
        assert!(r.holds);

        let t = Polynomial::var(Var::T);
        let v = Polynomial::var(Var::V);
        let x1 = Polynomial::x(1);
        let expected = &(&Polynomial::one() + &(&(&t + &v) * &x1))
            + &(&(&(&t.pow(2) + &(&t * &v)) + &v.pow(2)) * &x1.pow(2));
        assert_eq!(weighted_product_series(1, 2).unwrap().body(), &expected);
    }

    #[test]
    fn theorem4_two_variables() {
        assert!(check_theorem4(2, 2).unwrap().holds);
    }

    #[test]
    fn theorem4_truncation_independent_of_large_lambda() {
        // adding lambda with |lambda| > D must not change the truncation
        let base = check_theorem4(2, 3).unwrap();
        assert!(base.holds);
        let mut padded = Polynomial::zero();
        for lambda in partitions_in_box(5, 2, PartitionFilter::All) {
            padded += &(&f_poly(&lambda) * &schur_bialternant(&lambda, 2).unwrap());
        }
        let padded = TruncatedSeries::new(padded, 3);
        let rhs = weighted_product_series(2, 3).unwrap();
        assert_eq!(padded.body(), rhs.body());
    }

    #[test]
    fn littlewood_examples() {
        // 1.7 at n=2, D=2: both sides 1 + x1 x2
        let r = check_littlewood(2, 2, LittlewoodFormula::EvenConjugate).unwrap();
        assert!(r.holds);
        // 1.5 at n=1, D=3: geometric series
        assert!(check_littlewood(1, 3, LittlewoodFormula::Unrestricted)
            .unwrap()
            .holds);
        assert!(check_littlewood(2, 2, LittlewoodFormula::EvenParts)
            .unwrap()
            .holds);
    }

    #[test]
    fn det_vanishing_examples() {
        assert!(check_det_vanishing(2, 2, DetVanishing::Thm2).unwrap().holds);
        assert!(check_det_vanishing(1, 2, DetVanishing::Thm3).unwrap().holds);
        assert!(check_det_vanishing(4, 3, DetVanishing::Thm2).unwrap().holds);
    }
}
