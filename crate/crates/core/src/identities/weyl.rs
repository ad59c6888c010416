use num::BigRational;

use crate::algebra::{Monomial, Permutation, Polynomial, Var};

use super::{pair_product, single_product, subsets, IdentityError, IdentityResult};

/// Which type-B signed-sum identity to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeylVariant {
    /// `sum_{sigma,S} (-1)^{inv+|S|} ... = prod (1-x_i) * prod (x_i-x_j)(x_i x_j-1)`.
    Minus,
    /// Sign-flipped variant (each `x_i -> -x_i`):
    /// `sum_{sigma,S} (-1)^{inv} ... = prod (1+x_i) * prod (x_i-x_j)(x_i x_j-1)`.
    Plus,
    /// Half-sum over even subsets:
    /// `2 * sum_{sigma, |S| even} (-1)^{inv} ...
    ///   = (prod (1-x_i) + prod (1+x_i)) * prod (x_i-x_j)(x_i x_j-1)`.
    EvenSubsets,
}

impl WeylVariant {
    pub fn label(self) -> &'static str {
        match self {
            WeylVariant::Minus => "minus",
            WeylVariant::Plus => "plus",
            WeylVariant::EvenSubsets => "even-subsets",
        }
    }
}

/// The half-integer exponents `epsilon_i (2i-2n-1)/2` are eliminated by
/// multiplying both sides by `prod_i x_i^{(2n-1)/2}`: the exponent on
/// `x_{sigma(i)}` becomes `i-1` for `i` outside `S` and `2n-i` inside.
/// The shift is sign-neutral and invertible.
fn signed_sum(n: usize, subset_sign: i64, even_subsets_only: bool) -> Polynomial {
    let mut acc = Polynomial::zero();
    for sigma in Permutation::all(n) {
        for subset in subsets(n) {
            if even_subsets_only && subset.len() % 2 != 0 {
                continue;
            }
            let mut in_set = vec![false; n + 1];
            for &i in &subset {
                in_set[i] = true;
            }
            let sign = sigma.sign()
                * if subset_sign < 0 && subset.len() % 2 == 1 {
                    -1
                } else {
                    1
                };
            acc += &Polynomial::term(
                Monomial::from_exps((1..=n).map(|i| {
                    let e = if in_set[i] { 2 * n as u32 - i as u32 } else { i as u32 - 1 };
                    (Var::x(sigma.image(i)), e)
                })),
                BigRational::from_integer(sign.into()),
            );
        }
    }
    acc
}

/// `prod_{i<j} (x_i - x_j)(x_i x_j - 1)`, the shared right-side factor.
fn denominator_product(n: usize) -> Polynomial {
    pair_product(n, |i, j| {
        &(&Polynomial::x(i) - &Polynomial::x(j))
            * &(&(&Polynomial::x(i) * &Polynomial::x(j)) - &Polynomial::one())
    })
}

/// Checks the chosen identity after the half-exponent shift.
pub fn check_weyl_bn(n: usize, variant: WeylVariant) -> Result<IdentityResult, IdentityError> {
    assert!(n >= 1);
    let params = [("variant", variant.label().to_string()), ("n", n.to_string())];
    let shared = denominator_product(n);
    let prod_minus = single_product(n, |i| &Polynomial::one() - &Polynomial::x(i));
    let prod_plus = single_product(n, |i| &Polynomial::one() + &Polynomial::x(i));

    let (lhs, rhs) = match variant {
        WeylVariant::Minus => (signed_sum(n, -1, false), &prod_minus * &shared),
        WeylVariant::Plus => (signed_sum(n, 1, false), &prod_plus * &shared),
        WeylVariant::EvenSubsets => (
            &signed_sum(n, 1, true) * &Polynomial::int(2),
            &(&prod_minus + &prod_plus) * &shared,
        ),
    };
    Ok(IdentityResult::compare("weyl", &params, &lhs, &rhs))
}
