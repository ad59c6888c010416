use crate::algebra::{vandermonde, vandermonde_quotient, Monomial, Polynomial, Var};

use super::{x_product, IdentityError, IdentityResult};

/// The n-variable partial-fraction identity behind the weighted Schur sum:
///
/// `x1..xn * sum_k x_k^{-1} (1-t x_k)(1-v x_k) prod_{i!=k} (1-x_i x_k)/(x_i-x_k)`
/// equals `(1-t x1..xn)(1-v x1..xn)` for odd `n` and
/// `(1-x1..xn)(1-tv x1..xn)` for even `n`.
///
/// Both sides are put over the common denominator `vandermonde(n)`; each
/// term's numerator absorbs `V / prod_{i!=k}(x_i - x_k)` as a signed
/// sub-Vandermonde, so no division occurs.
pub fn check_lemma1(n: usize) -> Result<IdentityResult, IdentityError> {
    assert!(n >= 1);
    let t = Polynomial::var(Var::T);
    let v = Polynomial::var(Var::V);
    let one = Polynomial::one();

    let mut lhs = Polynomial::zero();
    for k in 1..=n {
        // x1..xn / x_k
        let mut term = Polynomial::term(
            Monomial::from_exps((1..=n).filter(|&i| i != k).map(|i| (Var::x(i), 1))),
            num::BigRational::from_integer(1.into()),
        );
        term = &term * &(&one - &(&t * &Polynomial::x(k)));
        term = &term * &(&one - &(&v * &Polynomial::x(k)));
        for i in (1..=n).filter(|&i| i != k) {
            term = &term * &(&one - &(&Polynomial::x(i) * &Polynomial::x(k)));
        }
        let removed: Vec<(usize, usize)> = (1..=n).filter(|&i| i != k).map(|i| (i, k)).collect();
        term = &term * &vandermonde_quotient(n, &removed);
        lhs += &term;
    }

    let all = x_product(n);
    let rhs = if n % 2 == 1 {
        &(&one - &(&t * &all)) * &(&one - &(&v * &all))
    } else {
        &(&one - &all) * &(&one - &(&(&t * &v) * &all))
    };
    let rhs = &rhs * &vandermonde(n);

    Ok(IdentityResult::compare(
        "lemma1",
        &[("n", n.to_string())],
        &lhs,
        &rhs,
    ))
}

/// The `t = v = 0` double-sum variant, valid for even `n`:
///
/// `(x1..xn)^2 sum_{k != l} x_k^{-2} x_l^{-1}
///    prod_{i!=k} (1-x_i x_k)/(x_i-x_k) prod_{i!=k,l} (1-x_i x_l)/(x_i-x_l)`
/// equals `1 - x1..xn`. Same common-denominator technique as `check_lemma1`.
pub fn check_lemma2(n: usize) -> Result<IdentityResult, IdentityError> {
    if n % 2 != 0 {
        return Err(IdentityError::OddN(n));
    }
    let one = Polynomial::one();

    let mut lhs = Polynomial::zero();
    for k in 1..=n {
        for l in (1..=n).filter(|&l| l != k) {
            // (x1..xn)^2 * x_k^{-2} * x_l^{-1}
            let mut term = Polynomial::term(
                Monomial::from_exps((1..=n).map(|i| {
                    let e = if i == k {
                        0
                    } else if i == l {
                        1
                    } else {
                        2
                    };
                    (Var::x(i), e)
                })),
                num::BigRational::from_integer(1.into()),
            );
            for i in (1..=n).filter(|&i| i != k) {
                term = &term * &(&one - &(&Polynomial::x(i) * &Polynomial::x(k)));
            }
            for i in (1..=n).filter(|&i| i != k && i != l) {
                term = &term * &(&one - &(&Polynomial::x(i) * &Polynomial::x(l)));
            }
            let mut removed: Vec<(usize, usize)> =
                (1..=n).filter(|&i| i != k).map(|i| (i, k)).collect();
            removed.extend((1..=n).filter(|&i| i != k && i != l).map(|i| (i, l)));
            term = &term * &vandermonde_quotient(n, &removed);
            lhs += &term;
        }
    }

    let rhs = &(&one - &x_product(n)) * &vandermonde(n);
    Ok(IdentityResult::compare(
        "lemma2",
        &[("n", n.to_string())],
        &lhs,
        &rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma1_base_case_is_literal() {
        // n = 1: the left side is (1 - t x1)(1 - v x1) itself.
        assert!(check_lemma1(1).unwrap().holds);
    }

    #[test]
    fn lemma1_parity_branches() {
        assert!(check_lemma1(2).unwrap().holds, "even branch");
        assert!(check_lemma1(3).unwrap().holds, "odd branch");
    }

    #[test]
    fn lemma2_base_case() {
        // n = 2: the two ordered pairs (k,l) in {(1,2),(2,1)}, by hand:
        //   x2^... the common-denominator numerators sum to (1-x1x2)(x1-x2).
        assert!(check_lemma2(2).unwrap().holds);
    }

    #[test]
    fn lemma2_rejects_odd_n() {
        assert!(matches!(check_lemma2(3), Err(IdentityError::OddN(3))));
    }
}
