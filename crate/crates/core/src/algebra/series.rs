use super::poly::Polynomial;
use super::AlgebraError;

/// A power series truncated at a total x-degree bound. Only the x-variables
/// are graded; exponents of `t`, `v`, `q` are unbounded.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries {
    body: Polynomial,
    bound: u32,
}

impl TruncatedSeries {
    pub fn new(body: Polynomial, bound: u32) -> Self {
        TruncatedSeries {
            body: body.truncate_x(bound),
            bound,
        }
    }

    pub fn one(bound: u32) -> Self {
        TruncatedSeries::new(Polynomial::one(), bound)
    }

    pub fn body(&self) -> &Polynomial {
        &self.body
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::new(&self.body + &other.body, self.bound.min(other.bound))
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::new(&self.body * &other.body, self.bound.min(other.bound))
    }

    /// Expands `1/(1-u)` as `sum_{k>=0} u^k` truncated at x-degree `bound`.
    /// Every term of `u` must have x-degree at least 1, so that `u^k`
    /// eventually truncates away.
    pub fn geometric_expand(u: &Polynomial, bound: u32) -> Result<TruncatedSeries, AlgebraError> {
        if u.terms().any(|(m, _)| m.x_degree() == 0) {
            return Err(AlgebraError::NonNilpotentArgument);
        }
        let mut acc = Polynomial::one();
        let mut power = Polynomial::one();
        for _ in 1..=bound {
            power = (&power * u).truncate_x(bound);
            if power.is_zero() {
                break;
            }
            acc += &power;
        }
        Ok(TruncatedSeries::new(acc, bound))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    #[test]
    fn geometric_qx() {
        // 1/(1 - q x1) to x-degree 3: 1 + q x1 + q^2 x1^2 + q^3 x1^3
        let u = &Polynomial::var(Var::Q) * &Polynomial::x(1);
        let s = TruncatedSeries::geometric_expand(&u, 3).unwrap();
        let mut expected = Polynomial::one();
        for k in 1..=3u32 {
            expected += &(&Polynomial::qpow(k) * &Polynomial::xpow(1, k));
        }
        assert_eq!(s.body(), &expected);
    }

    #[test]
    fn geometric_tx() {
        // 1/(1 - t x1) to x-degree 2: 1 + t x1 + t^2 x1^2
        let t = Polynomial::var(Var::T);
        let u = &t * &Polynomial::x(1);
        let s = TruncatedSeries::geometric_expand(&u, 2).unwrap();
        let expected = &(&Polynomial::one() + &(&t * &Polynomial::x(1)))
            + &(&t.pow(2) * &Polynomial::xpow(1, 2));
        assert_eq!(s.body(), &expected);
    }

    #[test]
    fn two_factor_product() {
        // 1/((1 - v x1)(1 - t x1)) to x-degree 2:
        // 1 + (t + v) x1 + (t^2 + t v + v^2) x1^2,
        // i.e. the homogeneous sums (v^{k+1} - t^{k+1})/(v - t) as coefficients.
        let t = Polynomial::var(Var::T);
        let v = Polynomial::var(Var::V);
        let x1 = Polynomial::x(1);
        let a = TruncatedSeries::geometric_expand(&(&v * &x1), 2).unwrap();
        let b = TruncatedSeries::geometric_expand(&(&t * &x1), 2).unwrap();
        let got = a.mul(&b);
        let deg1 = &(&t + &v) * &x1;
        let deg2 = &(&(&t.pow(2) + &(&t * &v)) + &v.pow(2)) * &x1.pow(2);
        let expected = &(&Polynomial::one() + &deg1) + &deg2;
        assert_eq!(got.body(), &expected);
    }

    #[test]
    fn rejects_constant_x_term() {
        let u = &Polynomial::var(Var::T) + &Polynomial::x(1);
        assert_eq!(
            TruncatedSeries::geometric_expand(&u, 3),
            Err(AlgebraError::NonNilpotentArgument)
        );
    }

    #[test]
    fn mul_takes_min_bound() {
        let a = TruncatedSeries::one(5);
        let b = TruncatedSeries::one(3);
        assert_eq!(a.mul(&b).bound(), 3);
    }

    #[test]
    fn series_mul_agrees_with_truncated_polynomial_mul() {
        let p = &(&Polynomial::one() + &Polynomial::x(1)) * &(&Polynomial::one() + &Polynomial::x(2));
        let r = &Polynomial::one() + &(&Polynomial::x(1) * &Polynomial::x(2));
        let full = (&p * &r).truncate_x(2);
        let via_series =
            TruncatedSeries::new(p.clone(), 2).mul(&TruncatedSeries::new(r.clone(), 2));
        assert_eq!(via_series.body(), &full);
    }
}
