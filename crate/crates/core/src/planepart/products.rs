use num::BigRational;

use crate::algebra::Polynomial;

use super::orbits::orbits;
use super::PlanePartError;

/// The named product generating formulas. Each expands to an exact
/// polynomial in `q`; a failed exact division is a falsified formula and
/// surfaces as `NotDivisible`, never a silent truncation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductKind {
    /// Symmetric plane partitions in the n x n x m box, by size.
    MacMahonSym,
    /// Column strict plane partitions (rows <= n, cols <= m, heights <= n).
    BenderKnuth,
    /// Orbit-counting version of `MacMahonSym`.
    OrbitSym,
    /// Even stack heights, by size (`m` even), stated over orbits.
    SizeEven,
    /// Even stack heights, orbit-counted (`m` even).
    OrbitEven,
    /// Column strict with all rows of even length (`m` even).
    EvenColumnsThm2Cor,
    /// Even diagonal-level class (`n` even): half-sum-of-products form.
    Thm3Cor,
    /// Even diagonal-level class (`n` even): product over the paired
    /// orbits of the m-1 box times the even-subset sum over top
    /// diagonal points.
    Thm3SSum,
}

impl ProductKind {
    pub fn label(self) -> &'static str {
        match self {
            ProductKind::MacMahonSym => "macmahon-sym",
            ProductKind::BenderKnuth => "bender-knuth",
            ProductKind::OrbitSym => "orbit-sym",
            ProductKind::SizeEven => "size-even",
            ProductKind::OrbitEven => "orbit-even",
            ProductKind::EvenColumnsThm2Cor => "even-columns",
            ProductKind::Thm3Cor => "thm3-cor",
            ProductKind::Thm3SSum => "thm3-ssum",
        }
    }
}

fn one_minus_q(e: u32) -> Polynomial {
    &Polynomial::one() - &Polynomial::qpow(e)
}

fn one_plus_q(e: u32) -> Polynomial {
    &Polynomial::one() + &Polynomial::qpow(e)
}

fn require_even_m(kind: ProductKind, n: usize, m: u32) -> Result<(), PlanePartError> {
    if m % 2 != 0 {
        return Err(PlanePartError::ParityViolation {
            kind: kind.label().to_string(),
            requirement: "even m".to_string(),
            n,
            m,
        });
    }
    Ok(())
}

fn require_even_n(kind: ProductKind, n: usize, m: u32) -> Result<(), PlanePartError> {
    if n % 2 != 0 {
        return Err(PlanePartError::ParityViolation {
            kind: kind.label().to_string(),
            requirement: "even n".to_string(),
            n,
            m,
        });
    }
    Ok(())
}

/// Expands the chosen product formula exactly.
pub fn product_gf(kind: ProductKind, n: usize, m: u32) -> Result<Polynomial, PlanePartError> {
    let mut numer = Polynomial::one();
    let mut denom = Polynomial::one();
    match kind {
        ProductKind::MacMahonSym => {
            // prod_i (1-q^{m+2i-1})/(1-q^{2i-1}) *
            // prod_{i<j} (1-q^{2(m+i+j-1)})/(1-q^{2(i+j-1)})
            for i in 1..=n as u32 {
                numer = &numer * &one_minus_q(m + 2 * i - 1);
                denom = &denom * &one_minus_q(2 * i - 1);
            }
            for i in 1..=n as u32 {
                for j in i + 1..=n as u32 {
                    numer = &numer * &one_minus_q(2 * (m + i + j - 1));
                    denom = &denom * &one_minus_q(2 * (i + j - 1));
                }
            }
        }
        ProductKind::BenderKnuth => {
            // prod_{i<=j<=n} (1-q^{m+i+j-1})/(1-q^{i+j-1})
            for i in 1..=n as u32 {
                for j in i..=n as u32 {
                    numer = &numer * &one_minus_q(m + i + j - 1);
                    denom = &denom * &one_minus_q(i + j - 1);
                }
            }
        }
        ProductKind::OrbitSym => {
            for orbit in orbits(n, m) {
                let ht = orbit.height_stat();
                numer = &numer * &one_minus_q(ht + 1);
                denom = &denom * &one_minus_q(ht);
            }
        }
        ProductKind::SizeEven => {
            require_even_m(kind, n, m)?;
            for orbit in orbits(n, m) {
                let (sz, ht) = (orbit.size(), orbit.height_stat());
                numer = &numer * &one_minus_q(sz * (ht + 2));
                denom = &denom * &one_minus_q(sz * (ht + 1));
            }
        }
        ProductKind::OrbitEven => {
            require_even_m(kind, n, m)?;
            for orbit in orbits(n, m) {
                let ht = orbit.height_stat();
                numer = &numer * &one_minus_q(ht + 2);
                denom = &denom * &one_minus_q(ht + 1);
            }
        }
        ProductKind::EvenColumnsThm2Cor => {
            require_even_m(kind, n, m)?;
            // prod_i (1-q^{m+2i})/(1-q^{2i}) * prod_{i<j} (1-q^{m+i+j})/(1-q^{i+j})
            for i in 1..=n as u32 {
                numer = &numer * &one_minus_q(m + 2 * i);
                denom = &denom * &one_minus_q(2 * i);
            }
            for i in 1..=n as u32 {
                for j in i + 1..=n as u32 {
                    numer = &numer * &one_minus_q(m + i + j);
                    denom = &denom * &one_minus_q(i + j);
                }
            }
        }
        ProductKind::Thm3Cor => {
            require_even_n(kind, n, m)?;
            // (1/2)(prod_{i=0}^{n-1} (1-q^{m+2i}) + prod (1+q^{m+2i})) *
            // prod_{i<j} (1-q^{2(m+i+j-2)})/(1-q^{2(i+j-1)})
            let mut minus = Polynomial::one();
            let mut plus = Polynomial::one();
            for i in 0..n as u32 {
                minus = &minus * &one_minus_q(m + 2 * i);
                plus = &plus * &one_plus_q(m + 2 * i);
            }
            numer = (&minus + &plus).scale(&BigRational::new(1.into(), 2.into()));
            for i in 1..=n as u32 {
                for j in i + 1..=n as u32 {
                    numer = &numer * &one_minus_q(2 * (m + i + j - 2));
                    denom = &denom * &one_minus_q(2 * (i + j - 1));
                }
            }
        }
        ProductKind::Thm3SSum => {
            require_even_n(kind, n, m)?;
            if m < 1 {
                return Err(PlanePartError::ParityViolation {
                    kind: kind.label().to_string(),
                    requirement: "m >= 1".to_string(),
                    n,
                    m,
                });
            }
            // product over the paired (off-diagonal) orbits of the m-1 box
            // (empty when m = 1); telescoping over k leaves
            // prod_{i<j} (1-q^{2(m+i+j-2)})/(1-q^{2(i+j-1)}). The diagonal
            // orbits are carried by the subset sum below instead.
            for orbit in orbits(n, m - 1).into_iter().filter(|o| o.size() == 2) {
                let ht = orbit.height_stat();
                numer = &numer * &one_minus_q(2 * (ht + 1));
                denom = &denom * &one_minus_q(2 * ht);
            }
            // ... times the sum over even subsets S of the diagonal points
            // (i,i,m) of q^{sum_{eta in S} Ht(eta)}, Ht(i,i,m) = 2i+m-2.
            let mut subset_sum = Polynomial::zero();
            for mask in 0..1u32 << n {
                if mask.count_ones() % 2 != 0 {
                    continue;
                }
                let e: u32 = (1..=n as u32)
                    .filter(|i| mask >> (i - 1) & 1 == 1)
                    .map(|i| 2 * i + m - 2)
                    .sum();
                subset_sum += &Polynomial::qpow(e);
            }
            numer = &numer * &subset_sum;
        }
    }
    Ok(numer.exact_div(&denom)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(exps: &[u32]) -> Polynomial {
        exps.iter()
            .fold(Polynomial::zero(), |acc, &e| &acc + &Polynomial::qpow(e))
    }

    #[test]
    fn macmahon_2x2x1() {
        // (1-q^2)(1-q^4)(1-q^8)/((1-q)(1-q^3)(1-q^4)) = 1 + q + q^3 + q^4
        assert_eq!(
            product_gf(ProductKind::MacMahonSym, 2, 1).unwrap(),
            qpoly(&[0, 1, 3, 4])
        );
    }

    #[test]
    fn thm3_cor_2x2x1() {
        // (1/2)((1-q)(1-q^3) + (1+q)(1+q^3)) * (1-q^4)/(1-q^4) = 1 + q^4
        assert_eq!(product_gf(ProductKind::Thm3Cor, 2, 1).unwrap(), qpoly(&[0, 4]));
    }

    #[test]
    fn thm3_ssum_2x2x1() {
        // empty base product; S in {∅, both diagonal points}:
        // 1 + q^{Ht(1,1,1) + Ht(2,2,1)} = 1 + q^4
        assert_eq!(product_gf(ProductKind::Thm3SSum, 2, 1).unwrap(), qpoly(&[0, 4]));
    }

    #[test]
    fn subset_sum_form_matches_half_sum_form() {
        for (n, m) in [(2usize, 1u32), (2, 2), (2, 3), (4, 1), (4, 2)] {
            assert_eq!(
                product_gf(ProductKind::Thm3SSum, n, m).unwrap(),
                product_gf(ProductKind::Thm3Cor, n, m).unwrap(),
                "n={n} m={m}"
            );
        }
    }

    #[test]
    fn orbit_statement_of_macmahon_agrees() {
        // the size-weighted orbit product prod (1-q^{|eta|(1+Ht)})/(1-q^{|eta| Ht})
        // equals the classical double product
        for n in 1..=3usize {
            for m in 1..=3u32 {
                let mut numer = Polynomial::one();
                let mut denom = Polynomial::one();
                for orbit in orbits(n, m) {
                    let (sz, ht) = (orbit.size(), orbit.height_stat());
                    numer = &numer * &one_minus_q(sz * (ht + 1));
                    denom = &denom * &one_minus_q(sz * ht);
                }
                assert_eq!(
                    numer.exact_div(&denom).unwrap(),
                    product_gf(ProductKind::MacMahonSym, n, m).unwrap(),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn bender_knuth_small() {
        assert_eq!(
            product_gf(ProductKind::BenderKnuth, 1, 2).unwrap(),
            qpoly(&[0, 1, 2])
        );
        assert_eq!(
            product_gf(ProductKind::BenderKnuth, 2, 1).unwrap(),
            qpoly(&[0, 1, 2, 3])
        );
    }

    #[test]
    fn parity_violations() {
        assert!(matches!(
            product_gf(ProductKind::SizeEven, 2, 1),
            Err(PlanePartError::ParityViolation { .. })
        ));
        assert!(matches!(
            product_gf(ProductKind::Thm3Cor, 3, 2),
            Err(PlanePartError::ParityViolation { .. })
        ));
    }

    #[test]
    fn size_even_2x2x2() {
        assert_eq!(
            product_gf(ProductKind::SizeEven, 2, 2).unwrap(),
            qpoly(&[0, 2, 4, 6, 8])
        );
    }

    #[test]
    fn nonnegative_integer_coefficients() {
        use num::{BigInt, One, Signed};
        for (kind, n, m) in [
            (ProductKind::MacMahonSym, 3, 3),
            (ProductKind::BenderKnuth, 3, 2),
            (ProductKind::OrbitSym, 3, 2),
            (ProductKind::SizeEven, 2, 4),
            (ProductKind::OrbitEven, 2, 4),
            (ProductKind::EvenColumnsThm2Cor, 2, 2),
            (ProductKind::Thm3Cor, 2, 3),
            (ProductKind::Thm3SSum, 2, 3),
        ] {
            let gf = product_gf(kind, n, m).unwrap();
            for (_, c) in gf.terms() {
                assert!(c.denom() == &BigInt::one(), "{}: {c}", kind.label());
                assert!(!c.is_negative(), "{}: {c}", kind.label());
            }
        }
    }
}
