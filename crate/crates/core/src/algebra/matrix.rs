use std::collections::BTreeSet;

use super::perm::Permutation;
use super::poly::Polynomial;
use super::AlgebraError;

/// Default cap on determinant dimension. Signed permutation expansion is
/// n! terms, which stays cheap up to 6.
pub const DETERMINANT_CAP: usize = 6;

/// Square matrix of polynomials.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix {
    entries: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<Polynomial>>) -> Self {
        let dim = entries.len();
        assert!(dim >= 1, "dimension must be positive");
        assert!(entries.iter().all(|r| r.len() == dim), "matrix must be square");
        PolyMatrix { entries }
    }

    /// Builds the matrix from a 1-based entry function `(i, j) -> M[i][j]`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        PolyMatrix::new(
            (1..=dim)
                .map(|i| (1..=dim).map(|j| f(i, j)).collect())
                .collect(),
        )
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i - 1][j - 1]
    }

    /// Exact determinant by signed permutation expansion.
    pub fn determinant(&self) -> Result<Polynomial, AlgebraError> {
        self.determinant_with_cap(DETERMINANT_CAP)
    }

    pub fn determinant_with_cap(&self, cap: usize) -> Result<Polynomial, AlgebraError> {
        let dim = self.dimension();
        if dim > cap {
            return Err(AlgebraError::DimensionTooLarge { dim, cap });
        }
        let mut det = Polynomial::zero();
        for sigma in Permutation::all(dim) {
            let mut prod = Polynomial::int(sigma.sign());
            for i in 1..=dim {
                prod = &prod * self.entry(i, sigma.image(i));
            }
            det += &prod;
        }
        Ok(det)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.entries.swap(a - 1, b - 1);
    }
}

/// The Vandermonde product `prod_{1 <= i < j <= n} (x_i - x_j)`.
/// The empty product (n = 1) is 1.
pub fn vandermonde(n: usize) -> Polynomial {
    let mut p = Polynomial::one();
    for i in 1..=n {
        for j in i + 1..=n {
            p = &p * &(&Polynomial::x(i) - &Polynomial::x(j));
        }
    }
    p
}

/// `vandermonde(n)` with the linear factors `(x_a - x_b)` in `removed`
/// divided out, computed combinatorially: each requested factor is struck
/// from the pair set, flipping the sign when its orientation is reversed.
/// No polynomial division takes place.
///
/// Panics if a requested factor is absent (already removed or `a == b`).
pub fn vandermonde_quotient(n: usize, removed: &[(usize, usize)]) -> Polynomial {
    let mut present: BTreeSet<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut sign = 1i64;
    for &(a, b) in removed {
        assert!(a != b, "degenerate factor (x_i - x_i)");
        let key = (a.min(b), a.max(b));
        assert!(present.remove(&key), "factor ({a},{b}) not available");
        if a > b {
            sign = -sign;
        }
    }
    let mut p = Polynomial::int(sign);
    for (i, j) in present {
        p = &p * &(&Polynomial::x(i) - &Polynomial::x(j));
    }
    p
}
