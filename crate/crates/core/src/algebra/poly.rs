use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::AlgebraError;

/// Exact scalar: arbitrary-precision rational. `num` keeps values in lowest
/// terms with positive denominator, which is exactly the invariant we need.
pub type Coefficient = BigRational;

/// A variable of the fixed universe. `X(i)` is 1-based.
///
/// The derived `Ord` gives the canonical variable order
/// `x1 < x2 < ... < t < v < q`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    X(u8),
    T,
    V,
    Q,
}

impl Var {
    pub fn is_x(self) -> bool {
        matches!(self, Var::X(_))
    }

    /// `x1, x2, ..., xn` in order.
    pub fn xs(n: usize) -> impl Iterator<Item = Var> {
        (1..=n).map(|i| Var::X(i as u8))
    }

    pub fn x(i: usize) -> Var {
        debug_assert!(i >= 1, "x-variables are 1-based");
        Var::X(i as u8)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::T => write!(f, "t"),
            Var::V => write!(f, "v"),
            Var::Q => write!(f, "q"),
        }
    }
}

/// Canonical sparse exponent vector: zero exponents are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<Var, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var, e: u32) -> Self {
        Monomial::from_exps([(v, e)])
    }

    /// Builds a monomial, dropping zero exponents and summing duplicates.
    pub fn from_exps(exps: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m = Monomial::default();
        for (v, e) in exps {
            if e > 0 {
                *m.exps.entry(v).or_insert(0) += e;
            }
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    /// Total degree in the x-variables only; `t`, `v`, `q` are ungraded.
    pub fn x_degree(&self) -> u32 {
        self.exps
            .iter()
            .filter(|(v, _)| v.is_x())
            .map(|(_, &e)| e)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&v, &e) in &other.exps {
            *out.exps.entry(v).or_insert(0) += e;
        }
        out
    }

    /// Componentwise quotient, if `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.clone();
        for (&v, &e) in &other.exps {
            match out.exps.get_mut(&v) {
                Some(cur) if *cur >= e => {
                    *cur -= e;
                    if *cur == 0 {
                        out.exps.remove(&v);
                    }
                }
                _ => return None,
            }
        }
        Some(out)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then lex on the fixed
    /// variable order (a higher exponent on an earlier variable wins).
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut a = self.exps.iter();
            let mut b = other.exps.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((va, ea)), Some((vb, eb))) => {
                        if va < vb {
                            return Ordering::Greater;
                        }
                        if va > vb {
                            return Ordering::Less;
                        }
                        match ea.cmp(eb) {
                            Ordering::Equal => continue,
                            ord => return ord,
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&v, &e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse exact multivariate polynomial. No stored coefficient is zero and
/// terms are kept in graded-lex order, so equality is structural and
/// rendering is canonical.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::int(1)
    }

    pub fn int(n: i64) -> Self {
        Polynomial::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(c: Coefficient) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(Monomial::var(v, 1), BigRational::one())
    }

    pub fn x(i: usize) -> Self {
        Polynomial::var(Var::x(i))
    }

    /// The monomial `x_i^e`.
    pub fn xpow(i: usize, e: u32) -> Self {
        Polynomial::term(Monomial::var(Var::x(i), e), BigRational::one())
    }

    pub fn qpow(e: u32) -> Self {
        Polynomial::term(Monomial::var(Var::Q, e), BigRational::one())
    }

    pub fn term(m: Monomial, c: Coefficient) -> Self {
        let mut p = Polynomial::default();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().next_back()
    }

    /// Smallest term in graded-lex order; used for failure witnesses.
    pub fn smallest_term(&self) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().next()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.exps().map(|(v, _)| v))
            .collect()
    }

    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::x_degree).max().unwrap_or(0)
    }

    fn insert_add(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / d`; errs with the nonzero remainder if `d`
    /// does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Polynomial, AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (dm, dc) = d.leading_term().expect("nonzero divisor");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            // If p = s*d then lead(p) = lead(s)*lead(d); the first
            // non-divisible leading term certifies a nonzero remainder.
            let Some(qm) = rm.try_div(&dm) else {
                return Err(AlgebraError::NotDivisible { remainder: rem });
            };
            let qc = rc / &dc;
            let step = Polynomial::term(qm, qc);
            rem -= &(&step * d);
            quot += &step;
        }
        Ok(quot)
    }

    /// Image under the ring homomorphism extending `assignment`, which must
    /// cover every variable occurring in `self`.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<Var, Polynomial>,
    ) -> Result<Polynomial, AlgebraError> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut image = Polynomial::rational(c.clone());
            for (v, e) in m.exps() {
                let target = assignment
                    .get(&v)
                    .ok_or(AlgebraError::UnassignedVariable(v))?;
                image = &image * &target.pow(e);
            }
            out += &image;
        }
        Ok(out)
    }

    /// Drops every term whose x-degree exceeds `bound`.
    pub fn truncate_x(&self, bound: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x_degree() <= bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficients of `q^0..q^deg` for a univariate polynomial in `q`.
    pub fn q_coefficients(&self) -> Vec<Coefficient> {
        let deg = self
            .terms
            .keys()
            .map(|m| m.exponent(Var::Q))
            .max()
            .unwrap_or(0);
        let mut out = vec![BigRational::zero(); deg as usize + 1];
        for (m, c) in &self.terms {
            debug_assert!(m.exps().all(|(v, _)| v == Var::Q), "not univariate in q");
            out[m.exponent(Var::Q) as usize] = c.clone();
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.insert_add(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.insert_add(m.clone(), -c.clone());
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

fn fmt_coeff(c: &Coefficient) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical rendering: terms in descending graded-lex order,
    /// coefficients as `a` or `a/b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{}", fmt_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_coeff(&abs))?;
            }
        }
        Ok(())
    }
}
