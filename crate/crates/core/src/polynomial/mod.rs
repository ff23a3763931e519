//! Sparse multivariate polynomials over an exact field.

mod monomial;
mod vector_field;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use monomial::Monomial;
pub use vector_field::VectorField;

use crate::scalar::{from_i64, ExactField};

/// Order of vanishing at the origin. The zero polynomial vanishes to
/// infinite order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

/// Returned by [`Polynomial::exact_divide`] when the divisor does not divide
/// the dividend. Carries the remainder of the division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotDivisible<C: ExactField> {
    pub remainder: Polynomial<C>,
}

/// A polynomial in `x1..xn` stored as a map from exponent vectors to nonzero
/// coefficients. The map is ordered by degrevlex, so the leading term is the
/// last entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C: ExactField> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: ExactField> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    /// The variable `x_{index+1}`.
    pub fn variable(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        Self::monomial(Monomial::variable(nvars, index), C::one())
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { nvars, terms }
    }

    /// Build from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "exponent vector length mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending degrevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        // degrevlex is degree-compatible
        self.leading_monomial().map(Monomial::degree)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&Monomial::one(self.nvars))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, C)> {
        self.terms.pop_last()
    }

    /// `self += coeff * m * other`
    pub(crate) fn add_scaled_shifted(&mut self, coeff: &C, m: &Monomial, other: &Polynomial<C>) {
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), coeff.clone() * oc.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect(),
        }
    }

    /// Divide through by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) => self.scale(&lc.inv()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to `x_{var+1}`.
    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index {var} out of range for {} variables", self.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            out.add_term(Monomial::new(exps), c.clone() * from_i64::<C>(e as i64));
        }
        out
    }

    /// All partial derivatives, generating the Jacobian ideal.
    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.partial_derivative(i)).collect()
    }

    /// Returns `h` with `self = divisor * h`, or the remainder of the
    /// division when `divisor` does not divide `self`.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, NotDivisible<C>> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        assert_eq!(self.nvars, divisor.nvars, "dimension mismatch");
        let (lm, lc) = divisor.leading_term().expect("nonzero divisor");
        let lc_inv = lc.inv();
        let mut rest = self.clone();
        let mut quotient = Self::zero(self.nvars);
        let mut remainder = Self::zero(self.nvars);
        while let Some((m, c)) = rest.pop_leading() {
            match lm.quotient_of(&m) {
                Some(q) => {
                    let factor = c * lc_inv.clone();
                    // the leading term cancels exactly; subtract the tail only
                    for (dm, dc) in divisor.terms.iter().rev().skip(1) {
                        rest.add_term(dm.mul(&q), -(factor.clone() * dc.clone()));
                    }
                    quotient.add_term(q, factor);
                }
                None => remainder.add_term(m, c),
            }
        }
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(NotDivisible { remainder })
        }
    }

    /// Returns `q` with `q(y) = self(y + point)`.
    pub fn translate(&self, point: &[C]) -> Self {
        assert_eq!(point.len(), self.nvars, "point length must equal the number of variables");
        if point.iter().all(|a| a.is_zero()) {
            return self.clone();
        }
        let shifted: Vec<Self> = point
            .iter()
            .enumerate()
            .map(|(i, a)| Self::variable(self.nvars, i) + Self::constant(self.nvars, a.clone()))
            .collect();
        // powers of each shifted variable, grown on demand
        let mut powers: Vec<Vec<Self>> = vec![vec![Self::one(self.nvars)]; self.nvars];
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut term = Self::constant(self.nvars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &shifted[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = out + term;
        }
        out
    }

    /// Sum of the terms of total degree exactly `degree`.
    pub fn homogeneous_component(&self, degree: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop every term of total degree `>= bound`.
    pub fn truncate_below(&self, bound: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Least total degree of a nonzero term, i.e. the multiplicity at the
    /// origin.
    pub fn order_at_origin(&self) -> Order {
        self.terms
            .keys()
            .map(Monomial::degree)
            .min()
            .map_or(Order::Infinite, Order::Finite)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn evaluate(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars);
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    fn check_dims(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomial dimension mismatch: {} vs {} variables",
            self.nvars, other.nvars
        );
    }
}

impl<C: ExactField> Add<&Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.check_dims(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: ExactField> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(mut self, rhs: Polynomial<C>) -> Polynomial<C> {
        self.check_dims(&rhs);
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<C: ExactField> Sub<&Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.check_dims(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<C: ExactField> Sub for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self - &rhs
    }
}

impl<C: ExactField> Mul<&Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.check_dims(rhs);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_scaled_shifted(c, m, rhs);
        }
        out
    }
}

impl<C: ExactField> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: ExactField> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: ExactField> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -self.clone()
    }
}

/// Prints terms in descending degree-lexicographic order using the same
/// syntax the parser accepts, e.g. `x1^2 - 1/2*x1*x2 + 3`.
impl<C: ExactField> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.cmp_deglex(a.0));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: ExactField> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPolynomial, Rational};
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn x(n: usize, i: usize) -> QPolynomial {
        QPolynomial::variable(n, i)
    }

    fn c(n: usize, v: i64) -> QPolynomial {
        QPolynomial::constant(n, q(v, 1))
    }

    fn fermat(n: usize, k: u32) -> QPolynomial {
        (0..n).fold(QPolynomial::zero(n), |acc, i| acc + x(n, i).pow(k))
    }

    #[test]
    fn difference_of_squares() {
        let p = &(x(2, 0) + x(2, 1)) * &(x(2, 0) - x(2, 1));
        assert_eq!(p, x(2, 0).pow(2) - x(2, 1).pow(2));
    }

    #[test]
    fn additive_identity_and_rational_normalization() {
        let p = x(3, 0) * x(3, 2) + c(3, 4);
        assert_eq!(&p + &QPolynomial::zero(3), p);
        let half = x(1, 0).pow(2).scale(&q(1, 2));
        assert_eq!(&half + &half, x(1, 0).pow(2));
        assert!((&p - &p).is_zero());
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn mismatched_dimensions_panic() {
        let _ = x(2, 0) + x(3, 0);
    }

    #[test]
    fn partial_derivatives() {
        let k = 5;
        let p = x(2, 0).pow(k) + x(2, 1).pow(k);
        assert_eq!(p.partial_derivative(0), x(2, 0).pow(k - 1).scale(&q(k as i64, 1)));
        assert!(x(2, 0).pow(3).partial_derivative(1).is_zero());
        let p = x(2, 0) * x(2, 1) + x(2, 0).pow(2).scale(&q(1, 2));
        assert_eq!(p.partial_derivative(0), x(2, 1) + x(2, 0));
    }

    #[test]
    fn exact_division() {
        let n = 2;
        let p = x(n, 0).pow(2) - x(n, 1).pow(2);
        assert_eq!(p.exact_divide(&(x(n, 0) - x(n, 1))).unwrap(), x(n, 0) + x(n, 1));

        let f = fermat(4, 3);
        let kf = f.scale(&q(3, 1));
        assert_eq!(kf.exact_divide(&f).unwrap(), c(4, 3));

        let err = (x(n, 0).pow(2) + x(n, 1)).exact_divide(&x(n, 0)).unwrap_err();
        assert_eq!(err.remainder, x(n, 1));
    }

    #[test]
    fn translation() {
        assert_eq!(
            x(1, 0).pow(2).translate(&[q(1, 1)]),
            x(1, 0).pow(2) + x(1, 0).scale(&q(2, 1)) + c(1, 1)
        );
        let p = fermat(3, 4) + x(3, 1);
        assert_eq!(p.translate(&[q(0, 1), q(0, 1), q(0, 1)]), p);
        let xy = x(2, 0) * x(2, 1);
        assert_eq!(
            xy.translate(&[q(1, 1), q(-1, 1)]),
            x(2, 0) * x(2, 1) - x(2, 0) + x(2, 1) - c(2, 1)
        );
    }

    #[test]
    fn homogeneous_components_and_order() {
        let p = x(1, 0) + x(1, 0).pow(2);
        assert_eq!(p.homogeneous_component(1), x(1, 0));
        assert!(x(1, 0).homogeneous_component(0).is_zero());
        let f = fermat(4, 3);
        assert_eq!(f.homogeneous_component(3), f);
        assert_eq!(fermat(4, 7).order_at_origin(), Order::Finite(7));
        assert_eq!((c(1, 1) + x(1, 0)).order_at_origin(), Order::Finite(0));
        assert_eq!(QPolynomial::zero(2).order_at_origin(), Order::Infinite);
        assert_eq!(QPolynomial::zero(2).total_degree(), None);
    }

    #[test]
    fn printing_is_deglex_descending() {
        let p = x(3, 2).pow(2) - x(3, 0) * x(3, 2).scale(&q(1, 2)) + x(3, 1).pow(2) + c(3, -3);
        assert_eq!(p.to_string(), "-1/2*x1*x3 + x2^2 + x3^2 - 3");
        assert_eq!((-x(2, 0)).to_string(), "-x1");
        assert_eq!(QPolynomial::zero(2).to_string(), "0");
    }

    #[test]
    fn evaluation() {
        let p = x(2, 0) * x(2, 1) + c(2, 2);
        assert_eq!(p.evaluate(&[q(3, 1), q(1, 3)]), q(3, 1));
    }
}
