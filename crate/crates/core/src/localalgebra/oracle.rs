//! Brute-force linear algebra for `dim Q[x] / (I + m^N)`, independent of the
//! Gröbner machinery. Used to cross-check it.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::polynomial::{Monomial, Polynomial};
use crate::Rational;

/// Largest number of monomials the oracle agrees to work with.
pub const ORACLE_MONOMIAL_LIMIT: usize = 5000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{count} monomials of degree below {bound} exceed the oracle limit of {ORACLE_MONOMIAL_LIMIT}")]
    Intractable { count: usize, bound: u32 },
}

/// `dim Q[x] / (I + m^bound)` computed as the number of monomials of degree
/// below `bound` minus the rank of the span of all truncated products
/// `x^a * g` (`g` in `ideal`, `deg x^a < bound`). The rank comes from exact
/// fraction-free integer elimination.
pub fn oracle_quotient_dim(nvars: usize, ideal: &[Polynomial<Rational>], bound: u32) -> Result<usize, OracleError> {
    let monomials = Monomial::all_below_degree(nvars, bound);
    if monomials.len() > ORACLE_MONOMIAL_LIMIT {
        return Err(OracleError::Intractable { count: monomials.len(), bound });
    }
    let column: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let width = monomials.len();

    let mut echelon = Echelon::new(width);
    for g in ideal {
        assert_eq!(g.nvars(), nvars, "generator dimension mismatch");
        for shift in &monomials {
            let mut row: Vec<Rational> = vec![Rational::zero(); width];
            let mut any = false;
            for (m, c) in g.terms() {
                let product = m.mul(shift);
                if let Some(&col) = column.get(&product) {
                    row[col] = c.clone();
                    any = true;
                }
            }
            if any {
                echelon.insert(integer_row(row));
            }
        }
    }
    Ok(width - echelon.rank())
}

/// Clear denominators of a rational row.
fn integer_row(row: Vec<Rational>) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.into_iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
}

/// Incrementally maintained row echelon form over the integers.
struct Echelon {
    // (pivot column, row) with the row's entries left of the pivot all zero
    rows: Vec<(usize, Vec<BigInt>)>,
    width: usize,
}

impl Echelon {
    fn new(width: usize) -> Self {
        Self { rows: Vec::new(), width }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut row: Vec<BigInt>) {
        debug_assert_eq!(row.len(), self.width);
        for (pivot, basis_row) in &self.rows {
            let entry = &row[*pivot];
            if entry.is_zero() {
                continue;
            }
            // row <- p * row - e * basis_row, which zeroes column `pivot`
            let p = basis_row[*pivot].clone();
            let e = entry.clone();
            for (r, b) in row.iter_mut().zip(basis_row) {
                *r = &p * &*r - &e * b;
            }
            normalize(&mut row);
        }
        if let Some(pivot) = row.iter().position(|v| !v.is_zero()) {
            self.rows.push((pivot, row));
        }
    }
}

/// Divide a row by the gcd of its entries.
fn normalize(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.is_one() {
        return;
    }
    let g = g.abs();
    for v in row.iter_mut() {
        *v = &*v / &g;
    }
}
