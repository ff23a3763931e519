#![allow(dead_code)]

use std::path::PathBuf;

use foliation_index::{BigInt, Monomial, QPolynomial, Rational};
use proptest::prelude::*;

pub fn x(n: usize, i: usize) -> QPolynomial {
    QPolynomial::variable(n, i)
}

pub fn q(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

pub fn c(n: usize, v: i64) -> QPolynomial {
    QPolynomial::constant(n, q(v, 1))
}

/// `x1^k + ... + xn^k`
pub fn fermat(n: usize, k: u32) -> QPolynomial {
    (0..n).fold(QPolynomial::zero(n), |acc, i| acc + x(n, i).pow(k))
}

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Every `.scn` file below the fixture directory, sorted.
pub fn fixture_files(sub: &str) -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(fixtures().join(sub))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "scn"))
        .collect();
    out.sort();
    out
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| q(a, b))
}

/// Sparse polynomial in `n` variables of degree at most `deg`.
pub fn polynomial(n: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec((prop::collection::vec(0..=deg, n), rational()), 0..=max_terms).prop_map(move |terms| {
        QPolynomial::from_terms(
            n,
            terms
                .into_iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= deg)
                .map(|(e, c)| (Monomial::new(e), c)),
        )
    })
}
