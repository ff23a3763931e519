//! Global characteristic numbers of a foliation of degree `d` on projective
//! `n`-space with an invariant hypersurface of degree `k`.
//!
//! Each quantity is evaluated twice: once from truncated Chern series in the
//! hyperplane class `h` (with `c(TP^n) = (1+h)^{n+1}`, `c([D]) = 1 + kh`,
//! `c(T_F) = 1 + (1-d)h`) and once from its closed form. A disagreement is
//! reported as [`ChernError::Inconsistent`].

mod bounds;
mod series;
mod sweep;

pub use bounds::{poincare_bound_checks, BoundContext, BoundVerdicts, Verdict};
pub use series::{SeriesCoefficient, TruncatedSeries};
pub use sweep::{identity_sweep, Identity, NegativityViolation, SweepFailure, SweepReport};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::ChernSeries;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChernError {
    #[error("invalid global data: {0}")]
    InvalidInput(String),
    #[error("{quantity}: series route gives {series}, closed form gives {closed}")]
    Inconsistent {
        quantity: &'static str,
        series: BigInt,
        closed: BigInt,
    },
}

/// Degrees and singularity data of a (foliation, hypersurface) pair on
/// projective `n`-space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalData {
    pub n: u32,
    pub d: u64,
    pub k: u64,
    /// Milnor numbers of the singular points of the hypersurface.
    pub mu_list: Vec<u64>,
}

impl GlobalData {
    pub fn new(n: u32, d: u64, k: u64, mu_list: Vec<u64>) -> Result<Self, ChernError> {
        if n < 1 {
            return Err(ChernError::InvalidInput("dimension must be at least 1".into()));
        }
        if k < 1 {
            return Err(ChernError::InvalidInput("hypersurface degree must be at least 1".into()));
        }
        if mu_list.contains(&0) {
            return Err(ChernError::InvalidInput("Milnor numbers must be positive".into()));
        }
        Ok(Self { n, d, k, mu_list })
    }

    pub fn mu_sum(&self) -> BigInt {
        self.mu_list.iter().map(|&m| BigInt::from(m)).sum()
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn sign(n: u32) -> BigInt {
    if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn check(quantity: &'static str, series: BigInt, closed: BigInt) -> Result<BigInt, ChernError> {
    if series == closed {
        Ok(closed)
    } else {
        Err(ChernError::Inconsistent { quantity, series, closed })
    }
}

/// Total Chern class of `TP^n - [D]`.
pub fn ambient_minus_hypersurface(n: u32, k: u64) -> ChernSeries {
    let top = n as usize;
    let tangent = ChernSeries::linear(BigInt::one(), top).pow(n + 1);
    let divisor = ChernSeries::linear(big(k), top);
    &tangent * &divisor.inverse().expect("unit constant term")
}

/// Total Chern class of the virtual bundle `TP^n - [D] - T_F`.
pub fn virtual_class(n: u32, d: u64, k: u64) -> ChernSeries {
    let top = n as usize;
    let foliation = ChernSeries::linear(BigInt::one() - big(d), top);
    &ambient_minus_hypersurface(n, k) * &foliation.inverse().expect("unit constant term")
}

/// `∫_D c_{n-1}(E)` for a class on projective `n`-space: the `h^n`
/// coefficient of `c(E) * kh`.
pub fn integrate_over_hypersurface(class: &ChernSeries, k: u64) -> BigInt {
    let top = class.top_degree();
    (class * &ChernSeries::hyperplane_multiple(big(k), top)).coefficient(top)
}

/// `Σ_{i=0}^{n} (-1)^i (k-1)^i d^{n-i}`.
pub fn integral_x_closed(n: u32, d: u64, k: u64) -> BigInt {
    let km1 = big(k) - BigInt::one();
    (0..=n)
        .map(|i| sign(i) * num_traits::pow(km1.clone(), i as usize) * num_traits::pow(big(d), (n - i) as usize))
        .sum()
}

/// `Σ_{i=0}^{n} Σ_{j=0}^{n-i} C(n+1, n-i-j) (-k)^j (d-1)^i`, the expanded
/// series coefficient.
pub fn integral_x_double_sum(n: u32, d: u64, k: u64) -> BigInt {
    let minus_k = -big(k);
    let dm1 = big(d) - BigInt::one();
    let mut acc = BigInt::zero();
    for i in 0..=n {
        for j in 0..=(n - i) {
            acc += binomial(big(n as u64 + 1), big((n - i - j) as u64))
                * num_traits::pow(minus_k.clone(), j as usize)
                * num_traits::pow(dm1.clone(), i as usize);
        }
    }
    acc
}

/// `∫_{P^n} c_n(TP^n - [D] - T_F)`, checked against its closed form.
pub fn integral_x(g: &GlobalData) -> Result<BigInt, ChernError> {
    let series = virtual_class(g.n, g.d, g.k).coefficient(g.n as usize);
    check("integral_X", series, integral_x_closed(g.n, g.d, g.k))
}

/// Total Milnor number of a degree-`d` foliation: `d^n + ... + d + 1`.
pub fn baum_bott_total(n: u32, d: u64) -> BigInt {
    (0..=n).map(|i| num_traits::pow(big(d), i as usize)).sum()
}

/// `Σ_{i=0}^{n-1} (1 - (1-k)^{n-i}) d^i`.
pub fn gsv_total_closed(n: u32, d: u64, k: u64) -> BigInt {
    let one_minus_k = BigInt::one() - big(k);
    (0..n)
        .map(|i| {
            (BigInt::one() - num_traits::pow(one_minus_k.clone(), (n - i) as usize))
                * num_traits::pow(big(d), i as usize)
        })
        .sum()
}

/// `∫_D c_{n-1}(TP^n - [D] - T_F)` by series.
pub fn gsv_total_series(n: u32, d: u64, k: u64) -> BigInt {
    integrate_over_hypersurface(&virtual_class(n, d, k), k)
}

/// Total GSV index over the tangency set, checked against the integral over
/// the hypersurface.
pub fn gsv_total(g: &GlobalData) -> Result<BigInt, ChernError> {
    check("gsv_total", gsv_total_series(g.n, g.d, g.k), gsv_total_closed(g.n, g.d, g.k))
}

/// Total Schwartz index: `gsv_total + (-1)^n Σ mu_p(D)`. Cross-checked
/// against `Σ mu(F) - ∫_X c_n + (-1)^n Σ mu_p(D)`.
pub fn schwartz_total(g: &GlobalData) -> Result<BigInt, ChernError> {
    let correction = sign(g.n) * g.mu_sum();
    let closed = gsv_total(g)? + &correction;
    let via_residues = baum_bott_total(g.n, g.d) - integral_x(g)? + &correction;
    check("schwartz_total", via_residues, closed)
}

/// Euler characteristic of a degree-`k` hypersurface with isolated
/// singularities of the given Milnor numbers (generalized adjunction).
pub fn euler_char_hypersurface(n: u32, k: u64, mu_list: &[u64]) -> BigInt {
    let smooth = integrate_over_hypersurface(&ambient_minus_hypersurface(n, k), k);
    let mu: BigInt = mu_list.iter().map(|&m| big(m)).sum();
    smooth + sign(n) * mu
}

/// `∫_D c_{n-1}(TX-[D]-T_F) - ∫_D c_{n-1}(TX-[D]) + χ(D)`, which must equal
/// [`schwartz_total`].
pub fn schwartz_total_via_integrals(g: &GlobalData) -> Result<BigInt, ChernError> {
    let with_foliation = gsv_total_series(g.n, g.d, g.k);
    let without = integrate_over_hypersurface(&ambient_minus_hypersurface(g.n, g.k), g.k);
    let chi = euler_char_hypersurface(g.n, g.k, &g.mu_list);
    check("schwartz_total_via_integrals", with_foliation - without + chi, schwartz_total(g)?)
}

/// Both sides of the rearrangement
/// `Σ_j d^j - Σ_i (1-k)^{n-i} d^i
///   = Σ_{i=1}^{n-1} Σ_{j=0}^{i-1} C(i,j) (-1)^{i-j+1} k^{i-j} d^{n-i} - Σ_{j=0}^{n-1} C(n,j) (-k)^{n-j}`.
pub fn rearrangement_sides(n: u32, d: u64, k: u64) -> (BigInt, BigInt) {
    let one_minus_k = BigInt::one() - big(k);
    let lhs = baum_bott_total(n, d)
        - (0..=n)
            .map(|i| num_traits::pow(one_minus_k.clone(), (n - i) as usize) * num_traits::pow(big(d), i as usize))
            .sum::<BigInt>();
    let rhs = degree_side(n, d, k) - binomial_side(n, k);
    (lhs, rhs)
}

/// `Σ_{j=0}^{n-1} C(n,j) (-k)^{n-j}`.
pub fn binomial_side(n: u32, k: u64) -> BigInt {
    let minus_k = -big(k);
    (0..n)
        .map(|j| binomial(big(n as u64), big(j as u64)) * num_traits::pow(minus_k.clone(), (n - j) as usize))
        .sum()
}

/// `Σ_{i=1}^{n-1} Σ_{j=0}^{i-1} C(i,j) (-1)^{i-j+1} k^{i-j} d^{n-i}`.
pub fn degree_side(n: u32, d: u64, k: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 1..n {
        for j in 0..i {
            acc += binomial(big(i as u64), big(j as u64))
                * sign(i - j + 1)
                * num_traits::pow(big(k), (i - j) as usize)
                * num_traits::pow(big(d), (n - i) as usize);
        }
    }
    acc
}

/// `Σ_{i=0}^{n-1} (1 - (1-k)^{n-i}) d^i`; negative when `k > d + 2` and
/// `n` is even.
pub fn lemma51_sum(n: u32, d: u64, k: u64) -> BigInt {
    gsv_total_closed(n, d, k)
}

/// `k > d + 2` implies a negative [`lemma51_sum`].
pub fn lemma51_check(n: u32, d: u64, k: u64) -> bool {
    k <= d + 2 || lemma51_sum(n, d, k) < BigInt::zero()
}
