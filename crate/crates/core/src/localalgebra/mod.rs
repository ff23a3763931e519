//! Dimensions of local quotient algebras `O_{n,0} / I`.
//!
//! Local dimensions are obtained from global Gröbner bases of `I + m^N`
//! (`m` the maximal ideal at the origin) for increasing `N`. Once two
//! consecutive truncations agree, `m^N` lies in `I + m^{N+1}` and Nakayama's
//! lemma puts it inside the local ideal, so the value is the exact local
//! dimension.

mod groebner;
mod oracle;

pub use groebner::{buchberger, GroebnerBasis, MonomialOrder};
pub use oracle::{oracle_quotient_dim, OracleError, ORACLE_MONOMIAL_LIMIT};

use serde::Serialize;

use crate::polynomial::Polynomial;
use crate::scalar::ExactField;

/// Default largest truncation level tried by [`local_dim`].
pub const DEFAULT_N_MAX: u32 = 64;

/// A local quotient dimension together with the truncation level that
/// certified it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocalDimResult {
    pub dim: usize,
    pub truncation_level: u32,
    pub certified: bool,
}

/// `dim C[x] / (I + m^bound)`: the number of standard monomials of a Gröbner
/// basis of `I + m^bound`.
pub fn truncated_quotient_dim<C: ExactField>(nvars: usize, ideal: &[Polynomial<C>], bound: u32) -> usize {
    GroebnerBasis::compute_truncated(nvars, ideal, bound)
        .quotient_dim()
        .expect("I + m^N always has finite colength")
}

/// Certified `dim O_{n,0} / I O_{n,0}`, trying truncation levels
/// `1..=n_max`. An uncertified result means the local algebra is infinite
/// dimensional or `n_max` was too small; it must not feed any index formula.
pub fn local_dim<C: ExactField>(nvars: usize, ideal: &[Polynomial<C>], n_max: u32) -> LocalDimResult {
    assert!(n_max >= 2, "n_max must be at least 2");
    // a generator that is a unit at the origin kills the local ring
    if ideal.iter().any(|g| !g.constant_term().is_zero()) {
        return LocalDimResult { dim: 0, truncation_level: 1, certified: true };
    }
    let mut previous = truncated_quotient_dim(nvars, ideal, 1);
    for level in 1..n_max {
        let next = truncated_quotient_dim(nvars, ideal, level + 1);
        if next == previous {
            return LocalDimResult { dim: previous, truncation_level: level, certified: true };
        }
        previous = next;
    }
    LocalDimResult { dim: previous, truncation_level: n_max, certified: false }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPolynomial;

    fn x(n: usize, i: usize) -> QPolynomial {
        QPolynomial::variable(n, i)
    }

    #[test]
    fn truncated_dims() {
        assert_eq!(truncated_quotient_dim(2, &[x(2, 0), x(2, 1)], 5), 1);
        assert_eq!(truncated_quotient_dim(2, &[x(2, 0).pow(2), x(2, 1).pow(2)], 5), 4);
        assert_eq!(truncated_quotient_dim(2, &[x(2, 0) * x(2, 1)], 3), 5);
    }

    #[test]
    fn maximal_ideal_certifies_immediately() {
        let r = local_dim(3, &[x(3, 0), x(3, 1), x(3, 2)], 2);
        assert_eq!(r, LocalDimResult { dim: 1, truncation_level: 1, certified: true });
    }

    #[test]
    fn non_isolated_never_certifies() {
        for n_max in [2, 5, 12] {
            let r = local_dim(2, &[x(2, 0)], n_max);
            assert!(!r.certified);
            assert_eq!(r.dim, n_max as usize);
        }
    }

    #[test]
    fn unit_at_origin_gives_zero() {
        let r = local_dim(2, &[x(2, 0) + QPolynomial::one(2), x(2, 1)], 4);
        assert_eq!(r.dim, 0);
        assert!(r.certified);
    }

    #[test]
    fn brieskorn_jacobian() {
        let n = 4;
        let k = 3;
        let jac: Vec<_> = (0..n).map(|i| x(n, i).pow(k - 1)).collect();
        let r = local_dim(n, &jac, DEFAULT_N_MAX);
        assert!(r.certified);
        assert_eq!(r.dim, 16);
        assert_eq!(r.truncation_level, 5);
    }
}
