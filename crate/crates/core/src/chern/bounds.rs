use num_bigint::BigInt;
use serde::Serialize;

use super::{binomial_side, degree_side, euler_char_hypersurface, GlobalData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    HypothesesNotMet,
}

impl Verdict {
    fn of(hypotheses: bool, holds: bool) -> Self {
        match (hypotheses, holds) {
            (false, _) => Verdict::HypothesesNotMet,
            (true, true) => Verdict::Holds,
            (true, false) => Verdict::Fails,
        }
    }

    pub fn is_failure(self) -> bool {
        self == Verdict::Fails
    }
}

/// Point data the degree bounds need beyond [`GlobalData`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundContext {
    /// Number of singular points of the hypersurface.
    pub s1: usize,
    /// Number of further foliation singularities on smooth points of it.
    pub s2: usize,
    /// Every singular point of the hypersurface is a singular point of the
    /// foliation.
    pub sing_d_in_sing_f: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundVerdicts {
    /// `k <= d + 2`
    pub degree_bound: Verdict,
    /// `Σ C(n,j)(-k)^{n-j} - Σ(mu - 1) <= Σ C(i,j)(-1)^{i-j+1} k^{i-j} d^{n-i}`
    pub binomial_bound: Verdict,
    #[serde(serialize_with = "crate::as_decimal")]
    pub binomial_lhs: BigInt,
    #[serde(serialize_with = "crate::as_decimal")]
    pub binomial_rhs: BigInt,
    /// `χ(D) > s1 + s2`
    pub euler_bound: Verdict,
    #[serde(serialize_with = "crate::as_decimal")]
    pub euler_characteristic: BigInt,
}

pub fn poincare_bound_checks(g: &GlobalData, ctx: &BoundContext) -> BoundVerdicts {
    let even = g.n.is_multiple_of(2);
    let inclusion = even && ctx.sing_d_in_sing_f;

    let degree_bound = Verdict::of(inclusion && g.mu_list.iter().all(|&m| m == 1), g.k <= g.d + 2);

    let excess: BigInt = g.mu_list.iter().map(|&m| BigInt::from(m - 1)).sum();
    let binomial_lhs = binomial_side(g.n, g.k) - excess;
    let binomial_rhs = degree_side(g.n, g.d, g.k);
    let binomial_bound = Verdict::of(inclusion, binomial_lhs <= binomial_rhs);

    let chi = euler_char_hypersurface(g.n, g.k, &g.mu_list);
    let euler_bound = Verdict::of(inclusion, chi > BigInt::from(ctx.s1 + ctx.s2));

    BoundVerdicts {
        degree_bound,
        binomial_bound,
        binomial_lhs,
        binomial_rhs,
        euler_bound,
        euler_characteristic: chi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(s1: usize, s2: usize) -> BoundContext {
        BoundContext { s1, s2, sing_d_in_sing_f: true }
    }

    #[test]
    fn fermat_quadric_cone() {
        let g = GlobalData::new(4, 0, 2, vec![1]).unwrap();
        let v = poincare_bound_checks(&g, &ctx(1, 0));
        assert_eq!(v.degree_bound, Verdict::Holds);
        assert_eq!(v.binomial_bound, Verdict::Holds);
        assert_eq!(v.euler_bound, Verdict::Holds);
    }

    #[test]
    fn fermat_cubic_cone() {
        let g = GlobalData::new(4, 0, 3, vec![16]).unwrap();
        let v = poincare_bound_checks(&g, &ctx(1, 0));
        assert_eq!(v.degree_bound, Verdict::HypothesesNotMet);
        assert_eq!(v.euler_characteristic, BigInt::from(10));
        assert_eq!(v.euler_bound, Verdict::Holds);
    }

    #[test]
    fn plane_reduction() {
        // k^2 - 2k - Σ(mu - 1) <= k d
        for d in 0..5u64 {
            for k in 1..8u64 {
                let g = GlobalData::new(2, d, k, vec![1, 3]).unwrap();
                let v = poincare_bound_checks(&g, &ctx(2, 0));
                let lhs = (k * k) as i64 - 2 * k as i64 - 2;
                assert_eq!(v.binomial_lhs, BigInt::from(lhs));
                assert_eq!(v.binomial_rhs, BigInt::from((k * d) as i64));
            }
        }
    }

    #[test]
    fn odd_dimension_is_outside_hypotheses() {
        let g = GlobalData::new(3, 1, 2, vec![1]).unwrap();
        let v = poincare_bound_checks(&g, &ctx(1, 0));
        assert_eq!(v.degree_bound, Verdict::HypothesesNotMet);
        assert_eq!(v.binomial_bound, Verdict::HypothesesNotMet);
        assert_eq!(v.euler_bound, Verdict::HypothesesNotMet);
    }

    #[test]
    fn projective_line_in_the_plane() {
        let g = GlobalData::new(2, 1, 1, vec![]).unwrap();
        let v = poincare_bound_checks(&g, &ctx(0, 2));
        assert_eq!(v.euler_characteristic, BigInt::from(2));
        assert_eq!(v.euler_bound, Verdict::Fails);
    }
}
