use num_bigint::BigInt;
use serde::Serialize;

use super::{
    gsv_total_closed, gsv_total_series, integral_x_closed, integral_x_double_sum, lemma51_check,
    lemma51_sum, rearrangement_sides, schwartz_total_via_integrals, virtual_class, ChernError, GlobalData,
};

/// Identities checked by [`identity_sweep`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    /// Series coefficient of `c_n(TP^n - [D] - T_F)` against the closed form.
    IntegralSeries,
    /// Binomial double sum against the closed form.
    IntegralDoubleSum,
    /// Rearrangement of the Baum-Bott minus GSV difference.
    Rearrangement,
    /// Closed GSV total against the integral over the hypersurface.
    GsvIntegral,
    /// Both routes to the total Schwartz index on a smooth hypersurface.
    SchwartzRoutes,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::IntegralSeries,
        Identity::IntegralDoubleSum,
        Identity::Rearrangement,
        Identity::GsvIntegral,
        Identity::SchwartzRoutes,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    pub identity: Identity,
    pub n: u32,
    pub d: u64,
    pub k: u64,
    #[serde(serialize_with = "crate::as_decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "crate::as_decimal")]
    pub rhs: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n_max: u32,
    pub d_max: u64,
    pub k_max: u64,
    pub triples: usize,
    /// Triples with `k > d + 2` and `n` even.
    pub negativity_cases_even: usize,
    /// Triples with `k > d + 2` and `n` odd.
    pub negativity_cases_odd: usize,
    pub failures: Vec<SweepFailure>,
    /// Triples with `k > d + 2` whose GSV total is not negative.
    pub negativity_violations: Vec<NegativityViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativityViolation {
    pub n: u32,
    pub d: u64,
    pub k: u64,
    #[serde(serialize_with = "crate::as_decimal")]
    pub sum: BigInt,
}

impl SweepReport {
    /// No identity failed.
    pub fn identities_hold(&self) -> bool {
        self.failures.is_empty()
    }

    /// Violations of the negativity bound in even dimension. The bound does
    /// not hold in odd dimension, where `1 - (1-k)^n` is positive.
    pub fn even_negativity_violations(&self) -> impl Iterator<Item = &NegativityViolation> {
        self.negativity_violations.iter().filter(|v| v.n % 2 == 0)
    }

    pub fn odd_negativity_violations(&self) -> impl Iterator<Item = &NegativityViolation> {
        self.negativity_violations.iter().filter(|v| v.n % 2 == 1)
    }

    /// Identities hold and the negativity bound holds in every even dimension.
    pub fn passed(&self) -> bool {
        self.identities_hold() && self.even_negativity_violations().next().is_none()
    }

    pub fn failures_of(&self, identity: Identity) -> impl Iterator<Item = &SweepFailure> {
        self.failures.iter().filter(move |f| f.identity == identity)
    }
}

/// Checks every [`Identity`] for `2 <= n <= n_max`, `0 <= d <= d_max`,
/// `1 <= k <= k_max`.
pub fn identity_sweep(n_max: u32, d_max: u64, k_max: u64) -> SweepReport {
    let mut report = SweepReport {
        n_max,
        d_max,
        k_max,
        triples: 0,
        negativity_cases_even: 0,
        negativity_cases_odd: 0,
        failures: Vec::new(),
        negativity_violations: Vec::new(),
    };
    for n in 2..=n_max {
        for d in 0..=d_max {
            for k in 1..=k_max {
                report.triples += 1;
                if k > d + 2 {
                    if n % 2 == 0 {
                        report.negativity_cases_even += 1;
                    } else {
                        report.negativity_cases_odd += 1;
                    }
                }
                check_triple(n, d, k, &mut report.failures);
                if !lemma51_check(n, d, k) {
                    report.negativity_violations.push(NegativityViolation { n, d, k, sum: lemma51_sum(n, d, k) });
                }
            }
        }
    }
    report
}

fn check_triple(n: u32, d: u64, k: u64, failures: &mut Vec<SweepFailure>) {
    let mut record = |identity, lhs: BigInt, rhs: BigInt| {
        if lhs != rhs {
            failures.push(SweepFailure { identity, n, d, k, lhs, rhs });
        }
    };
    let closed = integral_x_closed(n, d, k);
    record(Identity::IntegralSeries, virtual_class(n, d, k).coefficient(n as usize), closed.clone());
    record(Identity::IntegralDoubleSum, integral_x_double_sum(n, d, k), closed);
    let (lhs, rhs) = rearrangement_sides(n, d, k);
    record(Identity::Rearrangement, lhs, rhs);
    record(Identity::GsvIntegral, gsv_total_series(n, d, k), gsv_total_closed(n, d, k));

    let g = GlobalData { n, d, k, mu_list: Vec::new() };
    match schwartz_total_via_integrals(&g) {
        Ok(_) => {}
        Err(ChernError::Inconsistent { series, closed, .. }) => record(Identity::SchwartzRoutes, series, closed),
        Err(ChernError::InvalidInput(_)) => unreachable!("sweep triples are valid"),
    }
}
