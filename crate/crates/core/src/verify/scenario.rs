use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::{QPolynomial, QVectorField, Rational};

/// Names accepted on `expect` lines.
pub const EXPECTATION_NAMES: [&str; 5] = ["baum_bott_total", "chi_D", "gsv_total", "integral_X", "schwartz_total"];

/// Affine chart of projective space carrying the local equation of the
/// hypersurface and the local vector field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub id: u32,
    pub hypersurface: QPolynomial,
    pub field: QVectorField,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioPoint {
    pub chart: u32,
    pub coords: Vec<Rational>,
    pub label: Option<String>,
}

impl ScenarioPoint {
    /// The label, or `#i` for the `i`-th point (1-based).
    pub fn display_name(&self, index: usize) -> String {
        self.label.clone().unwrap_or_else(|| format!("#{}", index + 1))
    }
}

/// A foliation of degree `d` on projective `n`-space with an invariant
/// hypersurface of degree `k`, given chart by chart, together with a list of
/// points to examine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub n: usize,
    pub d: u64,
    pub k: u64,
    /// The author asserts that `points` lists every singular point of the
    /// foliation and of the hypersurface.
    pub complete: bool,
    pub charts: Vec<Chart>,
    pub points: Vec<ScenarioPoint>,
    pub expectations: BTreeMap<String, BigInt>,
}

impl Scenario {
    pub fn chart(&self, id: u32) -> Option<&Chart> {
        self.charts.iter().find(|c| c.id == id)
    }
}
