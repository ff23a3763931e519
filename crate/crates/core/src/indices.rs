//! Local indices of a foliation germ along an invariant hypersurface germ.
//!
//! Every index is assembled from certified local quotient dimensions:
//!
//! * `mu(F)  = dim O/<a_1..a_n>`
//! * `mu(D)  = dim O/J_f`, `tau(D) = dim O/<f, J_f>`
//! * GSV, even `n`: `dim O/<f, a> - dim O/<f, J_f>`
//! * GSV, odd `n`:  `dim O/<a> - dim O/<v(f)/f, a> + dim O/<f, J_f>`
//! * `Sch = GSV + (-1)^n mu(D)`
//!
//! and the `c_n` residue is read off from the position of the point relative
//! to `Sing(F)` and `Sing(D)`.

use serde::Serialize;
use thiserror::Error;

use crate::localalgebra::{local_dim, LocalDimResult};
use crate::polynomial::{Monomial, Order, Polynomial, VectorField};
use crate::scalar::ExactField;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("ambient dimension {0} is not supported (need n >= 2)")]
    DimensionTooSmall(usize),
    #[error("vector field and hypersurface live in different dimensions ({field} vs {hypersurface})")]
    DimensionMismatch { field: usize, hypersurface: usize },
    #[error("hypersurface equation is identically zero")]
    ZeroHypersurface,
    #[error("hypersurface is not invariant: v(f) is not divisible by f (remainder {remainder})")]
    NotInvariant { remainder: String },
    #[error("local dimension of {ideal} not certified up to truncation {level}: non-isolated singularity or n_max too small")]
    Uncertified { ideal: &'static str, level: u32 },
    #[error("point is not in the hypersurface")]
    NotOnHypersurface,
    #[error("point is regular for both the foliation and the hypersurface")]
    RegularPoint,
}

/// Position of a point relative to the singular sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointClass {
    /// `Sing(F)` away from `D`.
    FoliationOffHypersurface,
    /// `Sing(F)` at a smooth point of `D`.
    FoliationOnSmoothHypersurface,
    /// `Sing(F)` at a singular point of `D`.
    FoliationAndHypersurface,
    /// `Sing(D)` where the foliation is regular.
    HypersurfaceOnly,
    Regular,
}

impl PointClass {
    /// Whether the point belongs to `S(F, D) = (Sing(F) ∩ D) ∪ Sing(D)`.
    pub fn in_tangency_set(self) -> bool {
        matches!(
            self,
            Self::FoliationOnSmoothHypersurface | Self::FoliationAndHypersurface | Self::HypersurfaceOnly
        )
    }

    pub fn is_foliation_singular(self) -> bool {
        matches!(
            self,
            Self::FoliationOffHypersurface | Self::FoliationOnSmoothHypersurface | Self::FoliationAndHypersurface
        )
    }

    pub fn is_hypersurface_singular(self) -> bool {
        matches!(self, Self::FoliationAndHypersurface | Self::HypersurfaceOnly)
    }
}

/// A germ `(f, v)` at the origin.
#[derive(Clone, Debug)]
pub struct LocalContext<C: ExactField> {
    n: usize,
    f: Polynomial<C>,
    v: VectorField<C>,
    point_on_d: bool,
    point_sing_d: bool,
    point_sing_f: bool,
}

impl<C: ExactField> LocalContext<C> {
    /// Germ of `(f, v)` at the origin.
    pub fn new(f: Polynomial<C>, v: VectorField<C>) -> Result<Self, IndexError> {
        let n = v.dim();
        if f.nvars() != n {
            return Err(IndexError::DimensionMismatch { field: n, hypersurface: f.nvars() });
        }
        if n < 2 {
            return Err(IndexError::DimensionTooSmall(n));
        }
        if f.is_zero() {
            return Err(IndexError::ZeroHypersurface);
        }
        let point_on_d = f.constant_term().is_zero();
        let point_sing_d = point_on_d && f.gradient().iter().all(|g| g.constant_term().is_zero());
        let point_sing_f = v.vanishes_at_origin();
        Ok(Self { n, f, v, point_on_d, point_sing_d, point_sing_f })
    }

    /// Germ of `(f, v)` at `point`, moved to the origin.
    pub fn at_point(f: &Polynomial<C>, v: &VectorField<C>, point: &[C]) -> Result<Self, IndexError> {
        Self::new(f.translate(point), v.translate(point))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn hypersurface(&self) -> &Polynomial<C> {
        &self.f
    }

    pub fn field(&self) -> &VectorField<C> {
        &self.v
    }

    pub fn point_on_d(&self) -> bool {
        self.point_on_d
    }

    pub fn point_sing_d(&self) -> bool {
        self.point_sing_d
    }

    pub fn point_sing_f(&self) -> bool {
        self.point_sing_f
    }

    pub fn class(&self) -> PointClass {
        match (self.point_sing_f, self.point_on_d, self.point_sing_d) {
            (true, false, _) => PointClass::FoliationOffHypersurface,
            (true, true, false) => PointClass::FoliationOnSmoothHypersurface,
            (true, true, true) => PointClass::FoliationAndHypersurface,
            (false, _, true) => PointClass::HypersurfaceOnly,
            (false, _, false) => PointClass::Regular,
        }
    }

    fn local(&self, name: &'static str, ideal: &[Polynomial<C>], n_max: u32) -> Result<LocalDimResult, IndexError> {
        let r = local_dim(self.n, ideal, n_max);
        if r.certified {
            Ok(r)
        } else {
            Err(IndexError::Uncertified { ideal: name, level: r.truncation_level })
        }
    }

    fn ideal_with(&self, head: &Polynomial<C>, tail: &[Polynomial<C>]) -> Vec<Polynomial<C>> {
        std::iter::once(head.clone()).chain(tail.iter().cloned()).collect()
    }
}

/// Truncation levels of every local dimension that fed the indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certification {
    pub mu_f: Option<LocalDimResult>,
    pub mu_d: Option<LocalDimResult>,
    pub tjurina: Option<LocalDimResult>,
    /// `dim O/<f, a_1..a_n>` (even `n`).
    pub f_and_field: Option<LocalDimResult>,
    /// `dim O/<v(f)/f, a_1..a_n>` (odd `n`).
    pub cofactor_and_field: Option<LocalDimResult>,
}

/// All local indices at one point. Absent values do not apply to the point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PointIndices {
    pub mu_f: Option<u64>,
    pub mu_d: Option<u64>,
    pub tjurina: Option<u64>,
    pub multiplicity: Option<u32>,
    pub gsv: Option<i64>,
    pub schwartz: Option<i64>,
    pub residue_cn: Option<i64>,
    pub certification: Certification,
}

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The cofactor `h = v(f) / f`; fails when `f` does not divide `v(f)`.
pub fn check_invariance<C: ExactField>(ctx: &LocalContext<C>) -> Result<Polynomial<C>, IndexError> {
    ctx.v
        .apply(&ctx.f)
        .exact_divide(&ctx.f)
        .map_err(|e| IndexError::NotInvariant { remainder: e.remainder.to_string() })
}

/// `mu_p(F) = dim O/<a_1..a_n>`; zero at a regular point of the foliation.
pub fn milnor_foliation<C: ExactField>(ctx: &LocalContext<C>, n_max: u32) -> Result<LocalDimResult, IndexError> {
    if !ctx.point_sing_f {
        return Ok(LocalDimResult { dim: 0, truncation_level: 1, certified: true });
    }
    ctx.local("<a_1..a_n>", ctx.v.components(), n_max)
}

/// `mu_p(D) = dim O/J_f`.
pub fn milnor_hypersurface<C: ExactField>(ctx: &LocalContext<C>, n_max: u32) -> Result<LocalDimResult, IndexError> {
    ctx.local("J_f", &ctx.f.gradient(), n_max)
}

/// `tau_p(D) = dim O/<f, J_f>`.
pub fn tjurina<C: ExactField>(ctx: &LocalContext<C>, n_max: u32) -> Result<LocalDimResult, IndexError> {
    ctx.local("<f, J_f>", &ctx.ideal_with(&ctx.f, &ctx.f.gradient()), n_max)
}

/// Multiplicity (order) of `f` at the point.
pub fn multiplicity<C: ExactField>(ctx: &LocalContext<C>) -> Result<u32, IndexError> {
    if !ctx.point_on_d {
        return Err(IndexError::NotOnHypersurface);
    }
    match ctx.f.order_at_origin() {
        Order::Finite(m) => Ok(m),
        Order::Infinite => Err(IndexError::ZeroHypersurface),
    }
}

/// The GSV index and the local dimensions it was assembled from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsvComputation {
    pub value: i64,
    pub mu_f: Option<LocalDimResult>,
    pub tjurina: LocalDimResult,
    pub f_and_field: Option<LocalDimResult>,
    pub cofactor_and_field: Option<LocalDimResult>,
}

/// GSV index through the homological-index formulas.
pub fn gsv<C: ExactField>(ctx: &LocalContext<C>, n_max: u32) -> Result<GsvComputation, IndexError> {
    if !ctx.point_on_d {
        return Err(IndexError::NotOnHypersurface);
    }
    let cofactor = check_invariance(ctx)?;
    let tau = tjurina(ctx, n_max)?;
    let a = ctx.v.components();
    if ctx.n.is_multiple_of(2) {
        let fa = ctx.local("<f, a_1..a_n>", &ctx.ideal_with(&ctx.f, a), n_max)?;
        Ok(GsvComputation {
            value: fa.dim as i64 - tau.dim as i64,
            mu_f: None,
            tjurina: tau,
            f_and_field: Some(fa),
            cofactor_and_field: None,
        })
    } else {
        let mu = milnor_foliation(ctx, n_max)?;
        let ha = if !cofactor.constant_term().is_zero() {
            LocalDimResult { dim: 0, truncation_level: 1, certified: true }
        } else {
            ctx.local("<v(f)/f, a_1..a_n>", &ctx.ideal_with(&cofactor, a), n_max)?
        };
        Ok(GsvComputation {
            value: mu.dim as i64 - ha.dim as i64 + tau.dim as i64,
            mu_f: Some(mu),
            tjurina: tau,
            f_and_field: None,
            cofactor_and_field: Some(ha),
        })
    }
}

/// `Sch = GSV + (-1)^n mu(D)`, with `mu(D) = 0` at smooth points.
pub fn schwartz(n: usize, gsv: i64, mu_d: u64) -> i64 {
    gsv + sign(n) * mu_d as i64
}

/// Residue `Res_{c_n}(F, D, p)` from the point class and the indices.
pub fn residue_cn(n: usize, class: PointClass, indices: &PointIndices) -> Result<i64, IndexError> {
    let mu_f = || indices.mu_f.map(|m| m as i64).ok_or(IndexError::RegularPoint);
    let sch = || indices.schwartz.ok_or(IndexError::NotOnHypersurface);
    let mu_d = || indices.mu_d.map(|m| m as i64).ok_or(IndexError::RegularPoint);
    match class {
        PointClass::FoliationOffHypersurface => mu_f(),
        PointClass::FoliationOnSmoothHypersurface => Ok(mu_f()? - sch()?),
        PointClass::FoliationAndHypersurface => Ok(mu_f()? - sch()? + sign(n) * mu_d()?),
        PointClass::HypersurfaceOnly => Ok(-sch()? + sign(n) * mu_d()?),
        PointClass::Regular => Err(IndexError::RegularPoint),
    }
}

/// Every applicable index at the point.
pub fn compute_indices<C: ExactField>(ctx: &LocalContext<C>, n_max: u32) -> Result<PointIndices, IndexError> {
    let class = ctx.class();
    if class == PointClass::Regular {
        return Err(IndexError::RegularPoint);
    }
    let mut out = PointIndices::default();
    if ctx.point_sing_f {
        let mu = milnor_foliation(ctx, n_max)?;
        out.mu_f = Some(mu.dim as u64);
        out.certification.mu_f = Some(mu);
    }
    if ctx.point_on_d {
        out.multiplicity = Some(multiplicity(ctx)?);
    }
    if ctx.point_sing_d {
        let mu = milnor_hypersurface(ctx, n_max)?;
        out.mu_d = Some(mu.dim as u64);
        out.certification.mu_d = Some(mu);
    }
    if class.in_tangency_set() {
        let g = gsv(ctx, n_max)?;
        if ctx.point_sing_d {
            out.tjurina = Some(g.tjurina.dim as u64);
            out.certification.tjurina = Some(g.tjurina);
        }
        out.certification.f_and_field = g.f_and_field;
        out.certification.cofactor_and_field = g.cofactor_and_field;
        out.gsv = Some(g.value);
        out.schwartz = Some(schwartz(ctx.n, g.value, out.mu_d.unwrap_or(0)));
    }
    out.residue_cn = Some(residue_cn(ctx.n, class, &out)?);
    Ok(out)
}

/// Outcome of the local inequalities at one point; `None` where the
/// hypotheses do not apply.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LocalBounds {
    /// `Sch > 0` (even `n`) or `GSV > 0` (odd `n`) at `Sing(F) ∩ D`.
    pub positivity: Option<bool>,
    /// `tau <= GSV` at `Sing(F) ∩ Sing(D)`, odd `n`.
    pub tjurina_bound: Option<bool>,
    /// `(m - 1)^n / n <= GSV` at `Sing(F) ∩ Sing(D)`, odd `n`.
    pub multiplicity_bound: Option<bool>,
}

impl LocalBounds {
    pub fn all_hold(&self) -> bool {
        [self.positivity, self.tjurina_bound, self.multiplicity_bound]
            .iter()
            .all(|v| v.unwrap_or(true))
    }
}

pub fn corollary_bounds(n: usize, class: PointClass, indices: &PointIndices) -> LocalBounds {
    let mut out = LocalBounds::default();
    let on_d_sing_f = matches!(
        class,
        PointClass::FoliationOnSmoothHypersurface | PointClass::FoliationAndHypersurface
    );
    if on_d_sing_f {
        out.positivity = if n.is_multiple_of(2) {
            indices.schwartz.map(|s| s > 0)
        } else {
            indices.gsv.map(|g| g > 0)
        };
    }
    if class == PointClass::FoliationAndHypersurface && n % 2 == 1 {
        if let (Some(gsv), Some(tau)) = (indices.gsv, indices.tjurina) {
            out.tjurina_bound = Some(tau as i64 <= gsv);
        }
        if let (Some(gsv), Some(m)) = (indices.gsv, indices.multiplicity) {
            // (m-1)^n / n <= gsv  <=>  (m-1)^n <= n * gsv, exactly
            let lhs = num_bigint::BigInt::from(m.saturating_sub(1)).pow(n as u32);
            let rhs = num_bigint::BigInt::from(n) * num_bigint::BigInt::from(gsv);
            out.multiplicity_bound = Some(lhs <= rhs);
        }
    }
    out
}

/// Tangent directions of a plane curve singularity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TangentCone {
    /// The lowest form is a power of one linear form; the branch count is
    /// not determined by it.
    SingleTangent,
    /// At least two distinct tangents, hence at least two branches.
    SeveralTangents,
}

/// Classify the tangent cone of a plane curve germ singular at the origin.
pub fn plane_curve_tangent_cone<C: ExactField>(f: &Polynomial<C>) -> Option<TangentCone> {
    if f.nvars() != 2 {
        return None;
    }
    let Order::Finite(m) = f.order_at_origin() else { return None };
    let lowest = f.homogeneous_component(m);
    let x = Polynomial::variable(2, 0);
    let y = Polynomial::variable(2, 1);
    let top = Monomial::new(vec![m, 0]);
    let c = lowest.coefficient(&top);
    let single = if c.is_zero() {
        // divisible by y; a single tangent only if the form is c * y^m
        lowest.num_terms() == 1 && !lowest.coefficient(&Monomial::new(vec![0, m])).is_zero()
    } else {
        // candidate c * (x + t y)^m, with t fixed by the x^(m-1) y coefficient
        let next = lowest.coefficient(&Monomial::new(vec![m - 1, 1]));
        let t = next / (c.clone() * crate::scalar::from_i64::<C>(m as i64));
        let candidate = (x + y.scale(&t)).pow(m).scale(&c);
        candidate == lowest
    };
    Some(if single { TangentCone::SingleTangent } else { TangentCone::SeveralTangents })
}
