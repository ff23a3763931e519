//! Runs every local computation of a [`Scenario`] and checks the global
//! identities and bounds the local indices must satisfy on projective space.

mod report;
mod scenario;

pub use report::{numbers_as_strings, GlobalValues, IndexReport, PointReport, Status, VerdictEntry};
pub use scenario::{Chart, Scenario, ScenarioPoint, EXPECTATION_NAMES};

use num_bigint::BigInt;

use crate::chern::{self, BoundContext, GlobalData, Verdict};
use crate::indices::{
    compute_indices, corollary_bounds, plane_curve_tangent_cone, IndexError, LocalContext, PointClass, TangentCone,
};
use crate::{QPolynomial, QVectorField};

/// Projective degree of the foliation generated by an affine vector field:
/// `m - 1` when the top-degree part of `v` is `g` times the radial field,
/// `m` otherwise (`m` the largest component degree).
pub fn foliation_degree_affine(v: &QVectorField) -> u32 {
    let m = v.max_degree();
    if m == 0 {
        return 0;
    }
    let n = v.dim();
    let tops: Vec<QPolynomial> = v.components().iter().map(|a| a.homogeneous_component(m)).collect();
    let Ok(g) = tops[0].exact_divide(&QPolynomial::variable(n, 0)) else { return m };
    let radial_multiple = tops
        .iter()
        .enumerate()
        .all(|(i, top)| *top == &g * &QPolynomial::variable(n, i));
    if radial_multiple && !g.is_zero() {
        m - 1
    } else {
        m
    }
}

fn invariance_failure(f: &QPolynomial, v: &QVectorField) -> Option<String> {
    v.apply(f).exact_divide(f).err().map(|e| e.remainder.to_string())
}

pub fn run_scenario(s: &Scenario, n_max: u32) -> IndexReport {
    let mut warnings = Vec::new();
    for chart in &s.charts {
        let detected = foliation_degree_affine(&chart.field);
        if u64::from(detected) != s.d {
            warnings.push(format!(
                "chart {}: vector field has affine degree {detected}, scenario declares d={}",
                chart.id, s.d
            ));
        }
    }
    if !s.complete {
        warnings.push("scenario is not marked complete; global verdicts skipped".to_string());
    }

    let mut points = Vec::with_capacity(s.points.len());
    for (index, p) in s.points.iter().enumerate() {
        let chart = s.chart(p.chart).expect("parser checks chart references");
        let mut report = PointReport::new(index, p);
        if let Some(remainder) = invariance_failure(&chart.hypersurface, &chart.field) {
            report.error = Some(IndexError::NotInvariant { remainder }.to_string());
            report.refused = true;
            points.push(report);
            continue;
        }
        match LocalContext::at_point(&chart.hypersurface, &chart.field, &p.coords) {
            Err(e) => {
                report.error = Some(e.to_string());
                report.refused = true;
            }
            Ok(ctx) => {
                let class = ctx.class();
                report.class = Some(class);
                if class == PointClass::Regular {
                    warnings.push(format!("point {}: regular for both foliation and hypersurface", report.label));
                } else {
                    match compute_indices(&ctx, n_max) {
                        Ok(ix) => {
                            report.bounds = Some(corollary_bounds(s.n, class, &ix));
                            report.indices = Some(ix);
                        }
                        Err(e) => {
                            report.error = Some(e.to_string());
                            report.refused = true;
                        }
                    }
                    if s.n == 2 && ctx.point_sing_d() {
                        report.tangent_cone = plane_curve_tangent_cone(ctx.hypersurface());
                        warnings.push(match report.tangent_cone {
                            Some(TangentCone::SeveralTangents) => format!(
                                "point {}: plane curve with several branches; GSV computed by the homological formula",
                                report.label
                            ),
                            _ => format!(
                                "point {}: plane curve singularity with a single tangent; branch count undetermined",
                                report.label
                            ),
                        });
                    }
                }
            }
        }
        if let Some(e) = &report.error {
            warnings.push(format!("point {}: {e}", report.label));
        }
        points.push(report);
    }

    let refused = points.iter().any(|p| p.refused);
    let mu_list: Vec<u64> = points.iter().filter_map(|p| p.indices.as_ref()?.mu_d).collect();
    let global = GlobalData::new(s.n as u32, s.d, s.k, mu_list).expect("parser validates degrees");
    let (globals, chern_error) = match GlobalValues::compute(&global) {
        Ok(g) => (Some(g), None),
        Err(e) => (None, Some(e.to_string())),
    };

    let mut verdicts = Vec::new();
    let gate = if refused {
        Some("skipped: uncertified")
    } else if !s.complete {
        Some("skipped: incomplete")
    } else {
        None
    };
    let global_status = |holds: bool| match gate {
        Some(reason) => Status::Skipped(reason.to_string()),
        None => Status::from_bool(holds),
    };

    if let Some(e) = &chern_error {
        verdicts.push(VerdictEntry::new("chern_consistency", Status::Fail).detail(e.clone()));
    }
    let tangency = |p: &&PointReport| p.class.is_some_and(PointClass::in_tangency_set);
    let sum = |values: Vec<Option<i64>>| -> BigInt { values.into_iter().flatten().map(BigInt::from).sum() };

    if let Some(g) = &globals {
        let residues = sum(points.iter().map(|p| p.indices.as_ref().and_then(|i| i.residue_cn)).collect());
        verdicts.push(
            VerdictEntry::new("residue_sum", global_status(residues == g.integral_x))
                .sides(&residues, &g.integral_x),
        );
        let sch = sum(points.iter().filter(tangency).map(|p| p.indices.as_ref().and_then(|i| i.schwartz)).collect());
        verdicts.push(
            VerdictEntry::new("schwartz_sum", global_status(sch == g.schwartz_total)).sides(&sch, &g.schwartz_total),
        );
        let gsv = sum(points.iter().filter(tangency).map(|p| p.indices.as_ref().and_then(|i| i.gsv)).collect());
        verdicts.push(VerdictEntry::new("gsv_sum", global_status(gsv == g.gsv_total)).sides(&gsv, &g.gsv_total));
        let mu_f = sum(points
            .iter()
            .map(|p| p.indices.as_ref().and_then(|i| i.mu_f).map(|m| m as i64))
            .collect());
        let mut bb = VerdictEntry::new("baum_bott_total", global_status(mu_f == g.baum_bott_total))
            .sides(&mu_f, &g.baum_bott_total);
        if gate.is_none() && mu_f != g.baum_bott_total {
            bb = bb.detail(format!("deficit {}", &g.baum_bott_total - &mu_f));
        }
        verdicts.push(bb);
    }

    let local: Vec<_> = points.iter().filter_map(|p| Some((p.label.clone(), p.bounds?))).collect();
    verdicts.push(local_verdict("positivity", local.iter().map(|(l, b)| (l, b.positivity))));
    verdicts.push(local_verdict(
        "tjurina_bound",
        local.iter().map(|(l, b)| (l, b.tjurina_bound)),
    ));
    verdicts.push(local_verdict(
        "multiplicity_bound",
        local.iter().map(|(l, b)| (l, b.multiplicity_bound)),
    ));

    if let Some(g) = &globals {
        let classes: Vec<PointClass> = points.iter().filter_map(|p| p.class).collect();
        let ctx = BoundContext {
            s1: classes.iter().filter(|c| c.is_hypersurface_singular()).count(),
            s2: classes.iter().filter(|&&c| c == PointClass::FoliationOnSmoothHypersurface).count(),
            sing_d_in_sing_f: !classes.contains(&PointClass::HypersurfaceOnly),
        };
        let b = chern::poincare_bound_checks(&global, &ctx);
        let bound = |name: &'static str, v: Verdict| {
            let status = match gate {
                Some(reason) => Status::Skipped(reason.to_string()),
                None => Status::from_verdict(v),
            };
            VerdictEntry::new(name, status)
        };
        verdicts.push(bound("degree_bound", b.degree_bound).sides(&BigInt::from(s.k), &BigInt::from(s.d + 2)));
        verdicts.push(bound("binomial_bound", b.binomial_bound).sides(&b.binomial_lhs, &b.binomial_rhs));
        verdicts.push(
            bound("euler_bound", b.euler_bound)
                .sides(&b.euler_characteristic, &BigInt::from(ctx.s1 + ctx.s2))
                .advisory(),
        );

        for (name, expected) in &s.expectations {
            let actual = g.by_name(name).expect("parser checks expectation names");
            let status = if refused {
                Status::Skipped("skipped: uncertified".to_string())
            } else {
                Status::from_bool(actual == expected)
            };
            verdicts.push(VerdictEntry::new_owned(format!("expect {name}"), status).sides(actual, expected));
        }
    }

    IndexReport {
        n: s.n,
        d: s.d,
        k: s.k,
        complete: s.complete,
        points,
        globals,
        verdicts,
        warnings,
    }
}

fn local_verdict<'a>(name: &'static str, results: impl Iterator<Item = (&'a String, Option<bool>)>) -> VerdictEntry {
    let mut applicable = 0;
    let mut failing = Vec::new();
    for (label, r) in results {
        if let Some(holds) = r {
            applicable += 1;
            if !holds {
                failing.push(label.clone());
            }
        }
    }
    if applicable == 0 {
        VerdictEntry::new(name, Status::Skipped("not applicable".to_string()))
    } else if failing.is_empty() {
        VerdictEntry::new(name, Status::Pass).detail(format!("{applicable} point(s)"))
    } else {
        VerdictEntry::new(name, Status::Fail).detail(format!("fails at {}", failing.join(", ")))
    }
}

impl GlobalValues {
    fn compute(g: &GlobalData) -> Result<Self, chern::ChernError> {
        let schwartz_total = chern::schwartz_total(g)?;
        chern::schwartz_total_via_integrals(g)?;
        Ok(Self {
            integral_x: chern::integral_x(g)?,
            baum_bott_total: chern::baum_bott_total(g.n, g.d),
            gsv_total: chern::gsv_total(g)?,
            schwartz_total,
            chi_d: chern::euler_char_hypersurface(g.n, g.k, &g.mu_list),
        })
    }

    /// Value of the quantity an `expect` line names.
    pub fn by_name(&self, name: &str) -> Option<&BigInt> {
        match name {
            "integral_X" => Some(&self.integral_x),
            "baum_bott_total" => Some(&self.baum_bott_total),
            "gsv_total" => Some(&self.gsv_total),
            "schwartz_total" => Some(&self.schwartz_total),
            "chi_D" => Some(&self.chi_d),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_scenario;

    fn x(n: usize, i: usize) -> QPolynomial {
        QPolynomial::variable(n, i)
    }

    #[test]
    fn affine_degree_rule() {
        assert_eq!(foliation_degree_affine(&QVectorField::radial(3)), 0);
        assert_eq!(foliation_degree_affine(&QVectorField::new(vec![x(2, 1), -x(2, 0)])), 1);
        assert_eq!(foliation_degree_affine(&QVectorField::new(vec![x(2, 0).pow(2), x(2, 1).pow(2)])), 2);
        let g = x(2, 0) + x(2, 1);
        let v = QVectorField::new(vec![&g * &x(2, 0) + x(2, 1), &g * &x(2, 1)]);
        assert_eq!(foliation_degree_affine(&v), 1);
        assert_eq!(foliation_degree_affine(&QVectorField::new(vec![QPolynomial::one(2), QPolynomial::zero(2)])), 0);
    }

    const FERMAT: &str = "\
scenario n=4 d=0 k=3 complete=true
chart 1
hypersurface x1^3 + x2^3 + x3^3 + x4^3
vectorfield x1 ; x2 ; x3 ; x4
point chart=1 at 0,0,0,0 label=p0
expect schwartz_total = 1
";

    #[test]
    fn fermat_cubic_cone() {
        let r = run_scenario(&parse_scenario(FERMAT).unwrap(), 64);
        let ix = r.points[0].indices.as_ref().unwrap();
        assert_eq!(ix.mu_d, Some(16));
        assert_eq!(ix.mu_f, Some(1));
        assert_eq!(ix.gsv, Some(-15));
        assert_eq!(ix.schwartz, Some(1));
        assert_eq!(ix.residue_cn, Some(16));
        assert_eq!(r.globals.as_ref().unwrap().integral_x, BigInt::from(16));
        assert!(r.verdicts.iter().all(|v| v.status != Status::Fail), "{:#?}", r.verdicts);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn truncation_too_small_is_a_refusal() {
        let r = run_scenario(&parse_scenario(FERMAT).unwrap(), 4);
        assert!(r.points[0].refused);
        assert_eq!(r.exit_code(), 2);
        assert!(r.verdicts.iter().all(|v| v.status != Status::Fail));
    }

    #[test]
    fn non_invariant_chart_is_a_refusal() {
        let s = parse_scenario(
            "scenario n=2 d=1 k=1 complete=true\nchart 1\nhypersurface x1\nvectorfield x2 ; x1\npoint chart=1 at 0,0\n",
        )
        .unwrap();
        let r = run_scenario(&s, 64);
        assert!(r.points[0].error.as_ref().unwrap().contains("not invariant"));
        assert_eq!(r.exit_code(), 2);
    }
}
