mod common;

use common::{fermat, fixture_files, x};
use foliation_index::indices::{
    compute_indices, corollary_bounds, plane_curve_tangent_cone, residue_cn, schwartz, LocalContext, PointClass,
    PointIndices, TangentCone,
};
use foliation_index::localalgebra::{oracle_quotient_dim, LocalDimResult};
use foliation_index::parser::parse_scenario;
use foliation_index::{QPolynomial, QVectorField};

const N_MAX: u32 = 64;

fn germ(name: &str) -> (QPolynomial, QVectorField) {
    let path = common::fixtures().join("germs").join(format!("{name}.scn"));
    let s = parse_scenario(&std::fs::read_to_string(path).unwrap()).unwrap();
    let chart = &s.charts[0];
    (chart.hypersurface.clone(), chart.field.clone())
}

fn indices_of(f: QPolynomial, v: QVectorField) -> PointIndices {
    compute_indices(&LocalContext::new(f, v).unwrap(), N_MAX).unwrap()
}

struct Expected {
    mu_f: u64,
    mu_d: Option<u64>,
    tjurina: Option<u64>,
    multiplicity: u32,
    gsv: i64,
    schwartz: i64,
    residue: i64,
}

/// Values derived by hand: Milnor numbers of weighted homogeneous germs from
/// the weights, GSV at smooth points as the Poincaré-Hopf index of the
/// restricted field.
fn expected(name: &str) -> Expected {
    let e = |mu_f, mu_d, tjurina, multiplicity, gsv, schwartz, residue| Expected {
        mu_f,
        mu_d,
        tjurina,
        multiplicity,
        gsv,
        schwartz,
        residue,
    };
    match name {
        "cusp" => e(1, Some(2), Some(2), 2, -1, 1, 2),
        "rotation_circle" => e(1, Some(1), Some(1), 2, 0, 1, 1),
        "saddle_node_line" => e(2, None, None, 1, 1, 1, 1),
        "a2_threefold" => e(1, Some(2), Some(2), 2, 3, 1, -2),
        "plane_double_zero" => e(2, None, None, 1, 1, 1, 1),
        "rotation_quadric_c4" => e(1, Some(1), Some(1), 2, 0, 1, 1),
        "fermat_cubic_c5" => e(1, Some(32), Some(32), 3, 33, 1, -32),
        other => panic!("no expectation for {other}"),
    }
}

#[test]
fn germ_corpus_values() {
    for name in [
        "cusp",
        "rotation_circle",
        "saddle_node_line",
        "a2_threefold",
        "plane_double_zero",
        "rotation_quadric_c4",
        "fermat_cubic_c5",
    ] {
        let (f, v) = germ(name);
        let ix = indices_of(f, v);
        let e = expected(name);
        assert_eq!(ix.mu_f, Some(e.mu_f), "{name}");
        assert_eq!(ix.mu_d, e.mu_d, "{name}");
        assert_eq!(ix.tjurina, e.tjurina, "{name}");
        assert_eq!(ix.multiplicity, Some(e.multiplicity), "{name}");
        assert_eq!(ix.gsv, Some(e.gsv), "{name}");
        assert_eq!(ix.schwartz, Some(e.schwartz), "{name}");
        assert_eq!(ix.residue_cn, Some(e.residue), "{name}");
    }
}

#[test]
fn hamiltonian_field_has_zero_gsv() {
    // v = (f_y, -f_x) gives <f, a> = <f, J_f>, so GSV = 0 and Sch = mu(D)
    let (f, v) = germ("hamiltonian");
    let ix = indices_of(f, v);
    assert_eq!(ix.gsv, Some(0));
    assert_eq!(ix.schwartz.map(|s| s as u64), ix.mu_d);
    assert_eq!(ix.mu_f, ix.mu_d);
    // not quasi-homogeneous, so tau < mu
    assert!(ix.tjurina.unwrap() < ix.mu_d.unwrap());
}

fn oracle_agrees(n: usize, ideal: &[QPolynomial], r: &Option<LocalDimResult>) {
    if let Some(r) = r {
        if let Ok(dim) = oracle_quotient_dim(n, ideal, r.truncation_level) {
            assert_eq!(dim, r.dim, "ideal {ideal:?}");
        }
    }
}

#[test]
fn certified_dimensions_agree_with_oracle() {
    for path in fixture_files("germs") {
        let s = parse_scenario(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let (f, v) = (&s.charts[0].hypersurface, &s.charts[0].field);
        let n = s.n;
        let ix = indices_of(f.clone(), v.clone());
        let cert = &ix.certification;
        let with = |head: &QPolynomial, tail: &[QPolynomial]| {
            std::iter::once(head.clone()).chain(tail.iter().cloned()).collect::<Vec<_>>()
        };
        oracle_agrees(n, v.components(), &cert.mu_f);
        oracle_agrees(n, &f.gradient(), &cert.mu_d);
        oracle_agrees(n, &with(f, &f.gradient()), &cert.tjurina);
        oracle_agrees(n, &with(f, v.components()), &cert.f_and_field);
        let h = v.apply(f).exact_divide(f).unwrap();
        oracle_agrees(n, &with(&h, v.components()), &cert.cofactor_and_field);
    }
}

#[test]
fn smooth_points_give_poincare_hopf_index() {
    // D = {x2 = 0}, v|D = x1^3 d/dx1 has index 3
    let f = x(2, 1);
    let v = QVectorField::new(vec![x(2, 0).pow(3), x(2, 1)]);
    let ix = indices_of(f, v);
    assert_eq!(ix.gsv, Some(3));
    assert_eq!(ix.schwartz, Some(3));
    assert_eq!(ix.mu_f, Some(3));
    assert_eq!(ix.residue_cn, Some(0));
}

#[test]
fn translated_points() {
    // Fermat quartic cone in C^3 with the radial field moved to (1, -2, 1/2)
    let s = [common::q(1, 1), common::q(-2, 1), common::q(1, 2)];
    let back: Vec<_> = s.iter().map(|v| -v.clone()).collect();
    let f = fermat(3, 4).translate(&back);
    let v = QVectorField::radial(3).translate(&back);
    let ctx = LocalContext::at_point(&f, &v, &s).unwrap();
    let ix = compute_indices(&ctx, N_MAX).unwrap();
    assert_eq!(ix.mu_d, Some(27));
    assert_eq!(ix.gsv, Some(28));
}

#[test]
fn point_classes_and_residue_cases() {
    let off = LocalContext::new(x(2, 0) + common::c(2, 1), QVectorField::radial(2)).unwrap();
    assert_eq!(off.class(), PointClass::FoliationOffHypersurface);
    let ix = compute_indices(&off, N_MAX).unwrap();
    assert_eq!(ix.residue_cn, Some(1));
    assert_eq!(ix.gsv, None);

    let regular = LocalContext::new(x(2, 1), QVectorField::new(vec![common::c(2, 1), x(2, 1)])).unwrap();
    assert_eq!(regular.class(), PointClass::Regular);
    assert!(compute_indices(&regular, N_MAX).is_err());

    let ix = PointIndices { mu_d: Some(4), schwartz: Some(2), ..Default::default() };
    assert_eq!(residue_cn(2, PointClass::HypersurfaceOnly, &ix).unwrap(), 2);
    assert_eq!(residue_cn(3, PointClass::HypersurfaceOnly, &ix).unwrap(), -6);
    assert_eq!(schwartz(3, 5, 4), 1);
    assert_eq!(schwartz(4, -15, 16), 1);
}

#[test]
fn non_invariant_pair_is_refused() {
    let ctx = LocalContext::new(x(2, 0), QVectorField::new(vec![x(2, 1), x(2, 0)])).unwrap();
    let err = compute_indices(&ctx, N_MAX).unwrap_err();
    assert!(err.to_string().contains("not invariant"));
}

#[test]
fn corollary_bounds_on_odd_germs() {
    // sphere in C^3: tau = 1 <= 2 and (2-1)^3/3 <= 2
    let ix = indices_of(fermat(3, 2), QVectorField::radial(3));
    assert_eq!(ix.gsv, Some(2));
    assert_eq!(ix.tjurina, Some(1));
    let b = corollary_bounds(3, PointClass::FoliationAndHypersurface, &ix);
    assert_eq!(b.tjurina_bound, Some(true));
    assert_eq!(b.multiplicity_bound, Some(true));
    assert_eq!(b.positivity, Some(true));
}

#[test]
fn tangent_cones() {
    assert_eq!(plane_curve_tangent_cone(&(x(2, 0) * x(2, 1))), Some(TangentCone::SeveralTangents));
    assert_eq!(plane_curve_tangent_cone(&(x(2, 0).pow(2) - x(2, 1).pow(3))), Some(TangentCone::SingleTangent));
    let shifted = (x(2, 0) + x(2, 1)).pow(2) + x(2, 1).pow(5);
    assert_eq!(plane_curve_tangent_cone(&shifted), Some(TangentCone::SingleTangent));
    assert_eq!(plane_curve_tangent_cone(&fermat(3, 2)), None);
}
