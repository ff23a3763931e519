mod common;

use common::{c, fermat, polynomial, x};
use foliation_index::localalgebra::{local_dim, oracle_quotient_dim, truncated_quotient_dim};
use foliation_index::{QGroebnerBasis, QPolynomial};
use proptest::prelude::*;

/// Ideals in at most four variables, including non-homogeneous and
/// non-isolated ones.
fn corpus() -> Vec<(usize, Vec<QPolynomial>)> {
    let mut out = vec![
        (1, vec![x(1, 0).pow(3)]),
        (1, vec![x(1, 0).pow(2) + x(1, 0).pow(5)]),
        (2, vec![x(2, 0).pow(2), x(2, 1).pow(3)]),
        (2, vec![x(2, 0) * x(2, 1)]),
        (2, vec![x(2, 0).pow(2) - x(2, 1).pow(3)]),
        (2, vec![x(2, 0).pow(2) - x(2, 1).pow(3), x(2, 0) * x(2, 1)]),
        (2, vec![x(2, 0) + x(2, 1).pow(2), x(2, 1).pow(3) - x(2, 0) * x(2, 1)]),
        (2, vec![x(2, 0).pow(3) + x(2, 1).pow(3) + x(2, 0) * x(2, 1)]),
        (2, vec![x(2, 0) - c(2, 1), x(2, 1)]),
        (2, vec![x(2, 1) + x(2, 0).pow(2), x(2, 0).pow(3) - x(2, 1).pow(2) * x(2, 0)]),
        (3, vec![x(3, 0) * x(3, 1), x(3, 1) * x(3, 2), x(3, 2) * x(3, 0)]),
        (3, fermat(3, 3).gradient()),
        (3, vec![x(3, 0).pow(2), x(3, 1).pow(2), x(3, 2).pow(2) - x(3, 0) * x(3, 1)]),
        (3, vec![x(3, 0) + x(3, 1).pow(2), x(3, 1) + x(3, 2).pow(2), x(3, 2) + x(3, 0).pow(2)]),
        (3, vec![x(3, 0).pow(2) + x(3, 1).pow(2) + x(3, 2).pow(3)]),
        (3, vec![x(3, 0) * x(3, 1) * x(3, 2), x(3, 0).pow(3) - x(3, 1).pow(2)]),
        (3, vec![c(3, 2) + x(3, 0)]),
        (4, fermat(4, 2).gradient()),
        (4, fermat(4, 3).gradient()),
        (4, vec![x(4, 0) * x(4, 1) - x(4, 2) * x(4, 3)]),
        (4, vec![x(4, 0).pow(2), x(4, 1).pow(2), x(4, 2) * x(4, 3), x(4, 2).pow(2) + x(4, 3).pow(2)]),
        (4, vec![x(4, 0) - x(4, 1).pow(2), x(4, 1) - x(4, 2).pow(2), x(4, 2) - x(4, 3).pow(2)]),
    ];
    let mut with_f = fermat(4, 3).gradient();
    with_f.push(fermat(4, 3));
    out.push((4, with_f));
    out
}

#[test]
fn truncated_dimension_matches_oracle() {
    let corpus = corpus();
    assert!(corpus.len() >= 20);
    for (n, ideal) in &corpus {
        for bound in 1..=6 {
            let expected = oracle_quotient_dim(*n, ideal, bound).unwrap();
            assert_eq!(truncated_quotient_dim(*n, ideal, bound), expected, "n={n} bound={bound} ideal={ideal:?}");
        }
    }
}

#[test]
fn brieskorn_milnor_numbers() {
    for n in 1..=4usize {
        for k in 2..=5u32 {
            let r = local_dim(n, &fermat(n, k).gradient(), 64);
            assert!(r.certified, "n={n} k={k}");
            assert_eq!(r.dim, (k as usize - 1).pow(n as u32), "n={n} k={k}");
        }
    }
}

#[test]
fn non_isolated_is_not_certified() {
    let r = local_dim(2, &[x(2, 0) * x(2, 1)], 10);
    assert!(!r.certified);
    assert_eq!(r.truncation_level, 10);
}

#[test]
fn units_and_local_vs_global() {
    assert_eq!(local_dim(2, &[x(2, 0) + c(2, 1), x(2, 1)], 8).dim, 0);
    // x (x - 1) has a single simple zero at the origin
    let r = local_dim(1, &[x(1, 0) * (x(1, 0) - c(1, 1))], 8);
    assert_eq!((r.dim, r.certified), (1, true));
    assert_eq!(QGroebnerBasis::compute(1, &[x(1, 0) * (x(1, 0) - c(1, 1))]).quotient_dim(), Some(2));
}

#[test]
fn groebner_basis_of_twisted_cubic() {
    let gens = vec![
        x(4, 1).pow(2) - x(4, 0) * x(4, 2),
        x(4, 1) * x(4, 2) - x(4, 0) * x(4, 3),
        x(4, 2).pow(2) - x(4, 1) * x(4, 3),
    ];
    let gb = QGroebnerBasis::compute(4, &gens);
    assert!(gb.satisfies_buchberger_criterion());
    assert!(gb.is_reduced());
    for g in &gens {
        assert!(gb.contains(g));
    }
    assert!(!gb.contains(&x(4, 0)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_ideals_match_oracle(ideal in prop::collection::vec(polynomial(3, 3, 4), 1..4), bound in 1u32..5) {
        let expected = oracle_quotient_dim(3, &ideal, bound).unwrap();
        prop_assert_eq!(truncated_quotient_dim(3, &ideal, bound), expected);
    }

    #[test]
    fn normal_form_properties(ideal in prop::collection::vec(polynomial(2, 3, 4), 1..3), p in polynomial(2, 4, 6), h in polynomial(2, 2, 3)) {
        let gb = QGroebnerBasis::compute(2, &ideal);
        prop_assert!(gb.satisfies_buchberger_criterion());
        let nf = gb.normal_form(&p);
        // no term of the normal form is divisible by a leading monomial
        for (m, _) in nf.terms() {
            prop_assert!(gb.leading_monomials().all(|lm| !lm.divides(m)));
        }
        // p - NF(p) lies in the ideal, and NF only depends on the class of p
        prop_assert!(gb.contains(&(&p - &nf)));
        let shifted = &p + &(&h * &ideal[0]);
        prop_assert_eq!(gb.normal_form(&shifted), nf);
    }
}
