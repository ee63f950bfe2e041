use std::sync::Arc;

use super::*;
use crate::linalg::{Field, Matrix};
use crate::perm::Permutation;

const Q: Field = Field::Rational;

fn one(n: usize) -> Element {
    Element::basis(Q, n, 1, 0)
}

#[test]
fn com_components_are_lines() {
    let com = com_operad(Q, 5);
    assert!((0..=5).all(|n| com.dim(n) == 1));
    for sigma in Permutation::all(3) {
        assert_eq!(com.act(&one(3), &sigma).unwrap(), one(3));
    }
    assert_eq!(com.compose(2, &one(3), &one(2)).unwrap(), one(4));
}

#[test]
fn full_compose_of_units() {
    let com = com_operad(Q, 5);
    assert_eq!(com.full_compose(&one(2), &[one(3), one(2)]).unwrap(), one(5));
    assert!(matches!(
        com.full_compose(&one(2), &[one(3), one(3)]),
        Err(crate::Error::TruncationOverflow { .. })
    ));
    assert!(matches!(
        com.full_compose(&one(2), &[one(3)]),
        Err(crate::Error::InvalidArgument(_))
    ));
}

#[test]
fn restriction_in_com() {
    let com = com_operad(Q, 4);
    assert_eq!(restriction(&com, &one(3), &[1, 3]).unwrap(), one(2));
    assert_eq!(restriction(&com, &one(3), &[1, 2, 3]).unwrap(), one(3));
    assert!(restriction(&com, &one(3), &[3, 1]).is_err());
}

#[test]
fn com_profile_and_axioms() {
    let com = com_operad(Q, 5);
    let profile = dim_profile(&com).unwrap();
    assert_eq!(profile.dims, vec![1; 6]);
    assert_eq!(profile.f, vec![1, 0, 0, 0, 0, 0]);
    assert_eq!((profile.gk_observed, profile.gk_exact), (Some(1), true));
    assert!(profile.series_ok);
    let report = check_operad_axioms(&com, CheckMode::Exhaustive, 5);
    assert!(report.passed());
    assert!(report.instances > 0);
}

#[test]
fn com_units() {
    let com = com_operad(Q, 4);
    let flags = check_designated_units(&com).unwrap();
    assert!(flags.is_two_unit && flags.is_2a_unit && flags.is_symmetric);
    let doubled = one(2).scale(&Q.from_i64(2));
    assert!(!check_units(&com, &one(0), &doubled).unwrap().is_two_unit);
    match two_unit_candidates(&com).unwrap() {
        TwoUnitCandidates::Affine {
            particular,
            homogeneous,
        } => {
            assert_eq!(particular, one(2));
            assert_eq!(homogeneous.dim(), 0);
        }
        TwoUnitCandidates::Empty => panic!("Com has a 2-unit"),
    }
    assert_eq!(symmetrize_two_unit(&com, &one(2)).unwrap(), one(2));
    for n in 0..=4 {
        assert_eq!(standard_basis(&com, &one(2), n).unwrap(), vec![one(n)]);
    }
}

#[test]
fn no_two_unit_when_unit_compositions_vanish() {
    let mut tables = tabulate(&com_operad(Q, 2)).unwrap().tables().clone();
    for i in 0..2 {
        tables.compose[2][i][0] = vec![vec![Vec::new()]];
    }
    let p = TabulatedOperad::from_tables(tables).unwrap();
    assert_eq!(two_unit_candidates(&p).unwrap(), TwoUnitCandidates::Empty);
}

#[test]
fn tabulate_and_json_round_trip() {
    let com = com_operad(Q, 4);
    let t = tabulate(&com).unwrap();
    let json = t.to_json_string().unwrap();
    let back = TabulatedOperad::from_json_str(&json).unwrap();
    assert_eq!(back.to_json(), com.to_json());
    assert_eq!(back.to_json_string().unwrap(), json);
}

#[test]
fn perturbed_composition_is_caught() {
    let mut tables = tabulate(&com_operad(Q, 4)).unwrap().tables().clone();
    tables.compose[2][0][2][0][0] = vec![(0, Q.from_i64(2))];
    let p = TabulatedOperad::from_tables(tables).unwrap();
    let report = check_operad_axioms(&p, CheckMode::Exhaustive, 4);
    assert!(!report.passed());
    let violated = report.violated_axioms();
    assert!(
        violated.contains(&axioms::SEQUENTIAL) || violated.contains(&axioms::PARALLEL),
        "{violated:?}"
    );
}

#[test]
fn hadamard_with_com_is_neutral() {
    let com: Arc<dyn OperadView> = Arc::new(com_operad(Q, 4));
    let h = hadamard_product(com.clone(), com.clone()).unwrap();
    assert!((0..=4).all(|n| h.dim(n) == 1));
    assert!(check_operad_axioms(&h, CheckMode::Generators, 4).passed());
}

#[test]
fn morphism_checks_on_com() {
    let com: Arc<dyn OperadView> = Arc::new(com_operad(Q, 4));
    assert!(check_morphism(&LinearMapFamily::identity(com.clone())).passed());
    let eps = com_quotient(com.clone()).unwrap();
    assert!(check_morphism(&eps).passed());
    let mut maps: Vec<Matrix> = (0..=4).map(|n| Matrix::identity(Q, com.dim(n))).collect();
    maps[2] = Matrix::from_rows(Q, 1, vec![vec![Q.from_i64(2)]]).unwrap();
    let scaled = LinearMapFamily::new(com.clone(), com, maps).unwrap();
    let report = check_morphism(&scaled);
    assert!(report.violations.iter().any(|v| v.check == "composition"));
}

#[test]
fn rebasing_keeps_the_axioms() {
    let com = tabulate(&com_operad(Q, 3)).unwrap();
    let bases: Vec<Matrix> = (0..=3)
        .map(|n| Matrix::from_rows(Q, 1, vec![vec![Q.from_i64(n as i64 + 2)]]).unwrap())
        .collect();
    assert!(com.rebase(&bases).is_err());
    let mut bases = bases;
    bases[0] = Matrix::identity(Q, 1);
    let r = com.rebase(&bases).unwrap();
    assert!(check_operad_axioms(&r, CheckMode::Exhaustive, 3).passed());
    assert_eq!(r.identity().coeffs(), &[Q.from_i64(3).inv().unwrap()]);
}
