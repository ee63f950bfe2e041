//! The functors between trident algebras and GK-3 shaped operads.

mod extract;
mod foperad;
mod morphisms;

pub use extract::{extract_g, same_structure, Extraction};
pub use foperad::{build_f, FOperad, RULE_BRANCHES};
pub use morphisms::{
    functor_f_morphism, functor_g_morphism, roundtrip_check, roundtrip_iso, IsoReport, RoundtripReport,
};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fixtures::{t0, t1, t1_bad_g, t3, valid_fixtures};
    use crate::linalg::{Field, Matrix};
    use crate::operad::{
        check_operad_axioms, com_operad, com_quotient, dim_profile, CheckMode, Element, LinearMapFamily, OperadExt,
        OperadView,
    };
    use crate::perm::Permutation;

    const Q: Field = Field::Rational;

    #[test]
    fn x_composed_with_unit2() {
        let p = build_f(t1(Q), 6).unwrap();
        let x = p.basis(1, p.phi_index(1, 1, 0));
        let u2 = p.unit2().unwrap();
        let lhs = p.compose(1, &x, &u2).unwrap();
        let mut expected = p.zero(2).into_coeffs();
        expected[p.phi_index(2, 1, 0)] = Q.one();
        expected[p.phi_index(2, 2, 0)] = Q.one();
        expected[p.psi_index(2, 1, 2, 0)] = Q.one();
        assert_eq!(lhs, Element::new(2, expected));
        assert_eq!(p.format(&lhs), "phi^(2)_1(x) + phi^(2)_2(x) + psi^(2)_{1,2}(mu)");
    }

    #[test]
    fn psi_composed_with_psi_vanishes() {
        let p = build_f(t3(Q), 6).unwrap();
        for m in 2..=4 {
            for n in 2..=6 + 1 - m {
                for a in 0..p.dim(m) {
                    for b in 0..p.dim(n) {
                        let both_psi = p.basis_kind(m, a) == crate::operad::BasisKind::Psi
                            && p.basis_kind(n, b) == crate::operad::BasisKind::Psi;
                        if !both_psi {
                            continue;
                        }
                        for i in 1..=m {
                            assert!(p.compose(i, &p.basis(m, a), &p.basis(n, b)).unwrap().is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn actions_on_phi_and_psi() {
        let p = build_f(t3(Q), 3).unwrap();
        let sw = Permutation::swap();
        let psi1 = p.basis(2, p.psi_index(2, 1, 2, 0));
        let psi2 = p.basis(2, p.psi_index(2, 1, 2, 1));
        assert_eq!(p.act(&psi1, &sw).unwrap(), psi2);

        let q = build_f(t1(Q), 3).unwrap();
        let phi1 = q.basis(2, q.phi_index(2, 1, 0));
        let phi2 = q.basis(2, q.phi_index(2, 2, 0));
        assert_eq!(q.act(&phi1, &sw).unwrap(), phi2);
    }

    #[test]
    fn dimensions_follow_the_closed_form() {
        for (name, t) in valid_fixtures() {
            let (d, m) = (t.dim_bar(), t.dim_m());
            let p = build_f(t, 6).unwrap();
            for n in 0..=6 {
                assert_eq!(p.dim(n), FOperad::expected_dim(d, m, n), "{name} arity {n}");
            }
            let profile = dim_profile(&p).unwrap();
            assert_eq!(&profile.f[..4], &[1, d, m, 0], "{name}");
        }
    }

    #[test]
    fn invalid_trident_is_rejected() {
        assert!(build_f(t1_bad_g(Q), 4).is_err());
        assert!(build_f(t1_bad_g(Field::Prime { p: 2 }), 4).is_ok());
    }

    #[test]
    fn small_axiom_suite_passes() {
        for t in [t0(Q), t1(Q), t3(Q)] {
            let p = build_f(t, 4).unwrap();
            let report = check_operad_axioms(&p, CheckMode::Exhaustive, 4);
            assert!(report.passed(), "{:?}", report.violations.first());
        }
    }

    #[test]
    fn roundtrip_on_fixtures() {
        for (name, t) in valid_fixtures() {
            let report = roundtrip_check(&t, 4).unwrap();
            assert!(report.passed(), "{name}: {:?}", report.diffs);
        }
    }

    #[test]
    fn extract_from_com_is_trivial() {
        let com = com_operad(Q, 4);
        let u2 = com.unit2().unwrap();
        let e = extract_g(&com, &u2).unwrap();
        assert_eq!((e.trident.dim_bar(), e.trident.dim_m()), (0, 0));
    }

    #[test]
    fn extract_needs_a_symmetric_unit() {
        let p = build_f(t3(Q), 4).unwrap();
        let mut u2 = p.unit2().unwrap().into_coeffs();
        u2[p.psi_index(2, 1, 2, 0)] = Q.one();
        let err = extract_g(&p, &Element::new(2, u2)).unwrap_err();
        assert!(matches!(err, crate::Error::Precondition(_)));
    }

    #[test]
    fn roundtrip_iso_on_f_is_identity() {
        let p: Arc<dyn OperadView> = Arc::new(build_f(t1(Q), 4).unwrap());
        let u2 = p.unit2().unwrap();
        let report = roundtrip_iso(p.clone(), &u2).unwrap();
        assert!(report.is_isomorphism());
        for n in 0..=4 {
            assert_eq!(report.family.maps[n], Matrix::identity(Q, p.dim(n)));
        }
    }

    #[test]
    fn f_on_identity_and_zero_morphisms() {
        let p = Arc::new(build_f(t1(Q), 4).unwrap());
        let id = functor_f_morphism(p.clone(), p.clone(), &Matrix::identity(Q, 1), &Matrix::identity(Q, 1)).unwrap();
        for n in 0..=4 {
            assert_eq!(id.maps[n], Matrix::identity(Q, p.dim(n)));
        }
        assert!(functor_f_morphism(p.clone(), p.clone(), &Matrix::zeros(Q, 1, 1), &Matrix::zeros(Q, 1, 1)).is_ok());
        assert!(functor_f_morphism(p.clone(), p.clone(), &Matrix::identity(Q, 1), &Matrix::zeros(Q, 1, 1)).is_err());
    }

    #[test]
    fn f_is_functorial_on_scalings() {
        let p = Arc::new(build_f(t1(Q), 4).unwrap());
        let s = |c: i64| Matrix::from_rows(Q, 1, vec![vec![Q.from_i64(c)]]).unwrap();
        let a = functor_f_morphism(p.clone(), p.clone(), &s(2), &s(2)).unwrap();
        let b = functor_f_morphism(p.clone(), p.clone(), &s(3), &s(3)).unwrap();
        let ab = functor_f_morphism(p.clone(), p.clone(), &s(6), &s(6)).unwrap();
        assert_eq!(a.then(&b).unwrap().maps, ab.maps);
    }

    #[test]
    fn g_of_augmentation_is_zero() {
        let p: Arc<dyn OperadView> = Arc::new(build_f(t1(Q), 4).unwrap());
        let eps: LinearMapFamily = com_quotient(p.clone()).unwrap();
        let src = extract_g(p.as_ref(), &p.unit2().unwrap()).unwrap();
        let com = eps.target.clone();
        let tgt = extract_g(com.as_ref(), &com.unit2().unwrap()).unwrap();
        let (alpha, beta) = functor_g_morphism(&eps, &src, &tgt).unwrap();
        assert_eq!((alpha.rows(), alpha.cols(), beta.rows(), beta.cols()), (1, 0, 1, 0));
    }

    #[test]
    fn g_of_identity_is_identity() {
        let p: Arc<dyn OperadView> = Arc::new(build_f(t3(Q), 4).unwrap());
        let e = extract_g(p.as_ref(), &p.unit2().unwrap()).unwrap();
        let (alpha, beta) = functor_g_morphism(&LinearMapFamily::identity(p), &e, &e).unwrap();
        assert_eq!((alpha, beta), (Matrix::identity(Q, 0), Matrix::identity(Q, 2)));
    }

    #[test]
    fn every_rule_branch_fires_at_budget_six() {
        let p = build_f(crate::fixtures::odot_dual(Q).unwrap(), 6).unwrap();
        let _ = check_operad_axioms(&p, CheckMode::Generators, 6);
        let hits = p.rule_hits();
        for name in RULE_BRANCHES {
            assert!(hits[name] > 0, "{name} never fired");
        }
    }
}
