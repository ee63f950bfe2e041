use super::*;
use crate::fixtures::{t0, t1, t1_bad_g, t3};
use crate::linalg::{vector, Field, Matrix};

const Q: Field = Field::Rational;

fn scalar_matrix(rows: &[&[i64]], cols: usize) -> Matrix {
    Matrix::from_rows(
        Q,
        cols,
        rows.iter()
            .map(|r| r.iter().map(|&x| Q.from_i64(x)).collect())
            .collect(),
    )
    .unwrap()
}

#[test]
fn fixtures_validate() {
    assert!(t0(Q).validate().passed());
    assert!(t1(Q).validate().passed());
    assert!(t3(Q).validate().passed());
    assert!(t1_bad_g(Field::Prime { p: 2 }).validate().passed());
}

#[test]
fn bad_g_fails_f_multiplicativity_at_x_x() {
    let report = t1_bad_g(Q).validate();
    let v = report
        .violations
        .iter()
        .find(|v| v.identity == "f-multiplicativity")
        .expect("f-multiplicativity violated");
    assert_eq!(v.witness, "a=x, b=x");
    assert_eq!((v.lhs.as_str(), v.rhs.as_str()), ("0", "2*mu"));
    assert!(t1_bad_g(Q).require_valid().is_err());
}

#[test]
fn trivial_tridents() {
    let t = trivial_trident(AugmentedAlgebra::dual_numbers(Q), TridentModule::zero(Q, 1)).unwrap();
    assert_eq!(t.to_json_string().unwrap(), t0(Q).to_json_string().unwrap());
    let m = t3(Q).module.clone();
    assert!(trivial_trident(AugmentedAlgebra::ground(Q), m).is_ok());
}

#[test]
fn odot_of_dual_numbers() {
    let a = AugmentedAlgebra::dual_numbers(Q);
    let t = odot_product(&a, &a).unwrap();
    assert_eq!((t.dim_bar(), t.dim_m()), (3, 2));
    assert_eq!(t.algebra.names(), &["x⊗1", "1⊗x", "x⊗x"]);
    assert_eq!(t.module.names(), &["(x⊗1)⊗(1⊗x)", "(1⊗x)⊗(x⊗1)"]);
    let both = vec![Q.one(), Q.one()];
    assert_eq!(t.f_basis(2), both.as_slice());
    assert!(vector::is_zero(t.f_basis(0)) && vector::is_zero(t.f_basis(1)));
    assert_eq!(t.g[0][1], vec![Q.one(), Q.zero()]);
    assert_eq!(t.g[1][0], vec![Q.zero(), Q.one()]);
    assert!(vector::is_zero(&t.g[2][2]));
    assert!(vector::is_zero(&t.g[0][0]));
}

#[test]
fn odot_is_symmetric_up_to_swap() {
    let a = AugmentedAlgebra::dual_numbers(Q);
    let t = odot_product(&a, &a).unwrap();
    let alpha = scalar_matrix(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]], 3);
    let beta = scalar_matrix(&[&[0, 1], &[1, 0]], 2);
    assert!(check_trident_morphism(&t, &t, &alpha, &beta).unwrap().passed());
}

#[test]
fn extension_of_t1() {
    let t = t1(Q);
    let ext = extension_module(&t).unwrap();
    assert_eq!(ext.module.dim(), 4);
    assert_eq!(ext.m_positions, vec![0]);
    // x·[1⊗1] = f(x) + [x⊗1] + [1⊗x]
    let image = ext.module.left[0].left_mul(&ext.unit);
    assert_eq!(image, vec![Q.one(), Q.zero(), Q.one(), Q.one()]);
    let (f, g) = ext.extract_fg(&t.algebra).unwrap();
    assert_eq!((f, g), (t.f.clone(), t.g.clone()));
}

#[test]
fn extension_round_trips_fg() {
    let a = AugmentedAlgebra::dual_numbers(Q);
    for t in [t0(Q), t1(Q), t3(Q), odot_product(&a, &a).unwrap()] {
        let ext = extension_module(&t).unwrap();
        assert_eq!(ext.extract_fg(&t.algebra).unwrap(), (t.f.clone(), t.g.clone()));
    }
    assert!(extension_module(&t1_bad_g(Q)).is_err());
}

#[test]
fn morphism_examples() {
    let t = t1(Q);
    let id = Matrix::identity(Q, 1);
    assert!(check_trident_morphism(&t, &t, &id, &id).unwrap().passed());
    let twice = scalar_matrix(&[&[2]], 1);
    let report = check_trident_morphism(&t, &t, &id, &twice).unwrap();
    assert_eq!(report.violated_identities(), vec!["f-square"]);
    let zero_target = trivial_trident(AugmentedAlgebra::ground(Q), TridentModule::zero(Q, 0)).unwrap();
    let report = check_trident_morphism(&t, &zero_target, &Matrix::zeros(Q, 1, 0), &Matrix::zeros(Q, 1, 0)).unwrap();
    assert!(report.passed());
    assert!(check_trident_morphism(&t, &t, &Matrix::zeros(Q, 1, 2), &id).is_err());
}

#[test]
fn json_round_trip_and_field_override() {
    let t = t1_bad_g(Q);
    let s = t.to_json_string().unwrap();
    let back = TridentAlgebra::from_json_str(&s).unwrap();
    assert_eq!(back.to_json_string().unwrap(), s);
    let json: TridentJson = serde_json::from_str(&s).unwrap();
    let gf2 = json.to_trident(Some(Field::Prime { p: 2 })).unwrap();
    assert!(gf2.validate().passed());

    let t0_json = t0(Q).to_json_string().unwrap();
    assert!(!t0_json.contains("\"module\""));
    assert_eq!(TridentAlgebra::from_json_str(&t0_json).unwrap().dim_m(), 0);

    let alg = algebra_to_json_string(&AugmentedAlgebra::dual_numbers(Q)).unwrap();
    assert_eq!(
        algebra_from_json_str(&alg, None).unwrap(),
        AugmentedAlgebra::dual_numbers(Q)
    );
}

#[test]
fn malformed_json_is_a_shape_error() {
    let s = t1(Q).to_json_string().unwrap().replace("\"dim\": 1", "\"dim\": 2");
    assert!(matches!(TridentAlgebra::from_json_str(&s), Err(crate::Error::Shape(_))));
}
