//! Small tridents used throughout the tests, the CLI and the bindings.

use crate::error::Result;
use crate::linalg::{Field, Matrix};
use crate::trident::{odot_product, AugmentedAlgebra, TridentAlgebra, TridentModule};

fn one_dim_module(field: Field, d: usize) -> TridentModule {
    TridentModule::with_zero_actions(field, vec!["mu".into()], Matrix::identity(field, 1), d).expect("1x1 swap")
}

/// `A = 𝕜[x]/(x²)`, `M = 0`.
pub fn t0(field: Field) -> TridentAlgebra {
    let alg = AugmentedAlgebra::dual_numbers(field);
    TridentAlgebra::new(
        alg,
        TridentModule::zero(field, 1),
        Matrix::zeros(field, 1, 0),
        vec![vec![vec![]]],
    )
    .expect("shapes match")
}

/// `A = 𝕜[x]/(x²)`, `M = 𝕜μ` with trivial swap and zero actions, `f(x) = μ`, `g = 0`.
pub fn t1(field: Field) -> TridentAlgebra {
    let alg = AugmentedAlgebra::dual_numbers(field);
    let f = Matrix::identity(field, 1);
    TridentAlgebra::new(alg, one_dim_module(field, 1), f, vec![vec![vec![field.zero()]]]).expect("shapes match")
}

/// [`t1`] with `g(x, x) = μ`: invalid over ℚ, valid in characteristic 2.
pub fn t1_bad_g(field: Field) -> TridentAlgebra {
    let mut t = t1(field);
    t.g[0][0] = vec![field.one()];
    t
}

/// `A = 𝕜`, `M = 𝕜e1 ⊕ 𝕜e2` with the swap exchanging `e1` and `e2`.
pub fn t3(field: Field) -> TridentAlgebra {
    let swap = Matrix::from_rows(
        field,
        2,
        vec![vec![field.zero(), field.one()], vec![field.one(), field.zero()]],
    )
    .expect("2x2");
    let module = TridentModule::with_zero_actions(field, vec!["e1".into(), "e2".into()], swap, 0).expect("2x2 swap");
    TridentAlgebra::new(
        AugmentedAlgebra::ground(field),
        module,
        Matrix::zeros(field, 0, 2),
        Vec::new(),
    )
    .expect("shapes match")
}

/// `𝕜[x]/(x²) ⊙ 𝕜[x]/(x²)`.
pub fn odot_dual(field: Field) -> Result<TridentAlgebra> {
    let a = AugmentedAlgebra::dual_numbers(field);
    odot_product(&a, &a)
}

/// Every valid fixture over ℚ plus the characteristic-2 one, by name.
pub fn valid_fixtures() -> Vec<(&'static str, TridentAlgebra)> {
    let q = Field::Rational;
    let gf2 = Field::Prime { p: 2 };
    vec![
        ("T0", t0(q)),
        ("T1", t1(q)),
        ("T3", t3(q)),
        ("T1_gf2_g", t1_bad_g(gf2)),
        ("odot_dual", odot_dual(q).expect("valid product")),
    ]
}
