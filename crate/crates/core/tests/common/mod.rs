#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use trident_operads::fixtures;
use trident_operads::functors::{build_f, FOperad};
use trident_operads::linalg::Field;
use trident_operads::operad::{hadamard_product, tabulate, Element, HadamardOperad, OperadExt, OperadView};
use trident_operads::trident::algebra_to_json_string;
use trident_operads::trident::AugmentedAlgebra;

pub const Q: Field = Field::Rational;
pub const GF2: Field = Field::Prime { p: 2 };

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture_path(name: &str) -> PathBuf {
    fixture_dir().join(name)
}

/// F(T3) truncated at 4, with `1₂ + ψ₁₂(e1)` as its designated 2-unit.
pub fn t3_operad_json() -> String {
    let p = build_f(fixtures::t3(Q), 4).unwrap();
    let mut u2 = p.unit2().unwrap().into_coeffs();
    u2[p.psi_index(2, 1, 2, 0)] = Q.one();
    tabulate(&p)
        .unwrap()
        .with_unit2(Some(Element::new(2, u2)))
        .unwrap()
        .to_json_string()
        .unwrap()
}

/// Every shipped fixture file and its expected contents.
pub fn expected_fixture_files() -> Vec<(&'static str, String)> {
    let json = |t: trident_operads::trident::TridentAlgebra| t.to_json_string().unwrap() + "\n";
    vec![
        ("T0.json", json(fixtures::t0(Q))),
        ("T1.json", json(fixtures::t1(Q))),
        ("T1_bad_g.json", json(fixtures::t1_bad_g(Q))),
        ("T1_gf2_g.json", json(fixtures::t1_bad_g(GF2))),
        ("T3.json", json(fixtures::t3(Q))),
        ("odot_dual.json", json(fixtures::odot_dual(Q).unwrap())),
        (
            "dual_numbers.json",
            algebra_to_json_string(&AugmentedAlgebra::dual_numbers(Q)).unwrap() + "\n",
        ),
        ("T3_operad.json", t3_operad_json() + "\n"),
        ("hadamard_dual_composite.txt", hadamard_dual_composite().1 + "\n"),
    ]
}

/// `F(T0) ⊗_H F(T0)` truncated at 4, and its two factors.
pub fn hadamard_dual() -> (HadamardOperad, Arc<FOperad>) {
    let f = Arc::new(build_f(fixtures::t0(Q), 4).unwrap());
    let h = hadamard_product(f.clone(), f.clone()).unwrap();
    (h, f)
}

/// `(φ⁽²⁾₁(x)⊗1₂ + 1₂⊗φ⁽²⁾₁(x)) ∘₁ (φ⁽³⁾₁(x)⊗1₃ + 1₃⊗φ⁽³⁾₁(x))` and its rendering.
pub fn hadamard_dual_composite() -> (Element, String) {
    let (h, f) = hadamard_dual();
    let side = |n: usize| {
        let phi = f.basis(n, f.phi_index(n, 1, 0));
        let one = f.basis(n, 0);
        &h.tensor(&phi, &one).unwrap() + &h.tensor(&one, &phi).unwrap()
    };
    let c = h.compose(1, &side(2), &side(3)).unwrap();
    let s = h.format(&c);
    (c, s)
}
