mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use common::Q;
use trident_operads::fixtures;
use trident_operads::functors::{build_f, FOperad};
use trident_operads::operad::{tabulate, Element, OperadExt, OperadView, TabulatedOperad};
use trident_operads::perm::Permutation;
use trident_operads::trident::TridentAlgebra;

const N: usize = 5;

fn evaluated() -> &'static FOperad {
    static P: OnceLock<FOperad> = OnceLock::new();
    P.get_or_init(|| build_f(fixtures::odot_dual(Q).unwrap(), N).unwrap())
}

fn tabulated() -> &'static TabulatedOperad {
    static T: OnceLock<TabulatedOperad> = OnceLock::new();
    T.get_or_init(|| tabulate(evaluated()).unwrap())
}

fn element(p: &dyn OperadView, n: usize, seed: &[i64]) -> Element {
    let coeffs = (0..p.dim(n))
        .map(|k| p.field().from_i64(seed[k % seed.len()] - 2 * (k as i64 % 3)))
        .collect();
    Element::new(n, coeffs)
}

/// `(m, i, n)` with `1 ≤ i ≤ m` and `m + n - 1 ≤ N`.
fn composable() -> impl Strategy<Value = (usize, usize, usize)> {
    (1..=N).prop_flat_map(|m| (Just(m), 1..=m, 0..=N + 1 - m))
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tables_agree_with_rules((m, i, n) in composable(), xs in prop::collection::vec(-3i64..=3, 1..6), ys in prop::collection::vec(-3i64..=3, 1..6)) {
        let (p, t) = (evaluated(), tabulated());
        let x = element(p, m, &xs);
        let y = element(p, n, &ys);
        prop_assert_eq!(p.compose(i, &x, &y).unwrap(), t.compose(i, &x, &y).unwrap());
    }

    #[test]
    fn actions_agree_with_rules(sigma in (0..=N).prop_flat_map(permutation), xs in prop::collection::vec(-3i64..=3, 1..6)) {
        let (p, t) = (evaluated(), tabulated());
        let x = element(p, sigma.degree(), &xs);
        prop_assert_eq!(p.act(&x, &sigma).unwrap(), t.act(&x, &sigma).unwrap());
    }

    #[test]
    fn composition_is_bilinear((m, i, n) in composable(), xs in prop::collection::vec(-3i64..=3, 1..6), ys in prop::collection::vec(-3i64..=3, 1..6), c in -4i64..=4) {
        let p = evaluated();
        let (x, x2, y) = (element(p, m, &xs), element(p, m, &ys), element(p, n, &xs));
        let scaled = &x + &x2.scale(&Q.from_i64(c));
        let lhs = p.compose(i, &scaled, &y).unwrap();
        let rhs = &p.compose(i, &x, &y).unwrap() + &p.compose(i, &x2, &y).unwrap().scale(&Q.from_i64(c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn permutation_inverse_and_composition(sigma in (1..=6usize).prop_flat_map(permutation), seed in any::<u64>()) {
        let n = sigma.degree();
        let id = Permutation::identity(n);
        prop_assert_eq!(sigma.compose(&sigma.inverse()).unwrap(), id.clone());
        prop_assert_eq!(sigma.inverse().compose(&sigma).unwrap(), id);
        let all = Permutation::all(n);
        let tau = &all[(seed % all.len() as u64) as usize];
        let st = sigma.compose(tau).unwrap();
        prop_assert_eq!(st.inverse(), tau.inverse().compose(&sigma.inverse()).unwrap());
        for x in 1..=n {
            prop_assert_eq!(sigma.apply_inverse(sigma.apply(x)), x);
        }
    }

    #[test]
    fn trident_json_round_trips(which in 0usize..5) {
        let (_, t) = fixtures::valid_fixtures().swap_remove(which);
        let back = TridentAlgebra::from_json_str(&t.to_json_string().unwrap()).unwrap();
        prop_assert_eq!(back, t);
    }
}
