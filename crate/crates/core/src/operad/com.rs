use crate::linalg::{Field, Matrix};

use super::tabulated::{OperadTables, TabulatedOperad};

/// The commutative operad: every component is spanned by `1_n`, all actions are
/// trivial and `1_m ∘ᵢ 1_n = 1_{m+n-1}`.
pub fn com_operad(field: Field, max_arity: usize) -> TabulatedOperad {
    let one = field.one();
    let compose = (0..=max_arity)
        .map(|m| {
            (1..=m)
                .map(|_| {
                    (0..=max_arity)
                        .map(|n| {
                            if m + n - 1 > max_arity {
                                Vec::new()
                            } else {
                                vec![vec![vec![(0, one.clone())]]]
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    TabulatedOperad::from_tables(OperadTables {
        field,
        max_arity,
        dims: vec![1; max_arity + 1],
        labels: (0..=max_arity).map(|n| vec![format!("1_{n}")]).collect(),
        unit0_index: Some(0),
        unit2_coeffs: (max_arity >= 2).then(|| vec![one.clone()]),
        actions: (0..=max_arity)
            .map(|n| (1..n).map(|_| Matrix::identity(field, 1)).collect())
            .collect(),
        compose,
    })
    .expect("commutative operad tables are well formed")
}
