//! Exact dense linear algebra over ℚ and GF(p).
//!
//! Everything here is exact: ranks and kernel dimensions feed the truncation
//! ideal and dimension computations, which must come out as exact integers.
//! Subspaces are kept in canonical RREF so subspace equality is plain `==`.

mod matrix;
mod scalar;
mod subspace;
pub mod vector;

pub use matrix::{rref_and_rank, Matrix, Rref};
pub use scalar::{Field, Scalar};
pub use subspace::{intersect_subspaces, kernel_basis, solve, Subspace};

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rational;
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            f,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn over(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        Matrix::new(field, rows, cols, entries.iter().map(|&x| field.from_i64(x)).collect()).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(Field::Rational, 2);
        let r = rref_and_rank(&id);
        assert_eq!(r.matrix, id);
        assert_eq!((r.rank, r.pivots.clone()), (2, vec![0, 1]));

        let r = rref_and_rank(&q(&[&[2, 4], &[1, 2]]));
        assert_eq!(r.matrix, q(&[&[1, 2], &[0, 0]]));
        assert_eq!((r.rank, r.pivots), (1, vec![0]));

        let gf2 = Field::prime(2).unwrap();
        let r = rref_and_rank(&over(gf2, 2, 2, &[1, 1, 1, 1]));
        assert_eq!(r.matrix, over(gf2, 2, 2, &[1, 1, 0, 0]));
        assert_eq!((r.rank, r.pivots), (1, vec![0]));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let data = vec![Field::Rational.one(), Field::prime(3).unwrap().one()];
        assert!(matches!(
            Matrix::new(Field::Rational, 1, 2, data),
            Err(crate::Error::FieldMismatch { .. })
        ));
        assert!(matches!(
            Matrix::new(Field::Rational, 2, 2, vec![Field::Rational.one()]),
            Err(crate::Error::Shape(_))
        ));
    }

    #[test]
    fn kernel_examples() {
        let z = Matrix::zeros(Field::Rational, 1, 3);
        assert_eq!(kernel_basis(&z), Subspace::full(Field::Rational, 3));
        let id = Matrix::identity(Field::Rational, 3);
        assert_eq!(kernel_basis(&id).dim(), 0);

        let m = q(&[&[1, 2, 3]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert!(vector::is_zero(&m.mul_vec(v)));
        }
    }

    #[test]
    fn intersection_examples() {
        let f = Field::Rational;
        let e = |i| vector::unit(f, 3, i);
        let v = Subspace::span(f, 3, &[e(0), e(1)]).unwrap();
        let w = Subspace::span(f, 3, &[e(1), e(2)]).unwrap();
        assert_eq!(intersect_subspaces(std::slice::from_ref(&v)).unwrap(), v);
        assert_eq!(
            intersect_subspaces(&[v, w]).unwrap(),
            Subspace::span(f, 3, &[e(1)]).unwrap()
        );
        assert!(intersect_subspaces(&[]).is_err());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = q(&[&[1, 1], &[2, 2]]);
        let f = Field::Rational;
        let x = solve(&m, &[f.from_i64(3), f.from_i64(6)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![f.from_i64(3), f.from_i64(6)]);
        assert!(solve(&m, &[f.from_i64(1), f.from_i64(1)]).is_none());
    }

    #[test]
    fn subspace_coordinates() {
        let f = Field::Rational;
        let s = Subspace::span(f, 3, &[vec![f.from_i64(1), f.from_i64(1), f.zero()]]).unwrap();
        let v = vec![f.from_i64(2), f.from_i64(2), f.zero()];
        assert_eq!(s.coordinates(&v), Some(vec![f.from_i64(2)]));
        assert!(!s.contains(&vector::unit(f, 3, 0)));
        let c = s.constraint_matrix();
        assert_eq!(kernel_basis(&c), s);
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::Rational),
            Just(Field::Prime { p: 2 }),
            Just(Field::Prime { p: 5 }),
        ]
    }

    fn matrix_strategy() -> impl Strategy<Value = Matrix> {
        (field_strategy(), 1usize..5, 1usize..6)
            .prop_flat_map(|(f, r, c)| proptest::collection::vec(-3i64..4, r * c).prop_map(move |e| over(f, r, c, &e)))
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in matrix_strategy()) {
            let r = m.rref();
            prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        }

        #[test]
        fn rank_nullity(m in matrix_strategy()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(k.dim() + m.rank(), m.cols());
            for v in k.basis() {
                prop_assert!(vector::is_zero(&m.mul_vec(v)));
            }
        }

        #[test]
        fn intersection_is_order_insensitive(a in matrix_strategy(), seed in 0u64..4) {
            let f = a.field();
            let n = a.cols();
            let s1 = Subspace::row_space(&a);
            let s2 = kernel_basis(&a);
            let s3 = Subspace::span(f, n, &[vector::unit(f, n, (seed as usize) % n)]).unwrap();
            let x = intersect_subspaces(&[s1.clone(), s2.clone(), s3.clone()]).unwrap();
            let y = intersect_subspaces(&[s3, s1, s2]).unwrap();
            prop_assert_eq!(x, y);
        }

        // Independent oracle: dim(U ∩ V) = dim U + dim V - rank([U; V]).
        #[test]
        fn intersection_dimension_formula(
            u in proptest::collection::vec(-2i64..3, 24),
            v in proptest::collection::vec(-2i64..3, 24),
        ) {
            let f = Field::Rational;
            let mu = over(f, 4, 6, &u);
            let mv = over(f, 4, 6, &v);
            let su = Subspace::row_space(&mu);
            let sv = Subspace::row_space(&mv);
            let w = intersect_subspaces(&[su.clone(), sv.clone()]).unwrap();
            let mut stacked = mu.row_vecs();
            stacked.extend(mv.row_vecs());
            let sum_rank = Matrix::from_rows(f, 6, stacked).unwrap().rank();
            prop_assert_eq!(w.dim(), su.dim() + sv.dim() - sum_rank);
            prop_assert!(su.contains_subspace(&w));
            prop_assert!(sv.contains_subspace(&w));
        }
    }
}
