use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use super::vector;
use crate::error::{Error, Result};

/// A linear subspace of `𝕜^ambient_dim`, stored by its canonical RREF basis.
/// Two subspaces are equal iff their stored data is equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: (0..ambient_dim).map(|i| vector::unit(field, ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(field: Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let m = Matrix::from_rows(field, ambient_dim, vectors.to_vec())?;
        Ok(Self::row_space(&m))
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let r = m.rref();
        Subspace {
            field: m.field(),
            ambient_dim: m.cols(),
            basis: (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect(),
            pivots: r.pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient_dim, self.basis.clone()).expect("basis rows are well-formed")
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vector::zero(self.field, self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            vector::add_scaled(&mut rebuilt, c, b);
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// A matrix whose right kernel is exactly this subspace.
    pub fn constraint_matrix(&self) -> Matrix {
        let annihilator = kernel_basis(&self.basis_matrix());
        annihilator.basis_matrix()
    }
}

/// Right null space `{v : m·v = 0}` as a canonical subspace of `𝕜^cols`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let field = m.field();
    let n = m.cols();
    let r = m.rref();
    let pivot_set: std::collections::BTreeSet<usize> = r.pivots.iter().copied().collect();
    let mut vectors = Vec::new();
    for free in (0..n).filter(|c| !pivot_set.contains(c)) {
        let mut v = vector::unit(field, n, free);
        for (row, &p) in r.pivots.iter().enumerate() {
            v[p] = -r.matrix.get(row, free);
        }
        vectors.push(v);
    }
    Subspace::span(field, n, &vectors).expect("kernel vectors are well-formed")
}

/// Intersection of subspaces, computed as one kernel of the stacked constraint matrices.
pub fn intersect_subspaces(subspaces: &[Subspace]) -> Result<Subspace> {
    let first = subspaces
        .first()
        .ok_or_else(|| Error::InvalidArgument("intersection of an empty list".into()))?;
    let field = first.field;
    let n = first.ambient_dim;
    let mut rows = Vec::new();
    for s in subspaces {
        if s.field != field {
            return Err(Error::FieldMismatch {
                expected: field,
                found: s.field,
            });
        }
        if s.ambient_dim != n {
            return Err(Error::Shape(format!(
                "ambient dimensions differ: {} vs {n}",
                s.ambient_dim
            )));
        }
        rows.extend(s.constraint_matrix().row_vecs());
    }
    let stacked = Matrix::from_rows(field, n, rows)?;
    Ok(kernel_basis(&stacked))
}

/// One solution of `m·x = rhs`, if the system is consistent.
pub fn solve(m: &Matrix, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(rhs.len(), m.rows(), "right-hand side length");
    let field = m.field();
    let n = m.cols();
    let rows: Vec<Vec<Scalar>> = (0..m.rows())
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let aug = Matrix::from_rows(field, n + 1, rows).expect("augmented system");
    let r = aug.rref();
    if r.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vector::zero(field, n);
    for (row, &p) in r.pivots.iter().enumerate() {
        x[p] = r.matrix.get(row, n).clone();
    }
    Some(x)
}
