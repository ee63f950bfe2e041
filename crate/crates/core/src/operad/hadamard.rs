use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};
use crate::perm::Permutation;

use super::element::Element;
use super::view::{OperadView, Terms};

/// Arity-wise tensor product of two operads.
///
/// Basis vector `(p, q)` of component `n` has index `p * dim_right(n) + q`.
#[derive(Clone)]
pub struct HadamardOperad {
    left: Arc<dyn OperadView>,
    right: Arc<dyn OperadView>,
}

impl HadamardOperad {
    pub fn new(left: Arc<dyn OperadView>, right: Arc<dyn OperadView>) -> Result<Self> {
        if left.field() != right.field() {
            return Err(Error::FieldMismatch {
                expected: left.field(),
                found: right.field(),
            });
        }
        if left.max_arity() != right.max_arity() {
            return Err(Error::InvalidArgument(format!(
                "truncations differ: {} vs {}",
                left.max_arity(),
                right.max_arity()
            )));
        }
        Ok(HadamardOperad { left, right })
    }

    pub fn left(&self) -> &Arc<dyn OperadView> {
        &self.left
    }

    pub fn right(&self) -> &Arc<dyn OperadView> {
        &self.right
    }

    /// Index of the pair `(p, q)` in component `n`.
    pub fn pair_index(&self, n: usize, p: usize, q: usize) -> usize {
        p * self.right.dim(n) + q
    }

    fn split(&self, n: usize, index: usize) -> (usize, usize) {
        let dr = self.right.dim(n);
        (index / dr, index % dr)
    }

    /// `x ⊗ y` for elements of the same arity.
    pub fn tensor(&self, x: &Element, y: &Element) -> Result<Element> {
        if x.arity() != y.arity() {
            return Err(Error::InvalidArgument("tensor factors must share an arity".into()));
        }
        let n = x.arity();
        let field = self.field();
        let mut coeffs = vec![field.zero(); self.dim(n)];
        for (p, cp) in x.terms() {
            for (q, cq) in y.terms() {
                coeffs[self.pair_index(n, p, q)] = cp * cq;
            }
        }
        Ok(Element::new(n, coeffs))
    }

    fn product(&self, n: usize, xs: Terms, ys: Terms) -> Terms {
        let mut out = Vec::with_capacity(xs.len() * ys.len());
        for (p, cp) in &xs {
            for (q, cq) in &ys {
                let c: Scalar = cp * cq;
                if !c.is_zero() {
                    out.push((self.pair_index(n, *p, *q), c));
                }
            }
        }
        out
    }
}

impl OperadView for HadamardOperad {
    fn field(&self) -> Field {
        self.left.field()
    }

    fn max_arity(&self) -> usize {
        self.left.max_arity()
    }

    fn dim(&self, n: usize) -> usize {
        self.left.dim(n) * self.right.dim(n)
    }

    fn basis_label(&self, n: usize, index: usize) -> String {
        let (p, q) = self.split(n, index);
        format!("({}, {})", self.left.basis_label(n, p), self.right.basis_label(n, q))
    }

    fn act_basis(&self, n: usize, index: usize, sigma: &Permutation) -> Terms {
        let (p, q) = self.split(n, index);
        self.product(n, self.left.act_basis(n, p, sigma), self.right.act_basis(n, q, sigma))
    }

    fn compose_basis(&self, m: usize, i: usize, n: usize, a: usize, b: usize) -> Terms {
        let (pa, qa) = self.split(m, a);
        let (pb, qb) = self.split(n, b);
        self.product(
            m + n - 1,
            self.left.compose_basis(m, i, n, pa, pb),
            self.right.compose_basis(m, i, n, qa, qb),
        )
    }

    fn identity(&self) -> Element {
        self.tensor(&self.left.identity(), &self.right.identity())
            .expect("identities have arity 1")
    }

    fn unit0(&self) -> Option<Element> {
        let (x, y) = (self.left.unit0()?, self.right.unit0()?);
        self.tensor(&x, &y).ok()
    }

    fn unit2(&self) -> Option<Element> {
        let (x, y) = (self.left.unit2()?, self.right.unit2()?);
        self.tensor(&x, &y).ok()
    }
}

/// `P ⊗_H Q`.
pub fn hadamard_product(p: Arc<dyn OperadView>, q: Arc<dyn OperadView>) -> Result<HadamardOperad> {
    HadamardOperad::new(p, q)
}
