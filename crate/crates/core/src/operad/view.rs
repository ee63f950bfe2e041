use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar};
use crate::perm::Permutation;

use super::element::Element;

/// Sparse linear combination of basis vectors: `(index, coefficient)`.
pub type Terms = Vec<(usize, Scalar)>;

/// Coarse shape of a basis vector, used to bucket axiom instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    Unit,
    Phi,
    Psi,
    Other,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Unit => "unit",
            BasisKind::Phi => "phi",
            BasisKind::Psi => "psi",
            BasisKind::Other => "other",
        }
    }
}

/// An operad truncated at `max_arity`, presented on a fixed basis of each component.
///
/// `act_basis` is a right action. `compose_basis(m, i, n, a, b)` is `e_a ∘ᵢ e_b`
/// and is only called with `m ≥ 1`, `1 ≤ i ≤ m` and `m + n - 1 ≤ max_arity`.
pub trait OperadView: Send + Sync {
    fn field(&self) -> Field;
    fn max_arity(&self) -> usize;
    fn dim(&self, n: usize) -> usize;
    fn basis_label(&self, n: usize, index: usize) -> String;

    fn basis_kind(&self, _n: usize, _index: usize) -> BasisKind {
        BasisKind::Other
    }

    fn act_basis(&self, n: usize, index: usize, sigma: &Permutation) -> Terms;
    fn compose_basis(&self, m: usize, i: usize, n: usize, a: usize, b: usize) -> Terms;

    /// The operadic identity in arity 1.
    fn identity(&self) -> Element;

    /// Designated 0-unit, when the operad is unitary.
    fn unit0(&self) -> Option<Element> {
        None
    }

    /// Designated arity-2 unit candidate, if any.
    fn unit2(&self) -> Option<Element> {
        None
    }
}

/// Element-level operations available on every [`OperadView`].
pub trait OperadExt: OperadView {
    fn zero(&self, n: usize) -> Element {
        Element::zero(self.field(), n, self.dim(n))
    }

    fn basis(&self, n: usize, index: usize) -> Element {
        Element::basis(self.field(), n, self.dim(n), index)
    }

    fn element_from_terms(&self, n: usize, terms: &[(usize, Scalar)]) -> Element {
        let mut coeffs = vector::zero(self.field(), self.dim(n));
        for (k, c) in terms {
            coeffs[*k] += c;
        }
        Element::new(n, coeffs)
    }

    fn check_element(&self, x: &Element) -> Result<()> {
        if x.arity() > self.max_arity() {
            return Err(Error::TruncationOverflow {
                arity: x.arity(),
                max: self.max_arity(),
            });
        }
        if x.dim() != self.dim(x.arity()) {
            return Err(Error::Shape(format!(
                "element of arity {} has {} coefficients, component has dimension {}",
                x.arity(),
                x.dim(),
                self.dim(x.arity())
            )));
        }
        if let Some(c) = x.coeffs().iter().find(|c| c.field() != self.field()) {
            return Err(Error::FieldMismatch {
                expected: self.field(),
                found: c.field(),
            });
        }
        Ok(())
    }

    /// `x ∘ᵢ y`.
    fn compose(&self, i: usize, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        let (m, n) = (x.arity(), y.arity());
        if i == 0 || i > m {
            return Err(Error::InvalidArgument(format!(
                "cannot compose at position {i} of an arity-{m} element"
            )));
        }
        let arity = m + n - 1;
        if arity > self.max_arity() {
            return Err(Error::TruncationOverflow {
                arity,
                max: self.max_arity(),
            });
        }
        let mut acc = vector::zero(self.field(), self.dim(arity));
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let coeff = ca * cb;
                for (k, c) in self.compose_basis(m, i, n, a, b) {
                    acc[k] += &(&coeff * &c);
                }
            }
        }
        Ok(Element::new(arity, acc))
    }

    /// `x ∗ σ`.
    fn act(&self, x: &Element, sigma: &Permutation) -> Result<Element> {
        self.check_element(x)?;
        if sigma.degree() != x.arity() {
            return Err(Error::InvalidArgument(format!(
                "permutation of degree {} acting on arity {}",
                sigma.degree(),
                x.arity()
            )));
        }
        let n = x.arity();
        let mut acc = vector::zero(self.field(), self.dim(n));
        for (a, ca) in x.terms() {
            for (k, c) in self.act_basis(n, a, sigma) {
                acc[k] += &(ca * &c);
            }
        }
        Ok(Element::new(n, acc))
    }

    /// `λ ∘ (μ₁, …, μₙ)`, built from partial compositions from the last input down.
    ///
    /// Arity-0 arguments are plugged in first so that no intermediate composite
    /// exceeds the truncation when the final result does not.
    fn full_compose(&self, lambda: &Element, args: &[Element]) -> Result<Element> {
        self.check_element(lambda)?;
        if args.len() != lambda.arity() {
            return Err(Error::InvalidArgument(format!(
                "arity-{} element needs {} arguments, got {}",
                lambda.arity(),
                lambda.arity(),
                args.len()
            )));
        }
        let total: usize = args.iter().map(Element::arity).sum();
        if total > self.max_arity() {
            return Err(Error::TruncationOverflow {
                arity: total,
                max: self.max_arity(),
            });
        }
        let mut acc = lambda.clone();
        for (pos, arg) in args.iter().enumerate().rev() {
            if arg.arity() == 0 {
                acc = self.compose(pos + 1, &acc, arg)?;
            }
        }
        let rest: Vec<&Element> = args.iter().filter(|a| a.arity() > 0).collect();
        for (pos, arg) in rest.iter().enumerate().rev() {
            acc = self.compose(pos + 1, &acc, arg)?;
        }
        Ok(acc)
    }

    /// Human-readable linear combination of basis labels.
    fn format(&self, x: &Element) -> String {
        let parts: Vec<String> = x
            .terms()
            .map(|(k, c)| {
                let label = self.basis_label(x.arity(), k);
                if c.is_one() {
                    label
                } else {
                    format!("{c}*{label}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Matrix of `θ ↦ θ ∗ σ` on component `n`; row `a` is the image of basis vector `a`.
    fn action_matrix(&self, n: usize, sigma: &Permutation) -> Matrix {
        let d = self.dim(n);
        let rows = (0..d)
            .map(|a| {
                let mut row = vector::zero(self.field(), d);
                for (k, c) in self.act_basis(n, a, sigma) {
                    row[k] += &c;
                }
                row
            })
            .collect();
        Matrix::from_rows(self.field(), d, rows).expect("action rows have component dimension")
    }
}

impl<T: OperadView + ?Sized> OperadExt for T {}
