use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::linalg::{vector, Field, Scalar};

/// A vector in one arity component of an operad, in that component's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    arity: usize,
    coeffs: Vec<Scalar>,
}

impl Element {
    pub fn new(arity: usize, coeffs: Vec<Scalar>) -> Self {
        Element { arity, coeffs }
    }

    pub fn zero(field: Field, arity: usize, dim: usize) -> Self {
        Element::new(arity, vector::zero(field, dim))
    }

    pub fn basis(field: Field, arity: usize, dim: usize, index: usize) -> Self {
        Element::new(arity, vector::unit(field, dim, index))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element::new(self.arity, vector::scale(c, &self.coeffs))
    }

    /// Nonzero `(basis index, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        vector::support(&self.coeffs)
    }

    fn check_compatible(&self, other: &Element) {
        assert!(
            self.arity == other.arity && self.dim() == other.dim(),
            "element arithmetic across components (arity {} vs {})",
            self.arity,
            other.arity
        );
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, other: &Element) -> Element {
        self.check_compatible(other);
        Element::new(self.arity, vector::add(&self.coeffs, &other.coeffs))
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, other: &Element) -> Element {
        self.check_compatible(other);
        Element::new(self.arity, vector::sub(&self.coeffs, &other.coeffs))
    }
}

/// Wire form: arity plus coefficient strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRepr {
    pub arity: usize,
    pub coeffs: Vec<String>,
}

impl From<&Element> for ElementRepr {
    fn from(e: &Element) -> Self {
        ElementRepr {
            arity: e.arity,
            coeffs: vector::to_strings(&e.coeffs),
        }
    }
}
