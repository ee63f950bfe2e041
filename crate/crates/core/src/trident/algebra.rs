use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Scalar};

/// An augmented algebra `A = 𝕜·1 ⊕ Ā` given by the products of a basis of `Ā`.
///
/// `mul[i][j]` is `aᵢ·aⱼ` in the basis of `Ā`; the unit is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedAlgebra {
    field: Field,
    names: Vec<String>,
    mul: Vec<Vec<Vec<Scalar>>>,
}

impl AugmentedAlgebra {
    pub fn new(field: Field, names: Vec<String>, mul: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let d = names.len();
        if mul.len() != d || mul.iter().any(|row| row.len() != d || row.iter().any(|v| v.len() != d)) {
            return Err(Error::Shape(format!("multiplication table must be {d}x{d}x{d}")));
        }
        for c in mul.iter().flatten().flatten() {
            if c.field() != field {
                return Err(Error::FieldMismatch {
                    expected: field,
                    found: c.field(),
                });
            }
        }
        Ok(AugmentedAlgebra { field, names, mul })
    }

    /// The ground field itself (`Ā = 0`).
    pub fn ground(field: Field) -> Self {
        AugmentedAlgebra {
            field,
            names: Vec::new(),
            mul: Vec::new(),
        }
    }

    /// `𝕜[x]/(x²)`.
    pub fn dual_numbers(field: Field) -> Self {
        AugmentedAlgebra {
            field,
            names: vec!["x".into()],
            mul: vec![vec![vec![field.zero()]]],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim_bar(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, j: usize) -> &str {
        &self.names[j]
    }

    pub fn mul_table(&self) -> &[Vec<Vec<Scalar>>] {
        &self.mul
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mul[i][j]
    }

    pub fn mul_table_mut(&mut self) -> &mut Vec<Vec<Vec<Scalar>>> {
        &mut self.mul
    }

    pub fn basis(&self, j: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.dim_bar(), j)
    }

    /// Product of two elements of `Ā`.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vector::zero(self.field, self.dim_bar());
        for (i, ci) in vector::support(x) {
            for (j, cj) in vector::support(y) {
                vector::add_scaled(&mut acc, &(ci * cj), &self.mul[i][j]);
            }
        }
        acc
    }

    /// Product of `Ā`-elements indexed by basis or the unit (`None`).
    pub fn mul_opt(&self, x: Option<usize>, y: &[Scalar]) -> Vec<Scalar> {
        match x {
            None => y.to_vec(),
            Some(i) => self.mul(&self.basis(i), y),
        }
    }

    pub fn format(&self, v: &[Scalar]) -> String {
        format_combination(v, &self.names)
    }

    /// `(a_i a_j) a_k = a_i (a_j a_k)` on all basis triples.
    pub fn associativity_failures(&self) -> Vec<(usize, usize, usize, Vec<Scalar>, Vec<Scalar>)> {
        let d = self.dim_bar();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = self.mul(&self.mul[i][j], &self.basis(k));
                    let rhs = self.mul(&self.basis(i), &self.mul[j][k]);
                    if lhs != rhs {
                        out.push((i, j, k, lhs, rhs));
                    }
                }
            }
        }
        out
    }
}

/// `c*name + …` or `0`.
pub fn format_combination(v: &[Scalar], names: &[String]) -> String {
    let parts: Vec<String> = vector::support(v)
        .map(|(k, c)| {
            if c.is_one() {
                names[k].clone()
            } else {
                format!("{c}*{}", names[k])
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}
