use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar};

use super::algebra::{format_combination, AugmentedAlgebra};

/// A left `A`, right `A⊗A` bimodule with a compatible `S₂`-action.
///
/// All maps are row-image matrices: row `s` of `swap` is `μₛ ∗ (12)`, row `s`
/// of `left[j]` is `aⱼ·μₛ`, of `right1[j]` is `μₛ·₁aⱼ` and of `right2[j]` is
/// `μₛ·₂aⱼ`. The unit of `A` acts as the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TridentModule {
    field: Field,
    names: Vec<String>,
    pub swap: Matrix,
    pub left: Vec<Matrix>,
    pub right1: Vec<Matrix>,
    pub right2: Vec<Matrix>,
}

impl TridentModule {
    pub fn new(
        field: Field,
        names: Vec<String>,
        swap: Matrix,
        left: Vec<Matrix>,
        right1: Vec<Matrix>,
        right2: Vec<Matrix>,
    ) -> Result<Self> {
        let m = names.len();
        if left.len() != right1.len() || left.len() != right2.len() {
            return Err(Error::Shape(
                "left, right1 and right2 need one matrix per basis element of Ā".into(),
            ));
        }
        for mat in std::iter::once(&swap).chain(&left).chain(&right1).chain(&right2) {
            if mat.field() != field {
                return Err(Error::FieldMismatch {
                    expected: field,
                    found: mat.field(),
                });
            }
            if mat.rows() != m || mat.cols() != m {
                return Err(Error::Shape(format!(
                    "module maps must be {m}x{m}, found {}x{}",
                    mat.rows(),
                    mat.cols()
                )));
            }
        }
        Ok(TridentModule {
            field,
            names,
            swap,
            left,
            right1,
            right2,
        })
    }

    pub fn zero(field: Field, d: usize) -> Self {
        let z = Matrix::zeros(field, 0, 0);
        TridentModule {
            field,
            names: Vec::new(),
            swap: z.clone(),
            left: vec![z.clone(); d],
            right1: vec![z.clone(); d],
            right2: vec![z; d],
        }
    }

    /// `M` with the given swap and all `Ā`-actions zero.
    pub fn with_zero_actions(field: Field, names: Vec<String>, swap: Matrix, d: usize) -> Result<Self> {
        let m = names.len();
        let z = Matrix::zeros(field, m, m);
        TridentModule::new(field, names, swap, vec![z.clone(); d], vec![z.clone(); d], vec![z; d])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Number of `Ā` basis elements the actions are given for.
    pub fn dim_bar(&self) -> usize {
        self.left.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis(&self, s: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.dim(), s)
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vector::zero(self.field, self.dim())
    }

    pub fn format(&self, v: &[Scalar]) -> String {
        format_combination(v, &self.names)
    }

    pub fn apply_swap(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.swap.left_mul(v)
    }

    fn act(&self, mats: &[Matrix], a: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut acc = self.zero_vec();
        for (j, c) in vector::support(a) {
            vector::add_scaled(&mut acc, c, &mats[j].left_mul(v));
        }
        acc
    }

    /// `a·v` for `a ∈ Ā`.
    pub fn left_act(&self, a: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.act(&self.left, a, v)
    }

    /// `v·₁a` for `a ∈ Ā`.
    pub fn right1_act(&self, v: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.act(&self.right1, a, v)
    }

    /// `v·₂a` for `a ∈ Ā`.
    pub fn right2_act(&self, v: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.act(&self.right2, a, v)
    }

    /// `a·v` with `None` standing for the unit.
    pub fn left_opt(&self, a: Option<usize>, v: &[Scalar]) -> Vec<Scalar> {
        match a {
            None => v.to_vec(),
            Some(j) => self.left[j].left_mul(v),
        }
    }

    pub fn right1_opt(&self, v: &[Scalar], a: Option<usize>) -> Vec<Scalar> {
        match a {
            None => v.to_vec(),
            Some(j) => self.right1[j].left_mul(v),
        }
    }

    pub fn right2_opt(&self, v: &[Scalar], a: Option<usize>) -> Vec<Scalar> {
        match a {
            None => v.to_vec(),
            Some(j) => self.right2[j].left_mul(v),
        }
    }

    /// `v·(a⊗b) = (v·₁a)·₂b`.
    pub fn right_tensor(&self, v: &[Scalar], a: Option<usize>, b: Option<usize>) -> Vec<Scalar> {
        self.right2_opt(&self.right1_opt(v, a), b)
    }

    /// Every bimodule identity on basis tuples, as `(identity, witness, lhs, rhs)`.
    pub(crate) fn axiom_failures(&self, alg: &AugmentedAlgebra) -> Vec<(&'static str, String, String, String)> {
        let d = alg.dim_bar();
        let m = self.dim();
        let mut out = Vec::new();
        let mut push = |name: &'static str, witness: String, lhs: Vec<Scalar>, rhs: Vec<Scalar>| {
            if lhs != rhs {
                out.push((name, witness, self.format(&lhs), self.format(&rhs)));
            }
        };
        for s in 0..m {
            let mu = self.basis(s);
            let w = &self.names[s];
            push(
                "swap-involution",
                format!("μ={w}"),
                self.apply_swap(&self.apply_swap(&mu)),
                mu.clone(),
            );
            for a in 0..d {
                let an = alg.name(a);
                push(
                    "swap-left-compatibility",
                    format!("a={an}, μ={w}"),
                    self.left[a].left_mul(&self.apply_swap(&mu)),
                    self.apply_swap(&self.left[a].left_mul(&mu)),
                );
                push(
                    "swap-right-compatibility",
                    format!("a={an}, μ={w}, action 1"),
                    self.apply_swap(&self.right1[a].left_mul(&mu)),
                    self.right2[a].left_mul(&self.apply_swap(&mu)),
                );
                push(
                    "swap-right-compatibility",
                    format!("a={an}, μ={w}, action 2"),
                    self.apply_swap(&self.right2[a].left_mul(&mu)),
                    self.right1[a].left_mul(&self.apply_swap(&mu)),
                );
                for b in 0..d {
                    let bn = alg.name(b);
                    let ab = alg.mul_basis(a, b);
                    let wit = format!("a={an}, b={bn}, μ={w}");
                    push(
                        "left-associativity",
                        wit.clone(),
                        self.left[a].left_mul(&self.left[b].left_mul(&mu)),
                        self.left_act(ab, &mu),
                    );
                    push(
                        "right1-associativity",
                        wit.clone(),
                        self.right1[b].left_mul(&self.right1[a].left_mul(&mu)),
                        self.right1_act(&mu, ab),
                    );
                    push(
                        "right2-associativity",
                        wit.clone(),
                        self.right2[b].left_mul(&self.right2[a].left_mul(&mu)),
                        self.right2_act(&mu, ab),
                    );
                    push(
                        "bimodule-left-right1",
                        wit.clone(),
                        self.right1[b].left_mul(&self.left[a].left_mul(&mu)),
                        self.left[a].left_mul(&self.right1[b].left_mul(&mu)),
                    );
                    push(
                        "bimodule-left-right2",
                        wit.clone(),
                        self.right2[b].left_mul(&self.left[a].left_mul(&mu)),
                        self.left[a].left_mul(&self.right2[b].left_mul(&mu)),
                    );
                    push(
                        "right-actions-commute",
                        wit,
                        self.right2[b].left_mul(&self.right1[a].left_mul(&mu)),
                        self.right1[a].left_mul(&self.right2[b].left_mul(&mu)),
                    );
                }
            }
        }
        out
    }
}
