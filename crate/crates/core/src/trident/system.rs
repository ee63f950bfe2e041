use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar};

use super::algebra::AugmentedAlgebra;
use super::module::TridentModule;

/// A trident system `(A, M, f, g)`.
///
/// Row `j` of `f` is `f(aⱼ)`; `g[i][j]` is `g(aᵢ, aⱼ)`, both in the basis of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TridentAlgebra {
    pub algebra: AugmentedAlgebra,
    pub module: TridentModule,
    pub f: Matrix,
    pub g: Vec<Vec<Vec<Scalar>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TridentViolation {
    pub identity: &'static str,
    pub witness: String,
    pub lhs: String,
    pub rhs: String,
}

impl std::fmt::Display for TridentViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at {}: {} != {}", self.identity, self.witness, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TridentReport {
    pub violations: Vec<TridentViolation>,
}

impl TridentReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated_identities(&self) -> Vec<&'static str> {
        self.violations.iter().map(|v| v.identity).unique().collect()
    }
}

impl TridentAlgebra {
    pub fn new(algebra: AugmentedAlgebra, module: TridentModule, f: Matrix, g: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let field = algebra.field();
        let (d, m) = (algebra.dim_bar(), module.dim());
        if module.field() != field {
            return Err(Error::FieldMismatch {
                expected: field,
                found: module.field(),
            });
        }
        if module.dim_bar() != d {
            return Err(Error::Shape(format!(
                "module actions given for {} algebra basis elements, algebra has {d}",
                module.dim_bar()
            )));
        }
        if f.field() != field {
            return Err(Error::FieldMismatch {
                expected: field,
                found: f.field(),
            });
        }
        if f.rows() != d || f.cols() != m {
            return Err(Error::Shape(format!(
                "f must be {d}x{m}, found {}x{}",
                f.rows(),
                f.cols()
            )));
        }
        if g.len() != d || g.iter().any(|row| row.len() != d || row.iter().any(|v| v.len() != m)) {
            return Err(Error::Shape(format!("g must be {d}x{d}x{m}")));
        }
        if let Some(c) = g.iter().flatten().flatten().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch {
                expected: field,
                found: c.field(),
            });
        }
        Ok(TridentAlgebra { algebra, module, f, g })
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim_bar(&self) -> usize {
        self.algebra.dim_bar()
    }

    pub fn dim_m(&self) -> usize {
        self.module.dim()
    }

    pub fn f_basis(&self, j: usize) -> &[Scalar] {
        self.f.row(j)
    }

    /// `f(a)` for `a ∈ Ā`.
    pub fn f_vec(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.f.left_mul(a)
    }

    /// `g(a, b)` for `a, b ∈ Ā`.
    pub fn g_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut acc = self.module.zero_vec();
        for (i, ci) in vector::support(a) {
            for (j, cj) in vector::support(b) {
                vector::add_scaled(&mut acc, &(ci * cj), &self.g[i][j]);
            }
        }
        acc
    }

    /// Checks every defining identity on basis tuples.
    pub fn validate(&self) -> TridentReport {
        let alg = &self.algebra;
        let md = &self.module;
        let d = alg.dim_bar();
        let mut violations = Vec::new();

        for (i, j, k, lhs, rhs) in alg.associativity_failures() {
            violations.push(TridentViolation {
                identity: "algebra-associativity",
                witness: format!("a={}, b={}, c={}", alg.name(i), alg.name(j), alg.name(k)),
                lhs: alg.format(&lhs),
                rhs: alg.format(&rhs),
            });
        }
        for (identity, witness, lhs, rhs) in md.axiom_failures(alg) {
            violations.push(TridentViolation {
                identity,
                witness,
                lhs,
                rhs,
            });
        }

        let mut push = |identity: &'static str, witness: String, lhs: Vec<Scalar>, rhs: Vec<Scalar>| {
            if lhs != rhs {
                violations.push(TridentViolation {
                    identity,
                    witness,
                    lhs: md.format(&lhs),
                    rhs: md.format(&rhs),
                });
            }
        };

        for a in 0..d {
            let fa = self.f_basis(a).to_vec();
            push(
                "f-swap-invariance",
                format!("a={}", alg.name(a)),
                md.apply_swap(&fa),
                fa.clone(),
            );
        }
        for a in 0..d {
            for b in 0..d {
                let wit = format!("a={}, b={}", alg.name(a), alg.name(b));
                push("g-symmetry", wit, self.g[a][b].clone(), md.apply_swap(&self.g[b][a]));
            }
        }
        let multipliers: Vec<Option<usize>> = std::iter::once(None).chain((0..d).map(Some)).collect();
        for a in 0..d {
            for b in 0..d {
                for &x in &multipliers {
                    for &y in &multipliers {
                        if x.is_none() && y.is_none() {
                            continue;
                        }
                        let ax = mul_right(alg, a, x);
                        let by = mul_right(alg, b, y);
                        let name = |o: Option<usize>| o.map_or("1".to_string(), |k| alg.name(k).to_string());
                        push(
                            "g-right-linearity",
                            format!("a={}, b={}, x={}, y={}", alg.name(a), alg.name(b), name(x), name(y)),
                            self.g_vec(&ax, &by),
                            md.right_tensor(&self.g[a][b], x, y),
                        );
                    }
                }
            }
        }
        for a in 0..d {
            for b in 0..d {
                let wit = format!("a={}, b={}", alg.name(a), alg.name(b));
                let ab = alg.mul_basis(a, b);
                let fa = self.f_basis(a);
                let mut rhs = md.left[a].left_mul(self.f_basis(b));
                for term in [
                    md.right1[b].left_mul(fa),
                    md.right2[b].left_mul(fa),
                    self.g[a][b].clone(),
                    self.g[b][a].clone(),
                ] {
                    rhs = vector::add(&rhs, &term);
                }
                push("f-multiplicativity", wit, self.f_vec(ab), rhs);
            }
        }
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let wit = format!("a={}, b={}, c={}", alg.name(a), alg.name(b), alg.name(c));
                    let lhs = md.right_tensor(self.f_basis(a), Some(b), Some(c));
                    let ab = alg.mul_basis(a, b);
                    let ac = alg.mul_basis(a, c);
                    let rhs = vector::sub(
                        &vector::sub(&md.left[a].left_mul(&self.g[b][c]), &self.g_vec(ab, &alg.basis(c))),
                        &self.g_vec(&alg.basis(b), ac),
                    );
                    push("f-g-compatibility", wit, lhs, rhs);
                }
            }
        }
        TridentReport { violations }
    }

    /// `Ok` when valid, otherwise [`Error::InvalidTrident`] naming the first failure.
    pub fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidTrident(format!(
                "{v} ({} violation(s) in total)",
                report.violations.len()
            ))),
        }
    }
}

/// `aᵢ·x` with `None` standing for the unit.
fn mul_right(alg: &AugmentedAlgebra, i: usize, x: Option<usize>) -> Vec<Scalar> {
    match x {
        None => alg.basis(i),
        Some(k) => alg.mul_basis(i, k).to_vec(),
    }
}

/// `(A, M, 0, 0)`.
pub fn trivial_trident(algebra: AugmentedAlgebra, module: TridentModule) -> Result<TridentAlgebra> {
    let field = algebra.field();
    let (d, m) = (algebra.dim_bar(), module.dim());
    let t = TridentAlgebra::new(
        algebra,
        module,
        Matrix::zeros(field, d, m),
        vec![vec![vector::zero(field, m); d]; d],
    )?;
    t.require_valid()?;
    Ok(t)
}
