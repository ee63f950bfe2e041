//! Exhaustive verification of the operad axioms on basis vectors.
//!
//! Every instance is evaluated on basis elements only; bilinearity of the
//! compositions and linearity of the actions extend the result to all
//! elements. Instances are bucketed by the kinds of their operands
//! (`unit`, `phi`, `psi`) so that coverage of each shape is reportable.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{vector, Scalar};
use crate::perm::Permutation;

use super::view::{OperadExt, OperadView};

pub const IDENTITY_LEFT: &str = "identity-left";
pub const IDENTITY_RIGHT: &str = "identity-right";
pub const RIGHT_ACTION: &str = "right-action";
pub const SEQUENTIAL: &str = "sequential-associativity";
pub const PARALLEL: &str = "parallel-associativity";
pub const EQUIVARIANCE_INNER: &str = "equivariance-inner";
pub const EQUIVARIANCE_OUTER: &str = "equivariance-outer";

/// Stored violations are capped; `violation_count` is always exact.
pub const MAX_STORED_VIOLATIONS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    /// Permutations range over all of `Sₙ` for `n ≤ 4`.
    Exhaustive,
    /// Permutations range over adjacent transpositions only.
    Generators,
}

impl FromStr for CheckMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(CheckMode::Exhaustive),
            "generators" => Ok(CheckMode::Generators),
            other => Err(Error::Parse(format!("unknown check mode `{other}`"))),
        }
    }
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::Exhaustive => "exhaustive",
            CheckMode::Generators => "generators",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: &'static str,
    /// Operand kinds, e.g. `psi,phi,phi`.
    pub case: String,
    pub arities: Vec<usize>,
    pub positions: Vec<usize>,
    pub operands: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

impl AxiomViolation {
    fn sort_key(&self) -> (usize, &'static str, Vec<usize>, Vec<usize>, Vec<String>, Option<String>) {
        (
            self.arities.iter().sum(),
            self.axiom,
            self.arities.clone(),
            self.positions.clone(),
            self.operands.clone(),
            self.permutation.clone(),
        )
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] arities {:?} positions {:?} operands ({})",
            self.axiom,
            self.case,
            self.arities,
            self.positions,
            self.operands.join("; ")
        )?;
        if let Some(p) = &self.permutation {
            write!(f, " permutation {p}")?;
        }
        write!(f, ": {} != {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub mode: CheckMode,
    pub budget: usize,
    pub instances: u64,
    pub violation_count: u64,
    /// Smallest witnesses first.
    pub violations: Vec<AxiomViolation>,
    /// Instances checked per `axiom:kinds` bucket.
    pub coverage: BTreeMap<String, u64>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub fn coverage_of(&self, axiom: &str, kinds: &[&str]) -> u64 {
        self.coverage
            .get(&format!("{axiom}:{}", kinds.join(",")))
            .copied()
            .unwrap_or(0)
    }

    pub fn violated_axioms(&self) -> Vec<&'static str> {
        self.violations.iter().map(|v| v.axiom).unique().collect()
    }
}

#[derive(Default)]
struct Partial {
    instances: u64,
    violation_count: u64,
    violations: Vec<AxiomViolation>,
    coverage: BTreeMap<String, u64>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.instances += other.instances;
        self.violation_count += other.violation_count;
        self.violations.extend(other.violations);
        for (k, v) in other.coverage {
            *self.coverage.entry(k).or_default() += v;
        }
        if self.violations.len() > 4 * MAX_STORED_VIOLATIONS {
            trim(&mut self.violations);
        }
        self
    }

    fn record(&mut self, bucket: String, violation: Option<AxiomViolation>) {
        self.instances += 1;
        *self.coverage.entry(bucket).or_default() += 1;
        if let Some(v) = violation {
            self.violation_count += 1;
            if self.violations.len() < MAX_STORED_VIOLATIONS {
                self.violations.push(v);
            }
        }
    }
}

fn trim(v: &mut Vec<AxiomViolation>) {
    v.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    v.truncate(MAX_STORED_VIOLATIONS);
}

#[derive(Clone, Debug)]
enum Task {
    Identity {
        n: usize,
    },
    Action {
        n: usize,
    },
    Sequential {
        l: usize,
        m: usize,
        n: usize,
        i: usize,
        j: usize,
    },
    Parallel {
        l: usize,
        m: usize,
        n: usize,
        i: usize,
        k: usize,
    },
    Inner {
        m: usize,
        n: usize,
        i: usize,
    },
    Outer {
        m: usize,
        n: usize,
        i: usize,
    },
}

struct Checker<'a> {
    p: &'a dyn OperadView,
    mode: CheckMode,
}

type Dense = Vec<Scalar>;

impl Checker<'_> {
    fn kind(&self, n: usize, a: usize) -> &'static str {
        self.p.basis_kind(n, a).name()
    }

    fn label(&self, n: usize, a: usize) -> String {
        self.p.basis_label(n, a)
    }

    fn show(&self, n: usize, v: &Dense) -> String {
        self.p.format(&super::element::Element::new(n, v.clone()))
    }

    /// `(Σ xs) ∘ᵢ e_b` as a dense vector.
    fn compose_left(&self, m: usize, i: usize, n: usize, xs: &Dense, b: usize) -> Dense {
        let mut acc = vector::zero(self.p.field(), self.p.dim(m + n - 1));
        for (a, ca) in vector::support(xs) {
            for (k, c) in self.p.compose_basis(m, i, n, a, b) {
                acc[k] += &(ca * &c);
            }
        }
        acc
    }

    /// `e_a ∘ᵢ (Σ ys)` as a dense vector.
    fn compose_right(&self, m: usize, i: usize, n: usize, a: usize, ys: &Dense) -> Dense {
        let mut acc = vector::zero(self.p.field(), self.p.dim(m + n - 1));
        for (b, cb) in vector::support(ys) {
            for (k, c) in self.p.compose_basis(m, i, n, a, b) {
                acc[k] += &(cb * &c);
            }
        }
        acc
    }

    fn basis_dense(&self, m: usize, i: usize, n: usize, a: usize, b: usize) -> Dense {
        let mut acc = vector::zero(self.p.field(), self.p.dim(m + n - 1));
        for (k, c) in self.p.compose_basis(m, i, n, a, b) {
            acc[k] += &c;
        }
        acc
    }

    fn act_dense(&self, n: usize, xs: &Dense, sigma: &Permutation) -> Dense {
        let mut acc = vector::zero(self.p.field(), self.p.dim(n));
        for (a, ca) in vector::support(xs) {
            for (k, c) in self.p.act_basis(n, a, sigma) {
                acc[k] += &(ca * &c);
            }
        }
        acc
    }

    fn perms(&self, n: usize) -> Vec<Permutation> {
        if self.mode == CheckMode::Exhaustive && n <= 4 {
            Permutation::all(n).into_iter().filter(|s| !s.is_identity()).collect()
        } else {
            (1..n)
                .map(|k| Permutation::adjacent(n, k).expect("1 ≤ k < n"))
                .collect()
        }
    }

    fn run(&self, task: &Task) -> Partial {
        let mut out = Partial::default();
        let p = self.p;
        match *task {
            Task::Identity { n } => {
                let id = p.identity().into_coeffs();
                for a in 0..p.dim(n) {
                    let want = vector::unit(p.field(), p.dim(n), a);
                    let left = self.compose_left(1, 1, n, &id, a);
                    let v = (left != want).then(|| AxiomViolation {
                        axiom: IDENTITY_LEFT,
                        case: self.kind(n, a).into(),
                        arities: vec![1, n],
                        positions: vec![1],
                        operands: vec![self.label(n, a)],
                        permutation: None,
                        lhs: self.show(n, &left),
                        rhs: self.show(n, &want),
                    });
                    out.record(format!("{IDENTITY_LEFT}:{}", self.kind(n, a)), v);
                    for i in 1..=n {
                        let right = self.compose_right(n, i, 1, a, &id);
                        let v = (right != want).then(|| AxiomViolation {
                            axiom: IDENTITY_RIGHT,
                            case: self.kind(n, a).into(),
                            arities: vec![n, 1],
                            positions: vec![i],
                            operands: vec![self.label(n, a)],
                            permutation: None,
                            lhs: self.show(n, &right),
                            rhs: self.show(n, &want),
                        });
                        out.record(format!("{IDENTITY_RIGHT}:{}", self.kind(n, a)), v);
                    }
                }
            }
            Task::Action { n } => {
                let d = p.dim(n);
                let id = Permutation::identity(n);
                if self.mode == CheckMode::Exhaustive && n <= 4 {
                    let all = Permutation::all(n);
                    for a in 0..d {
                        let e = vector::unit(p.field(), d, a);
                        let fixed = self.act_dense(n, &e, &id);
                        if fixed != e {
                            out.record(
                                format!("{RIGHT_ACTION}:{}", self.kind(n, a)),
                                Some(self.action_violation(n, a, &id, &fixed, &e)),
                            );
                        }
                        for s in &all {
                            let once = self.act_dense(n, &e, s);
                            for t in &all {
                                let lhs = self.act_dense(n, &once, t);
                                let st = s.compose(t).expect("same degree");
                                let rhs = self.act_dense(n, &e, &st);
                                let v = (lhs != rhs).then(|| {
                                    let mut v = self.action_violation(n, a, s, &lhs, &rhs);
                                    v.permutation = Some(format!("{s} then {t}"));
                                    v
                                });
                                out.record(format!("{RIGHT_ACTION}:{}", self.kind(n, a)), v);
                            }
                        }
                    }
                } else {
                    // Coxeter relations on every basis vector.
                    let gens: Vec<Permutation> = (1..n)
                        .map(|k| Permutation::adjacent(n, k).expect("1 ≤ k < n"))
                        .collect();
                    for a in 0..d {
                        let e = vector::unit(p.field(), d, a);
                        for (x, sx) in gens.iter().enumerate() {
                            for (y, sy) in gens.iter().enumerate().skip(x) {
                                let word: Vec<&Permutation> = match y - x {
                                    0 => vec![sx, sx],
                                    1 => vec![sx, sy, sx, sy, sx, sy],
                                    _ => vec![sx, sy, sx, sy],
                                };
                                let mut v = e.clone();
                                for s in &word {
                                    v = self.act_dense(n, &v, s);
                                }
                                let bad = (v != e).then(|| {
                                    let mut viol = self.action_violation(n, a, sx, &v, &e);
                                    viol.permutation = Some(format!("relation s{} s{}", x + 1, y + 1));
                                    viol
                                });
                                out.record(format!("{RIGHT_ACTION}:{}", self.kind(n, a)), bad);
                            }
                        }
                    }
                }
            }
            Task::Sequential { l, m, n, i, j } => {
                // (λ ∘ᵢ μ) ∘_{i-1+j} ν = λ ∘ᵢ (μ ∘ⱼ ν)
                let inner: Vec<Vec<Dense>> = (0..p.dim(m))
                    .map(|mu| (0..p.dim(n)).map(|nu| self.basis_dense(m, j, n, mu, nu)).collect())
                    .collect();
                for lam in 0..p.dim(l) {
                    for mu in 0..p.dim(m) {
                        let lm = self.basis_dense(l, i, m, lam, mu);
                        for nu in 0..p.dim(n) {
                            let lhs = self.compose_left(l + m - 1, i - 1 + j, n, &lm, nu);
                            let rhs = self.compose_right(l, i, m + n - 1, lam, &inner[mu][nu]);
                            let kinds = [self.kind(l, lam), self.kind(m, mu), self.kind(n, nu)].join(",");
                            let v = (lhs != rhs).then(|| AxiomViolation {
                                axiom: SEQUENTIAL,
                                case: kinds.clone(),
                                arities: vec![l, m, n],
                                positions: vec![i, j],
                                operands: vec![self.label(l, lam), self.label(m, mu), self.label(n, nu)],
                                permutation: None,
                                lhs: self.show(l + m + n - 2, &lhs),
                                rhs: self.show(l + m + n - 2, &rhs),
                            });
                            out.record(format!("{SEQUENTIAL}:{kinds}"), v);
                        }
                    }
                }
            }
            Task::Parallel { l, m, n, i, k } => {
                // (λ ∘ᵢ μ) ∘_{k-1+m} ν = (λ ∘ₖ ν) ∘ᵢ μ
                for lam in 0..p.dim(l) {
                    let ln: Vec<Dense> = (0..p.dim(n)).map(|nu| self.basis_dense(l, k, n, lam, nu)).collect();
                    for mu in 0..p.dim(m) {
                        let lm = self.basis_dense(l, i, m, lam, mu);
                        for nu in 0..p.dim(n) {
                            let lhs = self.compose_left(l + m - 1, k - 1 + m, n, &lm, nu);
                            let rhs = self.compose_left(l + n - 1, i, m, &ln[nu], mu);
                            let kinds = [self.kind(l, lam), self.kind(m, mu), self.kind(n, nu)].join(",");
                            let v = (lhs != rhs).then(|| AxiomViolation {
                                axiom: PARALLEL,
                                case: kinds.clone(),
                                arities: vec![l, m, n],
                                positions: vec![i, k],
                                operands: vec![self.label(l, lam), self.label(m, mu), self.label(n, nu)],
                                permutation: None,
                                lhs: self.show(l + m + n - 2, &lhs),
                                rhs: self.show(l + m + n - 2, &rhs),
                            });
                            out.record(format!("{PARALLEL}:{kinds}"), v);
                        }
                    }
                }
            }
            Task::Inner { m, n, i } => {
                // μ ∘ᵢ (ν ∗ σ) = (μ ∘ᵢ ν) ∗ (id_m ∘ᵢ σ)
                let r = m + n - 1;
                for sigma in self.perms(n) {
                    let lifted = Permutation::identity(m)
                        .block_substitute(i, &sigma)
                        .expect("position in range");
                    for nu in 0..p.dim(n) {
                        let moved = self.act_dense(n, &vector::unit(p.field(), p.dim(n), nu), &sigma);
                        for mu in 0..p.dim(m) {
                            let lhs = self.compose_right(m, i, n, mu, &moved);
                            let rhs = self.act_dense(r, &self.basis_dense(m, i, n, mu, nu), &lifted);
                            let kinds = [self.kind(m, mu), self.kind(n, nu)].join(",");
                            let v = (lhs != rhs).then(|| AxiomViolation {
                                axiom: EQUIVARIANCE_INNER,
                                case: kinds.clone(),
                                arities: vec![m, n],
                                positions: vec![i],
                                operands: vec![self.label(m, mu), self.label(n, nu)],
                                permutation: Some(sigma.to_string()),
                                lhs: self.show(r, &lhs),
                                rhs: self.show(r, &rhs),
                            });
                            out.record(format!("{EQUIVARIANCE_INNER}:{kinds}"), v);
                        }
                    }
                }
            }
            Task::Outer { m, n, i } => {
                // (μ ∗ φ) ∘ᵢ ν = (μ ∘_{φ(i)} ν) ∗ (φ ∘ᵢ id_n)
                let r = m + n - 1;
                for phi in self.perms(m) {
                    let lifted = phi
                        .block_substitute(i, &Permutation::identity(n))
                        .expect("position in range");
                    for mu in 0..p.dim(m) {
                        let moved = self.act_dense(m, &vector::unit(p.field(), p.dim(m), mu), &phi);
                        for nu in 0..p.dim(n) {
                            let lhs = self.compose_left(m, i, n, &moved, nu);
                            let rhs = self.act_dense(r, &self.basis_dense(m, phi.apply(i), n, mu, nu), &lifted);
                            let kinds = [self.kind(m, mu), self.kind(n, nu)].join(",");
                            let v = (lhs != rhs).then(|| AxiomViolation {
                                axiom: EQUIVARIANCE_OUTER,
                                case: kinds.clone(),
                                arities: vec![m, n],
                                positions: vec![i],
                                operands: vec![self.label(m, mu), self.label(n, nu)],
                                permutation: Some(phi.to_string()),
                                lhs: self.show(r, &lhs),
                                rhs: self.show(r, &rhs),
                            });
                            out.record(format!("{EQUIVARIANCE_OUTER}:{kinds}"), v);
                        }
                    }
                }
            }
        }
        out
    }

    fn action_violation(&self, n: usize, a: usize, s: &Permutation, lhs: &Dense, rhs: &Dense) -> AxiomViolation {
        AxiomViolation {
            axiom: RIGHT_ACTION,
            case: self.kind(n, a).into(),
            arities: vec![n],
            positions: vec![],
            operands: vec![self.label(n, a)],
            permutation: Some(s.to_string()),
            lhs: self.show(n, lhs),
            rhs: self.show(n, rhs),
        }
    }
}

fn tasks(cap: usize) -> Vec<Task> {
    let mut out = Vec::new();
    for n in 0..=cap {
        out.push(Task::Identity { n });
        out.push(Task::Action { n });
    }
    for l in 1..=cap {
        for m in 0..=cap {
            for n in 0..=cap {
                let total = l + m + n;
                if total < 2 || total - 2 > cap {
                    continue;
                }
                if m >= 1 && l + m - 1 <= cap && m + n - 1 <= cap {
                    for i in 1..=l {
                        for j in 1..=m {
                            out.push(Task::Sequential { l, m, n, i, j });
                        }
                    }
                }
                if l + m - 1 <= cap && l + n - 1 <= cap {
                    for i in 1..=l {
                        for k in i + 1..=l {
                            out.push(Task::Parallel { l, m, n, i, k });
                        }
                    }
                }
            }
        }
    }
    for m in 1..=cap {
        for n in 0..=cap {
            if m + n - 1 > cap {
                continue;
            }
            for i in 1..=m {
                out.push(Task::Inner { m, n, i });
                out.push(Task::Outer { m, n, i });
            }
        }
    }
    out
}

/// Checks identity, associativity and equivariance on every basis instance
/// whose operand, intermediate and result arities all stay within
/// `min(budget, max_arity)`.
pub fn check_operad_axioms(p: &dyn OperadView, mode: CheckMode, budget: usize) -> AxiomReport {
    let cap = budget.min(p.max_arity());
    let checker = Checker { p, mode };
    let merged = tasks(cap)
        .par_iter()
        .map(|t| checker.run(t))
        .reduce(Partial::default, Partial::merge);
    let mut violations = merged.violations;
    trim(&mut violations);
    AxiomReport {
        mode,
        budget,
        instances: merged.instances,
        violation_count: merged.violation_count,
        violations,
        coverage: merged.coverage,
    }
}
