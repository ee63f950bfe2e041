use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::Result;
use crate::linalg::{vector, Field, Scalar};
use crate::operad::{BasisKind, Element, OperadView, Terms};
use crate::perm::Permutation;
use crate::trident::TridentAlgebra;

/// Branches of the action and composition rules, in evaluation order.
pub const RULE_BRANCHES: [&str; 24] = [
    "act unit",
    "act phi",
    "act psi, order kept",
    "act psi, order reversed",
    "unit∘unit",
    "unit∘phi",
    "unit∘psi",
    "phi∘unit, i<s",
    "phi∘unit, i=s",
    "phi∘unit, i>s",
    "phi∘phi, i<s",
    "phi∘phi, i=s",
    "phi∘phi, i>s",
    "phi∘psi, i≠s",
    "phi∘psi, i=s",
    "psi∘unit, s<i1",
    "psi∘unit, s=i1",
    "psi∘unit, i1<s<i2",
    "psi∘unit, s=i2",
    "psi∘unit, s>i2",
    "psi∘phi, s∉{i1,i2}",
    "psi∘phi, s=i1",
    "psi∘phi, s=i2",
    "psi∘psi",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Basis {
    Unit,
    /// `φₖ(aⱼ)`, `k` 1-based.
    Phi {
        k: usize,
        j: usize,
    },
    /// `ψ_{i1 i2}(μₛ)`, `i1 < i2` 1-based.
    Psi {
        i1: usize,
        i2: usize,
        s: usize,
    },
}

/// Sparse data of the trident, precomputed for the rules.
struct Constants {
    swap: Vec<Terms>,
    f: Vec<Terms>,
    /// `ab`
    mul: Vec<Vec<Terms>>,
    g: Vec<Vec<Terms>>,
    /// `g(a, b) + f(a)·₂b`
    g_f2: Vec<Vec<Terms>>,
    /// `g(b, a) + f(a)·₁b`
    g_f1: Vec<Vec<Terms>>,
    /// `a·μ`
    left: Vec<Vec<Terms>>,
    /// `μ·₁b`
    right1: Vec<Vec<Terms>>,
    /// `μ·₂b`
    right2: Vec<Vec<Terms>>,
}

fn sparse(v: &[Scalar]) -> Terms {
    vector::support(v).map(|(k, c)| (k, c.clone())).collect()
}

impl Constants {
    fn new(t: &TridentAlgebra) -> Self {
        let (d, m) = (t.dim_bar(), t.dim_m());
        let md = &t.module;
        let alg = &t.algebra;
        let table = |f: &dyn Fn(usize, usize) -> Vec<Scalar>, rows: usize, cols: usize| {
            (0..rows)
                .map(|x| (0..cols).map(|y| sparse(&f(x, y))).collect())
                .collect::<Vec<Vec<Terms>>>()
        };
        Constants {
            swap: (0..m).map(|s| sparse(md.swap.row(s))).collect(),
            f: (0..d).map(|a| sparse(t.f_basis(a))).collect(),
            mul: table(&|a, b| alg.mul_basis(a, b).to_vec(), d, d),
            g: table(&|a, b| t.g[a][b].clone(), d, d),
            g_f2: table(
                &|a, b| vector::add(&t.g[a][b], &md.right2[b].left_mul(t.f_basis(a))),
                d,
                d,
            ),
            g_f1: table(
                &|a, b| vector::add(&t.g[b][a], &md.right1[b].left_mul(t.f_basis(a))),
                d,
                d,
            ),
            left: table(&|a, s| md.left[a].left_mul(&md.basis(s)), d, m),
            right1: table(&|s, b| md.right1[b].left_mul(&md.basis(s)), m, d),
            right2: table(&|s, b| md.right2[b].left_mul(&md.basis(s)), m, d),
        }
    }
}

/// The operad `F(A, M, f, g)` truncated at `max_arity`, evaluated from its rules.
///
/// Basis of arity `n`: `1ₙ`, then `φₖ(aⱼ)` ordered by `(k, j)`, then
/// `ψ_{i1 i2}(μₛ)` ordered by `(i1, i2, s)`.
pub struct FOperad {
    trident: Arc<TridentAlgebra>,
    max_arity: usize,
    d: usize,
    m: usize,
    layout: Vec<Vec<Basis>>,
    consts: Constants,
    hits: Vec<AtomicU64>,
}

impl FOperad {
    /// Validates `t` and builds `F(t)`.
    pub fn new(t: TridentAlgebra, max_arity: usize) -> Result<Self> {
        t.require_valid()?;
        Ok(FOperad::new_unchecked(t, max_arity))
    }

    /// Builds the operad from the rules without validating `t`.
    pub fn new_unchecked(t: TridentAlgebra, max_arity: usize) -> Self {
        let (d, m) = (t.dim_bar(), t.dim_m());
        let layout = (0..=max_arity)
            .map(|n| {
                let mut v = vec![Basis::Unit];
                for k in 1..=n {
                    v.extend((0..d).map(|j| Basis::Phi { k, j }));
                }
                for i1 in 1..=n {
                    for i2 in i1 + 1..=n {
                        v.extend((0..m).map(|s| Basis::Psi { i1, i2, s }));
                    }
                }
                v
            })
            .collect();
        FOperad {
            consts: Constants::new(&t),
            trident: Arc::new(t),
            max_arity,
            d,
            m,
            layout,
            hits: RULE_BRANCHES.iter().map(|_| AtomicU64::new(0)).collect(),
        }
    }

    pub fn trident(&self) -> &TridentAlgebra {
        &self.trident
    }

    /// `1 + d·n + m·n(n−1)/2`.
    pub fn expected_dim(d: usize, m: usize, n: usize) -> usize {
        1 + d * n + m * n * n.saturating_sub(1) / 2
    }

    pub fn unit_index(&self) -> usize {
        0
    }

    pub fn phi_index(&self, n: usize, k: usize, j: usize) -> usize {
        debug_assert!((1..=n).contains(&k) && j < self.d);
        1 + (k - 1) * self.d + j
    }

    pub fn psi_index(&self, n: usize, i1: usize, i2: usize, s: usize) -> usize {
        debug_assert!(1 <= i1 && i1 < i2 && i2 <= n && s < self.m);
        let before: usize = (1..i1).map(|a| n - a).sum();
        1 + n * self.d + (before + i2 - i1 - 1) * self.m + s
    }

    /// Branch name and number of times it fired since the last reset.
    pub fn rule_hits(&self) -> BTreeMap<&'static str, u64> {
        RULE_BRANCHES
            .iter()
            .zip(&self.hits)
            .map(|(name, h)| (*name, h.load(Ordering::Relaxed)))
            .collect()
    }

    pub fn reset_rule_hits(&self) {
        for h in &self.hits {
            h.store(0, Ordering::Relaxed);
        }
    }

    fn hit(&self, branch: usize) {
        self.hits[branch].fetch_add(1, Ordering::Relaxed);
    }

    fn one(&self) -> Scalar {
        self.trident.field().one()
    }

    fn phi(&self, out: &mut Terms, n: usize, k: usize, a: &Terms) {
        for (j, c) in a {
            out.push((self.phi_index(n, k, *j), c.clone()));
        }
    }

    fn psi(&self, out: &mut Terms, n: usize, i1: usize, i2: usize, mu: &Terms) {
        for (s, c) in mu {
            out.push((self.psi_index(n, i1, i2, *s), c.clone()));
        }
    }
}

impl OperadView for FOperad {
    fn field(&self) -> Field {
        self.trident.field()
    }

    fn max_arity(&self) -> usize {
        self.max_arity
    }

    fn dim(&self, n: usize) -> usize {
        self.layout[n].len()
    }

    fn basis_label(&self, n: usize, index: usize) -> String {
        let t = &self.trident;
        match self.layout[n][index] {
            Basis::Unit => format!("1_{n}"),
            Basis::Phi { k, j } => format!("phi^({n})_{k}({})", t.algebra.name(j)),
            Basis::Psi { i1, i2, s } => format!("psi^({n})_{{{i1},{i2}}}({})", t.module.names()[s]),
        }
    }

    fn basis_kind(&self, n: usize, index: usize) -> BasisKind {
        match self.layout[n][index] {
            Basis::Unit => BasisKind::Unit,
            Basis::Phi { .. } => BasisKind::Phi,
            Basis::Psi { .. } => BasisKind::Psi,
        }
    }

    fn act_basis(&self, n: usize, index: usize, sigma: &Permutation) -> Terms {
        let mut out = Vec::new();
        match self.layout[n][index] {
            Basis::Unit => {
                self.hit(0);
                out.push((0, self.one()));
            }
            Basis::Phi { k, j } => {
                self.hit(1);
                out.push((self.phi_index(n, sigma.apply_inverse(k), j), self.one()));
            }
            Basis::Psi { i1, i2, s } => {
                let (p, q) = (sigma.apply_inverse(i1), sigma.apply_inverse(i2));
                if p < q {
                    self.hit(2);
                    out.push((self.psi_index(n, p, q, s), self.one()));
                } else {
                    self.hit(3);
                    self.psi(&mut out, n, q, p, &self.consts.swap[s]);
                }
            }
        }
        out
    }

    fn compose_basis(&self, m: usize, s: usize, n: usize, a: usize, b: usize) -> Terms {
        let r = m + n - 1;
        let c = &self.consts;
        let mut out = Vec::new();
        match (self.layout[m][a], self.layout[n][b]) {
            (Basis::Unit, Basis::Unit) => {
                self.hit(4);
                out.push((0, self.one()));
            }
            (Basis::Unit, Basis::Phi { k, j }) => {
                self.hit(5);
                out.push((self.phi_index(r, s + k - 1, j), self.one()));
            }
            (Basis::Unit, Basis::Psi { i1, i2, s: t }) => {
                self.hit(6);
                out.push((self.psi_index(r, s + i1 - 1, s + i2 - 1, t), self.one()));
            }
            (Basis::Phi { k: i, j: x }, Basis::Unit) => {
                let a_terms = vec![(x, self.one())];
                if i < s {
                    self.hit(7);
                    self.phi(&mut out, r, i, &a_terms);
                } else if i == s {
                    self.hit(8);
                    for k in i..i + n {
                        self.phi(&mut out, r, k, &a_terms);
                    }
                    for k1 in i..i + n {
                        for k2 in k1 + 1..i + n {
                            self.psi(&mut out, r, k1, k2, &c.f[x]);
                        }
                    }
                } else {
                    self.hit(9);
                    self.phi(&mut out, r, i + n - 1, &a_terms);
                }
            }
            (Basis::Phi { k: i, j: x }, Basis::Phi { k: j, j: y }) => {
                if i < s {
                    self.hit(10);
                    self.psi(&mut out, r, i, s + j - 1, &c.g[x][y]);
                } else if i == s {
                    self.hit(11);
                    for k in i..=i + j - 2 {
                        self.psi(&mut out, r, k, i + j - 1, &c.g_f2[x][y]);
                    }
                    self.phi(&mut out, r, i + j - 1, &c.mul[x][y]);
                    for k in i + j..=i + n - 1 {
                        self.psi(&mut out, r, i + j - 1, k, &c.g_f1[x][y]);
                    }
                } else {
                    self.hit(12);
                    self.psi(&mut out, r, s + j - 1, i + n - 1, &c.g[y][x]);
                }
            }
            (Basis::Phi { k: i, j: x }, Basis::Psi { i1: j1, i2: j2, s: t }) => {
                if i != s {
                    self.hit(13);
                } else {
                    self.hit(14);
                    self.psi(&mut out, r, i + j1 - 1, i + j2 - 1, &c.left[x][t]);
                }
            }
            (Basis::Psi { i1, i2, s: t }, Basis::Unit) => {
                let mu = vec![(t, self.one())];
                if s < i1 {
                    self.hit(15);
                    self.psi(&mut out, r, i1 + n - 1, i2 + n - 1, &mu);
                } else if s == i1 {
                    self.hit(16);
                    for k in i1..i1 + n {
                        self.psi(&mut out, r, k, i2 + n - 1, &mu);
                    }
                } else if s < i2 {
                    self.hit(17);
                    self.psi(&mut out, r, i1, i2 + n - 1, &mu);
                } else if s == i2 {
                    self.hit(18);
                    for k in i2..i2 + n {
                        self.psi(&mut out, r, i1, k, &mu);
                    }
                } else {
                    self.hit(19);
                    self.psi(&mut out, r, i1, i2, &mu);
                }
            }
            (Basis::Psi { i1, i2, s: t }, Basis::Phi { k: j, j: y }) => {
                if s == i1 {
                    self.hit(21);
                    self.psi(&mut out, r, i1 + j - 1, i2 + n - 1, &c.right1[t][y]);
                } else if s == i2 {
                    self.hit(22);
                    self.psi(&mut out, r, i1, i2 + j - 1, &c.right2[t][y]);
                } else {
                    self.hit(20);
                }
            }
            (Basis::Psi { .. }, Basis::Psi { .. }) => {
                self.hit(23);
            }
        }
        out
    }

    fn identity(&self) -> Element {
        Element::basis(self.field(), 1, self.dim(1), 0)
    }

    fn unit0(&self) -> Option<Element> {
        Some(Element::basis(self.field(), 0, 1, 0))
    }

    fn unit2(&self) -> Option<Element> {
        (self.max_arity >= 2).then(|| Element::basis(self.field(), 2, self.dim(2), 0))
    }
}

/// `F(T)` truncated at arity `max_arity`; rejects invalid tridents.
pub fn build_f(t: TridentAlgebra, max_arity: usize) -> Result<FOperad> {
    FOperad::new(t, max_arity)
}
