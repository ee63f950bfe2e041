use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{solve, vector, Field, Matrix, Scalar};
use crate::perm::Permutation;

use super::element::Element;
use super::view::{OperadExt, OperadView, Terms};

/// Raw tables for a [`TabulatedOperad`].
///
/// `actions[n][k - 1]` is the row-image matrix of `s_k` on component `n`.
/// `compose[m][i - 1][n][a][b]` is `e_a ∘ᵢ e_b`; `compose[0]` is empty and
/// entries with `m + n - 1 > max_arity` are empty.
#[derive(Clone, Debug)]
pub struct OperadTables {
    pub field: Field,
    pub max_arity: usize,
    pub dims: Vec<usize>,
    pub labels: Vec<Vec<String>>,
    pub unit0_index: Option<usize>,
    pub unit2_coeffs: Option<Vec<Scalar>>,
    pub actions: Vec<Vec<Matrix>>,
    pub compose: Vec<Vec<Vec<Vec<Vec<Terms>>>>>,
}

/// An operad given entirely by stored tables.
#[derive(Clone, Debug)]
pub struct TabulatedOperad {
    tables: OperadTables,
    identity: Element,
}

impl TabulatedOperad {
    pub fn from_tables(tables: OperadTables) -> Result<Self> {
        check_shapes(&tables)?;
        check_coxeter(&tables)?;
        let identity = derive_identity(&tables)?;
        Ok(TabulatedOperad { tables, identity })
    }

    pub fn tables(&self) -> &OperadTables {
        &self.tables
    }

    pub fn dims(&self) -> &[usize] {
        &self.tables.dims
    }

    /// Replaces the stored 2-unit candidate.
    pub fn with_unit2(mut self, unit2: Option<Element>) -> Result<Self> {
        if let Some(u) = &unit2 {
            if u.arity() != 2 {
                return Err(Error::InvalidArgument("2-unit must have arity 2".into()));
            }
            self.check_element(u)?;
        }
        self.tables.unit2_coeffs = unit2.map(Element::into_coeffs);
        Ok(self)
    }

    /// Conjugates every table by a change of basis.
    ///
    /// Row `a` of `bases[n]` is the new `a`-th basis vector of component `n`
    /// written in the old basis.
    pub fn rebase(&self, bases: &[Matrix]) -> Result<TabulatedOperad> {
        let t = &self.tables;
        let field = t.field;
        if bases.len() != t.max_arity + 1 {
            return Err(Error::Shape(format!(
                "need {} basis matrices, got {}",
                t.max_arity + 1,
                bases.len()
            )));
        }
        let mut inverses = Vec::with_capacity(bases.len());
        for (n, b) in bases.iter().enumerate() {
            if b.field() != field {
                return Err(Error::FieldMismatch {
                    expected: field,
                    found: b.field(),
                });
            }
            if b.rows() != t.dims[n] || b.cols() != t.dims[n] {
                return Err(Error::Shape(format!("basis matrix for arity {n} has wrong shape")));
            }
            inverses.push(
                b.inverse()
                    .ok_or_else(|| Error::InvalidArgument(format!("basis change in arity {n} is singular")))?,
            );
        }
        let to_new = |n: usize, old: &[Scalar]| inverses[n].left_mul(old);

        let actions = t
            .actions
            .iter()
            .enumerate()
            .map(|(n, mats)| {
                mats.iter()
                    .map(|a| bases[n].mul(a)?.mul(&inverses[n]))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;

        let compose = (0..=t.max_arity)
            .map(|m| {
                (1..=m)
                    .map(|i| {
                        (0..=t.max_arity)
                            .map(|n| {
                                if m + n - 1 > t.max_arity {
                                    return Vec::new();
                                }
                                (0..t.dims[m])
                                    .into_par_iter()
                                    .map(|a| {
                                        let x = Element::new(m, bases[m].row(a).to_vec());
                                        (0..t.dims[n])
                                            .map(|b| {
                                                let y = Element::new(n, bases[n].row(b).to_vec());
                                                let old = self.compose(i, &x, &y).expect("in range");
                                                dense_to_terms(&to_new(m + n - 1, old.coeffs()))
                                            })
                                            .collect()
                                    })
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();

        let unit0_index = match t.unit0_index {
            Some(k) => {
                let new = to_new(0, &vector::unit(field, t.dims[0], k));
                let pos = unit_vector_position(&new)
                    .ok_or_else(|| Error::InvalidArgument("basis change must keep the 0-unit a basis vector".into()))?;
                Some(pos)
            }
            None => None,
        };
        let unit2_coeffs = t.unit2_coeffs.as_ref().map(|u| to_new(2, u));
        let labels = (0..=t.max_arity)
            .map(|n| (0..t.dims[n]).map(|k| format!("b{n}_{k}")).collect())
            .collect();
        TabulatedOperad::from_tables(OperadTables {
            field,
            max_arity: t.max_arity,
            dims: t.dims.clone(),
            labels,
            unit0_index,
            unit2_coeffs,
            actions,
            compose,
        })
    }

    pub fn to_json(&self) -> TabulatedOperadJson {
        let t = &self.tables;
        let dense = |n: usize, terms: &Terms| -> Vec<String> {
            let mut v = vector::zero(t.field, t.dims[n]);
            for (k, c) in terms {
                v[*k] += c;
            }
            vector::to_strings(&v)
        };
        TabulatedOperadJson {
            field: t.field,
            max_arity: t.max_arity,
            dims: t.dims.clone(),
            labels: t.labels.clone(),
            unit0_index: t.unit0_index,
            unit2_coeffs: t.unit2_coeffs.as_ref().map(|u| vector::to_strings(u)),
            actions: t
                .actions
                .iter()
                .map(|mats| {
                    mats.iter()
                        .map(|a| a.row_vecs().iter().map(|r| vector::to_strings(r)).collect())
                        .collect()
                })
                .collect(),
            compose: t
                .compose
                .iter()
                .enumerate()
                .map(|(m, by_i)| {
                    by_i.iter()
                        .map(|by_n| {
                            by_n.iter()
                                .enumerate()
                                .map(|(n, grid)| {
                                    grid.iter()
                                        .map(|row| row.iter().map(|terms| dense(m + n - 1, terms)).collect())
                                        .collect()
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(json: &TabulatedOperadJson) -> Result<Self> {
        let field = json.field;
        let parse_vec = |v: &[String]| -> Result<Vec<Scalar>> { v.iter().map(|s| field.parse(s)).collect() };
        let actions = json
            .actions
            .iter()
            .enumerate()
            .map(|(n, mats)| {
                mats.iter()
                    .map(|rows| {
                        let rows = rows.iter().map(|r| parse_vec(r)).collect::<Result<Vec<_>>>()?;
                        let d = json.dims.get(n).copied().unwrap_or(0);
                        Matrix::from_rows(field, d, rows)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let compose = json
            .compose
            .iter()
            .map(|by_i| {
                by_i.iter()
                    .map(|by_n| {
                        by_n.iter()
                            .map(|grid| {
                                grid.iter()
                                    .map(|row| {
                                        row.iter()
                                            .map(|v| parse_vec(v).map(|d| dense_to_terms(&d)))
                                            .collect::<Result<Vec<_>>>()
                                    })
                                    .collect::<Result<Vec<_>>>()
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        // Dense vectors must have the target dimension; sparse storage loses that, so check here.
        for (m, by_i) in json.compose.iter().enumerate() {
            for by_n in by_i {
                for (n, grid) in by_n.iter().enumerate() {
                    let target = (m + n).checked_sub(1).and_then(|k| json.dims.get(k).copied());
                    for row in grid {
                        for v in row {
                            if Some(v.len()) != target {
                                return Err(Error::Shape(format!(
                                    "compose[{m}][..][{n}] entry has length {}, expected {:?}",
                                    v.len(),
                                    target
                                )));
                            }
                        }
                    }
                }
            }
        }
        TabulatedOperad::from_tables(OperadTables {
            field,
            max_arity: json.max_arity,
            dims: json.dims.clone(),
            labels: json.labels.clone(),
            unit0_index: json.unit0_index,
            unit2_coeffs: json.unit2_coeffs.as_deref().map(parse_vec).transpose()?,
            actions,
            compose,
        })
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_json())?)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: TabulatedOperadJson = serde_json::from_str(s)?;
        TabulatedOperad::from_json(&json)
    }
}

/// Serialized operad tables; every scalar is a string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TabulatedOperadJson {
    pub field: Field,
    pub max_arity: usize,
    pub dims: Vec<usize>,
    pub labels: Vec<Vec<String>>,
    pub unit0_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit2_coeffs: Option<Vec<String>>,
    pub actions: Vec<Vec<Vec<Vec<String>>>>,
    pub compose: Vec<Vec<Vec<Vec<Vec<Vec<String>>>>>>,
}

fn dense_to_terms(v: &[Scalar]) -> Terms {
    vector::support(v).map(|(k, c)| (k, c.clone())).collect()
}

fn normalize(terms: &Terms, dim: usize, field: Field) -> Terms {
    let mut v = vector::zero(field, dim);
    for (k, c) in terms {
        v[*k] += c;
    }
    dense_to_terms(&v)
}

fn unit_vector_position(v: &[Scalar]) -> Option<usize> {
    let support: Vec<(usize, &Scalar)> = vector::support(v).collect();
    match support.as_slice() {
        [(k, c)] if c.is_one() => Some(*k),
        _ => None,
    }
}

fn check_shapes(t: &OperadTables) -> Result<()> {
    let big_n = t.max_arity;
    let shape = |msg: String| Err(Error::Shape(msg));
    if t.dims.len() != big_n + 1 {
        return shape(format!("dims has {} entries, expected {}", t.dims.len(), big_n + 1));
    }
    if t.labels.len() != big_n + 1 || t.labels.iter().zip(&t.dims).any(|(l, d)| l.len() != *d) {
        return shape("labels do not match dims".into());
    }
    if let Some(k) = t.unit0_index {
        if k >= t.dims[0] {
            return shape(format!("unit0_index {k} out of range"));
        }
    }
    if let Some(u) = &t.unit2_coeffs {
        if big_n < 2 || u.len() != t.dims[2] {
            return shape("unit2_coeffs does not match dims[2]".into());
        }
        if let Some(c) = u.iter().find(|c| c.field() != t.field) {
            return Err(Error::FieldMismatch {
                expected: t.field,
                found: c.field(),
            });
        }
    }
    if t.actions.len() != big_n + 1 {
        return shape("actions must have one entry per arity".into());
    }
    for (n, mats) in t.actions.iter().enumerate() {
        if mats.len() != n.saturating_sub(1) {
            return shape(format!(
                "arity {n} needs {} adjacent transpositions",
                n.saturating_sub(1)
            ));
        }
        for a in mats {
            if a.field() != t.field {
                return Err(Error::FieldMismatch {
                    expected: t.field,
                    found: a.field(),
                });
            }
            if a.rows() != t.dims[n] || a.cols() != t.dims[n] {
                return shape(format!("action matrix in arity {n} has wrong shape"));
            }
        }
    }
    if t.compose.len() != big_n + 1 || !t.compose[0].is_empty() {
        return shape("compose must have one entry per arity, empty for arity 0".into());
    }
    for m in 1..=big_n {
        if t.compose[m].len() != m {
            return shape(format!("compose[{m}] needs {m} positions"));
        }
        for by_n in &t.compose[m] {
            if by_n.len() != big_n + 1 {
                return shape(format!("compose[{m}][i] needs {} arities", big_n + 1));
            }
            for (n, grid) in by_n.iter().enumerate() {
                if m + n - 1 > big_n {
                    if !grid.is_empty() {
                        return shape(format!("compose[{m}][..][{n}] lies beyond the truncation"));
                    }
                    continue;
                }
                let target = t.dims[m + n - 1];
                if grid.len() != t.dims[m] || grid.iter().any(|row| row.len() != t.dims[n]) {
                    return shape(format!("compose[{m}][..][{n}] has wrong shape"));
                }
                for terms in grid.iter().flatten() {
                    for (k, c) in terms {
                        if *k >= target {
                            return shape(format!("compose[{m}][..][{n}] index {k} out of range"));
                        }
                        if c.field() != t.field {
                            return Err(Error::FieldMismatch {
                                expected: t.field,
                                found: c.field(),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The adjacent transpositions satisfy the Coxeter relations of `Sₙ`, so the
/// action assembled from them by factorization is a well-defined right action.
fn check_coxeter(t: &OperadTables) -> Result<()> {
    for (n, mats) in t.actions.iter().enumerate() {
        let id = Matrix::identity(t.field, t.dims[n]);
        for (a, sa) in mats.iter().enumerate() {
            for (b, sb) in mats.iter().enumerate().skip(a) {
                let (prod, order) = match b - a {
                    0 => (sa.clone(), 2),
                    1 => (sa.mul(sb)?, 3),
                    _ => (sa.mul(sb)?, 2),
                };
                let mut power = id.clone();
                for _ in 0..order {
                    power = power.mul(&prod)?;
                }
                if power != id {
                    return Err(Error::Structural(format!(
                        "action tables in arity {n} violate the relation between s_{} and s_{}",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

fn derive_identity(t: &OperadTables) -> Result<Element> {
    let field = t.field;
    if t.max_arity < 1 || t.dims[1] == 0 {
        return Err(Error::Structural(
            "arity-1 component is empty, so there is no identity".into(),
        ));
    }
    let d = t.dims[1];
    let grid = &t.compose[1][0][1];
    let dense = |terms: &Terms| {
        let mut v = vector::zero(field, d);
        for (k, c) in terms {
            v[*k] += c;
        }
        v
    };
    // Unknown e with e ∘ b = b and b ∘ e = b for every basis vector b.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for b in 0..d {
        let left: Vec<Vec<Scalar>> = (0..d).map(|a| dense(&grid[a][b])).collect();
        let right: Vec<Vec<Scalar>> = (0..d).map(|a| dense(&grid[b][a])).collect();
        for c in 0..d {
            rows.push((0..d).map(|a| left[a][c].clone()).collect());
            rhs.push(if b == c { field.one() } else { field.zero() });
            rows.push((0..d).map(|a| right[a][c].clone()).collect());
            rhs.push(if b == c { field.one() } else { field.zero() });
        }
    }
    let system = Matrix::from_rows(field, d, rows)?;
    let e =
        solve(&system, &rhs).ok_or_else(|| Error::Structural("arity-1 composition has no two-sided unit".into()))?;
    Ok(Element::new(1, e))
}

impl OperadView for TabulatedOperad {
    fn field(&self) -> Field {
        self.tables.field
    }

    fn max_arity(&self) -> usize {
        self.tables.max_arity
    }

    fn dim(&self, n: usize) -> usize {
        self.tables.dims[n]
    }

    fn basis_label(&self, n: usize, index: usize) -> String {
        self.tables.labels[n][index].clone()
    }

    fn act_basis(&self, n: usize, index: usize, sigma: &Permutation) -> Terms {
        let field = self.tables.field;
        let mut v = vector::unit(field, self.tables.dims[n], index);
        for k in sigma.adjacent_factorization() {
            v = self.tables.actions[n][k - 1].left_mul(&v);
        }
        dense_to_terms(&v)
    }

    fn compose_basis(&self, m: usize, i: usize, n: usize, a: usize, b: usize) -> Terms {
        self.tables.compose[m][i - 1][n][a][b].clone()
    }

    fn identity(&self) -> Element {
        self.identity.clone()
    }

    fn unit0(&self) -> Option<Element> {
        let field = self.tables.field;
        self.tables
            .unit0_index
            .map(|k| Element::basis(field, 0, self.tables.dims[0], k))
    }

    fn unit2(&self) -> Option<Element> {
        self.tables.unit2_coeffs.clone().map(|c| Element::new(2, c))
    }
}

/// Materializes every action and composition table of `p`.
pub fn tabulate(p: &dyn OperadView) -> Result<TabulatedOperad> {
    let field = p.field();
    let big_n = p.max_arity();
    let dims: Vec<usize> = (0..=big_n).map(|n| p.dim(n)).collect();
    let labels = (0..=big_n)
        .map(|n| (0..dims[n]).map(|k| p.basis_label(n, k)).collect())
        .collect();
    let actions = (0..=big_n)
        .map(|n| {
            (1..n)
                .map(|k| p.action_matrix(n, &Permutation::adjacent(n, k).expect("1 ≤ k < n")))
                .collect()
        })
        .collect();
    let compose = (0..=big_n)
        .map(|m| {
            (1..=m)
                .map(|i| {
                    (0..=big_n)
                        .map(|n| {
                            if m + n - 1 > big_n {
                                return Vec::new();
                            }
                            (0..dims[m])
                                .into_par_iter()
                                .map(|a| {
                                    (0..dims[n])
                                        .map(|b| normalize(&p.compose_basis(m, i, n, a, b), dims[m + n - 1], field))
                                        .collect()
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let unit0_index = p.unit0().and_then(|u| unit_vector_position(u.coeffs()));
    TabulatedOperad::from_tables(OperadTables {
        field,
        max_arity: big_n,
        dims,
        labels,
        unit0_index,
        unit2_coeffs: p.unit2().map(Element::into_coeffs),
        actions,
        compose,
    })
}
