use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar};

use super::algebra::AugmentedAlgebra;
use super::module::TridentModule;
use super::system::TridentAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim_bar: usize,
    #[serde(default)]
    pub names: Vec<String>,
    /// `mul[i][j]` is `aᵢ·aⱼ`.
    pub mul: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub names: Vec<String>,
    /// Row `s` is `μₛ ∗ (12)`.
    pub swap: Vec<Vec<String>>,
    /// `left[j][s]` is `aⱼ·μₛ`.
    pub left: Vec<Vec<Vec<String>>>,
    /// `right1[s][j]` is `μₛ·₁aⱼ`.
    pub right1: Vec<Vec<Vec<String>>>,
    /// `right2[s][j]` is `μₛ·₂aⱼ`.
    pub right2: Vec<Vec<Vec<String>>>,
}

/// Wire form of a trident; a missing `module` means `M = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TridentJson {
    pub field: Field,
    pub algebra: AlgebraJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleJson>,
    /// `f[j]` is `f(aⱼ)`.
    #[serde(default)]
    pub f: Vec<Vec<String>>,
    /// `g[i][j]` is `g(aᵢ, aⱼ)`.
    #[serde(default)]
    pub g: Vec<Vec<Vec<String>>>,
}

fn parse_vec(field: Field, v: &[String], len: usize, what: &str) -> Result<Vec<Scalar>> {
    if v.len() != len {
        return Err(Error::Shape(format!(
            "{what}: expected {len} entries, found {}",
            v.len()
        )));
    }
    v.iter().map(|s| field.parse(s)).collect()
}

fn parse_matrix(field: Field, rows: &[Vec<String>], n_rows: usize, n_cols: usize, what: &str) -> Result<Matrix> {
    if rows.len() != n_rows {
        return Err(Error::Shape(format!(
            "{what}: expected {n_rows} rows, found {}",
            rows.len()
        )));
    }
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(r, row)| parse_vec(field, row, n_cols, &format!("{what}[{r}]")))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, n_cols, parsed)
}

fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

impl AlgebraJson {
    pub fn to_algebra(&self, field: Field) -> Result<AugmentedAlgebra> {
        let d = self.dim_bar;
        let names = if self.names.is_empty() {
            default_names("a", d)
        } else if self.names.len() == d {
            self.names.clone()
        } else {
            return Err(Error::Shape(format!("algebra.names: expected {d} names")));
        };
        if self.mul.len() != d {
            return Err(Error::Shape(format!(
                "algebra.mul: expected {d} rows, found {}",
                self.mul.len()
            )));
        }
        let mul = self
            .mul
            .iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != d {
                    return Err(Error::Shape(format!("algebra.mul[{i}]: expected {d} entries")));
                }
                row.iter()
                    .enumerate()
                    .map(|(j, v)| parse_vec(field, v, d, &format!("algebra.mul[{i}][{j}]")))
                    .collect()
            })
            .collect::<Result<Vec<_>>>()?;
        AugmentedAlgebra::new(field, names, mul)
    }

    pub fn from_algebra(a: &AugmentedAlgebra) -> Self {
        AlgebraJson {
            dim_bar: a.dim_bar(),
            names: a.names().to_vec(),
            mul: a
                .mul_table()
                .iter()
                .map(|row| row.iter().map(|v| vector::to_strings(v)).collect())
                .collect(),
        }
    }
}

impl ModuleJson {
    pub fn to_module(&self, field: Field, d: usize) -> Result<TridentModule> {
        let m = self.dim;
        let names = if self.names.is_empty() {
            default_names("mu", m)
        } else if self.names.len() == m {
            self.names.clone()
        } else {
            return Err(Error::Shape(format!("module.names: expected {m} names")));
        };
        let swap = parse_matrix(field, &self.swap, m, m, "module.swap")?;
        if self.left.len() != d {
            return Err(Error::Shape(format!(
                "module.left: expected {d} matrices, found {}",
                self.left.len()
            )));
        }
        let left = self
            .left
            .iter()
            .enumerate()
            .map(|(j, rows)| parse_matrix(field, rows, m, m, &format!("module.left[{j}]")))
            .collect::<Result<Vec<_>>>()?;
        let right = |data: &[Vec<Vec<String>>], what: &str| -> Result<Vec<Matrix>> {
            if data.len() != m || data.iter().any(|r| r.len() != d) {
                return Err(Error::Shape(format!("module.{what}: expected {m}x{d} vectors")));
            }
            (0..d)
                .map(|j| {
                    let rows = (0..m)
                        .map(|s| parse_vec(field, &data[s][j], m, &format!("module.{what}[{s}][{j}]")))
                        .collect::<Result<Vec<_>>>()?;
                    Matrix::from_rows(field, m, rows)
                })
                .collect()
        };
        TridentModule::new(
            field,
            names,
            swap,
            left,
            right(&self.right1, "right1")?,
            right(&self.right2, "right2")?,
        )
    }

    pub fn from_module(md: &TridentModule) -> Self {
        let m = md.dim();
        let d = md.dim_bar();
        let mat = |x: &Matrix| x.row_vecs().iter().map(|r| vector::to_strings(r)).collect::<Vec<_>>();
        let right = |mats: &[Matrix]| {
            (0..m)
                .map(|s| (0..d).map(|j| vector::to_strings(mats[j].row(s))).collect())
                .collect()
        };
        ModuleJson {
            dim: m,
            names: md.names().to_vec(),
            swap: mat(&md.swap),
            left: md.left.iter().map(mat).collect(),
            right1: right(&md.right1),
            right2: right(&md.right2),
        }
    }
}

impl TridentJson {
    /// Builds the trident, optionally reinterpreting every scalar in `field_override`.
    pub fn to_trident(&self, field_override: Option<Field>) -> Result<TridentAlgebra> {
        let field = field_override.unwrap_or(self.field);
        let algebra = self.algebra.to_algebra(field)?;
        let d = algebra.dim_bar();
        let module = match &self.module {
            Some(mj) => mj.to_module(field, d)?,
            None => TridentModule::zero(field, d),
        };
        let m = module.dim();
        let f = if self.f.is_empty() && (m == 0 || d == 0) {
            Matrix::zeros(field, d, m)
        } else {
            parse_matrix(field, &self.f, d, m, "f")?
        };
        let g = if self.g.is_empty() && (m == 0 || d == 0) {
            vec![vec![vector::zero(field, m); d]; d]
        } else {
            if self.g.len() != d || self.g.iter().any(|r| r.len() != d) {
                return Err(Error::Shape(format!("g: expected {d}x{d} vectors")));
            }
            self.g
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, v)| parse_vec(field, v, m, &format!("g[{i}][{j}]")))
                        .collect()
                })
                .collect::<Result<Vec<_>>>()?
        };
        TridentAlgebra::new(algebra, module, f, g)
    }

    pub fn from_trident(t: &TridentAlgebra) -> Self {
        TridentJson {
            field: t.field(),
            algebra: AlgebraJson::from_algebra(&t.algebra),
            module: (t.dim_m() > 0).then(|| ModuleJson::from_module(&t.module)),
            f: if t.dim_m() == 0 {
                Vec::new()
            } else {
                t.f.row_vecs().iter().map(|r| vector::to_strings(r)).collect()
            },
            g: if t.dim_m() == 0 {
                Vec::new()
            } else {
                t.g.iter()
                    .map(|row| row.iter().map(|v| vector::to_strings(v)).collect())
                    .collect()
            },
        }
    }
}

impl TridentAlgebra {
    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&TridentJson::from_trident(self))?)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str::<TridentJson>(s)?.to_trident(None)
    }
}

/// Reads the `algebra` object of a standalone algebra file or of a trident file.
pub fn algebra_from_json_str(s: &str, field_override: Option<Field>) -> Result<AugmentedAlgebra> {
    #[derive(Deserialize)]
    struct Wrapper {
        field: Field,
        algebra: AlgebraJson,
    }
    let w: Wrapper = serde_json::from_str(s)?;
    w.algebra.to_algebra(field_override.unwrap_or(w.field))
}

/// A standalone algebra document: `{"field": …, "algebra": …}`.
pub fn algebra_to_json_string(a: &AugmentedAlgebra) -> Result<String> {
    #[derive(Serialize)]
    struct Wrapper {
        field: Field,
        algebra: AlgebraJson,
    }
    Ok(serde_json::to_string_pretty(&Wrapper {
        field: a.field(),
        algebra: AlgebraJson::from_algebra(a),
    })?)
}
