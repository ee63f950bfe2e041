use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, vector, Matrix, Subspace};

use super::element::Element;
use super::view::{OperadExt, OperadView};

fn require_unit0(p: &dyn OperadView) -> Result<Element> {
    p.unit0()
        .ok_or_else(|| Error::Unsupported("operad has no designated 0-unit".into()))
}

fn check_subset(n: usize, subset: &[usize]) -> Result<()> {
    if subset.windows(2).any(|w| w[0] >= w[1]) || subset.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::InvalidArgument(format!(
            "{subset:?} is not a strictly increasing subset of [{n}]"
        )));
    }
    Ok(())
}

/// `π^I(θ)`: plugs the 0-unit into every input outside `subset`.
pub fn restriction(p: &dyn OperadView, theta: &Element, subset: &[usize]) -> Result<Element> {
    let u0 = require_unit0(p)?;
    check_subset(theta.arity(), subset)?;
    let mut acc = theta.clone();
    for pos in (1..=theta.arity()).rev() {
        if !subset.contains(&pos) {
            acc = p.compose(pos, &acc, &u0)?;
        }
    }
    Ok(acc)
}

/// Matrix of `π^I` on component `n`, one column per basis vector of `P(n)`.
pub fn restriction_matrix(p: &dyn OperadView, n: usize, subset: &[usize]) -> Result<Matrix> {
    check_subset(n, subset)?;
    let target = subset.len();
    let columns = (0..p.dim(n))
        .map(|b| restriction(p, &p.basis(n, b), subset).map(Element::into_coeffs))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(p.field(), p.dim(target), columns)?.transpose())
}

/// `^kI(n)`: elements of `P(n)` killed by every restriction to `k - 1` inputs.
pub fn truncation_ideal(p: &dyn OperadView, k: usize, n: usize) -> Result<Subspace> {
    let field = p.field();
    if n > p.max_arity() {
        return Err(Error::TruncationOverflow {
            arity: n,
            max: p.max_arity(),
        });
    }
    require_unit0(p)?;
    if k == 0 {
        return Ok(Subspace::full(field, p.dim(n)));
    }
    if n < k {
        return Ok(Subspace::zero(field, p.dim(n)));
    }
    let mut rows = Vec::new();
    for subset in (1..=n).combinations(k - 1) {
        rows.extend(restriction_matrix(p, n, &subset)?.row_vecs());
    }
    Ok(kernel_basis(&Matrix::from_rows(field, p.dim(n), rows)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimProfile {
    pub dims: Vec<usize>,
    /// `f[k] = dim ^kI(k)`.
    pub f: Vec<usize>,
    /// `dims[n] = Σ_k f[k]·C(n, k)` for every `n` in the window.
    pub series_ok: bool,
    /// `max{k : f[k] ≠ 0} + 1`.
    pub gk_observed: Option<usize>,
    /// False when the window is too short to rule out later nonzero `f[k]`.
    pub gk_exact: bool,
}

impl DimProfile {
    /// `"3"` when exact, `"≥ 3"` otherwise.
    pub fn gk_display(&self) -> String {
        match (self.gk_observed, self.gk_exact) {
            (None, _) => "unknown".into(),
            (Some(g), true) => g.to_string(),
            (Some(g), false) => format!("≥ {g}"),
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

pub fn dim_profile(p: &dyn OperadView) -> Result<DimProfile> {
    let big_n = p.max_arity();
    let dims: Vec<usize> = (0..=big_n).map(|n| p.dim(n)).collect();
    let f = (0..=big_n)
        .map(|k| truncation_ideal(p, k, k).map(|s| s.dim()))
        .collect::<Result<Vec<_>>>()?;
    let series_ok = (0..=big_n).all(|n| dims[n] == (0..=n).map(|k| f[k] * binomial(n, k)).sum::<usize>());
    let gk_observed = f.iter().rposition(|&x| x != 0).map(|k| k + 1);
    let gk_exact = big_n >= 1 && f[big_n] == 0 && f[big_n - 1] == 0;
    Ok(DimProfile {
        dims,
        f,
        series_ok,
        gk_observed,
        gk_exact,
    })
}

/// Coordinates of every basis vector of a subspace's span, as elements of arity `n`.
pub fn subspace_elements(s: &Subspace, n: usize) -> Vec<Element> {
    s.basis().iter().map(|b| Element::new(n, b.clone())).collect()
}

/// Expresses `x` in the stored basis of `s`.
pub fn coordinates_in(s: &Subspace, x: &Element) -> Option<Vec<crate::linalg::Scalar>> {
    if vector::is_zero(x.coeffs()) {
        return Some(vector::zero(s.field(), s.dim()));
    }
    s.coordinates(x.coeffs())
}
