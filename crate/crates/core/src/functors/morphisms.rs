use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{solve, vector, Matrix, Scalar};
use crate::operad::{check_morphism, unit_n, Element, LinearMapFamily, MorphismReport, OperadExt, OperadView};
use crate::perm::Permutation;
use crate::trident::{check_trident_morphism, TridentAlgebra};

use super::extract::{extract_g, same_structure, Extraction};
use super::foperad::FOperad;

/// `F(α, β)`: `1ₙ ↦ 1′ₙ`, `φₖ(a) ↦ φ′ₖ(α(a))`, `ψ_{ij}(μ) ↦ ψ′_{ij}(β(μ))`.
///
/// Fails unless `(α, β)` is a trident morphism and the resulting family
/// passes [`check_morphism`].
pub fn functor_f_morphism(
    source: Arc<FOperad>,
    target: Arc<FOperad>,
    alpha: &Matrix,
    beta: &Matrix,
) -> Result<LinearMapFamily> {
    let report = check_trident_morphism(source.trident(), target.trident(), alpha, beta)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::Structural(format!("(α, β) is not a trident morphism: {v}")));
    }
    let big_n = source.max_arity();
    if target.max_arity() != big_n {
        return Err(Error::InvalidArgument("source and target truncations differ".into()));
    }
    let field = source.field();
    let (d, m) = (source.trident().dim_bar(), source.trident().dim_m());
    let mut maps = Vec::with_capacity(big_n + 1);
    for n in 0..=big_n {
        let mut rows = vec![vector::zero(field, target.dim(n)); source.dim(n)];
        rows[0][0] = field.one();
        for k in 1..=n {
            for j in 0..d {
                for (j2, c) in vector::support(alpha.row(j)) {
                    rows[source.phi_index(n, k, j)][target.phi_index(n, k, j2)] = c.clone();
                }
            }
        }
        for i1 in 1..=n {
            for i2 in i1 + 1..=n {
                for s in 0..m {
                    for (s2, c) in vector::support(beta.row(s)) {
                        rows[source.psi_index(n, i1, i2, s)][target.psi_index(n, i1, i2, s2)] = c.clone();
                    }
                }
            }
        }
        maps.push(Matrix::from_rows(field, target.dim(n), rows)?);
    }
    let family = LinearMapFamily::new(source, target, maps)?;
    verified(family)
}

fn verified(family: LinearMapFamily) -> Result<LinearMapFamily> {
    let report = check_morphism(&family);
    match report.violations.first() {
        Some(v) => Err(Error::Structural(format!("{}: {}", v.check, v.detail))),
        None => Ok(family),
    }
}

/// Coordinates of `x` in the span of `basis`.
fn coordinates(field: crate::linalg::Field, basis: &[Element], x: &Element) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return x.is_zero().then(Vec::new);
    }
    let cols = Matrix::from_rows(field, x.dim(), basis.iter().map(|e| e.coeffs().to_vec()).collect())
        .ok()?
        .transpose();
    solve(&cols, x.coeffs())
}

/// `G(Ψ) = (Ψ₁|_Ā, Ψ₂|_M)` for a morphism `Ψ: P → Q` preserving the designated units.
///
/// Returns `(α, β)` in the bases of `src` and `tgt` after checking it is a
/// trident morphism.
pub fn functor_g_morphism(gamma: &LinearMapFamily, src: &Extraction, tgt: &Extraction) -> Result<(Matrix, Matrix)> {
    let report = check_morphism(gamma);
    if let Some(v) = report.violations.first() {
        return Err(Error::Precondition(format!(
            "Ψ is not an operad morphism: {}: {}",
            v.check, v.detail
        )));
    }
    let (p, q) = (gamma.source.as_ref(), gamma.target.as_ref());
    let field = p.field();
    let u0 = p
        .unit0()
        .ok_or_else(|| Error::Unsupported("source has no designated 0-unit".into()))?;
    let v0 = q
        .unit0()
        .ok_or_else(|| Error::Unsupported("target has no designated 0-unit".into()))?;
    if gamma.apply(&u0) != v0 {
        return Err(Error::Precondition("Ψ does not preserve the 0-unit".into()));
    }
    if gamma.apply(&src.unit2) != tgt.unit2 {
        return Err(Error::Precondition("Ψ does not preserve the symmetric 2a-unit".into()));
    }
    let image_rows = |basis: &[Element], target: &[Element], what: &str| -> Result<Matrix> {
        let rows = basis
            .iter()
            .map(|e| {
                coordinates(field, target, &gamma.apply(e))
                    .ok_or_else(|| Error::Structural(format!("Ψ does not map {what} into {what}′")))
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, target.len(), rows)
    };
    let alpha = image_rows(&src.abar_basis, &tgt.abar_basis, "Ā")?;
    let beta = image_rows(&src.m_basis, &tgt.m_basis, "M")?;
    let report = check_trident_morphism(&src.trident, &tgt.trident, &alpha, &beta)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::Structural(format!("G(Ψ) is not a trident morphism: {v}")));
    }
    Ok((alpha, beta))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub max_arity: usize,
    /// Structure constants of `G(F(T))` that differ from those of `T`.
    pub diffs: Vec<String>,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

/// Compares `G(F(T))`, extracted with `1₂`, to `T`.
pub fn roundtrip_check(t: &TridentAlgebra, max_arity: usize) -> Result<RoundtripReport> {
    let p = FOperad::new(t.clone(), max_arity)?;
    let u2 = p.unit2().ok_or(Error::TruncationOverflow {
        arity: 3,
        max: max_arity,
    })?;
    let extracted = extract_g(&p, &u2)?;
    Ok(RoundtripReport {
        max_arity,
        diffs: same_structure(&extracted.trident, t),
    })
}

/// The comparison map `F(G(P)) → P` and its verification.
pub struct IsoReport {
    pub family: LinearMapFamily,
    pub extraction: Extraction,
    /// Rank of the map in each arity.
    pub ranks: Vec<usize>,
    pub morphism: MorphismReport,
}

impl IsoReport {
    pub fn is_isomorphism(&self) -> bool {
        self.morphism.passed()
            && self
                .ranks
                .iter()
                .enumerate()
                .all(|(n, &r)| r == self.family.source.dim(n))
            && (0..self.ranks.len()).all(|n| self.family.source.dim(n) == self.family.target.dim(n))
    }
}

/// Sends the canonical basis of `F(G(P))` to the standard basis of `P`:
/// `1ₙ`, `(1ₙ ∘₁ aⱼ) ∗ c_k` and `(1ₙ₋₁ ∘₁ μₛ) ∗ c_{i₁i₂}`.
pub fn roundtrip_iso(p: Arc<dyn OperadView>, u2: &Element) -> Result<IsoReport> {
    let extraction = extract_g(p.as_ref(), u2)?;
    let big_n = p.max_arity();
    let f = Arc::new(FOperad::new(extraction.trident.clone(), big_n)?);
    let field = p.field();
    let (d, m) = (extraction.abar_basis.len(), extraction.m_basis.len());
    let units = (0..=big_n)
        .map(|n| unit_n(p.as_ref(), u2, n))
        .collect::<Result<Vec<_>>>()?;
    let mut maps = Vec::with_capacity(big_n + 1);
    let mut ranks = Vec::with_capacity(big_n + 1);
    for n in 0..=big_n {
        let mut rows = vec![units[n].coeffs().to_vec()];
        for k in 1..=n {
            let c = Permutation::subset_shuffle(n, &[k])?;
            for j in 0..d {
                let head = p.compose(1, &units[n], &extraction.abar_basis[j])?;
                rows.push(p.act(&head, &c)?.into_coeffs());
            }
        }
        for i1 in 1..=n {
            for i2 in i1 + 1..=n {
                let c = Permutation::subset_shuffle(n, &[i1, i2])?;
                for s in 0..m {
                    let head = p.compose(1, &units[n - 1], &extraction.m_basis[s])?;
                    rows.push(p.act(&head, &c)?.into_coeffs());
                }
            }
        }
        debug_assert_eq!(rows.len(), f.dim(n));
        let map = Matrix::from_rows(field, p.dim(n), rows)?;
        ranks.push(map.rank());
        maps.push(map);
    }
    let family = LinearMapFamily::new(f, p, maps)?;
    let morphism = check_morphism(&family);
    Ok(IsoReport {
        family,
        extraction,
        ranks,
        morphism,
    })
}
