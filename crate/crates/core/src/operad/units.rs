use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, solve, Matrix, Subspace};
use crate::perm::Permutation;

use super::element::Element;
use super::truncation::{dim_profile, truncation_ideal};
use super::view::{OperadExt, OperadView};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct UnitFlags {
    /// `u2 ∘₁ u0 = 1 = u2 ∘₂ u0`.
    pub is_two_unit: bool,
    /// Additionally `u2 ∘₁ u2 = u2 ∘₂ u2`.
    pub is_2a_unit: bool,
    /// Additionally `u2 ∗ (12) = u2`.
    pub is_symmetric: bool,
}

pub fn check_units(p: &dyn OperadView, u0: &Element, u2: &Element) -> Result<UnitFlags> {
    if p.max_arity() < 3 {
        return Err(Error::TruncationOverflow {
            arity: 3,
            max: p.max_arity(),
        });
    }
    if u0.arity() != 0 || u2.arity() != 2 {
        return Err(Error::InvalidArgument("expected a 0-ary and a binary element".into()));
    }
    let id = p.identity();
    let is_two_unit = p.compose(1, u2, u0)? == id && p.compose(2, u2, u0)? == id;
    let is_2a_unit = is_two_unit && p.compose(1, u2, u2)? == p.compose(2, u2, u2)?;
    let is_symmetric = is_2a_unit && p.act(u2, &Permutation::swap())? == *u2;
    Ok(UnitFlags {
        is_two_unit,
        is_2a_unit,
        is_symmetric,
    })
}

/// Flags for the operad's own designated units.
pub fn check_designated_units(p: &dyn OperadView) -> Result<UnitFlags> {
    let u0 = p
        .unit0()
        .ok_or_else(|| Error::Unsupported("operad has no designated 0-unit".into()))?;
    let u2 = p
        .unit2()
        .ok_or_else(|| Error::Unsupported("operad has no designated 2-unit candidate".into()))?;
    check_units(p, &u0, &u2)
}

/// Solution set of `τ ∘₁ u0 = 1 = τ ∘₂ u0` in arity 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoUnitCandidates {
    Empty,
    Affine { particular: Element, homogeneous: Subspace },
}

pub fn two_unit_candidates(p: &dyn OperadView) -> Result<TwoUnitCandidates> {
    let u0 = p
        .unit0()
        .ok_or_else(|| Error::Unsupported("operad has no designated 0-unit".into()))?;
    if p.max_arity() < 2 {
        return Err(Error::TruncationOverflow {
            arity: 2,
            max: p.max_arity(),
        });
    }
    let field = p.field();
    let d1 = p.dim(1);
    // Column b stacks (e_b ∘₁ u0, e_b ∘₂ u0).
    let columns = (0..p.dim(2))
        .map(|b| {
            let e = p.basis(2, b);
            let mut col = p.compose(1, &e, &u0)?.into_coeffs();
            col.extend(p.compose(2, &e, &u0)?.into_coeffs());
            Ok(col)
        })
        .collect::<Result<Vec<_>>>()?;
    let system = Matrix::from_rows(field, 2 * d1, columns)?.transpose();
    let mut rhs = p.identity().into_coeffs();
    rhs.extend(p.identity().into_coeffs());
    Ok(match solve(&system, &rhs) {
        None => TwoUnitCandidates::Empty,
        Some(x) => TwoUnitCandidates::Affine {
            particular: Element::new(2, x),
            homogeneous: kernel_basis(&system),
        },
    })
}

/// `½(u2 + u2 ∗ (12))`.
pub fn symmetrize_two_unit(p: &dyn OperadView, u2: &Element) -> Result<Element> {
    let field = p.field();
    if field.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic {
            characteristic: 2,
            hypothesis: "char 𝕜 ≠ 2",
        });
    }
    let u0 = p
        .unit0()
        .ok_or_else(|| Error::Unsupported("operad has no designated 0-unit".into()))?;
    if !check_units(p, &u0, u2)?.is_two_unit {
        return Err(Error::Precondition("input is not a 2-unit".into()));
    }
    let swapped = p.act(u2, &Permutation::swap())?;
    let half = field.from_i64(2).inv().expect("characteristic is not 2");
    let sym = (u2 + &swapped).scale(&half);
    let flags = check_units(p, &u0, &sym)?;
    if !flags.is_symmetric && dim_profile(p)?.gk_observed == Some(3) {
        return Err(Error::Structural(
            "symmetrized 2-unit is not a symmetric 2a-unit".into(),
        ));
    }
    Ok(sym)
}

/// `1_n`: `u0`, the identity, `u2`, then `u2 ∘₁ 1_{n-1}`.
pub fn unit_n(p: &dyn OperadView, u2: &Element, n: usize) -> Result<Element> {
    match n {
        0 => p
            .unit0()
            .ok_or_else(|| Error::Unsupported("operad has no designated 0-unit".into())),
        1 => Ok(p.identity()),
        _ => {
            let mut acc = u2.clone();
            for _ in 3..=n {
                acc = p.compose(1, u2, &acc)?;
            }
            Ok(acc)
        }
    }
}

/// `u2 ∘ (θ, 1_{n-k})` for `θ` of arity `k ≤ n`.
fn graft(p: &dyn OperadView, u2: &Element, theta: &Element, n: usize) -> Result<Element> {
    let k = theta.arity();
    if k == n {
        return Ok(theta.clone());
    }
    let head = p.compose(1, u2, theta)?;
    p.compose(k + 1, &head, &unit_n(p, u2, n - k)?)
}

/// Basis of `P(n)` built from truncation ideals and shuffles:
/// `u2 ∘ (θ, 1_{n-k}) ∗ c_I` for `θ` in a basis of `^kI(k)` and `|I| = k`.
pub fn standard_basis(p: &dyn OperadView, u2: &Element, n: usize) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for k in 0..=n {
        let ideal = truncation_ideal(p, k, k)?;
        for theta in ideal.basis() {
            let theta = Element::new(k, theta.clone());
            let grafted = graft(p, u2, &theta, n)?;
            for subset in (1..=n).combinations(k) {
                let c = Permutation::subset_shuffle(n, &subset)?;
                out.push(p.act(&grafted, &c)?);
            }
        }
    }
    let rows: Vec<_> = out.iter().map(|e| e.coeffs().to_vec()).collect();
    let rank = Matrix::from_rows(p.field(), p.dim(n), rows)?.rank();
    if out.len() != p.dim(n) || rank != p.dim(n) {
        return Err(Error::Structural(format!(
            "standard basis in arity {n}: {} elements of rank {rank}, component dimension {}",
            out.len(),
            p.dim(n)
        )));
    }
    Ok(out)
}

/// Checks, for `τ, μ` over a basis of `²I(2)`:
/// `τ ∘₁ u2 = u2 ∘₂ τ + (u2 ∘₂ τ) ∗ (12)`, `τ ∘₂ u2 = u2 ∘₁ τ + (u2 ∘₁ τ) ∗ (23)`
/// and `τ ∘ᵢ μ = 0`. Returns one line per failure.
pub fn ideal_identity_failures(p: &dyn OperadView, u2: &Element) -> Result<Vec<String>> {
    let ideal = truncation_ideal(p, 2, 2)?;
    let s12 = Permutation::adjacent(3, 1)?;
    let s23 = Permutation::adjacent(3, 2)?;
    let basis: Vec<Element> = ideal.basis().iter().map(|v| Element::new(2, v.clone())).collect();
    let mut failures = Vec::new();
    for tau in &basis {
        let name = p.format(tau);
        let a = p.compose(2, u2, tau)?;
        let lhs = p.compose(1, tau, u2)?;
        let rhs = &a + &p.act(&a, &s12)?;
        if lhs != rhs {
            failures.push(format!(
                "τ ∘₁ 1₂ for τ = {name}: {} != {}",
                p.format(&lhs),
                p.format(&rhs)
            ));
        }
        let b = p.compose(1, u2, tau)?;
        let lhs = p.compose(2, tau, u2)?;
        let rhs = &b + &p.act(&b, &s23)?;
        if lhs != rhs {
            failures.push(format!(
                "τ ∘₂ 1₂ for τ = {name}: {} != {}",
                p.format(&lhs),
                p.format(&rhs)
            ));
        }
        for mu in &basis {
            for i in 1..=2 {
                let c = p.compose(i, tau, mu)?;
                if !c.is_zero() {
                    failures.push(format!(
                        "τ ∘{i} μ for τ = {name}, μ = {}: {}",
                        p.format(mu),
                        p.format(&c)
                    ));
                }
            }
        }
    }
    Ok(failures)
}
