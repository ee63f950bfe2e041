use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::perm::Permutation;

use super::com::com_operad;
use super::element::Element;
use super::truncation::{restriction, truncation_ideal};
use super::view::{OperadExt, OperadView};

/// A family of linear maps `γₙ: P(n) → Q(n)`; row `a` of `maps[n]` is `γₙ(e_a)`.
#[derive(Clone)]
pub struct LinearMapFamily {
    pub source: Arc<dyn OperadView>,
    pub target: Arc<dyn OperadView>,
    pub maps: Vec<Matrix>,
}

impl LinearMapFamily {
    pub fn new(source: Arc<dyn OperadView>, target: Arc<dyn OperadView>, maps: Vec<Matrix>) -> Result<Self> {
        if source.max_arity() != target.max_arity() {
            return Err(Error::InvalidArgument("source and target truncations differ".into()));
        }
        if source.field() != target.field() {
            return Err(Error::FieldMismatch {
                expected: source.field(),
                found: target.field(),
            });
        }
        if maps.len() != source.max_arity() + 1 {
            return Err(Error::Shape(format!(
                "need {} maps, got {}",
                source.max_arity() + 1,
                maps.len()
            )));
        }
        for (n, m) in maps.iter().enumerate() {
            if m.rows() != source.dim(n) || m.cols() != target.dim(n) {
                return Err(Error::Shape(format!(
                    "map in arity {n} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    source.dim(n),
                    target.dim(n)
                )));
            }
        }
        Ok(LinearMapFamily { source, target, maps })
    }

    pub fn identity(p: Arc<dyn OperadView>) -> Self {
        let maps = (0..=p.max_arity())
            .map(|n| Matrix::identity(p.field(), p.dim(n)))
            .collect();
        LinearMapFamily {
            source: p.clone(),
            target: p,
            maps,
        }
    }

    pub fn apply(&self, x: &Element) -> Element {
        Element::new(x.arity(), self.maps[x.arity()].left_mul(x.coeffs()))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &LinearMapFamily) -> Result<LinearMapFamily> {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.mul(b))
            .collect::<Result<Vec<_>>>()?;
        LinearMapFamily::new(self.source.clone(), other.target.clone(), maps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismViolation {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub violations: Vec<MorphismViolation>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Identity preservation, equivariance under adjacent transpositions and
/// compatibility with every in-range partial composition of basis vectors.
pub fn check_morphism(gamma: &LinearMapFamily) -> MorphismReport {
    let src = gamma.source.as_ref();
    let tgt = gamma.target.as_ref();
    let big_n = src.max_arity();
    let mut violations = Vec::new();

    let id_image = gamma.apply(&src.identity());
    if id_image != tgt.identity() {
        violations.push(MorphismViolation {
            check: "identity",
            detail: format!("γ(1) = {}", tgt.format(&id_image)),
        });
    }

    for n in 2..=big_n {
        for k in 1..n {
            let s = Permutation::adjacent(n, k).expect("1 ≤ k < n");
            for a in 0..src.dim(n) {
                let e = src.basis(n, a);
                let lhs = gamma.apply(&src.act(&e, &s).expect("in range"));
                let rhs = tgt.act(&gamma.apply(&e), &s).expect("in range");
                if lhs != rhs {
                    violations.push(MorphismViolation {
                        check: "equivariance",
                        detail: format!(
                            "γ({} ∗ {s}) = {} but γ({}) ∗ {s} = {}",
                            src.basis_label(n, a),
                            tgt.format(&lhs),
                            src.basis_label(n, a),
                            tgt.format(&rhs)
                        ),
                    });
                }
            }
        }
    }

    let mut jobs = Vec::new();
    for m in 1..=big_n {
        for i in 1..=m {
            for n in 0..=big_n + 1 - m {
                for a in 0..src.dim(m) {
                    jobs.push((m, i, n, a));
                }
            }
        }
    }
    let mut composition: Vec<MorphismViolation> = jobs
        .par_iter()
        .flat_map_iter(|&(m, i, n, a)| {
            let x = src.basis(m, a);
            let gx = gamma.apply(&x);
            (0..src.dim(n)).filter_map(move |b| {
                let y = src.basis(n, b);
                let lhs = gamma.apply(&src.compose(i, &x, &y).expect("in range"));
                let rhs = tgt.compose(i, &gx, &gamma.apply(&y)).expect("in range");
                (lhs != rhs).then(|| MorphismViolation {
                    check: "composition",
                    detail: format!(
                        "γ({} ∘{i} {}) = {} but γ(..) ∘{i} γ(..) = {}",
                        src.basis_label(m, a),
                        src.basis_label(n, b),
                        tgt.format(&lhs),
                        tgt.format(&rhs)
                    ),
                })
            })
        })
        .collect();
    composition.sort_by(|a, b| a.detail.cmp(&b.detail));
    violations.extend(composition);
    MorphismReport { violations }
}

/// The canonical map to the commutative operad: `θ ↦ c·1_n` where
/// `π^∅(θ) = c·u0`.
pub fn com_quotient(p: Arc<dyn OperadView>) -> Result<LinearMapFamily> {
    let field = p.field();
    let u0 = p
        .unit0()
        .ok_or_else(|| Error::Unsupported("operad has no designated 0-unit".into()))?;
    let pivot = u0
        .terms()
        .next()
        .map(|(k, c)| (k, c.clone()))
        .ok_or_else(|| Error::Structural("0-unit is zero".into()))?;
    let big_n = p.max_arity();
    let mut maps = Vec::with_capacity(big_n + 1);
    for n in 0..=big_n {
        let ideal = truncation_ideal(p.as_ref(), 1, n)?;
        if ideal.dim() + 1 != p.dim(n) {
            return Err(Error::Structural(format!(
                "augmentation ideal in arity {n} has codimension {}, expected 1",
                p.dim(n) - ideal.dim()
            )));
        }
        let rows = (0..p.dim(n))
            .map(|a| {
                let r = restriction(p.as_ref(), &p.basis(n, a), &[])?;
                let c: Scalar = &r.coeffs()[pivot.0] * &pivot.1.inv().expect("nonzero");
                if r != u0.scale(&c) {
                    return Err(Error::Structural(
                        "arity-0 component is not spanned by the 0-unit".into(),
                    ));
                }
                Ok(vec![c])
            })
            .collect::<Result<Vec<_>>>()?;
        maps.push(Matrix::from_rows(field, 1, rows)?);
    }
    if let Some(u2) = p.unit2() {
        for n in 0..=big_n {
            let one = super::units::unit_n(p.as_ref(), &u2, n)?;
            let image = maps[n].left_mul(one.coeffs());
            if !image[0].is_one() {
                return Err(Error::Structural(format!("ε(1_{n}) = {} is not 1_{n}", image[0])));
            }
        }
    }
    let target: Arc<dyn OperadView> = Arc::new(com_operad(field, big_n));
    LinearMapFamily::new(p, target, maps)
}
