use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::operad::{check_units, truncation_ideal, Element, OperadExt, OperadView};
use crate::perm::Permutation;
use crate::trident::{AugmentedAlgebra, TridentAlgebra, TridentModule};

/// The trident `G(P)` together with the elements of `P` its bases stand for.
#[derive(Clone, Debug)]
pub struct Extraction {
    pub trident: TridentAlgebra,
    /// Basis of `¹I(1)`, in arity 1.
    pub abar_basis: Vec<Element>,
    /// Basis of `²I(2)`, in arity 2.
    pub m_basis: Vec<Element>,
    /// The symmetric 2a-unit used.
    pub unit2: Element,
}

fn coords(space: &Subspace, x: &Element, what: &str) -> Result<Vec<Scalar>> {
    space
        .coordinates(x.coeffs())
        .ok_or_else(|| Error::Structural(format!("{what} does not lie in the expected truncation ideal")))
}

/// `G(P)` for a unitary operad with a symmetric 2a-unit `u2`.
pub fn extract_g(p: &dyn OperadView, u2: &Element) -> Result<Extraction> {
    let field = p.field();
    let u0 = p
        .unit0()
        .ok_or_else(|| Error::Unsupported("operad has no designated 0-unit".into()))?;
    if p.dim(0) != 1 {
        return Err(Error::Precondition(format!(
            "P(0) has dimension {}, expected 1",
            p.dim(0)
        )));
    }
    let flags = check_units(p, &u0, u2)?;
    if !flags.is_symmetric {
        return Err(Error::Precondition(format!(
            "the arity-2 element is not a symmetric 2a-unit ({flags:?}); symmetrize it first"
        )));
    }
    let abar = truncation_ideal(p, 1, 1)?;
    let mspace = truncation_ideal(p, 2, 2)?;
    let abar_basis: Vec<Element> = abar.basis().iter().map(|v| Element::new(1, v.clone())).collect();
    let m_basis: Vec<Element> = mspace.basis().iter().map(|v| Element::new(2, v.clone())).collect();
    let (d, m) = (abar_basis.len(), m_basis.len());

    let a_names = abar_basis.iter().map(|e| p.format(e)).collect();
    let m_names = m_basis.iter().map(|e| p.format(e)).collect();

    let mut mul = Vec::with_capacity(d);
    for x in &abar_basis {
        let row = abar_basis
            .iter()
            .map(|y| coords(&abar, &p.compose(1, x, y)?, "a product in Ā"))
            .collect::<Result<Vec<_>>>()?;
        mul.push(row);
    }
    let algebra = AugmentedAlgebra::new(field, a_names, mul)?;

    let swap = Permutation::swap();
    let matrix_of = |f: &dyn Fn(&Element) -> Result<Element>, what: &str| -> Result<Matrix> {
        let rows = m_basis
            .iter()
            .map(|mu| coords(&mspace, &f(mu)?, what))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, m, rows)
    };
    let swap_m = matrix_of(&|mu| p.act(mu, &swap), "μ ∗ (12)")?;
    let mut left = Vec::with_capacity(d);
    let mut right1 = Vec::with_capacity(d);
    let mut right2 = Vec::with_capacity(d);
    for a in &abar_basis {
        left.push(matrix_of(&|mu| p.compose(1, a, mu), "a·μ")?);
        right1.push(matrix_of(&|mu| p.compose(1, mu, a), "μ·₁a")?);
        right2.push(matrix_of(&|mu| p.compose(2, mu, a), "μ·₂a")?);
    }
    let module = TridentModule::new(field, m_names, swap_m, left, right1, right2)?;

    let mut f_rows = Vec::with_capacity(d);
    for a in &abar_basis {
        let v = &(&p.compose(1, a, u2)? - &p.compose(1, u2, a)?) - &p.compose(2, u2, a)?;
        f_rows.push(coords(&mspace, &v, "f(a)")?);
    }
    let mut g = Vec::with_capacity(d);
    for a in &abar_basis {
        let ua = p.compose(1, u2, a)?;
        let row = abar_basis
            .iter()
            .map(|b| coords(&mspace, &p.compose(2, &ua, b)?, "g(a, b)"))
            .collect::<Result<Vec<_>>>()?;
        g.push(row);
    }
    let f = Matrix::from_rows(field, m, f_rows)?;
    let trident = TridentAlgebra::new(algebra, module, f, g)?;
    let report = trident.validate();
    if let Some(v) = report.violations.first() {
        return Err(Error::Structural(format!("extracted trident is invalid: {v}")));
    }
    Ok(Extraction {
        trident,
        abar_basis,
        m_basis,
        unit2: u2.clone(),
    })
}

/// Structure-constant equality, ignoring basis names.
pub fn same_structure(x: &TridentAlgebra, y: &TridentAlgebra) -> Vec<String> {
    let mut diffs = Vec::new();
    if x.field() != y.field() {
        diffs.push(format!("field {} vs {}", x.field(), y.field()));
        return diffs;
    }
    if x.dim_bar() != y.dim_bar() || x.dim_m() != y.dim_m() {
        diffs.push(format!(
            "dimensions (d, m) = ({}, {}) vs ({}, {})",
            x.dim_bar(),
            x.dim_m(),
            y.dim_bar(),
            y.dim_m()
        ));
        return diffs;
    }
    if x.algebra.mul_table() != y.algebra.mul_table() {
        diffs.push("multiplication".into());
    }
    let (mx, my) = (&x.module, &y.module);
    if mx.swap != my.swap {
        diffs.push("swap".into());
    }
    if mx.left != my.left {
        diffs.push("left action".into());
    }
    if mx.right1 != my.right1 {
        diffs.push("right action 1".into());
    }
    if mx.right2 != my.right2 {
        diffs.push("right action 2".into());
    }
    if x.f != y.f {
        diffs.push("f".into());
    }
    if x.g != y.g {
        diffs.push("g".into());
    }
    diffs
}
