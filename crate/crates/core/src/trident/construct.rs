use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar};

use super::algebra::AugmentedAlgebra;
use super::module::TridentModule;
use super::system::{trivial_trident, TridentAlgebra};

/// A bimodule `E` containing `M` at the coordinates `m_positions`, with a
/// chosen lift `unit` of `[1⊗1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub module: TridentModule,
    pub m_positions: Vec<usize>,
    pub unit: Vec<Scalar>,
}

impl Extension {
    /// Coordinates of `v` along `M`, failing if `v` has a component outside `M`.
    fn project(&self, v: &[Scalar], what: &str) -> Result<Vec<Scalar>> {
        for (k, _) in vector::support(v) {
            if !self.m_positions.contains(&k) {
                return Err(Error::Structural(format!(
                    "{what} has a component outside M at coordinate {k}"
                )));
            }
        }
        Ok(self.m_positions.iter().map(|&k| v[k].clone()).collect())
    }

    /// `f(a) = a·u − u·₁a − u·₂a` and `g(a, b) = (u·₁a)·₂b`, read in `M`.
    pub fn extract_fg(&self, alg: &AugmentedAlgebra) -> Result<(Matrix, Vec<Vec<Vec<Scalar>>>)> {
        let e = &self.module;
        let u = &self.unit;
        let d = alg.dim_bar();
        let mut f_rows = Vec::with_capacity(d);
        for a in 0..d {
            let v = vector::sub(
                &vector::sub(&e.left[a].left_mul(u), &e.right1[a].left_mul(u)),
                &e.right2[a].left_mul(u),
            );
            f_rows.push(self.project(&v, &format!("f({})", alg.name(a)))?);
        }
        let mut g = Vec::with_capacity(d);
        for a in 0..d {
            let ua = e.right1[a].left_mul(u);
            let row = (0..d)
                .map(|b| {
                    let v = e.right2[b].left_mul(&ua);
                    self.project(&v, &format!("g({}, {})", alg.name(a), alg.name(b)))
                })
                .collect::<Result<Vec<_>>>()?;
            g.push(row);
        }
        Ok((Matrix::from_rows(alg.field(), self.m_positions.len(), f_rows)?, g))
    }
}

/// `E = M ⊕ 𝕜[1⊗1] ⊕ [Ā⊗1] ⊕ [1⊗Ā]`, in that coordinate order.
pub fn extension_module(t: &TridentAlgebra) -> Result<Extension> {
    t.require_valid()?;
    let alg = &t.algebra;
    let md = &t.module;
    let field = t.field();
    let (d, m) = (alg.dim_bar(), md.dim());
    let dim = m + 1 + 2 * d;
    let one = m;
    let left_pos = |b: usize| m + 1 + b;
    let right_pos = |c: usize| m + 1 + d + c;

    // Writes an M-vector into E coordinates.
    let embed = |v: &[Scalar]| {
        let mut out = vector::zero(field, dim);
        out[..m].clone_from_slice(v);
        out
    };
    let place = |out: &mut Vec<Scalar>, offset: usize, v: &[Scalar]| {
        for (k, c) in vector::support(v) {
            out[offset + k] += c;
        }
    };

    let mut names: Vec<String> = md.names().to_vec();
    names.push("[1⊗1]".into());
    names.extend(alg.names().iter().map(|a| format!("[{a}⊗1]")));
    names.extend(alg.names().iter().map(|a| format!("[1⊗{a}]")));

    let mut swap_rows = Vec::with_capacity(dim);
    for s in 0..m {
        swap_rows.push(embed(md.swap.row(s)));
    }
    swap_rows.push(vector::unit(field, dim, one));
    for b in 0..d {
        swap_rows.push(vector::unit(field, dim, right_pos(b)));
    }
    for c in 0..d {
        swap_rows.push(vector::unit(field, dim, left_pos(c)));
    }

    let mut left = Vec::with_capacity(d);
    let mut right1 = Vec::with_capacity(d);
    let mut right2 = Vec::with_capacity(d);
    for a in 0..d {
        let fa = t.f_basis(a);
        let mut l = Vec::with_capacity(dim);
        let mut r1 = Vec::with_capacity(dim);
        let mut r2 = Vec::with_capacity(dim);
        for s in 0..m {
            l.push(embed(md.left[a].row(s)));
            r1.push(embed(md.right1[a].row(s)));
            r2.push(embed(md.right2[a].row(s)));
        }
        // [1⊗1]
        let mut row = embed(fa);
        row[left_pos(a)] += &field.one();
        row[right_pos(a)] += &field.one();
        l.push(row);
        r1.push(vector::unit(field, dim, left_pos(a)));
        r2.push(vector::unit(field, dim, right_pos(a)));
        // [b⊗1]
        for b in 0..d {
            let mut row = embed(&vector::add(&md.right1[b].left_mul(fa), &t.g[b][a]));
            place(&mut row, m + 1, alg.mul_basis(a, b));
            l.push(row);
            let mut row = vector::zero(field, dim);
            place(&mut row, m + 1, alg.mul_basis(b, a));
            r1.push(row);
            r2.push(embed(&t.g[b][a]));
        }
        // [1⊗c]
        for c in 0..d {
            let mut row = embed(&vector::add(&md.right2[c].left_mul(fa), &t.g[a][c]));
            place(&mut row, m + 1 + d, alg.mul_basis(a, c));
            l.push(row);
            r1.push(embed(&t.g[a][c]));
            let mut row = vector::zero(field, dim);
            place(&mut row, m + 1 + d, alg.mul_basis(c, a));
            r2.push(row);
        }
        left.push(Matrix::from_rows(field, dim, l)?);
        right1.push(Matrix::from_rows(field, dim, r1)?);
        right2.push(Matrix::from_rows(field, dim, r2)?);
    }
    let module = TridentModule::new(
        field,
        names,
        Matrix::from_rows(field, dim, swap_rows)?,
        left,
        right1,
        right2,
    )?;
    let ext = Extension {
        module,
        m_positions: (0..m).collect(),
        unit: vector::unit(field, dim, one),
    };
    if let Some((identity, witness, lhs, rhs)) = ext.module.axiom_failures(alg).first() {
        return Err(Error::Structural(format!(
            "extension violates {identity} at {witness}: {lhs} != {rhs}"
        )));
    }
    let (f, g) = ext.extract_fg(alg)?;
    if f != t.f || g != t.g {
        return Err(Error::Structural(
            "f and g extracted from the extension differ from the input".into(),
        ));
    }
    Ok(ext)
}

/// Product of generators `p`, `q` of `A` in full coordinates (`0` is the unit, `k ≥ 1` is `a_{k-1}`).
fn full_product(alg: &AugmentedAlgebra, p: usize, q: usize) -> Vec<Scalar> {
    let field = alg.field();
    let d = alg.dim_bar();
    match (p, q) {
        (0, k) | (k, 0) => vector::unit(field, d + 1, k),
        (i, j) => {
            let mut out = vec![field.zero()];
            out.extend(alg.mul_basis(i - 1, j - 1).iter().cloned());
            out
        }
    }
}

fn kron(x: &Matrix, y: &Matrix) -> Matrix {
    let field = x.field();
    let (rx, cx, ry, cy) = (x.rows(), x.cols(), y.rows(), y.cols());
    let mut out = Matrix::zeros(field, rx * ry, cx * cy);
    for r1 in 0..rx {
        for c1 in 0..cx {
            let a = x.get(r1, c1);
            if a.is_zero() {
                continue;
            }
            for r2 in 0..ry {
                for c2 in 0..cy {
                    let b = y.get(r2, c2);
                    if !b.is_zero() {
                        out.set(r1 * ry + r2, c1 * cy + c2, a * b);
                    }
                }
            }
        }
    }
    out
}

/// Basis of the augmentation ideal of `A⊗B` as pairs of full generator indices:
/// `aᵢ⊗1`, then `1⊗bⱼ`, then `aᵢ⊗bⱼ` row-major.
fn tensor_bar_basis(da: usize, db: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (1..=da).map(|i| (i, 0)).collect();
    out.extend((1..=db).map(|j| (0, j)));
    for i in 1..=da {
        for j in 1..=db {
            out.push((i, j));
        }
    }
    out
}

/// `A⊗B` as an augmented algebra, with its basis as in [`tensor_bar_basis`].
pub fn tensor_algebra(a: &AugmentedAlgebra, b: &AugmentedAlgebra) -> Result<AugmentedAlgebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch {
            expected: a.field(),
            found: b.field(),
        });
    }
    let field = a.field();
    let (da, db) = (a.dim_bar(), b.dim_bar());
    let basis = tensor_bar_basis(da, db);
    let index = |p: usize, q: usize| basis.iter().position(|&x| x == (p, q));
    let name = |(p, q): (usize, usize)| {
        let l = if p == 0 {
            "1".to_string()
        } else {
            a.name(p - 1).to_string()
        };
        let r = if q == 0 {
            "1".to_string()
        } else {
            b.name(q - 1).to_string()
        };
        format!("{l}⊗{r}")
    };
    let names = basis.iter().map(|&x| name(x)).collect();
    let mut mul = Vec::with_capacity(basis.len());
    for &(p, q) in &basis {
        let mut row = Vec::with_capacity(basis.len());
        for &(p2, q2) in &basis {
            let x = full_product(a, p, p2);
            let y = full_product(b, q, q2);
            let mut out = vector::zero(field, basis.len());
            for (u, cu) in vector::support(&x) {
                for (v, cv) in vector::support(&y) {
                    let k = index(u, v)
                        .ok_or_else(|| Error::Structural("product in A⊗B has a component along 1⊗1".into()))?;
                    out[k] += &(cu * cv);
                }
            }
            row.push(out);
        }
        mul.push(row);
    }
    AugmentedAlgebra::new(field, names, mul)
}

/// `E_A ⊗ E_B` over `A⊗B`, where `E_A` is the extension of the trivial trident
/// `(A, 0, 0, 0)`, together with the positions of the summands of `A⊙B`'s `M`
/// (first `[aᵢ⊗1]⊗[1⊗bⱼ]`, then `[1⊗aᵢ]⊗[bⱼ⊗1]`, each row-major).
pub fn odot_ambient(a: &AugmentedAlgebra, b: &AugmentedAlgebra) -> Result<(AugmentedAlgebra, Extension)> {
    let field = a.field();
    let ab = tensor_algebra(a, b)?;
    let (da, db) = (a.dim_bar(), b.dim_bar());
    let ea = extension_module(&trivial_trident(a.clone(), TridentModule::zero(field, da))?)?.module;
    let eb = extension_module(&trivial_trident(b.clone(), TridentModule::zero(field, db))?)?.module;
    let width_b = 1 + 2 * db;

    let gen = |mats: &[Matrix], dim: usize, k: usize| {
        if k == 0 {
            Matrix::identity(field, dim)
        } else {
            mats[k - 1].clone()
        }
    };
    let mut left = Vec::new();
    let mut right1 = Vec::new();
    let mut right2 = Vec::new();
    for (p, q) in tensor_bar_basis(da, db) {
        let (na, nb) = (ea.dim(), eb.dim());
        left.push(kron(&gen(&ea.left, na, p), &gen(&eb.left, nb, q)));
        right1.push(kron(&gen(&ea.right1, na, p), &gen(&eb.right1, nb, q)));
        right2.push(kron(&gen(&ea.right2, na, p), &gen(&eb.right2, nb, q)));
    }
    let names = ea
        .names()
        .iter()
        .flat_map(|x| eb.names().iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let module = TridentModule::new(field, names, kron(&ea.swap, &eb.swap), left, right1, right2)?;

    let mut m_positions = Vec::with_capacity(2 * da * db);
    for i in 0..da {
        for j in 0..db {
            m_positions.push((1 + i) * width_b + 1 + db + j);
        }
    }
    for i in 0..da {
        for j in 0..db {
            m_positions.push((1 + da + i) * width_b + 1 + j);
        }
    }
    let unit = vector::unit(field, module.dim(), 0);
    Ok((
        ab,
        Extension {
            module,
            m_positions,
            unit,
        },
    ))
}

/// Restriction of the actions of an extension to its `M` coordinates.
fn restrict_to_m(ext: &Extension, names: Vec<String>) -> Result<TridentModule> {
    let field = ext.module.field();
    let restrict = |mat: &Matrix| -> Result<Matrix> {
        let rows = ext
            .m_positions
            .iter()
            .map(|&r| ext.project(mat.row(r), "action on M"))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, ext.m_positions.len(), rows)
    };
    let all = |mats: &[Matrix]| mats.iter().map(restrict).collect::<Result<Vec<_>>>();
    TridentModule::new(
        field,
        names,
        restrict(&ext.module.swap)?,
        all(&ext.module.left)?,
        all(&ext.module.right1)?,
        all(&ext.module.right2)?,
    )
}

/// `A⊙B`: the trident on `A⊗B` with `M = [Ā⊗1]⊗[1⊗B̄] ⊕ [1⊗Ā]⊗[B̄⊗1]`.
pub fn odot_product(a: &AugmentedAlgebra, b: &AugmentedAlgebra) -> Result<TridentAlgebra> {
    let field: Field = a.field();
    let (ab, ambient) = odot_ambient(a, b)?;
    let (da, db) = (a.dim_bar(), b.dim_bar());
    let mut m_names = Vec::with_capacity(2 * da * db);
    for i in 0..da {
        for j in 0..db {
            m_names.push(format!("({}⊗1)⊗(1⊗{})", a.name(i), b.name(j)));
        }
    }
    for i in 0..da {
        for j in 0..db {
            m_names.push(format!("(1⊗{})⊗({}⊗1)", a.name(i), b.name(j)));
        }
    }
    let module = restrict_to_m(&ambient, m_names)?;
    let m = module.dim();
    let first = |i: usize, j: usize| i * db + j;
    let second = |i: usize, j: usize| da * db + i * db + j;
    let pure = |i: usize, j: usize| da + db + i * db + j;
    let nbar = ab.dim_bar();

    let mut f = Matrix::zeros(field, nbar, m);
    for i in 0..da {
        for j in 0..db {
            f.set(pure(i, j), first(i, j), field.one());
            f.set(pure(i, j), second(i, j), field.one());
        }
    }
    let mut g = vec![vec![vector::zero(field, m); nbar]; nbar];
    for i in 0..da {
        for j in 0..db {
            // g(a⊗1, 1⊗b′) and g(1⊗b, a′⊗1)
            g[i][da + j][first(i, j)] = field.one();
            g[da + j][i][second(i, j)] = field.one();
        }
    }
    let t = TridentAlgebra::new(ab, module, f, g)?;
    t.require_valid()?;
    Ok(t)
}
