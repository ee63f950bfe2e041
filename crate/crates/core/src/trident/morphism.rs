use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

use super::system::{TridentAlgebra, TridentReport, TridentViolation};

/// Checks that `(α, β)` is a morphism of trident systems `T → T′`.
///
/// Row `j` of `alpha` is `α(aⱼ) ∈ Ā′` and row `s` of `beta` is `β(μₛ) ∈ M′`;
/// `α` fixes the unit.
pub fn check_trident_morphism(
    source: &TridentAlgebra,
    target: &TridentAlgebra,
    alpha: &Matrix,
    beta: &Matrix,
) -> Result<TridentReport> {
    let field = source.field();
    for found in [target.field(), alpha.field(), beta.field()] {
        if found != field {
            return Err(Error::FieldMismatch { expected: field, found });
        }
    }
    let (d, m) = (source.dim_bar(), source.dim_m());
    let (d2, m2) = (target.dim_bar(), target.dim_m());
    if alpha.rows() != d || alpha.cols() != d2 {
        return Err(Error::Shape(format!(
            "α must be {d}x{d2}, found {}x{}",
            alpha.rows(),
            alpha.cols()
        )));
    }
    if beta.rows() != m || beta.cols() != m2 {
        return Err(Error::Shape(format!(
            "β must be {m}x{m2}, found {}x{}",
            beta.rows(),
            beta.cols()
        )));
    }
    let (a1, a2) = (&source.algebra, &target.algebra);
    let (m1, md2) = (&source.module, &target.module);
    let mut violations = Vec::new();
    let mut push = |identity: &'static str, witness: String, lhs: String, rhs: String, equal: bool| {
        if !equal {
            violations.push(TridentViolation {
                identity,
                witness,
                lhs,
                rhs,
            });
        }
    };
    let alpha_of = |v: &[Scalar]| alpha.left_mul(v);
    let beta_of = |v: &[Scalar]| beta.left_mul(v);

    for i in 0..d {
        for j in 0..d {
            let lhs = alpha_of(a1.mul_basis(i, j));
            let rhs = a2.mul(alpha.row(i), alpha.row(j));
            push(
                "alpha-multiplicative",
                format!("a={}, b={}", a1.name(i), a1.name(j)),
                a2.format(&lhs),
                a2.format(&rhs),
                lhs == rhs,
            );
        }
    }
    for s in 0..m {
        let mu = m1.basis(s);
        let w = m1.names()[s].clone();
        let lhs = beta_of(&m1.apply_swap(&mu));
        let rhs = md2.apply_swap(beta.row(s));
        push(
            "beta-swap",
            format!("μ={w}"),
            md2.format(&lhs),
            md2.format(&rhs),
            lhs == rhs,
        );
        for a in 0..d {
            let wit = format!("a={}, μ={w}", a1.name(a));
            let checks: [(&'static str, Vec<Scalar>, Vec<Scalar>); 3] = [
                (
                    "beta-left",
                    beta_of(&m1.left[a].left_mul(&mu)),
                    md2.left_act(alpha.row(a), beta.row(s)),
                ),
                (
                    "beta-right1",
                    beta_of(&m1.right1[a].left_mul(&mu)),
                    md2.right1_act(beta.row(s), alpha.row(a)),
                ),
                (
                    "beta-right2",
                    beta_of(&m1.right2[a].left_mul(&mu)),
                    md2.right2_act(beta.row(s), alpha.row(a)),
                ),
            ];
            for (name, lhs, rhs) in checks {
                push(name, wit.clone(), md2.format(&lhs), md2.format(&rhs), lhs == rhs);
            }
        }
    }
    for a in 0..d {
        let lhs = beta_of(source.f_basis(a));
        let rhs = target.f_vec(alpha.row(a));
        push(
            "f-square",
            format!("a={}", a1.name(a)),
            md2.format(&lhs),
            md2.format(&rhs),
            lhs == rhs,
        );
    }
    for a in 0..d {
        for b in 0..d {
            let lhs = beta_of(&source.g[a][b]);
            let rhs = target.g_vec(alpha.row(a), alpha.row(b));
            push(
                "g-square",
                format!("a={}, b={}", a1.name(a), a1.name(b)),
                md2.format(&lhs),
                md2.format(&rhs),
                lhs == rhs,
            );
        }
    }
    Ok(TridentReport { violations })
}
