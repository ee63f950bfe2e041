//! Arity-truncated symmetric operads given on explicit bases.

pub mod axioms;
mod com;
mod element;
mod hadamard;
mod morphism;
mod tabulated;
pub mod truncation;
pub mod units;
mod view;

pub use axioms::{check_operad_axioms, AxiomReport, AxiomViolation, CheckMode};
pub use com::com_operad;
pub use element::{Element, ElementRepr};
pub use hadamard::{hadamard_product, HadamardOperad};
pub use morphism::{check_morphism, com_quotient, LinearMapFamily, MorphismReport, MorphismViolation};
pub use tabulated::{tabulate, OperadTables, TabulatedOperad, TabulatedOperadJson};
pub use truncation::{dim_profile, restriction, truncation_ideal, DimProfile};
pub use units::{
    check_designated_units, check_units, ideal_identity_failures, standard_basis, symmetrize_two_unit,
    two_unit_candidates, unit_n, TwoUnitCandidates, UnitFlags,
};
pub use view::{BasisKind, OperadExt, OperadView, Terms};

#[cfg(test)]
mod tests;
