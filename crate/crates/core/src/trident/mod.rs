//! Trident systems `(A, M, f, g)`: validation, morphisms, the trivial trident,
//! the `A⊙B` product and the extension bimodule `E`.

mod algebra;
mod construct;
mod json;
mod module;
mod morphism;
mod system;

pub use algebra::{format_combination, AugmentedAlgebra};
pub use construct::{extension_module, odot_ambient, odot_product, tensor_algebra, Extension};
pub use json::{algebra_from_json_str, algebra_to_json_string, AlgebraJson, ModuleJson, TridentJson};
pub use module::TridentModule;
pub use morphism::check_trident_morphism;
pub use system::{trivial_trident, TridentAlgebra, TridentReport, TridentViolation};

#[cfg(test)]
mod tests;
