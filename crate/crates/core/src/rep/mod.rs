//! The module `C[x] (x) V(lambda)` over osp(1|2) x osp(1|2) and the action of
//! `Z` on its primitive vectors.
//!
//! `C[x]` has `x` odd and `h` spectrum `1/2 + Z>=0`, so every `H` eigenvalue
//! of the tensor product lies in `1/2 + Z` and no coefficient of `Z` is ever
//! evaluated at a pole.

mod matrix;
mod module;
mod rho;

pub use matrix::Matrix;
pub use module::{
    irrep_bracket_defects, poly_bracket_defects, same_span, IrrepData, ModuleVector, PolyModule,
    TensorModule,
};
pub use rho::{
    check_rep_relations, example_basis, example_module, example_rho, example_rho_full, example_top, generated_algebra_dimension,
    is_irreducible, rho, RepRelationCheck, RhoMatrices,
};

#[cfg(test)]
mod tests;
