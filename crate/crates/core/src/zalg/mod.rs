//! The diagonal reduction algebra `Z` as a presented algebra.
//!
//! Elements are left coefficient combinations of ordered diamond monomials
//! `E(-2)^p <> E(-1)^q <> E(0)^r <> E(1)^s <> E(2)^t`. Each monomial maps to
//! a pure tilde element of `U/II` through the projector; that map is unit
//! triangular, which gives the inverse [`tilde_to_z`] and an independent
//! oracle for the product.

mod catalog;
mod convert;
mod element;
mod monomial;
mod rewrite;
mod verify;

pub use catalog::{Relation, RelationCatalog, PAIRS};
pub use convert::{tilde_to_z, triangularity_defect, z_monomial_to_tilde, z_oracle_multiply, z_to_tilde};
pub use element::{z_multiply, z_theta, ZElement};
pub use monomial::{ZGen, ZMonomial};
pub use rewrite::{straighten_with, ZWord};
pub use verify::{
    check_cartan_family, check_relation, check_relations, check_shift_family, oracle_mismatches,
    theta_relation, triangularity_defects, verify_presentation, PresentationReport, RelationCheck,
};
