//! The localized enveloping algebra `U` of osp(1|2) x osp(1|2).
//!
//! Elements are left `D^{-1}U(h)`-combinations of PBW monomials in the nine
//! letters `X(-2) < X(-1) < t(-2) < t(-1) < th < t(1) < t(2) < X(1) < X(2)`;
//! the diagonal Cartan `H` is absorbed into the coefficients. A coefficient
//! crossing a letter of root `k` from the right picks up the shift
//! `f(H) -> f(H + k)`.

mod element;
mod generator;
mod monomial;
mod normal;
mod ops;

pub use element::UeaElement;
pub use generator::{bracket, osp_bracket, swap_sign, Bracket, Generator, Kind, PBW_ORDER, ROOTS};
pub use monomial::UeaMonomial;
pub use normal::{
    normal_order, normal_order_with, Leftmost, RandomSites, RawFactor, RawTerm, Rightmost,
    SiteChooser,
};
pub use ops::{commutator_table, reduce_mod_i, reduce_mod_ii, super_bracket, theta};
pub(crate) use generator::root_latex;
pub(crate) use ops::{left_bracket_raising, right_bracket_lowering};

#[cfg(test)]
mod tests;
