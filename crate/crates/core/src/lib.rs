//! Exact computation in the diagonal reduction algebra
//! Z(osp(1|2) x osp(1|2), osp(1|2)).
//!
//! The crate is layered bottom-up:
//!
//! * [`coeff`]: exact scalars, including rational functions in the diagonal
//!   Cartan element `H`.
//! * [`uea`]: the localized enveloping algebra of osp(1|2) x osp(1|2) with PBW
//!   normal ordering, super brackets, the anti-automorphism and reduction
//!   modulo the ideals `I` and `II`.
//! * [`projector`]: the extremal projector coefficients and the diamond
//!   product on the double coset space.
//! * [`zalg`]: the reduction algebra as a presented algebra, its relation
//!   catalog, and conversion to and from the tilde basis.
//! * [`rep`]: the module `C[x] (x) V(lambda)`, its primitive vectors and the
//!   induced action of `Z`.
//! * [`cli_io`]: expression parser, renderers and verification suites.

pub mod cli_io;
pub mod coeff;
pub mod error;
pub mod projector;
pub mod rep;
pub mod uea;
pub mod zalg;

pub use error::{Error, Result};
