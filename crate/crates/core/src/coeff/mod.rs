//! Exact scalars: rationals, polynomials and rational functions in the
//! Cartan symbol `H`, and the quadratic field Q(sqrt 2).

mod poly;
mod quad;
mod ratfunc;

pub use poly::Polynomial;
pub use quad::QuadExt;
pub use ratfunc::RationalFunction;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
