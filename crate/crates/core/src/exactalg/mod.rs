//! Exact arithmetic: rationals, sparse multivariate polynomials, resultants,
//! discriminants and rational functions.

mod det;
pub mod encoding;
mod poly;
mod ratfunc;
mod resultant;
mod unipoly;

pub use det::bareiss_determinant;
pub use encoding::{decode, encode, PolyLiteral};
pub use poly::{Monomial, MultiPoly};
pub use ratfunc::{ratfunc_equal, RatFunc};
pub use resultant::{discriminant, resultant, sylvester_matrix};
pub use unipoly::UniPoly;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
