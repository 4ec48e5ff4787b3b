//! Exact arithmetic for Frobenius-Euler numbers and polynomials, Bernstein
//! basis polynomials, and fermionic p-adic integrals, together with a harness
//! that sweeps a catalog of identities relating the three and reports every
//! checked instance as verified, refuted, or skipped with exact witnesses.
//!
//! All computation is over arbitrary-precision rationals; no floating point
//! is involved anywhere. Where a quantity can be computed along genuinely
//! different routes (a recurrence and a generating-function expansion, a
//! p-adic limit of partial sums and a closed form), both routes are kept and
//! cross-checked rather than collapsed into one.
//!
//! The polynomial and truncated power series cores are generic over any
//! exact field scalar (see [`Scalar`]); the rest of the crate works with the
//! concrete rational instantiations [`PolyQ`] and [`SeriesQ`].

pub mod bernstein;
mod error;
pub mod expr;
pub mod frobenius;
pub mod harness;
pub mod padic;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod series;

pub use error::Error;
pub use poly::Poly;
pub use scalar::Scalar;
pub use series::Series;

/// Arbitrary-precision rational number, the scalar type used throughout.
pub type Rational = num_rational::BigRational;

/// Dense polynomial with rational coefficients.
pub type PolyQ = Poly<Rational>;

/// Truncated power series with rational coefficients.
pub type SeriesQ = Series<Rational>;
