//! Exact computation of local indices of one-dimensional holomorphic
//! foliations along invariant hypersurfaces with isolated singularities,
//! together with the global Chern-number identities on projective space that
//! those indices must satisfy.
//!
//! The algebra is generic over an [`ExactField`] coefficient type; the
//! aliases below fix it to arbitrary-precision rationals, which is what the
//! parser, the scenario runner and the CLI use.

pub mod chern;
pub mod indices;
pub mod localalgebra;
pub mod parser;
pub mod polynomial;
pub mod scalar;
pub mod verify;

pub use num_bigint::BigInt;

/// Serializes a big integer as a decimal string.
pub(crate) fn as_decimal<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub use num_rational::BigRational;

pub use polynomial::{Monomial, NotDivisible, Order, Polynomial, VectorField};
pub use scalar::ExactField;

/// Exact rational scalar.
pub type Rational = BigRational;
/// Polynomial over the rationals.
pub type QPolynomial = Polynomial<Rational>;
/// Polynomial vector field over the rationals.
pub type QVectorField = VectorField<Rational>;

/// Gröbner basis over the rationals.
pub type QGroebnerBasis = localalgebra::GroebnerBasis<Rational>;
/// Germ of a (hypersurface, vector field) pair over the rationals.
pub type QLocalContext = indices::LocalContext<Rational>;
/// Integer Chern series in the hyperplane class.
pub type ChernSeries = chern::TruncatedSeries<BigInt>;
