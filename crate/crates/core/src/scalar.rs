//! Coefficient fields.
//!
//! Every algebraic routine in this crate is generic over a coefficient type
//! implementing [`ExactField`]. Zero tests drive both polynomial
//! canonicalization and Gröbner reductions, so only types with exact
//! arithmetic qualify; floating point types are deliberately not admitted.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// A field with exact arithmetic and exact equality.
pub trait ExactField: Num + Signed + Clone + Debug + Display + Ord + Send + Sync + 'static {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::one() / self.clone()
    }
}

impl<T> ExactField for Ratio<T> where
    T: Integer + Signed + Clone + Debug + Display + Send + Sync + 'static
{
}

/// Convert an integer into any exact field by repeated doubling.
pub fn from_i64<C: ExactField>(value: i64) -> C {
    let mut acc = C::zero();
    let mut base = C::one();
    let mut v = value.unsigned_abs();
    while v > 0 {
        if v & 1 == 1 {
            acc = acc + base.clone();
        }
        base = base.clone() + base;
        v >>= 1;
    }
    if value < 0 {
        -acc
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn from_i64_matches_native_construction() {
        for v in [-17i64, -1, 0, 1, 2, 255, 1 << 40] {
            assert_eq!(from_i64::<BigRational>(v), BigRational::from_integer(BigInt::from(v)));
            assert_eq!(from_i64::<Rational64>(v), Rational64::from_integer(v));
        }
    }

    #[test]
    fn inverse_is_exact() {
        let q = BigRational::new(BigInt::from(-3), BigInt::from(7));
        assert_eq!(q.inv() * q, BigRational::from_integer(BigInt::from(1)));
    }
}
