use std::fmt::Debug;
use std::ops::{Mul, Neg};

use num_traits::Num;

/// Coefficient ring of a truncated series.
pub trait SeriesCoefficient: Num + Neg<Output = Self> + Clone + Debug {}

impl<T: Num + Neg<Output = T> + Clone + Debug> SeriesCoefficient for T {}

/// Element of `R[h] / (h^{n+1})`, the cohomology ring of projective
/// `n`-space when `h` is the hyperplane class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: SeriesCoefficient> TruncatedSeries<T> {
    /// Series with the given low coefficients, padded or truncated to
    /// degree `top`.
    pub fn new(mut coeffs: Vec<T>, top: usize) -> Self {
        coeffs.resize(top + 1, T::zero());
        Self { coeffs }
    }

    pub fn one(top: usize) -> Self {
        Self::new(vec![T::one()], top)
    }

    /// `1 + b h`
    pub fn linear(b: T, top: usize) -> Self {
        Self::new(vec![T::one(), b], top)
    }

    /// `b h`
    pub fn hyperplane_multiple(b: T, top: usize) -> Self {
        Self::new(vec![T::zero(), b], top)
    }

    pub fn top_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, degree: usize) -> T {
        self.coeffs.get(degree).cloned().unwrap_or_else(T::zero)
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    /// Inverse of a series whose constant term is `1` or `-1`.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.coeffs[0].clone();
        let c0_inv = if c0.is_one() {
            T::one()
        } else if (-c0.clone()).is_one() {
            -T::one()
        } else {
            return None;
        };
        let top = self.top_degree();
        let mut inv: Vec<T> = Vec::with_capacity(top + 1);
        inv.push(c0_inv.clone());
        for i in 1..=top {
            let mut acc = T::zero();
            for j in 1..=i {
                acc = acc + self.coeffs[j].clone() * inv[i - j].clone();
            }
            inv.push(-(acc * c0_inv.clone()));
        }
        Some(Self { coeffs: inv })
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(self.top_degree()), |acc, _| &acc * self)
    }
}

impl<T: SeriesCoefficient> Mul<&TruncatedSeries<T>> for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: &TruncatedSeries<T>) -> TruncatedSeries<T> {
        assert_eq!(self.top_degree(), rhs.top_degree(), "series precision mismatch");
        let top = self.top_degree();
        let mut out = vec![T::zero(); top + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(top + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl<T: SeriesCoefficient> Mul for TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: TruncatedSeries<T>) -> TruncatedSeries<T> {
        &self * &rhs
    }
}
