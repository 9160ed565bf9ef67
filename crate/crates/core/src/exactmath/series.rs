use num_traits::{One, Zero};

use super::{Integer, Rational, UniPoly};
use crate::error::{Error, Result};

/// Power series in `t` truncated after `t^order`.
///
/// Coefficients up to `order` are exact; everything above is discarded.
/// Binary operations on series of different orders truncate to the smaller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![Rational::one()])
    }

    /// The identity series `t`.
    pub fn t(order: usize) -> Self {
        Self::new(order, vec![Rational::zero(), Rational::one()])
    }

    /// `exp(c t)`
    pub fn exp_scaled(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        for i in 0..=order {
            if i > 0 {
                term = term * c / Rational::from_integer(Integer::from(i));
            }
            coeffs.push(term.clone());
        }
        TruncatedSeries { order, coeffs }
    }

    pub fn from_poly(p: &UniPoly, order: usize) -> Self {
        Self::new(order, p.coeffs().iter().take(order + 1).cloned().collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`. Panics past the truncation order.
    pub fn coeff(&self, i: usize) -> Rational {
        assert!(
            i <= self.order,
            "coefficient {i} beyond truncation order {}",
            self.order
        );
        self.coeffs[i].clone()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        TruncatedSeries {
            order,
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        TruncatedSeries {
            order,
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &other.coeffs[i])
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { order, coeffs }
    }

    /// `self(inner(t))`, requiring `inner(0) = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order.min(inner.order);
        let inner = inner.truncate(order);
        // Horner: terms above `order` cannot reach t^order once multiplied by inner.
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }
}
