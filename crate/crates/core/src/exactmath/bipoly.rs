use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{power, write_term};
use super::{Integer, Rational, UniPoly};

/// Sparse bivariate polynomial in `x` and `y`, keyed by `(deg_x, deg_y)`.
///
/// Zero coefficients are never stored, so equality is coefficientwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, dx: usize, dy: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(dx, dy, c);
        p
    }

    /// Builds from `(deg_x, deg_y, coefficient)` triples; repeated keys add up.
    pub fn from_int_terms(terms: &[(usize, usize, i64)]) -> Self {
        let mut p = Self::zero();
        for &(dx, dy, c) in terms {
            p.add_term(dx, dy, Rational::from_integer(Integer::from(c)));
        }
        p
    }

    pub fn add_term(&mut self, dx: usize, dy: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((dx, dy)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(dx, dy));
        }
    }

    pub fn coeff(&self, dx: usize, dy: usize) -> Rational {
        self.terms
            .get(&(dx, dy))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(dx, dy), v) in &self.terms {
            out.add_term(dx, dy, v * c);
        }
        out
    }

    pub fn scale_int(&self, c: &Integer) -> Self {
        self.scale(&Rational::from_integer(c.clone()))
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(dx, dy), c)| ((dy, dx), c.clone()))
                .collect(),
        }
    }

    /// Substitutes a value for `y`, leaving a polynomial in `x`.
    pub fn eval_y(&self, y: &Rational) -> UniPoly {
        self.terms
            .iter()
            .map(|(&(dx, dy), c)| UniPoly::monomial(c * pow(y, dy), dx))
            .sum()
    }

    /// Substitutes a value for `x`, leaving a polynomial in `y`.
    pub fn eval_x(&self, x: &Rational) -> UniPoly {
        self.swap().eval_y(x)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(dx, dy), c)| c * pow(x, dx) * pow(y, dy))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Nonzero terms in display order: total degree descending, then `deg_x`
    /// descending.
    pub fn terms_graded(&self) -> Vec<((usize, usize), &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().map(|(&k, v)| (k, v)).collect();
        terms.sort_by_key(|&((dx, dy), _)| std::cmp::Reverse((dx + dy, dx)));
        terms
    }
}

fn pow(base: &Rational, exp: usize) -> Rational {
    (0..exp).fold(Rational::one(), |acc, _| acc * base)
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(dx, dy), c) in &rhs.terms {
            out.add_term(dx, dy, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(ax, ay), a) in &self.terms {
            for (&(bx, by), b) in &rhs.terms {
                out.add_term(ax + bx, ay + by, a * b);
            }
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((dx, dy), c)) in self.terms_graded().into_iter().enumerate() {
            let monomial = match (power("x", dx), power("y", dy)) {
                (a, b) if a.is_empty() => b,
                (a, b) if b.is_empty() => a,
                (a, b) => format!("{a}*{b}"),
            };
            write_term(f, c, &monomial, i == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn t22() -> BiPoly {
        BiPoly::from_int_terms(&[
            (2, 1, 1),
            (1, 2, 1),
            (2, 0, 1),
            (1, 1, 7),
            (0, 2, 1),
            (1, 0, 7),
            (0, 1, 7),
            (0, 0, 6),
        ])
    }

    #[test]
    fn renders_graded_order() {
        assert_eq!(
            t22().to_string(),
            "x^2*y + x*y^2 + x^2 + 7*x*y + y^2 + 7*x + 7*y + 6"
        );
        assert_eq!(BiPoly::zero().to_string(), "0");
    }

    #[test]
    fn marginals() {
        let p = t22();
        assert_eq!(p.eval_y(&rat(1, 1)), UniPoly::from_ints(&[14, 15, 2]));
        assert_eq!(p.eval_x(&rat(1, 1)), UniPoly::from_ints(&[14, 15, 2]));
        assert_eq!(p.eval(&rat(1, 1), &rat(1, 1)), rat(31, 1));
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = &(&BiPoly::x() + &BiPoly::y()) - &BiPoly::x();
        assert_eq!(p, BiPoly::y());
        let q = &(&BiPoly::x() - &BiPoly::one()) * &(&BiPoly::y() - &BiPoly::one());
        assert_eq!(
            q,
            BiPoly::from_int_terms(&[(1, 1, 1), (1, 0, -1), (0, 1, -1), (0, 0, 1)])
        );
    }
}
