use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::{Integer, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial with rational coefficients.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so the
/// zero polynomial is the empty list and equality is coefficientwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        UniPoly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Builds from ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(Integer::from(c)))
                .collect(),
        )
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x + c`
    pub fn linear(c: Rational) -> Self {
        Self::from_coeffs(vec![c, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, c: &Integer) -> Self {
        self.scale(&Rational::from_integer(c.clone()))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Substitutes `inner` for the variable: `self(inner(x))`.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| {
            &(&acc * inner) + &UniPoly::constant(c.clone())
        })
    }

    /// `self(x + c)`
    pub fn shift(&self, c: &Rational) -> UniPoly {
        self.compose(&UniPoly::linear(c.clone()))
    }

    /// `self(-x)`
    pub fn reflect(&self) -> UniPoly {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Exact division by `x`.
    pub fn div_x(&self) -> Result<UniPoly> {
        match self.coeffs.first() {
            None => Ok(UniPoly::zero()),
            Some(c) if !c.is_zero() => Err(Error::NotDivisibleByX(c.to_string())),
            Some(_) => Ok(UniPoly {
                coeffs: self.coeffs[1..].to_vec(),
            }),
        }
    }

    /// Renders with the given variable name.
    pub fn display_with<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }

    /// Nonzero terms as `(degree, coefficient)`, highest degree first.
    pub fn terms_desc(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
    }
}

impl From<Rational> for UniPoly {
    fn from(c: Rational) -> Self {
        UniPoly::constant(c)
    }
}

impl From<Integer> for UniPoly {
    fn from(c: Integer) -> Self {
        UniPoly::constant(Rational::from_integer(c))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        -&self
    }
}

impl AddAssign<&UniPoly> for UniPoly {
    fn add_assign(&mut self, rhs: &UniPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&UniPoly> for UniPoly {
    fn sub_assign(&mut self, rhs: &UniPoly) {
        *self = &*self - rhs;
    }
}

impl Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::zero(), |acc, p| acc + p)
    }
}

/// Writes a coefficient times a monomial in the `2*x^2`, `x`, `-1/2*x` style.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    coeff: &Rational,
    monomial: &str,
    first: bool,
) -> fmt::Result {
    let negative = coeff.is_negative();
    if first {
        if negative {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if negative { " - " } else { " + " })?;
    }
    let magnitude = coeff.abs();
    if monomial.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude.is_one() {
        f.write_str(monomial)
    } else {
        write!(f, "{magnitude}*{monomial}")
    }
}

pub(crate) fn power(var: &str, exp: usize) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (deg, c)) in self.poly.terms_desc().enumerate() {
            write_term(f, c, &power(self.var, deg), i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("x").fmt(f)
    }
}
