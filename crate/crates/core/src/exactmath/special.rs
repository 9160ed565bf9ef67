use num_traits::{One, Zero};

use super::{to_integer, Integer, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::memo::GrowingTable;
use crate::polybern::{pb_poly_value, PolyBernoulliQuery};

static FACTORIALS: GrowingTable<Integer> = GrowingTable::new();
static STIRLING1: GrowingTable<Vec<Integer>> = GrowingTable::new();
static STIRLING2: GrowingTable<Vec<Integer>> = GrowingTable::new();
static BERNOULLI: GrowingTable<Rational> = GrowingTable::new();
static GANDHI: GrowingTable<UniPoly> = GrowingTable::new();

pub fn factorial(n: usize) -> Integer {
    FACTORIALS.row(n, |prev| match prev.last() {
        None => Integer::one(),
        Some(last) => last * Integer::from(prev.len()),
    })
}

/// Binomial coefficient; zero when `r < 0` or `r > n`. Negative `n` is
/// unsupported.
pub fn binomial(n: i64, r: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::NegativeBinomial(n));
    }
    if r < 0 || r > n {
        return Ok(Integer::zero());
    }
    Ok(choose(n as usize, r as usize))
}

/// Binomial coefficient for naturals, zero when `r > n`.
pub fn choose(n: usize, r: usize) -> Integer {
    if r > n {
        return Integer::zero();
    }
    let r = r.min(n - r);
    let mut acc = Integer::one();
    for i in 0..r {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// Rising factorial `p (p+1) ... (p+j-1)` of a polynomial.
pub fn rising(p: &UniPoly, j: usize) -> UniPoly {
    (0..j).fold(UniPoly::one(), |acc, i| {
        let factor = p + &UniPoly::constant(Rational::from_integer(Integer::from(i)));
        &acc * &factor
    })
}

/// Unsigned Stirling number of the first kind (permutations of `n` with `k`
/// cycles).
pub fn stirling1(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    STIRLING1.with_row(
        n,
        |prev| {
            let m = prev.len();
            if m == 0 {
                return vec![Integer::one()];
            }
            let last = &prev[m - 1];
            (0..=m)
                .map(|k| {
                    let diag = if k > 0 {
                        last[k - 1].clone()
                    } else {
                        Integer::zero()
                    };
                    let stay = last
                        .get(k)
                        .map_or_else(Integer::zero, |v| v * Integer::from(m - 1));
                    diag + stay
                })
                .collect()
        },
        |row| row[k].clone(),
    )
}

/// Stirling number of the second kind (partitions of `n` into `k` blocks).
pub fn stirling2(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    STIRLING2.with_row(
        n,
        |prev| {
            let m = prev.len();
            if m == 0 {
                return vec![Integer::one()];
            }
            let last = &prev[m - 1];
            (0..=m)
                .map(|k| {
                    let diag = if k > 0 {
                        last[k - 1].clone()
                    } else {
                        Integer::zero()
                    };
                    let stay = last
                        .get(k)
                        .map_or_else(Integer::zero, |v| v * Integer::from(k));
                    diag + stay
                })
                .collect()
        },
        |row| row[k].clone(),
    )
}

/// Bernoulli number with `B_1 = +1/2`, from `sum_{j<=n} C(n+1, j) B_j = n + 1`.
pub fn bernoulli(n: usize) -> Rational {
    BERNOULLI.row(n, |prev| {
        let m = prev.len();
        let partial = prev
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (j, b)| {
                acc + b * Rational::from_integer(choose(m + 1, j))
            });
        let n1 = Rational::from_integer(Integer::from(m + 1));
        (&n1 - partial) / n1
    })
}

/// Seki-Bernoulli polynomial `S_k(x)` with `S_k(n) = 1^k + ... + n^k`.
pub fn seki_polynomial(k: usize) -> UniPoly {
    let scale = Rational::new(Integer::one(), Integer::from(k + 1));
    (0..=k)
        .map(|j| {
            let c = Rational::from_integer(choose(k + 1, j)) * bernoulli(j) * &scale;
            UniPoly::monomial(c, k + 1 - j)
        })
        .sum()
}

/// Gandhi polynomial `G_n(z)`: `G_0 = 1`, `G_1 = 0`,
/// `G_{n+2}(z) = z(z+1) G_n(z+1) - z^2 G_n(z)`.
pub fn gandhi_polynomial(n: usize) -> UniPoly {
    GANDHI.row(n, |prev| match prev.len() {
        0 => UniPoly::one(),
        1 => UniPoly::zero(),
        m => {
            let g = &prev[m - 2];
            let z = UniPoly::x();
            let z_z1 = &z * &(&z + &UniPoly::one());
            let shifted = g.shift(&Rational::one());
            &(&z_z1 * &shifted) - &(&(&z * &z) * g)
        }
    })
}

/// Genocchi number `(2 - 2^{n+1}) B_n^{(1)}(1)`, taken from the
/// generating-function series.
pub fn genocchi(n: usize) -> Result<Integer> {
    let value = pb_poly_value(&PolyBernoulliQuery::new(n, 1, Rational::one()));
    let two = Integer::from(2);
    let factor = &two - num_traits::pow(two.clone(), n + 1);
    to_integer(
        &(value * Rational::from_integer(factor)),
        format!("genocchi({n})"),
    )
}
