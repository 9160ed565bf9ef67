//! Poly-Bernoulli values and the closed forms built on them.
//!
//! [`pb_poly_value`] expands the generating function
//! `e^{-xt} Li_k(1 - e^{-t}) / (1 - e^{-t})` as an exact truncated series and
//! is the reference every closed form and recurrence is checked against.

use std::sync::LazyLock;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::exactmath::{
    choose, factorial, rising, stirling1, stirling2, to_integer, Integer, Rational,
    TruncatedSeries, UniPoly,
};
use crate::memo::MemoTable;

/// Asks for `B_n^{(k)}(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyBernoulliQuery {
    pub n: usize,
    pub k: i64,
    pub x: Rational,
}

impl PolyBernoulliQuery {
    pub fn new(n: usize, k: i64, x: Rational) -> Self {
        PolyBernoulliQuery { n, k, x }
    }
}

static PB_VALUES: LazyLock<MemoTable<PolyBernoulliQuery, Rational>> = LazyLock::new(MemoTable::new);

/// `B_n^{(k)}(x)`: `n!` times the coefficient of `t^n` in the generating
/// function.
pub fn pb_poly_value(q: &PolyBernoulliQuery) -> Rational {
    PB_VALUES.get_or_insert_with(q, || series_value(q))
}

/// `B_n^{(-k)}`, the poly-Bernoulli number of negative index.
pub fn poly_bernoulli_b(n: usize, k: usize) -> Rational {
    pb_poly_value(&PolyBernoulliQuery::new(n, -(k as i64), Rational::zero()))
}

/// `C_n^{(-k)} = B_n^{(-k)}(1)`.
pub fn poly_bernoulli_c(n: usize, k: usize) -> Rational {
    pb_poly_value(&PolyBernoulliQuery::new(n, -(k as i64), Rational::one()))
}

fn series_value(q: &PolyBernoulliQuery) -> Rational {
    let order = q.n;
    let one = Rational::one();
    // u = 1 - e^{-t}, which has zero constant term.
    let u = TruncatedSeries::one(order).sub(&TruncatedSeries::exp_scaled(&-&one, order));
    // Li_k(z)/z = sum_{m>=1} z^{m-1} / m^k; powers of z above `order` vanish after substitution.
    let li_over_z = UniPoly::from_coeffs((1..=order + 1).map(|m| inverse_power(m, q.k)).collect());
    let g = TruncatedSeries::from_poly(&li_over_z, order)
        .compose(&u)
        .expect("u has zero constant term");
    let f = g.mul(&TruncatedSeries::exp_scaled(&-&q.x, order));
    f.coeff(q.n) * Rational::from_integer(factorial(q.n))
}

/// `m^{-k}` as an exact rational for either sign of `k`.
fn inverse_power(m: usize, k: i64) -> Rational {
    let base = Integer::from(m);
    let p = num_traits::pow(base, k.unsigned_abs() as usize);
    if k <= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(Integer::one(), p)
    }
}

/// Symmetrized poly-Bernoulli number
/// `sum_{j=0}^{m} st(m, j) B_n^{(-k-j)}(m)`.
pub fn symmetrized(n: usize, k: usize, m: usize) -> Result<Integer> {
    let x = Rational::from_integer(Integer::from(m));
    let total = (0..=m).fold(Rational::zero(), |acc, j| {
        let q = PolyBernoulliQuery::new(n, -((k + j) as i64), x.clone());
        acc + Rational::from_integer(stirling1(m, j)) * pb_poly_value(&q)
    });
    to_integer(&total, format!("symmetrized({n}, {k}, {m})"))
}

/// Number of `m`-barred Callan sequences of size `n x k` with exactly `r`
/// ordinary pairs: `C(r+m, m) (r!)^2 S(n+1, r+1) S(k+1, r+1)`.
pub fn bhat_refined(n: usize, k: usize, m: usize, r: usize) -> Integer {
    if r > n.min(k) {
        return Integer::zero();
    }
    let rf = factorial(r);
    choose(r + m, m) * &rf * &rf * stirling2(n + 1, r + 1) * stirling2(k + 1, r + 1)
}

/// Normalized symmetrized poly-Bernoulli number, summed over the number of
/// ordinary pairs.
pub fn bhat_closed(n: usize, k: usize, m: usize) -> Integer {
    (0..=n.min(k)).map(|r| bhat_refined(n, k, m, r)).sum()
}

/// Callan polynomial
/// `sum_j j! (x+1)^{rising j} S(n+1, j+1) S(k+1, j+1)`.
pub fn callan_poly_closed(n: usize, k: usize) -> UniPoly {
    let x_plus_1 = UniPoly::from_ints(&[1, 1]);
    (0..=n.min(k))
        .map(|j| {
            let c = factorial(j) * stirling2(n + 1, j + 1) * stirling2(k + 1, j + 1);
            rising(&x_plus_1, j).scale_int(&c)
        })
        .sum()
}

/// The `C_k^{-1}(x)` column obtained by continuing the Callan polynomial to
/// upper index `-1`:
/// `(1/(k+1)!) sum_l (-1)^l st(k+2, l+2) C_k^l(x)`.
pub fn negative_index_callan(k: usize) -> UniPoly {
    let sum: UniPoly = (0..=k)
        .map(|l| {
            let c = stirling1(k + 2, l + 2);
            let c = if l % 2 == 0 { c } else { -c };
            callan_poly_closed(k, l).scale_int(&c)
        })
        .sum();
    sum.scale(&Rational::new(Integer::one(), factorial(k + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat, seki_polynomial};

    #[test]
    fn constant_term_is_one() {
        for k in -3..=3 {
            for x in [rat(0, 1), rat(1, 1), rat(-5, 2)] {
                assert_eq!(pb_poly_value(&PolyBernoulliQuery::new(0, k, x)), rat(1, 1));
            }
        }
    }

    #[test]
    fn known_series_values() {
        assert_eq!(poly_bernoulli_b(2, 2), rat(14, 1));
        // t/(e^t - 1) at t^2/2!
        assert_eq!(
            pb_poly_value(&PolyBernoulliQuery::new(2, 1, rat(1, 1))),
            rat(1, 6)
        );
        assert_eq!(
            pb_poly_value(&PolyBernoulliQuery::new(1, 1, rat(1, 1))),
            rat(-1, 2)
        );
    }

    #[test]
    fn duality_of_negative_index() {
        for n in 0..=6 {
            for k in 0..=6 {
                assert_eq!(poly_bernoulli_b(n, k), poly_bernoulli_b(k, n));
                assert_eq!(bhat_closed(n, k, 2), bhat_closed(k, n, 2));
            }
        }
    }

    #[test]
    fn symmetrized_specializations() {
        for n in 0..=4 {
            for k in 0..=4 {
                assert_eq!(
                    Rational::from_integer(symmetrized(n, k, 0).unwrap()),
                    poly_bernoulli_b(n, k)
                );
                assert_eq!(
                    Rational::from_integer(symmetrized(n, k, 1).unwrap()),
                    poly_bernoulli_c(n, k + 1)
                );
            }
        }
        assert_eq!(symmetrized(2, 2, 1).unwrap(), int(31));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(bhat_closed(2, 2, 0), int(14));
        assert_eq!(bhat_closed(3, 1, 2), int(22));
        for n in 0..=5 {
            assert_eq!(bhat_closed(n, 0, 3), int(1));
            assert_eq!(bhat_closed(0, n, 3), int(1));
        }
    }

    #[test]
    fn refined_terms() {
        assert_eq!(bhat_refined(2, 2, 0, 1), int(9));
        assert_eq!(bhat_refined(2, 2, 0, 3), int(0));
        let total: Integer = (0..=4).map(|r| bhat_refined(2, 2, 0, r)).sum();
        assert_eq!(total, int(14));
    }

    #[test]
    fn callan_polynomial_closed() {
        assert_eq!(callan_poly_closed(2, 2), UniPoly::from_ints(&[14, 15, 2]));
        assert_eq!(callan_poly_closed(1, 1), UniPoly::from_ints(&[2, 1]));
        assert_eq!(callan_poly_closed(0, 4), UniPoly::one());
        assert_eq!(callan_poly_closed(4, 0), UniPoly::one());
        assert_eq!(callan_poly_closed(2, 1), UniPoly::from_ints(&[4, 3]));
    }

    #[test]
    fn callan_polynomial_specializes_to_bhat() {
        for n in 0..=6 {
            for k in 0..=6 {
                let p = callan_poly_closed(n, k);
                assert!(p.is_integral());
                assert_eq!(p, callan_poly_closed(k, n));
                for m in 0..=4 {
                    assert_eq!(
                        p.eval(&rat(m as i64, 1)),
                        Rational::from_integer(bhat_closed(n, k, m))
                    );
                }
            }
        }
    }

    #[test]
    fn negative_index_column() {
        assert_eq!(negative_index_callan(0), UniPoly::one());
        assert_eq!(
            negative_index_callan(1),
            UniPoly::from_coeffs(vec![rat(1, 2), rat(-1, 2)])
        );
        for k in 0..=10 {
            let expected = (-seki_polynomial(k).reflect()).div_x().unwrap();
            assert_eq!(negative_index_callan(k), expected, "k = {k}");
        }
    }
}
