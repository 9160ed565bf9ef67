//! Memoized recurrence engines.
//!
//! Every table is filled column by column in the second index `k`; cells of
//! one column depend only on the previous column, so each column is computed
//! in parallel. Entries are write-once, so results do not depend on the order
//! in which queries arrive.

use std::hash::Hash;
use std::sync::LazyLock;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::{choose, BiPoly, Integer, Rational, UniPoly};
use crate::memo::MemoTable;
use crate::polybern::bhat_refined;

static BHAT: LazyLock<MemoTable<(usize, usize, usize), Integer>> = LazyLock::new(MemoTable::new);
static CALLAN: LazyLock<MemoTable<(usize, usize), UniPoly>> = LazyLock::new(MemoTable::new);
static TABLEAU: LazyLock<MemoTable<(usize, usize), UniPoly>> = LazyLock::new(MemoTable::new);
static CONJECTURE: LazyLock<MemoTable<(usize, usize), BiPoly>> = LazyLock::new(MemoTable::new);

/// Fills rows `0..=n` of columns `0..=k`. `cell(row, col, prev)` computes one
/// entry, where `prev(j)` reads row `j` of column `col - 1`.
fn fill<K, V, KF, CF>(table: &MemoTable<K, V>, n: usize, k: usize, key: KF, cell: CF) -> V
where
    K: Eq + Hash + Clone + Send + Sync,
    V: Clone + Send + Sync,
    KF: Fn(usize, usize) -> K + Sync,
    CF: Fn(usize, usize, &dyn Fn(usize) -> V) -> V + Sync,
{
    if let Some(v) = table.get(&key(n, k)) {
        return v;
    }
    for col in 0..=k {
        (0..=n).into_par_iter().for_each(|row| {
            if table.contains(&key(row, col)) {
                return;
            }
            let prev = |j: usize| table.get(&key(j, col - 1)).expect("previous column filled");
            let v = cell(row, col, &prev);
            table.insert(key(row, col), v);
        });
    }
    table.get(&key(n, k)).expect("cell filled")
}

fn binom(n: usize, j: usize) -> Integer {
    choose(n, j)
}

/// `Ĉ_n^k(m)` by the three-term recurrence in `k`.
pub fn bhat_rec(n: usize, k: usize, m: usize) -> Integer {
    let mi = Integer::from(m);
    fill(
        &BHAT,
        n,
        k,
        |a, b| (a, b, m),
        |row, col, prev| {
            if row == 0 || col == 0 {
                return Integer::one();
            }
            let mut shifted = Integer::zero();
            let mut lower = Integer::zero();
            for j in 1..=row {
                let c = binom(row, j);
                shifted += &c * prev(row - j + 1);
                lower += c * prev(row - j);
            }
            prev(row) + shifted + &mi * lower
        },
    )
}

/// `Ĉ_n^k(m)` by the recurrence refined by the number of ordinary pairs.
pub fn bhat_refined_rec(n: usize, k: usize, m: usize) -> Result<Integer> {
    if n == 0 || k == 0 {
        return Err(Error::Precondition(format!(
            "refined recurrence needs n, k >= 1, got ({n}, {k})"
        )));
    }
    let mut total = Integer::zero();
    for j in 1..=n {
        let inner: Integer = (0..=(n - j).min(k - 1))
            .map(|r| Integer::from(m + r + 1) * bhat_refined(n - j, k - 1, m, r))
            .sum();
        total += binom(n, j) * inner;
    }
    for r in 0..=n.min(k - 1) {
        total += Integer::from(r + 1) * bhat_refined(n, k - 1, m, r);
    }
    Ok(total)
}

/// Callan polynomial by the recurrence in `k`.
pub fn callan_poly_rec(n: usize, k: usize) -> UniPoly {
    fill(
        &CALLAN,
        n,
        k,
        |a, b| (a, b),
        |row, col, prev| {
            if row == 0 || col == 0 {
                return UniPoly::one();
            }
            let mut shifted = UniPoly::zero();
            let mut lower = UniPoly::zero();
            for j in 1..=row {
                let c = binom(row, j);
                shifted += &prev(row - j + 1).scale_int(&c);
                lower += &prev(row - j).scale_int(&c);
            }
            prev(row) + shifted + UniPoly::x() * lower
        },
    )
}

/// Tableau polynomial by the recurrence obtained from removing the last column.
pub fn tableau_poly_rec(n: usize, k: usize) -> UniPoly {
    fill(
        &TABLEAU,
        n,
        k,
        |a, b| (a, b),
        |row, col, prev| {
            if row == 0 || col == 0 {
                return UniPoly::one();
            }
            let mut acc = prev(row).scale_int(&Integer::from(row + 1));
            for j in 1..row {
                acc += &prev(j).scale_int(&binom(row, j - 1));
            }
            let mut with_x = UniPoly::zero();
            for j in 0..row {
                with_x += &prev(j).scale_int(&binom(row, j));
            }
            acc + UniPoly::x() * with_x
        },
    )
}

/// `(2^{n-1} - 1) x y + 2^{n-1} (x + y + 1)`, the size-one row and column.
pub fn conjecture_edge(n: usize) -> BiPoly {
    assert!(n >= 1, "edge formula starts at n = 1");
    let h = Rational::from_integer(Integer::one() << (n - 1));
    let mut p = BiPoly::zero();
    p.add_term(1, 1, &h - Rational::one());
    p.add_term(1, 0, h.clone());
    p.add_term(0, 1, h.clone());
    p.add_term(0, 0, h);
    p
}

/// Whether the row formula and the column formula agree on their shared cell.
pub fn conjecture_initial_values_agree() -> bool {
    conjecture_edge(1) == conjecture_edge(1).swap()
        && conjecture_edge(1) == BiPoly::from_int_terms(&[(1, 0, 1), (0, 1, 1), (0, 0, 1)])
}

/// Conjectured two-variable recurrence: initial values on rows and columns 0
/// and 1, and the four-sum recurrence for `n, k >= 2`.
pub fn conjecture_rec(n: usize, k: usize) -> BiPoly {
    debug_assert!(conjecture_initial_values_agree());
    let xm1 = &BiPoly::x() - &BiPoly::one();
    let ym1 = &BiPoly::y() - &BiPoly::one();
    let both = &xm1 * &ym1;
    fill(
        &CONJECTURE,
        n,
        k,
        |a, b| (a, b),
        |row, col, prev| {
            match (row, col) {
                (0, _) | (_, 0) => return BiPoly::one(),
                (1, c) => return conjecture_edge(c),
                (r, 1) => return conjecture_edge(r),
                _ => {}
            }
            let sum = |top: usize, upto: usize| -> BiPoly {
                (0..=upto).map(|j| prev(j).scale_int(&binom(top, j))).sum()
            };
            let plain = sum(row + 1, row);
            let single = sum(row, row - 1);
            let double = sum(row - 1, row - 1);
            plain + &xm1 * &single + &ym1 * &single + &both * &double
        },
    )
}

/// Every memoized `Ĉ` value, sorted by key.
pub fn bhat_snapshot() -> Vec<((usize, usize, usize), Integer)> {
    let mut entries = BHAT.snapshot();
    entries.sort_by_key(|e| e.0);
    entries
}

/// Seeds the `Ĉ` table; entries already present are kept.
pub fn preload_bhat<I: IntoIterator<Item = ((usize, usize, usize), Integer)>>(entries: I) {
    for (key, value) in entries {
        BHAT.insert(key, value);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;
    use crate::polybern::{bhat_closed, callan_poly_closed};

    #[test]
    fn bhat_values() {
        assert_eq!(bhat_rec(2, 2, 0), int(14));
        assert_eq!(bhat_rec(3, 1, 2), int(22));
        assert_eq!(bhat_rec(5, 0, 3), int(1));
        assert_eq!(bhat_refined_rec(2, 2, 0).unwrap(), int(14));
        assert_eq!(bhat_refined_rec(1, 1, 0).unwrap(), int(2));
        assert_eq!(bhat_refined_rec(2, 2, 1).unwrap(), int(31));
        assert!(bhat_refined_rec(0, 2, 1).is_err());
    }

    #[test]
    fn triple_agreement() {
        for n in 0..=6 {
            for k in 0..=6 {
                for m in 0..=4 {
                    let closed = bhat_closed(n, k, m);
                    assert_eq!(bhat_rec(n, k, m), closed, "({n},{k},{m})");
                    if n > 0 && k > 0 {
                        assert_eq!(bhat_refined_rec(n, k, m).unwrap(), closed, "({n},{k},{m})");
                    }
                }
                let p = callan_poly_closed(n, k);
                assert_eq!(callan_poly_rec(n, k), p, "({n},{k})");
                assert_eq!(tableau_poly_rec(n, k), p, "({n},{k})");
            }
        }
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(callan_poly_rec(2, 2), UniPoly::from_ints(&[14, 15, 2]));
        assert_eq!(tableau_poly_rec(2, 1), UniPoly::from_ints(&[4, 3]));
        assert_eq!(callan_poly_rec(1, 1), UniPoly::from_ints(&[2, 1]));
    }

    #[test]
    fn conjecture_cells() {
        assert!(conjecture_initial_values_agree());
        assert_eq!(
            conjecture_rec(1, 1),
            BiPoly::from_int_terms(&[(1, 0, 1), (0, 1, 1), (0, 0, 1)])
        );
        assert_eq!(
            conjecture_rec(2, 2).to_string(),
            "x^2*y + x*y^2 + x^2 + 7*x*y + y^2 + 7*x + 7*y + 6"
        );
        let one = Rational::one();
        for n in 0..=6 {
            for k in 0..=6 {
                let t = conjecture_rec(n, k);
                let p = callan_poly_closed(n, k);
                assert_eq!(t.eval_y(&one), p, "({n},{k})");
                assert_eq!(t.eval_x(&one), p, "({n},{k})");
            }
        }
    }

    #[test]
    fn order_independent() {
        let late = bhat_rec(7, 3, 5);
        let early = bhat_rec(2, 3, 5);
        assert_eq!(late, bhat_closed(7, 3, 5));
        assert_eq!(early, bhat_closed(2, 3, 5));
        preload_bhat([((2, 3, 5), int(-1))]);
        assert_eq!(bhat_rec(2, 3, 5), early);
        assert!(bhat_snapshot().iter().any(|(key, _)| *key == (7, 3, 5)));
    }
}
