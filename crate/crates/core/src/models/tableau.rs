//! Alternative tableaux on an `n x k` rectangle and their arrow weights.
//!
//! Rows are numbered from the top and columns from the left, both from zero
//! in code.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::callan::histogram_poly;
use crate::exactmath::{BiPoly, Integer, Rational, UniPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Empty,
    Left,
    Down,
}

impl Cell {
    pub fn symbol(self) -> char {
        match self {
            Cell::Empty => '.',
            Cell::Left => '<',
            Cell::Down => 'v',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AltTableau {
    n: usize,
    k: usize,
    cells: Vec<Vec<Cell>>,
}

impl AltTableau {
    pub fn empty(n: usize, k: usize) -> Self {
        AltTableau {
            n,
            k,
            cells: vec![vec![Cell::Empty; k]; n],
        }
    }

    /// Builds a tableau from rows of `.`, `<` and `v`; `None` if the text is
    /// malformed or the filling breaks the arrow rule.
    pub fn parse(n: usize, k: usize, rows: &[&str]) -> Option<Self> {
        if rows.len() != n {
            return None;
        }
        let mut cells = Vec::with_capacity(n);
        for row in rows {
            let parsed: Option<Vec<Cell>> = row
                .chars()
                .map(|c| match c {
                    '.' => Some(Cell::Empty),
                    '<' => Some(Cell::Left),
                    'v' => Some(Cell::Down),
                    _ => None,
                })
                .collect();
            let parsed = parsed?;
            if parsed.len() != k {
                return None;
            }
            cells.push(parsed);
        }
        let t = AltTableau { n, k, cells };
        t.is_valid().then_some(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cell(&self, row: usize, col: usize) -> Cell {
        self.cells[row][col]
    }

    /// Every cell left of a Left and below a Down is empty.
    pub fn is_valid(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.k).all(|j| match self.cells[i][j] {
                Cell::Empty => true,
                Cell::Left => (0..j).all(|jj| self.cells[i][jj] == Cell::Empty),
                Cell::Down => (i + 1..self.n).all(|ii| self.cells[ii][j] == Cell::Empty),
            })
        })
    }

    pub fn rows(&self) -> Vec<String> {
        self.cells
            .iter()
            .map(|row| row.iter().map(|c| c.symbol()).collect())
            .collect()
    }

    fn left_column(&self, row: usize) -> Option<usize> {
        self.cells[row].iter().position(|&c| c == Cell::Left)
    }

    fn down_row(&self, col: usize) -> Option<usize> {
        (0..self.n).find(|&i| self.cells[i][col] == Cell::Down)
    }
}

impl fmt::Display for AltTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rows().join("\n"))
    }
}

impl Serialize for AltTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AltTableau", 3)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("rows", &self.rows())?;
        s.end()
    }
}

/// Counts entries of `seq` that are strict records under `better`.
fn records<I: Iterator<Item = usize>>(seq: I, better: impl Fn(usize, usize) -> bool) -> usize {
    let mut best: Option<usize> = None;
    let mut count = 0;
    for v in seq {
        if best.is_none_or(|b| better(v, b)) {
            best = Some(v);
            count += 1;
        }
    }
    count
}

/// Left-arrow weight: over the longest run of rows from the top that each
/// hold a Left, the number of rows whose Left sits strictly left of all Lefts
/// above it.
pub fn weight_left(t: &AltTableau) -> usize {
    let chain = (0..t.n).map_while(|i| t.left_column(i));
    records(chain, |v, best| v < best)
}

/// Down-arrow weight: over the longest run of columns from the right that
/// each hold a Down, the number of columns whose Down sits strictly below all
/// Downs to its right.
pub fn weight_down(t: &AltTableau) -> usize {
    let chain = (0..t.k).rev().map_while(|j| t.down_row(j));
    records(chain, |v, best| v > best)
}

/// Contents of one column: the Down row, if any, and the rows holding a Left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct ColumnChoice {
    down: Option<usize>,
    lefts: u64,
}

/// All fillings of a column given the rows that already hold an arrow.
fn column_choices(n: usize, used: u64) -> Vec<ColumnChoice> {
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    let downs = std::iter::once(None).chain((0..n).map(Some));
    for down in downs {
        let above = match down {
            None => all,
            Some(d) => (1u64 << d) - 1,
        };
        let eligible = above & !used;
        let mut s = 0u64;
        loop {
            out.push(ColumnChoice { down, lefts: s });
            if s == eligible {
                break;
            }
            s = s.wrapping_sub(eligible) & eligible;
        }
    }
    out
}

fn after_column(used: u64, choice: ColumnChoice) -> u64 {
    used | choice.lefts | choice.down.map_or(0, |d| 1u64 << d)
}

struct Frame {
    used: u64,
    choices: Vec<ColumnChoice>,
    next: usize,
}

/// Lazy depth-first enumeration of all alternative tableaux of a shape.
///
/// Columns are filled left to right, and a column's filling is fixed before
/// any later column is expanded, so every partial filling extends.
pub struct Tableaux {
    n: usize,
    k: usize,
    stack: Vec<Frame>,
    path: Vec<ColumnChoice>,
    trivial: Option<bool>,
}

impl Tableaux {
    /// Panics when `n > 64`.
    pub fn new(n: usize, k: usize) -> Self {
        Self::build(n, k, None)
    }

    /// Number of ways to fill the first column; the unit of parallel work.
    pub fn first_column_count(n: usize, k: usize) -> usize {
        if k == 0 {
            1
        } else {
            column_choices(n, 0).len()
        }
    }

    /// Only the tableaux whose first column is the `index`-th filling.
    pub fn with_first_column(n: usize, k: usize, index: usize) -> Self {
        Self::build(n, k, Some(index))
    }

    fn build(n: usize, k: usize, first: Option<usize>) -> Self {
        assert!(n <= 64, "at most 64 rows are supported");
        if k == 0 {
            return Tableaux {
                n,
                k,
                stack: Vec::new(),
                path: Vec::new(),
                trivial: Some(first.unwrap_or(0) == 0),
            };
        }
        let mut choices = column_choices(n, 0);
        if let Some(i) = first {
            choices = choices.get(i).copied().into_iter().collect();
        }
        Tableaux {
            n,
            k,
            stack: vec![Frame {
                used: 0,
                choices,
                next: 0,
            }],
            path: Vec::with_capacity(k),
            trivial: None,
        }
    }

    fn materialize(&self) -> AltTableau {
        let mut t = AltTableau::empty(self.n, self.k);
        for (j, choice) in self.path.iter().enumerate() {
            if let Some(d) = choice.down {
                t.cells[d][j] = Cell::Down;
            }
            for i in 0..self.n {
                if choice.lefts >> i & 1 == 1 {
                    t.cells[i][j] = Cell::Left;
                }
            }
        }
        t
    }
}

impl Iterator for Tableaux {
    type Item = AltTableau;

    fn next(&mut self) -> Option<AltTableau> {
        if let Some(pending) = self.trivial.as_mut() {
            let emit = *pending;
            *pending = false;
            return emit.then(|| AltTableau::empty(self.n, 0));
        }
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next == frame.choices.len() {
                self.stack.pop();
                self.path.pop();
                continue;
            }
            let choice = frame.choices[frame.next];
            frame.next += 1;
            let used = after_column(frame.used, choice);
            self.path.push(choice);
            if self.path.len() == self.k {
                let t = self.materialize();
                self.path.pop();
                return Some(t);
            }
            self.stack.push(Frame {
                used,
                choices: column_choices(self.n, used),
                next: 0,
            });
        }
    }
}

/// Every alternative tableau of shape `n x k`, once each.
pub fn enum_tableaux(n: usize, k: usize) -> Tableaux {
    Tableaux::new(n, k)
}

/// Runs `fold` over every tableau, split by first column across threads, and
/// merges the partial results in first-column order.
fn fold_tableaux<A, F, M>(n: usize, k: usize, init: fn() -> A, fold: F, merge: M) -> A
where
    A: Send,
    F: Fn(&mut A, &AltTableau) + Sync,
    M: Fn(A, A) -> A + Sync,
{
    let parts: Vec<A> = (0..Tableaux::first_column_count(n, k))
        .into_par_iter()
        .map(|i| {
            let mut acc = init();
            for t in Tableaux::with_first_column(n, k, i) {
                fold(&mut acc, &t);
            }
            acc
        })
        .collect();
    parts.into_iter().fold(init(), merge)
}

/// Number of tableaux, counted in parallel.
pub fn count_tableaux(n: usize, k: usize) -> Integer {
    Integer::from(fold_tableaux(n, k, || 0u64, |c, _| *c += 1, |a, b| a + b))
}

/// `sum x^{weight_left}` over all tableaux of shape `n x k`.
pub fn tableau_poly(n: usize, k: usize) -> UniPoly {
    let histogram = fold_tableaux(
        n,
        k,
        Vec::new,
        |h: &mut Vec<u64>, t| {
            let w = weight_left(t);
            if h.len() <= w {
                h.resize(w + 1, 0);
            }
            h[w] += 1;
        },
        |mut a, b| {
            if a.len() < b.len() {
                a.resize(b.len(), 0);
            }
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    histogram_poly(&histogram)
}

/// `sum x^{weight_left} y^{weight_down}` over all tableaux of shape `n x k`.
pub fn tableau_poly2(n: usize, k: usize) -> BiPoly {
    let histogram = fold_tableaux(
        n,
        k,
        BTreeMap::new,
        |h: &mut BTreeMap<(usize, usize), u64>, t| {
            *h.entry((weight_left(t), weight_down(t))).or_insert(0) += 1;
        },
        |mut a, b| {
            for (key, c) in b {
                *a.entry(key).or_insert(0) += c;
            }
            a
        },
    );
    let mut p = BiPoly::zero();
    for ((dx, dy), c) in histogram {
        p.add_term(dx, dy, Rational::from_integer(Integer::from(c)));
    }
    p
}
