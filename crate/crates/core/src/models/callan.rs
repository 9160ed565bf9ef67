//! Callan sequences and their barred variants.
//!
//! Red labels are `1..=n`, blue labels `1..=k`. The stars that mark the extra
//! blocks are implicit: `extra_red`/`extra_blue` hold only the numbered labels
//! that share a block with the star.

use std::fmt;

use serde::Serialize;

use super::combinatorics::{
    block_count, LexPermutations, RestrictedGrowthStrings, WeakCompositions,
};
use super::permutation::permutation_weight;
use crate::error::{Error, Result};
use crate::exactmath::{Integer, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CallanPair {
    pub blue: Vec<usize>,
    pub red: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CallanSequence {
    pub n: usize,
    pub k: usize,
    pub ordinary: Vec<CallanPair>,
    pub extra_blue: Vec<usize>,
    pub extra_red: Vec<usize>,
}

impl CallanSequence {
    /// Number of ordinary pairs.
    pub fn r(&self) -> usize {
        self.ordinary.len()
    }

    /// Checks the block invariants: ordinary blocks are non-empty and sorted,
    /// and blocks together with the extras partition `1..=n` and `1..=k`.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| {
            Err(Error::Precondition(format!(
                "invalid Callan sequence: {msg}"
            )))
        };
        if self.r() > self.n.min(self.k) {
            return fail("too many ordinary pairs");
        }
        let mut red_seen = vec![false; self.n + 1];
        let mut blue_seen = vec![false; self.k + 1];
        let mark = |seen: &mut Vec<bool>, block: &[usize]| -> bool {
            block.windows(2).all(|w| w[0] < w[1])
                && block.iter().all(|&v| {
                    let fresh = v >= 1 && v < seen.len() && !seen[v];
                    if fresh {
                        seen[v] = true;
                    }
                    fresh
                })
        };
        for pair in &self.ordinary {
            if pair.blue.is_empty() || pair.red.is_empty() {
                return fail("empty ordinary block");
            }
            if !mark(&mut blue_seen, &pair.blue) || !mark(&mut red_seen, &pair.red) {
                return fail("labels repeated, unsorted or out of range");
            }
        }
        if !mark(&mut blue_seen, &self.extra_blue) || !mark(&mut red_seen, &self.extra_red) {
            return fail("labels repeated, unsorted or out of range");
        }
        if red_seen[1..].iter().chain(&blue_seen[1..]).any(|s| !s) {
            return fail("labels missing");
        }
        Ok(())
    }
}

fn write_block(f: &mut fmt::Formatter<'_>, labels: &[usize], star: bool) -> fmt::Result {
    let mut parts: Vec<String> = labels.iter().map(ToString::to_string).collect();
    if star {
        parts.push("*".to_string());
    }
    f.write_str(&parts.join(","))
}

fn write_pair(
    f: &mut fmt::Formatter<'_>,
    blue: &[usize],
    red: &[usize],
    star: bool,
) -> fmt::Result {
    f.write_str("(")?;
    write_block(f, blue, star)?;
    f.write_str(";")?;
    write_block(f, red, star)?;
    f.write_str(")")
}

impl fmt::Display for CallanSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pair in &self.ordinary {
            write_pair(f, &pair.blue, &pair.red, false)?;
        }
        write_pair(f, &self.extra_blue, &self.extra_red, true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BarredCallanSequence {
    #[serde(flatten)]
    pub base: CallanSequence,
    /// Bars in each gap: before the first pair, between pairs, after the last.
    pub bars: Vec<usize>,
}

impl BarredCallanSequence {
    pub fn m(&self) -> usize {
        self.bars.iter().sum()
    }
}

impl fmt::Display for BarredCallanSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (gap, pair) in self.base.ordinary.iter().enumerate() {
            f.write_str(&"|".repeat(self.bars[gap]))?;
            write_pair(f, &pair.blue, &pair.red, false)?;
        }
        f.write_str(&"|".repeat(self.bars[self.base.r()]))?;
        write_pair(f, &self.base.extra_blue, &self.base.extra_red, true)
    }
}

/// Splits a restricted growth string over `labels + star` (star last) into
/// ordinary blocks, in block order, and the labels sharing the star's block.
fn split_blocks(rgs: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let (&star, labels) = rgs.split_last().expect("star position present");
    let mut blocks = vec![Vec::new(); block_count(rgs)];
    for (i, &b) in labels.iter().enumerate() {
        blocks[b].push(i + 1);
    }
    let extra = blocks.remove(star);
    (blocks, extra)
}

/// Every Callan sequence of size `n x k`, once each, in canonical order:
/// red partition, blue partition, red block order, blue block order.
pub fn enum_callan(n: usize, k: usize) -> impl Iterator<Item = CallanSequence> {
    RestrictedGrowthStrings::new(n + 1).flat_map(move |red_rgs| {
        let (red_blocks, extra_red) = split_blocks(&red_rgs);
        let r = red_blocks.len();
        RestrictedGrowthStrings::new(k + 1)
            .filter(move |b| block_count(b) == r + 1)
            .flat_map(move |blue_rgs| {
                let (blue_blocks, extra_blue) = split_blocks(&blue_rgs);
                let red_blocks = red_blocks.clone();
                let extra_red = extra_red.clone();
                LexPermutations::new(r).flat_map(move |red_order| {
                    let blue_blocks = blue_blocks.clone();
                    let red_blocks = red_blocks.clone();
                    let extra_blue = extra_blue.clone();
                    let extra_red = extra_red.clone();
                    LexPermutations::new(r).map(move |blue_order| CallanSequence {
                        n,
                        k,
                        ordinary: blue_order
                            .iter()
                            .zip(&red_order)
                            .map(|(&b, &rd)| CallanPair {
                                blue: blue_blocks[b].clone(),
                                red: red_blocks[rd].clone(),
                            })
                            .collect(),
                        extra_blue: extra_blue.clone(),
                        extra_red: extra_red.clone(),
                    })
                })
            })
    })
}

/// Every `m`-barred Callan sequence of size `n x k`: each base sequence with
/// every weak composition of `m` into `r + 1` gaps.
pub fn enum_barred(n: usize, k: usize, m: usize) -> impl Iterator<Item = BarredCallanSequence> {
    enum_callan(n, k).flat_map(move |base| {
        WeakCompositions::new(m, base.r() + 1).map(move |bars| BarredCallanSequence {
            base: base.clone(),
            bars,
        })
    })
}

/// Weight of a 1-barred sequence: the permutation weight of the ordinary blue
/// blocks and the bar, read left to right, where blocks compare by least
/// element and the bar is smaller than every block.
pub fn barred_weight(a: &BarredCallanSequence) -> Result<usize> {
    if a.m() != 1 {
        return Err(Error::BarCount(a.m()));
    }
    let mut word = Vec::with_capacity(a.base.r() + 1);
    for (gap, pair) in a.base.ordinary.iter().enumerate() {
        if a.bars[gap] == 1 {
            word.push(0);
        }
        word.push(pair.blue[0]);
    }
    if a.bars[a.base.r()] == 1 {
        word.push(0);
    }
    permutation_weight(&word)
}

/// Callan polynomial by weighted enumeration of 1-barred sequences.
pub fn callan_poly_enum(n: usize, k: usize) -> UniPoly {
    let mut histogram: Vec<u64> = Vec::new();
    for a in enum_barred(n, k, 1) {
        let w = barred_weight(&a).expect("exactly one bar");
        if histogram.len() <= w {
            histogram.resize(w + 1, 0);
        }
        histogram[w] += 1;
    }
    histogram_poly(&histogram)
}

pub(crate) fn histogram_poly(histogram: &[u64]) -> UniPoly {
    UniPoly::from_coeffs(
        histogram
            .iter()
            .map(|&c| Rational::from_integer(Integer::from(c)))
            .collect(),
    )
}

/// Callan sequences whose extra red block holds only the star.
pub fn count_c_callan(n: usize, k: usize) -> Result<Integer> {
    if k == 0 {
        return Err(Error::Precondition("count_c_callan needs k >= 1".into()));
    }
    Ok(Integer::from(
        enum_callan(n, k).filter(|s| s.extra_red.is_empty()).count(),
    ))
}

/// Word over `1..=n+k` where values up to `n` are red and larger values are
/// blue labels shifted by `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CallanPermutation {
    pub n: usize,
    pub k: usize,
    pub word: Vec<usize>,
}

impl CallanPermutation {
    /// Each label once, and every maximal run of reds and of blues increasing.
    pub fn is_valid(&self) -> bool {
        let total = self.n + self.k;
        if self.word.len() != total {
            return false;
        }
        let mut seen = vec![false; total + 1];
        for &v in &self.word {
            if v == 0 || v > total || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.word
            .windows(2)
            .all(|w| (w[0] <= self.n) != (w[1] <= self.n) || w[0] < w[1])
    }
}

impl fmt::Display for CallanPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Writes the sequence as a word: extra reds first, then each pair (blue
/// block then red block, ascending), then extra blues; blue labels shifted by
/// `n`.
pub fn callan_to_permutation(s: &CallanSequence) -> CallanPermutation {
    let shift = |b: &usize| b + s.n;
    let mut word = s.extra_red.clone();
    for pair in &s.ordinary {
        word.extend(pair.blue.iter().map(shift));
        word.extend(pair.red.iter().copied());
    }
    word.extend(s.extra_blue.iter().map(shift));
    CallanPermutation {
        n: s.n,
        k: s.k,
        word,
    }
}
