//! Permutation weights and the run-permutation codec.

use serde::Serialize;

use crate::error::{Error, Result};

/// Number of left-to-right strict minima of `pi`, minus one.
///
/// Works on any sequence of distinct comparable items.
pub fn permutation_weight<T: Ord>(pi: &[T]) -> Result<usize> {
    let (first, rest) = pi.split_first().ok_or(Error::EmptyPermutation)?;
    let mut min = first;
    let mut records = 0;
    for v in rest {
        if v < min {
            min = v;
            records += 1;
        }
    }
    Ok(records)
}

/// A permutation of `1..=n` together with a word over `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RunDecoding {
    pub pi: Vec<usize>,
    pub w: Vec<usize>,
}

fn check_permutation(word: &[usize], size: usize) -> Result<()> {
    let mut seen = vec![false; size + 1];
    if word.len() != size {
        return Err(Error::InvalidPermutation(size));
    }
    for &v in word {
        if v == 0 || v > size || seen[v] {
            return Err(Error::InvalidPermutation(size));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Splits `sigma`, a permutation of `1..=n+k+1` whose runs of values above
/// `n` increase, into the subsequence of small values and, for each large
/// value `n+i`, the number of small values before it.
pub fn decode_run_permutation(sigma: &[usize], n: usize) -> Result<RunDecoding> {
    if sigma.len() <= n {
        return Err(Error::Precondition(format!(
            "need at least {} entries for n = {n}, got {}",
            n + 1,
            sigma.len()
        )));
    }
    check_permutation(sigma, sigma.len())?;
    let mut pi = Vec::with_capacity(n);
    let mut w = vec![0; sigma.len() - n];
    let mut previous_large: Option<usize> = None;
    for (position, &v) in sigma.iter().enumerate() {
        if v <= n {
            pi.push(v);
            previous_large = None;
        } else {
            if previous_large.is_some_and(|p| p > v) {
                return Err(Error::RunNotIncreasing { n, position });
            }
            previous_large = Some(v);
            w[v - n - 1] = pi.len();
        }
    }
    Ok(RunDecoding { pi, w })
}

/// Inverse of [`decode_run_permutation`].
pub fn encode_run_permutation(decoded: &RunDecoding) -> Result<Vec<usize>> {
    let n = decoded.pi.len();
    check_permutation(&decoded.pi, n)?;
    let mut after: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (position, &p) in decoded.w.iter().enumerate() {
        if p > n {
            return Err(Error::WordOutOfRange {
                n,
                position,
                value: p,
            });
        }
        after[p].push(n + 1 + position);
    }
    let mut sigma = Vec::with_capacity(n + decoded.w.len());
    sigma.extend_from_slice(&after[0]);
    for (i, &v) in decoded.pi.iter().enumerate() {
        sigma.push(v);
        sigma.extend_from_slice(&after[i + 1]);
    }
    Ok(sigma)
}

/// Whether every maximal run of values above `n` in `sigma` increases.
pub fn has_increasing_large_runs(sigma: &[usize], n: usize) -> bool {
    sigma
        .windows(2)
        .all(|w| w[0] <= n || w[1] <= n || w[0] < w[1])
}
