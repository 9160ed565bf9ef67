//! Lazy generators for set partitions, permutations and weak compositions.

/// Restricted growth strings of a given length in lexicographic order.
///
/// A string `a` with `a[0] = 0` and `a[i] <= 1 + max(a[..i])` encodes a set
/// partition: positions with equal values share a block, and blocks are
/// numbered by first appearance.
#[derive(Debug, Clone)]
pub struct RestrictedGrowthStrings {
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowthStrings {
    pub fn new(len: usize) -> Self {
        RestrictedGrowthStrings {
            current: vec![0; len],
            started: false,
            done: false,
        }
    }
}

impl Iterator for RestrictedGrowthStrings {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        let a = &mut self.current;
        let mut prefix_max = Vec::with_capacity(a.len());
        let mut m = 0;
        for &v in a.iter() {
            m = m.max(v);
            prefix_max.push(m);
        }
        for i in (1..a.len()).rev() {
            if a[i] <= prefix_max[i - 1] {
                a[i] += 1;
                for v in &mut a[i + 1..] {
                    *v = 0;
                }
                return Some(a.clone());
            }
        }
        self.done = true;
        None
    }
}

/// Number of blocks of the partition encoded by a restricted growth string.
pub fn block_count(rgs: &[usize]) -> usize {
    rgs.iter().max().map_or(0, |m| m + 1)
}

/// Permutations of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct LexPermutations {
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl LexPermutations {
    pub fn new(n: usize) -> Self {
        LexPermutations {
            current: (0..n).collect(),
            started: false,
            done: false,
        }
    }
}

impl Iterator for LexPermutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        if next_permutation(&mut self.current) {
            Some(self.current.clone())
        } else {
            self.done = true;
            None
        }
    }
}

/// Advances to the next permutation in lexicographic order; false at the last.
pub fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let pivot = i - 1;
    let j = (i..a.len()).rev().find(|&j| a[pivot] < a[j]).unwrap();
    a.swap(pivot, j);
    a[i..].reverse();
    true
}

/// Weak compositions of `total` into `parts` non-negative parts, in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct WeakCompositions {
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl WeakCompositions {
    pub fn new(total: usize, parts: usize) -> Self {
        let mut current = vec![0; parts];
        let done = match current.last_mut() {
            Some(last) => {
                *last = total;
                false
            }
            None => total != 0,
        };
        WeakCompositions {
            current,
            started: false,
            done,
        }
    }
}

impl Iterator for WeakCompositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        let a = &mut self.current;
        let p = a.len();
        let mut tail = 0;
        for i in (0..p.saturating_sub(1)).rev() {
            tail += a[i + 1];
            if tail > 0 {
                a[i] += 1;
                for v in &mut a[i + 1..] {
                    *v = 0;
                }
                a[p - 1] = tail - 1;
                return Some(a.clone());
            }
        }
        self.done = true;
        None
    }
}
