//! Thread-safe memo tables shared by the sequence and recurrence engines.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

/// Keyed store whose entries are written once and never change.
///
/// Concurrent writers racing on the same key must produce the same value; the
/// first write wins.
#[derive(Debug, Default)]
pub struct MemoTable<K, V> {
    entries: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> MemoTable<K, V> {
    pub fn new() -> Self {
        MemoTable {
            entries: RwLock::new(HashMap::new()),
        }
    }

    pub fn get(&self, key: &K) -> Option<V> {
        self.entries.read().unwrap().get(key).cloned()
    }

    pub fn contains(&self, key: &K) -> bool {
        self.entries.read().unwrap().contains_key(key)
    }

    pub fn insert(&self, key: K, value: V) {
        self.entries.write().unwrap().entry(key).or_insert(value);
    }

    pub fn get_or_insert_with(&self, key: &K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.get(key) {
            return v;
        }
        let value = f();
        self.entries
            .write()
            .unwrap()
            .entry(key.clone())
            .or_insert(value)
            .clone()
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn snapshot(&self) -> Vec<(K, V)> {
        self.entries
            .read()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }
}

/// Rows of a table grown on demand; `fill(row)` computes row `i` from the
/// rows before it.
#[derive(Debug)]
pub(crate) struct GrowingTable<T> {
    rows: RwLock<Vec<T>>,
}

impl<T: Clone> GrowingTable<T> {
    pub const fn new() -> Self {
        GrowingTable {
            rows: RwLock::new(Vec::new()),
        }
    }

    pub fn row(&self, i: usize, fill: impl Fn(&[T]) -> T) -> T {
        if let Some(row) = self.rows.read().unwrap().get(i) {
            return row.clone();
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= i {
            let next = fill(&rows);
            rows.push(next);
        }
        rows[i].clone()
    }

    pub fn with_row<R>(&self, i: usize, fill: impl Fn(&[T]) -> T, read: impl FnOnce(&T) -> R) -> R {
        if let Some(row) = self.rows.read().unwrap().get(i) {
            return read(row);
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= i {
            let next = fill(&rows);
            rows.push(next);
        }
        read(&rows[i])
    }
}
