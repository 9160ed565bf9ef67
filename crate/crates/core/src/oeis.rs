//! Cross-checks against vendored OEIS b-files.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::LazyLock;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactmath::{genocchi, Integer};
use crate::identities::{Failure, IdentityReport, Status, Value};
use crate::polybern::{bhat_closed, symmetrized};

/// A parsed b-file: `(index, value)` pairs with strictly increasing indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub id: String,
    pub entries: Vec<(i64, Integer)>,
}

fn valid_id(id: &str) -> bool {
    id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit())
}

/// Parses `<index> <value>` lines; blank lines and `#` comments are skipped.
pub fn parse_bfile(id: &str, text: &str) -> Result<BFile> {
    if !valid_id(id) {
        return Err(Error::Precondition(format!("`{id}` is not a sequence id")));
    }
    let mut entries: Vec<(i64, Integer)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::BFileParse {
            line: line_no,
            message,
        };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected `index value`, got `{line}`")));
        };
        let index: i64 = index
            .parse()
            .map_err(|_| err(format!("bad index `{index}`")))?;
        let value: Integer = value
            .parse()
            .map_err(|_| err(format!("bad value `{value}`")))?;
        if let Some((last, _)) = entries.last() {
            if index <= *last {
                return Err(err(format!("index {index} does not follow {last}")));
            }
        }
        entries.push((index, value));
    }
    Ok(BFile {
        id: id.to_string(),
        entries,
    })
}

impl BFile {
    /// One `index value` line per entry.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (index, value) in &self.entries {
            writeln!(out, "{index} {value}").expect("writing to a String");
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompareMode {
    Exact,
    AntidiagonalMultiset,
}

/// How an OEIS index translates into library values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceMapping {
    /// `a(i) = G_{2i}`.
    GenocchiEven,
    /// Square array `B_n^(-k)`, `n, k >= 0`.
    NegativeIndexB,
    /// Square array `C_n^(-k)`, `n >= 0`, `k >= 1`.
    NegativeIndexC,
}

impl SequenceMapping {
    fn single(self, index: i64) -> Result<Integer> {
        match self {
            SequenceMapping::GenocchiEven => genocchi(2 * index as usize),
            _ => Err(Error::Precondition(
                "array mapping has no linear index".into(),
            )),
        }
    }

    fn cell(self, n: usize, k: usize) -> Result<Integer> {
        match self {
            SequenceMapping::NegativeIndexB => Ok(bhat_closed(n, k, 0)),
            SequenceMapping::NegativeIndexC => symmetrized(n, k, 1),
            SequenceMapping::GenocchiEven => Err(Error::Precondition(
                "linear mapping has no array cells".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub path: String,
    pub offset: i64,
    pub mapping: SequenceMapping,
    pub mode: CompareMode,
    pub description: String,
}

static MANIFEST_TEXT: &str = include_str!("../fixtures/oeis/manifest.json");

static FIXTURES: [(&str, &str); 3] = [
    ("b001469.txt", include_str!("../fixtures/oeis/b001469.txt")),
    ("b099594.txt", include_str!("../fixtures/oeis/b099594.txt")),
    ("b136126.txt", include_str!("../fixtures/oeis/b136126.txt")),
];

static MANIFEST: LazyLock<Vec<ManifestEntry>> =
    LazyLock::new(|| serde_json::from_str(MANIFEST_TEXT).expect("fixture manifest is valid JSON"));

/// The vendored fixtures.
pub fn manifest() -> &'static [ManifestEntry] {
    &MANIFEST
}

pub fn manifest_entry(id: &str) -> Result<&'static ManifestEntry> {
    manifest()
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::FixtureMissing(id.to_string()))
}

/// The vendored b-file for `id`.
pub fn vendored(id: &str) -> Result<BFile> {
    let entry = manifest_entry(id)?;
    let text = FIXTURES
        .iter()
        .find(|(path, _)| *path == entry.path)
        .map(|(_, text)| *text)
        .ok_or_else(|| Error::FixtureMissing(id.to_string()))?;
    parse_bfile(&entry.id, text)
}

/// Checks the vendored fixture for `id` to `depth` (entries in exact mode,
/// antidiagonals in multiset mode).
pub fn check_sequence(id: &str, depth: usize) -> Result<IdentityReport> {
    check_bfile(&vendored(id)?, depth)
}

/// Checks any b-file whose id has a manifest entry, such as a fetched one.
pub fn check_bfile(file: &BFile, depth: usize) -> Result<IdentityReport> {
    let entry = manifest_entry(&file.id)?;
    if let Some((first, _)) = file.entries.first() {
        if *first != entry.offset {
            return Err(Error::Precondition(format!(
                "{} starts at index {first}, expected offset {}",
                entry.id, entry.offset
            )));
        }
    }
    let needed = match entry.mode {
        CompareMode::Exact => depth,
        CompareMode::AntidiagonalMultiset => depth * (depth + 1) / 2,
    };
    if needed > file.entries.len() {
        return Err(Error::DepthExceeded {
            id: entry.id.clone(),
            depth,
            available: file.entries.len(),
        });
    }
    let mut failures = Vec::new();
    match entry.mode {
        CompareMode::Exact => {
            for (index, expected) in &file.entries[..depth] {
                let got = entry.mapping.single(*index)?;
                if got != *expected {
                    failures.push(Failure {
                        params: BTreeMap::from([("index", *index as usize)]),
                        lhs: Value::Int(expected.clone()),
                        rhs: Value::Int(got),
                    });
                }
            }
        }
        CompareMode::AntidiagonalMultiset => {
            let mut start = 0;
            for d in 0..depth {
                let mut expected: Vec<Integer> = file.entries[start..start + d + 1]
                    .iter()
                    .map(|(_, v)| v.clone())
                    .collect();
                start += d + 1;
                let mut got = (0..=d)
                    .map(|k| entry.mapping.cell(d - k, k))
                    .collect::<Result<Vec<_>>>()?;
                expected.sort();
                got.sort();
                if got != expected {
                    failures.push(Failure {
                        params: BTreeMap::from([("antidiagonal", d)]),
                        lhs: Value::Tuple(expected.into_iter().map(Value::Int).collect()),
                        rhs: Value::Tuple(got.into_iter().map(Value::Int).collect()),
                    });
                }
            }
        }
    }
    Ok(IdentityReport {
        name: entry.id.clone(),
        ranges: BTreeMap::from([("depth", [0, depth])]),
        cases_checked: depth,
        excluded: 0,
        status: if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
        failures,
        cells: None,
    })
}
