//! Registry of exact identities and the engine that sweeps them.
//!
//! Each identity evaluates two or more sides per parameter tuple; a tuple
//! passes when all sides are equal. Sweeps run in parallel and reports are
//! sorted by parameter tuple, so a fixed range always gives the same report.

mod conjecture;
mod registry;

pub use conjecture::{conjecture_sweep, CellStatus, ConjectureCell, ASSERTED_CELLS};
pub use registry::registry;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{BiPoly, Integer, Rational, UniPoly};

/// An exact value produced by one side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(Integer),
    Rat(Rational),
    Poly(UniPoly),
    BiPoly(BiPoly),
    Tuple(Vec<Value>),
    /// A side that could not be evaluated.
    Error(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Rat(v) => write!(f, "{v}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::BiPoly(p) => write!(f, "{p}"),
            Value::Tuple(items) => {
                let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join("; "))
            }
            Value::Error(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Tuple(items) => items.serialize(serializer),
            other => serializer.serialize_str(&other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    N,
    K,
    M,
    J,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::N => "n",
            Param::K => "k",
            Param::M => "m",
            Param::J => "j",
        }
    }
}

/// One parameter tuple. Parameters an identity does not use stay zero.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Args {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub j: usize,
}

impl Args {
    pub fn get(&self, p: Param) -> usize {
        match p {
            Param::N => self.n,
            Param::K => self.k,
            Param::M => self.m,
            Param::J => self.j,
        }
    }

    fn set(&mut self, p: Param, v: usize) {
        match p {
            Param::N => self.n = v,
            Param::K => self.k = v,
            Param::M => self.m = v,
            Param::J => self.j = v,
        }
    }
}

/// Inclusive bounds for each parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ranges {
    pub n: (usize, usize),
    pub k: (usize, usize),
    pub m: (usize, usize),
    pub j: (usize, usize),
}

impl Ranges {
    /// `0..=max` for every parameter.
    pub fn up_to(n: usize, k: usize, m: usize, j: usize) -> Self {
        Ranges {
            n: (0, n),
            k: (0, k),
            m: (0, m),
            j: (0, j),
        }
    }

    /// The default desk ranges: `n, k, j <= 6`, `m <= 4`.
    pub fn desk() -> Self {
        Self::up_to(6, 6, 4, 6)
    }

    pub fn get(&self, p: Param) -> (usize, usize) {
        match p {
            Param::N => self.n,
            Param::K => self.k,
            Param::M => self.m,
            Param::J => self.j,
        }
    }

    pub fn set(&mut self, p: Param, bounds: (usize, usize)) {
        match p {
            Param::N => self.n = bounds,
            Param::K => self.k = bounds,
            Param::M => self.m = bounds,
            Param::J => self.j = bounds,
        }
    }

    pub fn with(mut self, p: Param, lo: usize, hi: usize) -> Self {
        self.set(p, (lo, hi));
        self
    }
}

type Sides = fn(&Args) -> Result<Vec<Value>>;

/// A registered identity.
pub struct IdentityEntry {
    pub name: &'static str,
    pub statement: &'static str,
    pub params: &'static [Param],
    /// Largest admissible value per parameter; larger requests are rejected.
    pub caps: &'static [(Param, usize)],
    /// Human-readable form of `constraint`.
    pub domain: &'static str,
    pub constraint: fn(&Args) -> bool,
    pub sides: Sides,
}

impl fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: BTreeMap<&'static str, usize>,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub ranges: BTreeMap<&'static str, [usize; 2]>,
    pub cases_checked: usize,
    /// Tuples in the requested box that lie outside the identity's domain.
    pub excluded: usize,
    pub failures: Vec<Failure>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cells: Option<Vec<ConjectureCell>>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn finish(mut self) -> Self {
        self.status = if self.failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }
}

pub fn lookup(name: &str) -> Result<&'static IdentityEntry> {
    registry()
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

fn box_tuples(params: &[Param], ranges: &Ranges) -> Vec<Args> {
    let mut out = vec![Args::default()];
    for &p in params {
        let (lo, hi) = ranges.get(p);
        out = out
            .into_iter()
            .flat_map(|a| {
                (lo..=hi).map(move |v| {
                    let mut b = a;
                    b.set(p, v);
                    b
                })
            })
            .collect();
    }
    out
}

fn evaluate(
    entry: &IdentityEntry,
    ranges: &Ranges,
    tuples: Vec<Args>,
    excluded: usize,
) -> IdentityReport {
    let failures: Vec<Failure> = tuples
        .par_iter()
        .filter_map(|args| {
            let params = entry
                .params
                .iter()
                .map(|&p| (p.name(), args.get(p)))
                .collect();
            match (entry.sides)(args) {
                Ok(sides) => {
                    let first = &sides[0];
                    sides.iter().find(|s| *s != first).map(|other| Failure {
                        params,
                        lhs: first.clone(),
                        rhs: other.clone(),
                    })
                }
                Err(e) => Some(Failure {
                    params,
                    lhs: Value::Error(e.to_string()),
                    rhs: Value::Error(e.to_string()),
                }),
            }
        })
        .collect();
    IdentityReport {
        name: entry.name.to_string(),
        ranges: entry
            .params
            .iter()
            .map(|&p| {
                let (lo, hi) = ranges.get(p);
                (p.name(), [lo, hi])
            })
            .collect(),
        cases_checked: tuples.len(),
        excluded,
        failures,
        status: Status::Pass,
        cells: None,
    }
    .finish()
}

/// Checks one identity on every tuple of `ranges` inside its domain.
///
/// Requests beyond a cap, or whose box holds tuples but none inside the
/// domain, are rejected.
pub fn run_identity(name: &str, ranges: &Ranges) -> Result<IdentityReport> {
    let entry = lookup(name)?;
    for &(p, cap) in entry.caps {
        let (_, hi) = ranges.get(p);
        if entry.params.contains(&p) && hi > cap {
            return Err(Error::DomainViolation {
                identity: entry.name.to_string(),
                reason: format!("{} <= {cap} required, got {hi}", p.name()),
            });
        }
    }
    let all = box_tuples(entry.params, ranges);
    let total = all.len();
    let inside: Vec<Args> = all.into_iter().filter(|a| (entry.constraint)(a)).collect();
    if total > 0 && inside.is_empty() {
        return Err(Error::DomainViolation {
            identity: entry.name.to_string(),
            reason: format!("no parameter tuple satisfies {}", entry.domain),
        });
    }
    let excluded = total - inside.len();
    Ok(evaluate(entry, ranges, inside, excluded))
}

/// Runs every identity on `ranges` clipped to its caps and domain.
pub fn run_all(ranges: &Ranges) -> Vec<IdentityReport> {
    registry()
        .iter()
        .map(|entry| {
            let mut clipped = *ranges;
            for &(p, cap) in entry.caps {
                let (lo, hi) = clipped.get(p);
                clipped.set(p, (lo, hi.min(cap)));
            }
            let all = box_tuples(entry.params, &clipped);
            let total = all.len();
            let inside: Vec<Args> = all.into_iter().filter(|a| (entry.constraint)(a)).collect();
            let excluded = total - inside.len();
            evaluate(entry, &clipped, inside, excluded)
        })
        .collect()
}
