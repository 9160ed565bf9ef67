//! Sweep comparing the conjectured recurrence with tableau enumeration.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{Failure, IdentityReport, Status, Value};
use crate::models::tableau_poly2;
use crate::recurrences::conjecture_rec;

/// Cells where agreement is required; every other cell is only reported.
pub const ASSERTED_CELLS: [(usize, usize); 3] = [(2, 2), (3, 2), (2, 3)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellStatus {
    Equal,
    Unequal,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureCell {
    pub n: usize,
    pub k: usize,
    pub status: CellStatus,
    pub asserted: bool,
}

/// Compares `conjecture_rec(n, k)` with `tableau_poly2(n, k)` for every
/// `n <= max_n`, `k <= max_k`. Cells with `n * k > cap` are skipped.
/// Only a mismatch on an asserted cell counts as a failure.
pub fn conjecture_sweep(max_n: usize, max_k: usize, cap: usize) -> IdentityReport {
    let grid: Vec<(usize, usize)> = (0..=max_n)
        .flat_map(|n| (0..=max_k).map(move |k| (n, k)))
        .collect();
    let outcomes: Vec<(ConjectureCell, Option<Failure>)> = grid
        .par_iter()
        .map(|&(n, k)| {
            let asserted = ASSERTED_CELLS.contains(&(n, k));
            if n * k > cap {
                let cell = ConjectureCell {
                    n,
                    k,
                    status: CellStatus::Skipped,
                    asserted,
                };
                return (cell, None);
            }
            let recurrence = conjecture_rec(n, k);
            let enumerated = tableau_poly2(n, k);
            let equal = recurrence == enumerated;
            let failure = (asserted && !equal).then(|| Failure {
                params: BTreeMap::from([("n", n), ("k", k)]),
                lhs: Value::BiPoly(recurrence),
                rhs: Value::BiPoly(enumerated),
            });
            let status = if equal {
                CellStatus::Equal
            } else {
                CellStatus::Unequal
            };
            (
                ConjectureCell {
                    n,
                    k,
                    status,
                    asserted,
                },
                failure,
            )
        })
        .collect();
    let cases_checked = outcomes
        .iter()
        .filter(|(c, _)| c.status != CellStatus::Skipped)
        .count();
    let (cells, failures): (Vec<_>, Vec<_>) = outcomes.into_iter().unzip();
    let failures: Vec<Failure> = failures.into_iter().flatten().collect();
    IdentityReport {
        name: "CONJECTURE".to_string(),
        ranges: BTreeMap::from([("n", [0, max_n]), ("k", [0, max_k])]),
        cases_checked,
        excluded: cells.len() - cases_checked,
        status: if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
        failures,
        cells: Some(cells),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_all_equal() {
        let report = conjecture_sweep(3, 3, 16);
        assert!(report.passed());
        let cells = report.cells.unwrap();
        assert_eq!(cells.len(), 16);
        assert!(cells.iter().all(|c| c.status == CellStatus::Equal));
        assert_eq!(cells.iter().filter(|c| c.asserted).count(), 3);
    }

    #[test]
    fn cap_marks_cells_skipped() {
        let report = conjecture_sweep(2, 2, 2);
        let cells = report.cells.as_ref().unwrap();
        let skipped: Vec<_> = cells
            .iter()
            .filter(|c| c.status == CellStatus::Skipped)
            .map(|c| (c.n, c.k))
            .collect();
        assert_eq!(skipped, vec![(2, 2)]);
        assert_eq!(report.excluded, 1);
        assert_eq!(report.cases_checked, 8);
    }

    #[test]
    fn trivial_sweep() {
        let report = conjecture_sweep(0, 0, 16);
        assert!(report.passed());
        assert_eq!(report.cases_checked, 1);
    }
}
