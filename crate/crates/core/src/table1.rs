//! Golden minimal-bandwidth table. Rows for the classical families are
//! stored as formulas in the rank `n` and expanded over a rank range;
//! composite exceptional rows are expanded to one entry per node.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dynkin::{DynkinType, Family};
use crate::grassmannian::GeneralizedGrassmannian;
use crate::rational::{to_exact_string, Rational};
use crate::roots::RootSystem;

/// Smallest ranks for which the classical rows apply (`D_3 ≅ A_3` is
/// numbered differently and is listed under `A`).
pub fn min_table_rank(family: Family) -> usize {
    match family {
        Family::A => 1,
        Family::B | Family::C => 2,
        Family::D => 4,
        Family::E => 6,
        Family::F => 4,
        Family::G => 2,
    }
}

pub struct GoldenRow {
    pub label: &'static str,
    pub family: Family,
    /// `(n, j)` belongs to this row.
    pub applies: fn(usize, usize) -> bool,
    /// Minimal bandwidth on `O(1)`.
    pub value: fn(usize, usize) -> i64,
    pub minimizers: fn(usize, usize) -> Vec<usize>,
}

fn all(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

fn pick(values: &[i64], j: usize) -> i64 {
    values[j - 1]
}

pub const GOLDEN: &[GoldenRow] = &[
    GoldenRow { label: "A_n(1) ≃ A_n(n)", family: Family::A, applies: |n, j| j == 1 || j == n, value: |_, _| 1, minimizers: |n, _| all(n) },
    GoldenRow { label: "A_n(j), 2 ≤ j ≤ n-1", family: Family::A, applies: |n, j| 2 <= j && j < n, value: |_, _| 1, minimizers: |n, _| vec![1, n] },
    GoldenRow { label: "B_n(1)", family: Family::B, applies: |_, j| j == 1, value: |_, _| 2, minimizers: |n, _| all(n) },
    GoldenRow { label: "B_n(j), j ≥ 2", family: Family::B, applies: |_, j| j >= 2, value: |n, j| if j == n { 1 } else { 2 }, minimizers: |_, _| vec![1] },
    GoldenRow { label: "C_n(1)", family: Family::C, applies: |_, j| j == 1, value: |_, _| 1, minimizers: |n, _| vec![n] },
    GoldenRow { label: "C_n(2)", family: Family::C, applies: |_, j| j == 2, value: |_, _| 2, minimizers: |n, _| vec![1, n] },
    GoldenRow { label: "C_n(j), j ≥ 3", family: Family::C, applies: |_, j| j >= 3, value: |_, _| 2, minimizers: |_, _| vec![1] },
    GoldenRow { label: "D_n(1)", family: Family::D, applies: |_, j| j == 1, value: |_, _| 1, minimizers: |n, _| vec![n - 1, n] },
    GoldenRow { label: "D_n(2)", family: Family::D, applies: |_, j| j == 2, value: |_, _| 2, minimizers: |n, _| vec![1, n - 1, n] },
    GoldenRow { label: "D_n(j), 3 ≤ j ≤ n-2", family: Family::D, applies: |n, j| 3 <= j && j + 2 <= n, value: |_, _| 2, minimizers: |_, _| vec![1] },
    GoldenRow {
        label: "D_n(n-1) ≃ D_n(n)",
        family: Family::D,
        applies: |n, j| j + 1 >= n,
        value: |_, _| 1,
        minimizers: |n, j| match (n, j) {
            (4, 3) => vec![1, 4],
            (4, 4) => vec![1, 3],
            _ => vec![1],
        },
    },
    GoldenRow { label: "E_6(1) ≃ E_6(6)", family: Family::E, applies: |n, j| n == 6 && (j == 1 || j == 6), value: |_, _| 2, minimizers: |_, _| vec![1, 2, 6] },
    GoldenRow { label: "E_6(j), 2 ≤ j ≤ 5", family: Family::E, applies: |n, j| n == 6 && (2..=5).contains(&j), value: |_, j| pick(&[0, 2, 3, 4, 3], j), minimizers: |_, _| vec![1, 6] },
    GoldenRow { label: "E_7(j), j ≤ 5", family: Family::E, applies: |n, j| n == 7 && j <= 5, value: |_, j| pick(&[2, 3, 4, 6, 5], j), minimizers: |_, _| vec![7] },
    GoldenRow { label: "E_7(6)", family: Family::E, applies: |n, j| n == 7 && j == 6, value: |_, _| 4, minimizers: |_, _| vec![1, 7] },
    GoldenRow { label: "E_7(7)", family: Family::E, applies: |n, j| n == 7 && j == 7, value: |_, _| 2, minimizers: |_, _| vec![1] },
    GoldenRow { label: "E_8(j), j ≤ 7", family: Family::E, applies: |n, j| n == 8 && j <= 7, value: |_, j| pick(&[4, 6, 8, 12, 10, 8, 6], j), minimizers: |_, _| vec![8] },
    GoldenRow { label: "E_8(8)", family: Family::E, applies: |n, j| n == 8 && j == 8, value: |_, _| 4, minimizers: |_, _| vec![1, 8] },
    GoldenRow { label: "F_4(1)", family: Family::F, applies: |_, j| j == 1, value: |_, _| 4, minimizers: |_, _| vec![1, 4] },
    GoldenRow { label: "F_4(j), 2 ≤ j ≤ 4", family: Family::F, applies: |_, j| j >= 2, value: |_, j| pick(&[0, 6, 4, 2], j), minimizers: |_, _| vec![1] },
    GoldenRow { label: "G_2(j), 1 ≤ j ≤ 2", family: Family::G, applies: |_, _| true, value: |_, j| pick(&[2, 4], j), minimizers: |_, _| vec![2] },
];

/// The golden row covering `ty(j)`, if any.
pub fn golden_row(ty: DynkinType, j: usize) -> Option<&'static GoldenRow> {
    if ty.rank() < min_table_rank(ty.family()) {
        return None;
    }
    GOLDEN.iter().find(|r| r.family == ty.family() && (r.applies)(ty.rank(), j))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Entry {
    pub row: String,
    pub dynkin_type: DynkinType,
    pub node: usize,
    #[serde(with = "crate::rational::serde_exact")]
    pub computed_value: Rational,
    pub computed_minimizers: Vec<usize>,
    #[serde(with = "crate::rational::serde_exact")]
    pub golden_value: Rational,
    pub golden_minimizers: Vec<usize>,
}

impl Table1Entry {
    pub fn matches(&self) -> bool {
        self.computed_value == self.golden_value && self.computed_minimizers == self.golden_minimizers
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1 {
    pub nmax: usize,
    pub entries: Vec<Table1Entry>,
}

/// Every type covered by the table with classical ranks up to `nmax`.
pub fn table_types(nmax: usize) -> Vec<DynkinType> {
    Family::ALL
        .iter()
        .flat_map(|&f| {
            let hi = if f.is_classical() { nmax } else { 8 };
            (min_table_rank(f)..=hi).filter_map(move |n| DynkinType::new(f, n).ok())
        })
        .collect()
}

/// Computes the closed-form minimal bandwidth for every table entry and
/// pairs it with the golden value.
pub fn table1(nmax: usize) -> Table1 {
    let mut entries = vec![];
    for ty in table_types(nmax) {
        let sys = RootSystem::new(ty);
        for j in 1..=ty.rank() {
            let row = golden_row(ty, j).expect("golden rows cover every table entry");
            let report = GeneralizedGrassmannian::with_system(sys.clone(), j).minimal_bandwidth();
            entries.push(Table1Entry {
                row: row.label.to_string(),
                dynkin_type: ty,
                node: j,
                computed_value: report.minimal_value,
                computed_minimizers: report.minimizers,
                golden_value: Rational::from_integer((row.value)(ty.rank(), j)),
                golden_minimizers: (row.minimizers)(ty.rank(), j),
            });
        }
    }
    Table1 { nmax, entries }
}

fn alphas(nodes: &[usize]) -> String {
    nodes.iter().map(|i| format!("α{i}")).collect::<Vec<_>>().join(",")
}

impl Table1 {
    pub fn mismatches(&self) -> Vec<&Table1Entry> {
        self.entries.iter().filter(|e| !e.matches()).collect()
    }

    /// Fixed-width rendering, one line per `(type, node)`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<22} {:<8} {:>9}  {:<24} status", "row", "X", "min bw", "downgrading along");
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{:<22} {:<8} {:>9}  {:<24} {}",
                e.row,
                format!("{}({})", e.dynkin_type, e.node),
                to_exact_string(&e.computed_value),
                alphas(&e.computed_minimizers),
                if e.matches() { "ok" } else { "MISMATCH" }
            );
        }
        out
    }

    /// `-`/`+` lines for every mismatching entry.
    pub fn diff(&self) -> String {
        let mut out = String::new();
        for e in self.mismatches() {
            let x = format!("{}({})", e.dynkin_type, e.node);
            let _ = writeln!(out, "- {x}: {} via {}", to_exact_string(&e.golden_value), alphas(&e.golden_minimizers));
            let _ = writeln!(out, "+ {x}: {} via {}", to_exact_string(&e.computed_value), alphas(&e.computed_minimizers));
        }
        out
    }
}
