//! Joint (ceilings, degrees-of-freedom) region censuses, produced both by
//! the geometric oracle and by the combinatorial labelings so the two can be
//! compared cell by cell.

use std::collections::BTreeMap;
use std::fmt;

/// Region counts keyed by `(c, d)`: `c` ceilings, `d` degrees of freedom.
/// The dominant sub-census is tracked by `c` and by `(c, d)` separately,
/// since the two arrangements agree on the former but not on the latter.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Census {
    pub total: u64,
    pub by_cd: BTreeMap<(usize, usize), u64>,
    pub dominant_by_c: BTreeMap<usize, u64>,
    pub dominant_by_cd: BTreeMap<(usize, usize), u64>,
}

impl Census {
    pub fn record(&mut self, c: usize, d: usize, dominant: bool) {
        self.total += 1;
        *self.by_cd.entry((c, d)).or_insert(0) += 1;
        if dominant {
            *self.dominant_by_c.entry(c).or_insert(0) += 1;
            *self.dominant_by_cd.entry((c, d)).or_insert(0) += 1;
        }
    }

    /// Totals per ceiling count.
    pub fn by_c(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (&(c, _), &count) in &self.by_cd {
            *out.entry(c).or_insert(0) += count;
        }
        out
    }

    pub fn dominant_total(&self) -> u64 {
        self.dominant_by_c.values().sum()
    }

    /// Regions with exactly one degree of freedom.
    pub fn relatively_bounded(&self) -> u64 {
        self.by_cd
            .iter()
            .filter(|((_, d), _)| *d == 1)
            .map(|(_, count)| count)
            .sum()
    }

    pub fn dominant_relatively_bounded(&self) -> u64 {
        self.dominant_by_cd
            .iter()
            .filter(|((_, d), _)| *d == 1)
            .map(|(_, count)| count)
            .sum()
    }

    pub fn max_c(&self) -> usize {
        self.by_cd.keys().map(|&(c, _)| c).max().unwrap_or(0)
    }

    pub fn max_d(&self) -> usize {
        self.by_cd.keys().map(|&(_, d)| d).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<serde_json::Value> = self
            .by_cd
            .iter()
            .map(|(&(c, d), &count)| serde_json::json!({"c": c, "d": d, "count": count}))
            .collect();
        let dominant: Vec<serde_json::Value> = self
            .dominant_by_cd
            .iter()
            .map(|(&(c, d), &count)| serde_json::json!({"c": c, "d": d, "count": count}))
            .collect();
        serde_json::json!({
            "total": self.total,
            "cells": cells,
            "dominant_cells": dominant,
        })
    }

    /// CSV rows `c,d,count,dominant_count`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("c,d,count,dominant_count\n");
        for (&(c, d), &count) in &self.by_cd {
            let dom = self.dominant_by_cd.get(&(c, d)).copied().unwrap_or(0);
            out.push_str(&format!("{c},{d},{count},{dom}\n"));
        }
        out
    }
}

impl fmt::Display for Census {
    /// Renders the c-by-d grid with row and column sums.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max_c = self.max_c();
        let max_d = self.max_d();
        write!(f, "c\\d ")?;
        for d in 1..=max_d {
            write!(f, "{d:>6}")?;
        }
        writeln!(f, "{:>8}", "total")?;
        for c in 0..=max_c {
            write!(f, "{c:>3} ")?;
            let mut row_total = 0;
            for d in 1..=max_d {
                let count = self.by_cd.get(&(c, d)).copied().unwrap_or(0);
                row_total += count;
                if count == 0 {
                    write!(f, "{:>6}", ".")?;
                } else {
                    write!(f, "{count:>6}")?;
                }
            }
            writeln!(f, "{row_total:>8}")?;
        }
        writeln!(f, "total regions: {}", self.total)
    }
}
