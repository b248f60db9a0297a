//! The nine triangle families and the strategies that build them.
//!
//! A triangle is built row by row. Recurrence builds need the previous
//! row; every other strategy evaluates entries independently, so rows are
//! computed with the configured [`Execution`] policy. Completed triangles
//! are kept in a [`TriangleCache`] keyed by `(kind, strategy)`.

mod formulas;
mod kind;
mod reference;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

pub use kind::{Family, Scale, Strategy, TriangleKind};
pub use reference::{
    central, lah, lah_explicit, stirling1_unsigned, stirling2, Reference, ReferenceTable,
};

use crate::arith::{bit_length, Integer};
use crate::exec::Execution;
use crate::Error;

/// A lower-triangular table; row `n` holds `T(n, 0..=n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    kind: TriangleKind,
    strategy: Strategy,
    rows: Vec<Vec<Integer>>,
}

impl Triangle {
    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    /// Index of the last row.
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Integer] {
        &self.rows[n]
    }

    /// `T(n, k)`, with 0 for `k < 0`, `k > n` or `n < 0`.
    ///
    /// # Panics
    /// If `n` is past the last built row.
    pub fn get(&self, n: i64, k: i64) -> Integer {
        if n < 0 || k < 0 || k > n {
            return Integer::zero();
        }
        assert!(
            (n as usize) < self.rows.len(),
            "{} built to row {}, asked for row {n}",
            self.kind,
            self.max_n()
        );
        self.rows[n as usize][k as usize].clone()
    }

    /// Overwrites one entry. Used to inject faults when testing the checks.
    pub fn set(&mut self, n: usize, k: usize, value: Integer) {
        self.rows[n][k] = value;
    }

    /// A copy holding rows `0..=max_n`.
    pub fn truncated(&self, max_n: usize) -> Triangle {
        Triangle {
            kind: self.kind,
            strategy: self.strategy,
            rows: self.rows[..=max_n.min(self.max_n())].to_vec(),
        }
    }

    pub fn entry_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_bits(&self) -> u64 {
        self.rows
            .iter()
            .flatten()
            .map(bit_length)
            .max()
            .unwrap_or(0)
    }

    pub fn row_sum(&self, n: usize) -> Integer {
        self.rows[n].iter().sum()
    }

    /// First `(n, k)` where the two triangles differ, over their common rows.
    pub fn first_difference(&self, other: &Triangle) -> Option<(usize, usize)> {
        let rows = self.rows.len().min(other.rows.len());
        (0..rows).find_map(|n| {
            (0..=n)
                .find(|&k| self.rows[n][k] != other.rows[n][k])
                .map(|k| (n, k))
        })
    }
}

fn boundary(n: u64, k: u64) -> Option<Integer> {
    if k > n {
        Some(Integer::zero())
    } else if n == 0 && k == 0 {
        Some(Integer::one())
    } else if k == 0 {
        Some(Integer::zero())
    } else {
        None
    }
}

/// Builds and memoizes triangles.
#[derive(Debug, Default)]
pub struct TriangleCache {
    exec: Execution,
    built: RwLock<HashMap<(TriangleKind, Strategy), Arc<Triangle>>>,
}

impl TriangleCache {
    pub fn new(exec: Execution) -> Self {
        TriangleCache {
            exec,
            built: RwLock::new(HashMap::new()),
        }
    }

    pub fn execution(&self) -> Execution {
        self.exec
    }

    /// A triangle with at least `rows + 1` rows (it may hold more).
    pub fn get(
        &self,
        kind: TriangleKind,
        rows: usize,
        strategy: Strategy,
    ) -> Result<Arc<Triangle>, Error> {
        kind.require(strategy)?;
        let existing = self.built.read().unwrap().get(&(kind, strategy)).cloned();
        if let Some(t) = &existing {
            if t.max_n() >= rows {
                return Ok(Arc::clone(t));
            }
        }
        let prefix = existing.map(|t| t.rows.clone()).unwrap_or_default();
        let extended = Arc::new(Triangle {
            kind,
            strategy,
            rows: self.extend_rows(kind, strategy, prefix, rows)?,
        });
        let mut built = self.built.write().unwrap();
        let slot = built
            .entry((kind, strategy))
            .or_insert_with(|| Arc::clone(&extended));
        if slot.max_n() < extended.max_n() {
            *slot = Arc::clone(&extended);
        }
        Ok(extended)
    }

    /// Exactly rows `0..=rows`.
    pub fn triangle(
        &self,
        kind: TriangleKind,
        rows: usize,
        strategy: Strategy,
    ) -> Result<Triangle, Error> {
        Ok(self.get(kind, rows, strategy)?.truncated(rows))
    }

    pub fn value(
        &self,
        kind: TriangleKind,
        n: usize,
        k: usize,
        strategy: Strategy,
    ) -> Result<Integer, Error> {
        kind.require(strategy)?;
        if let Some(v) = boundary(n as u64, k as u64) {
            return Ok(v);
        }
        match strategy {
            Strategy::Recurrence | Strategy::Scaling => {
                Ok(self.get(kind, n, strategy)?.rows[n][k].clone())
            }
            _ => entry(kind, strategy, n as u64, k as u64),
        }
    }

    fn extend_rows(
        &self,
        kind: TriangleKind,
        strategy: Strategy,
        mut rows: Vec<Vec<Integer>>,
        max_n: usize,
    ) -> Result<Vec<Vec<Integer>>, Error> {
        if rows.is_empty() {
            rows.push(vec![Integer::one()]);
        }
        let start = rows.len();
        match strategy {
            Strategy::Recurrence => {
                for n in start..=max_n {
                    let prev = &rows[n - 1];
                    let at = |j: i64| {
                        usize::try_from(j)
                            .ok()
                            .and_then(|j| prev.get(j))
                            .cloned()
                            .unwrap_or_else(Integer::zero)
                    };
                    let mut row = vec![Integer::zero()];
                    row.extend(self.exec.try_map(1..n + 1, |k| {
                        formulas::recurrence_step(kind, n as u64, k as u64, &at)
                    })?);
                    rows.push(row);
                }
            }
            Strategy::Scaling => {
                let (base_kind, base_strategy) = formulas::scaling_base(kind);
                let base = self.get(base_kind, max_n, base_strategy)?;
                let fresh = self.exec.try_map(start..max_n + 1, |n| {
                    (0..=n)
                        .map(|k| match boundary(n as u64, k as u64) {
                            Some(v) => Ok(v),
                            None => formulas::scale_from_base(
                                kind,
                                n as u64,
                                k as u64,
                                &base.rows[n][k],
                            ),
                        })
                        .collect::<Result<Vec<_>, _>>()
                })?;
                rows.extend(fresh);
            }
            _ => {
                // Entry-independent strategies: parallel over every (n, k).
                let cells: Vec<(u64, u64)> = (start..=max_n)
                    .flat_map(|n| (0..=n).map(move |k| (n as u64, k as u64)))
                    .collect();
                let values = self
                    .exec
                    .map_slice(&cells, |&(n, k)| entry(kind, strategy, n, k))
                    .into_iter()
                    .collect::<Result<Vec<_>, _>>()?;
                let mut values = values.into_iter();
                for n in start..=max_n {
                    rows.push(values.by_ref().take(n + 1).collect());
                }
            }
        }
        Ok(rows)
    }
}

/// One entry by an entry-independent strategy.
fn entry(kind: TriangleKind, strategy: Strategy, n: u64, k: u64) -> Result<Integer, Error> {
    if let Some(v) = boundary(n, k) {
        return Ok(v);
    }
    match strategy {
        Strategy::Explicit => formulas::explicit(kind, n, k),
        Strategy::PartitionTransform => formulas::via_partition_transform(kind, n, k),
        Strategy::AlternatingSum => Ok(formulas::alternating_sum(n, k)),
        Strategy::Recurrence | Strategy::Scaling => {
            unreachable!("row-dependent strategy {strategy} evaluated per entry")
        }
    }
}

fn global() -> &'static TriangleCache {
    static CACHE: OnceLock<TriangleCache> = OnceLock::new();
    CACHE.get_or_init(TriangleCache::default)
}

/// `T(n, k)` of `kind` computed by `strategy`.
pub fn value(kind: TriangleKind, n: usize, k: usize, strategy: Strategy) -> Result<Integer, Error> {
    global().value(kind, n, k, strategy)
}

/// Rows `0..=rows` of `kind` computed by `strategy`, memoized process-wide.
pub fn triangle(kind: TriangleKind, rows: usize, strategy: Strategy) -> Result<Triangle, Error> {
    global().triangle(kind, rows, strategy)
}

/// Uncached build with an explicit execution policy.
pub fn build(
    kind: TriangleKind,
    rows: usize,
    strategy: Strategy,
    exec: Execution,
) -> Result<Triangle, Error> {
    TriangleCache::new(exec).triangle(kind, rows, strategy)
}
