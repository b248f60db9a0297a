//! OEIS b-file reading and writing.
//!
//! A b-file is a run of optional `#` comment lines followed by
//! `index value` lines whose indices increase by one. Triangles are
//! linearized by rows `n = 1, 2, ...` and columns `k = 1..=n`; the `k = 0`
//! column and the `n = 0` row are left out.

use std::fmt::Write as _;

use thiserror::Error;
use ward_core::arith::parse_integer;
use ward_core::{Integer, Triangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: expected \"index value\", found {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: index {found} does not follow {previous}")]
    NonContiguous {
        line: usize,
        previous: i64,
        found: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub comments: Vec<String>,
    pub first_index: i64,
    pub values: Vec<Integer>,
}

impl BFile {
    pub fn parse(text: &str) -> Result<Self, BFileError> {
        let mut comments = Vec::new();
        let mut first_index = None;
        let mut values = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if trimmed.starts_with('#') {
                if values.is_empty() {
                    comments.push(raw.to_string());
                }
                continue;
            }
            let malformed = || BFileError::Malformed {
                line,
                text: raw.to_string(),
            };
            let mut fields = trimmed.split_whitespace();
            let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(malformed());
            };
            let idx: i64 = idx.parse().map_err(|_| malformed())?;
            let val = parse_integer(val).map_err(|_| malformed())?;
            match first_index {
                None => first_index = Some(idx),
                Some(first) => {
                    let previous = first + values.len() as i64 - 1;
                    if idx != previous + 1 {
                        return Err(BFileError::NonContiguous {
                            line,
                            previous,
                            found: idx,
                        });
                    }
                }
            }
            values.push(val);
        }
        Ok(BFile {
            comments,
            first_index: first_index.unwrap_or(0),
            values,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str(c);
            out.push('\n');
        }
        for (i, v) in self.entries() {
            writeln!(out, "{i} {v}").unwrap();
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, &Integer)> {
        (self.first_index..).zip(self.values.iter())
    }

    pub fn last_index(&self) -> Option<i64> {
        (!self.values.is_empty()).then(|| self.first_index + self.values.len() as i64 - 1)
    }

    /// Rows `1..=max_n` of `t` in reading order, numbered from `offset`.
    pub fn from_triangle(t: &Triangle, offset: i64) -> Self {
        let values = (1..=t.max_n())
            .flat_map(|n| t.row(n)[1..].iter().cloned())
            .collect();
        BFile {
            comments: Vec::new(),
            first_index: offset,
            values,
        }
    }
}

/// Number of entries in rows `1..=n`.
pub fn entries_through_row(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Index of `(n, k)`, `1 <= k <= n`, in the linearization starting at `offset`.
pub fn linear_index(n: usize, k: usize, offset: i64) -> i64 {
    assert!(1 <= k && k <= n);
    offset + (n * (n - 1) / 2 + k) as i64 - 1
}

/// Inverse of [`linear_index`]; `None` for indices before `offset`.
pub fn position(index: i64, offset: i64) -> Option<(usize, usize)> {
    let p = usize::try_from(index - offset).ok()?;
    // Smallest n with n(n+1)/2 > p.
    let mut n = (((8 * p + 1) as f64).sqrt() as usize).saturating_sub(1) / 2;
    while entries_through_row(n) <= p {
        n += 1;
    }
    while n > 0 && entries_through_row(n - 1) > p {
        n -= 1;
    }
    Some((n, p - entries_through_row(n - 1) + 1))
}

/// Rows needed so that the linearization reaches `index`.
pub fn rows_for_index(index: i64, offset: i64) -> usize {
    position(index, offset).map_or(0, |(n, _)| n)
}
