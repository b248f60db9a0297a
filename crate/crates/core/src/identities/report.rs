use std::fmt;

use crate::arith::{Integer, Rational};

/// A parameter tuple of a check. `k` is absent for row-level checks and
/// `m` is present only for horizontal recurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Point {
    pub n: i64,
    pub k: Option<i64>,
    pub m: Option<i64>,
}

impl Point {
    pub fn n(n: i64) -> Self {
        Point {
            n,
            k: None,
            m: None,
        }
    }

    pub fn nk(n: i64, k: i64) -> Self {
        Point {
            n,
            k: Some(k),
            m: None,
        }
    }

    pub fn nkm(n: i64, k: i64, m: i64) -> Self {
        Point {
            n,
            k: Some(k),
            m: Some(m),
        }
    }

    pub(crate) fn k(&self) -> i64 {
        self.k.expect("point has a column")
    }

    pub(crate) fn m(&self) -> i64 {
        self.m.expect("point has a step")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(m) = self.m {
            write!(f, " m={m}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub at: Point,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Row sum next to the value it is compared against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowEvidence {
    pub n: u64,
    pub row_sum: Integer,
    pub expected: Integer,
}

impl RowEvidence {
    pub fn agrees(&self) -> bool {
        self.row_sum == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub range: String,
    /// Set for relations that are conjectured rather than proven; a failure
    /// is evidence against the conjecture, not a library defect.
    pub conjecture: bool,
    pub checked: usize,
    pub skipped: usize,
    pub counterexample: Option<Counterexample>,
    /// Per-row data for row-sum checks; empty otherwise.
    pub evidence: Vec<RowEvidence>,
}

impl CheckReport {
    pub(crate) fn new(name: &str, range: String) -> Self {
        CheckReport {
            name: name.to_string(),
            range,
            conjecture: false,
            checked: 0,
            skipped: 0,
            counterexample: None,
            evidence: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    /// One human-readable line.
    pub fn to_line(&self) -> String {
        let mut line = format!(
            "{} {}{} [{}] checked={} skipped={}",
            self.status(),
            if self.conjecture { "(conjecture) " } else { "" },
            self.name,
            self.range,
            self.checked,
            self.skipped
        );
        if let Some(c) = &self.counterexample {
            line.push_str(&format!(
                " first counterexample at {}: lhs={} rhs={}",
                c.at, c.lhs, c.rhs
            ));
        }
        line
    }

    /// Space-separated `key=value` pairs; string values are quoted.
    pub fn to_key_value(&self) -> String {
        let mut kv = format!(
            "name={:?} range={:?} status={} conjecture={} checked={} skipped={}",
            self.name,
            self.range,
            self.status().to_ascii_lowercase(),
            self.conjecture,
            self.checked,
            self.skipped
        );
        if let Some(c) = &self.counterexample {
            kv.push_str(&format!(" n={}", c.at.n));
            if let Some(k) = c.at.k {
                kv.push_str(&format!(" k={k}"));
            }
            if let Some(m) = c.at.m {
                kv.push_str(&format!(" m={m}"));
            }
            kv.push_str(&format!(" lhs={} rhs={}", c.lhs, c.rhs));
        }
        kv
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    #[test]
    fn formats() {
        let mut r = CheckReport::new("demo", "1<=k<=n<=3".into());
        r.checked = 6;
        assert_eq!(r.to_line(), "PASS demo [1<=k<=n<=3] checked=6 skipped=0");
        assert_eq!(
            r.to_key_value(),
            "name=\"demo\" range=\"1<=k<=n<=3\" status=pass conjecture=false checked=6 skipped=0"
        );
        r.counterexample = Some(Counterexample {
            at: Point::nkm(3, 2, 1),
            lhs: rational(7, 1),
            rhs: rational(13, 2),
        });
        assert!(r
            .to_line()
            .ends_with("first counterexample at n=3 k=2 m=1: lhs=7 rhs=13/2"));
        assert!(r.to_key_value().ends_with(
            "status=fail conjecture=false checked=6 skipped=0 n=3 k=2 m=1 lhs=7 rhs=13/2"
        ));
    }
}
