//! Numerical verification of the recurrences, generating functions and
//! row-sum relations satisfied by the triangle families.
//!
//! Every check walks a parameter range in `(n, k[, m])` order and stops
//! recording at the first counterexample. Recurrences with fractional
//! coefficients are evaluated in exact rationals and compared against the
//! integer entry, so a passing check also certifies integrality. Parameter
//! tuples outside a formula's side conditions are skipped and counted.

mod report;
mod series;

use std::collections::BTreeMap;

use num_traits::Zero;

pub use report::{CheckReport, Counterexample, Point, RowEvidence};
pub use series::PowerSeries;

use crate::arith::{binomial, rational, rising_factorial, Integer, Rational};
use crate::exec::Execution;
use crate::triangle::{
    Family, Reference, ReferenceTable, Scale, Strategy, Triangle, TriangleCache, TriangleKind,
};
use crate::Error;

/// Outcome of evaluating one parameter tuple.
pub(crate) enum Eval {
    Skipped,
    Compared { lhs: Rational, rhs: Rational },
}

fn q(i: Integer) -> Rational {
    Rational::from_integer(i)
}

fn qi(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

/// `n!` for `0 <= n <= max`, looked up instead of recomputed in hot loops.
struct Factorials(Vec<Integer>);

impl Factorials {
    fn new(max: usize) -> Self {
        let mut v = vec![Integer::from(1)];
        for i in 1..=max {
            let next = &v[i - 1] * i;
            v.push(next);
        }
        Factorials(v)
    }

    fn get(&self, n: i64) -> Integer {
        self.0[usize::try_from(n).expect("factorial of a negative number")].clone()
    }

    fn q(&self, n: i64) -> Rational {
        q(self.get(n))
    }
}

/// Drives a check over rows `rows`, each row contributing the points from
/// `points`. Rows are evaluated with `exec`; the reported counterexample is
/// the first in row order.
pub(crate) fn run_check<P, E>(
    name: &str,
    range: String,
    exec: Execution,
    rows: std::ops::RangeInclusive<i64>,
    points: P,
    eval: E,
) -> CheckReport
where
    P: Fn(i64) -> Vec<Point> + Sync + Send,
    E: Fn(Point) -> Eval + Sync + Send,
{
    let (lo, hi) = (*rows.start(), *rows.end());
    let count = if hi >= lo { (hi - lo + 1) as usize } else { 0 };
    let per_row = exec.map(0..count, |i| {
        let n = lo + i as i64;
        let mut checked = 0;
        let mut skipped = 0;
        for p in points(n) {
            match eval(p) {
                Eval::Skipped => skipped += 1,
                Eval::Compared { lhs, rhs } => {
                    checked += 1;
                    if lhs != rhs {
                        return (checked, skipped, Some(Counterexample { at: p, lhs, rhs }));
                    }
                }
            }
        }
        (checked, skipped, None)
    });
    let mut report = CheckReport::new(name, range);
    for (checked, skipped, failure) in per_row {
        report.checked += checked;
        report.skipped += skipped;
        if failure.is_some() {
            report.counterexample = failure;
            break;
        }
    }
    report
}

/// Points `(n, k)` for `k_lo <= k <= n`.
fn columns(k_lo: i64) -> impl Fn(i64) -> Vec<Point> + Sync + Send {
    move |n| (k_lo..=n).map(|k| Point::nk(n, k)).collect()
}

fn need(t: &Triangle, kind: TriangleKind, rows: usize) {
    assert_eq!(t.kind(), kind, "check expects a {kind} triangle");
    assert!(
        t.max_n() >= rows,
        "{kind} triangle has {} rows, need {rows}",
        t.max_n()
    );
}

// ---------------------------------------------------------------------------
// Ward numbers of both kinds
// ---------------------------------------------------------------------------

pub fn check_ward1_recurrence_on(t: &Triangle, max_n: usize, exec: Execution) -> CheckReport {
    need(t, TriangleKind::Ward1, max_n);
    run_check(
        "ward1 triangular recurrence",
        format!("1<=k<=n<={max_n}"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: q(Integer::from(n + k - 1) * (t.get(n - 1, k) + t.get(n - 1, k - 1))),
            }
        },
    )
}

pub fn check_ward2_recurrence_on(t: &Triangle, max_n: usize, exec: Execution) -> CheckReport {
    need(t, TriangleKind::Ward2, max_n);
    run_check(
        "ward2 triangular recurrence",
        format!("1<=k<=n<={max_n}"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: q(Integer::from(k) * t.get(n - 1, k)
                    + Integer::from(n + k - 1) * t.get(n - 1, k - 1)),
            }
        },
    )
}

// ---------------------------------------------------------------------------
// Ward-Lah numbers
// ---------------------------------------------------------------------------

/// The alternating sum over Lah numbers against the triangle entries.
pub fn check_wardlah_alternating_sum_on(
    t: &Triangle,
    max_n: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::WardLah, max_n);
    let lah = Reference::Lah.table(2 * max_n as u64);
    run_check(
        "ward-lah alternating lah sum",
        format!("1<=k<=n<={max_n}"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            let sum: Integer = (0..=k)
                .map(|m| {
                    let term = binomial(n + k, n + m) * lah.get(n + m, m);
                    if (m + k) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: q(sum),
            }
        },
    )
}

/// `T(n,k) = (n+k)(n-1)/n * (T(n-1,k) + (n+k-1)/(k-1) T(n-1,k-1))`, `k >= 2`.
pub fn check_wardlah_recurrence_rational_on(
    t: &Triangle,
    max_n: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::WardLah, max_n);
    run_check(
        "ward-lah rational triangular recurrence",
        format!("1<=k<=n<={max_n}, k-1>=1"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            if k - 1 < 1 {
                return Eval::Skipped;
            }
            let outer = rational((n + k) * (n - 1), n);
            let inner = q(t.get(n - 1, k)) + rational(n + k - 1, k - 1) * q(t.get(n - 1, k - 1));
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: outer * inner,
            }
        },
    )
}

/// `T(n,k) = 2(n+k-1) T(n-1,k-1) + (n+2k-1) T(n-1,k)`.
pub fn check_wardlah_recurrence_integer_on(
    t: &Triangle,
    max_n: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::WardLah, max_n);
    run_check(
        "ward-lah integer triangular recurrence",
        format!("1<=k<=n<={max_n}"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: q(Integer::from(2 * (n + k - 1)) * t.get(n - 1, k - 1)
                    + Integer::from(n + 2 * k - 1) * t.get(n - 1, k)),
            }
        },
    )
}

/// `T(n,k) = (n+k) (T(n-1,k) + (n+k-1)/k T(n-1,k-1))`, the `m = 1` case of
/// the horizontal recurrence.
pub fn check_wardlah_m1_recurrence_on(t: &Triangle, max_n: usize, exec: Execution) -> CheckReport {
    need(t, TriangleKind::WardLah, max_n);
    run_check(
        "ward-lah horizontal recurrence at m=1",
        format!("1<=k<=n<={max_n}"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            let inner = q(t.get(n - 1, k)) + rational(n + k - 1, k) * q(t.get(n - 1, k - 1));
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: qi(n + k) * inner,
            }
        },
    )
}

/// Points `(n, k, m)` with `1 <= k <= n` and `1 <= m <= min(max_m, n-1)`.
fn horizontal_points(max_m: usize) -> impl Fn(i64) -> Vec<Point> + Sync + Send {
    move |n| {
        let m_hi = (max_m as i64).min(n - 1);
        (1..=n)
            .flat_map(|k| (1..=m_hi).map(move |m| Point::nkm(n, k, m)))
            .collect()
    }
}

/// `T(n,k) = (n+k)!/k! * sum_{j=0}^{m} (k-j)!/(n-m+k-j)! binom(m,j) T(n-m,k-j)`
pub fn check_horizontal_wardlah_on(
    t: &Triangle,
    max_n: usize,
    max_m: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::WardLah, max_n);
    let fact = Factorials::new(2 * max_n + 1);
    run_check(
        "ward-lah horizontal recurrence",
        format!("1<=k<=n<={max_n}, 1<=m<=min({max_m},n-1)"),
        exec,
        2..=max_n as i64,
        horizontal_points(max_m),
        |p| {
            let (n, k, m) = (p.n, p.k(), p.m());
            // Columns k-j < 0 are identically zero.
            let sum: Rational = (0..=m.min(k))
                .map(|j| {
                    debug_assert!(n - m + k - j >= 1);
                    Rational::new(fact.get(k - j), fact.get(n - m + k - j))
                        * q(binomial(m, j))
                        * q(t.get(n - m, k - j))
                })
                .sum();
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: Rational::new(fact.get(n + k), fact.get(k)) * sum,
            }
        },
    )
}

/// `T(n,k) = 2(2n-1) T(n-1,k-1) - n(n-2) T(n-2,k) - (-2n+1) T(n-1,k)`
pub fn check_order3_wardlah_on(t: &Triangle, max_n: usize, exec: Execution) -> CheckReport {
    need(t, TriangleKind::WardLah, max_n);
    run_check(
        "ward-lah order-3 recurrence",
        format!("2<=n<={max_n}, 1<=k<=n"),
        exec,
        2..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            let rhs = Integer::from(2 * (2 * n - 1)) * t.get(n - 1, k - 1)
                - Integer::from(n * (n - 2)) * t.get(n - 2, k)
                - Integer::from(-2 * n + 1) * t.get(n - 1, k);
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: q(rhs),
            }
        },
    )
}

/// Coefficients of `x^{2k} / (k! (1-x)^k)` against `T(n-k, k) / n!`.
pub fn check_egf_wardlah_on(t: &Triangle, k: usize, order: usize) -> CheckReport {
    assert!(k >= 1 && order >= 2 * k, "need 1 <= k and order >= 2k");
    need(t, TriangleKind::WardLah, order - k);
    let fact = Factorials::new(order.max(k));
    let one_minus_x = &PowerSeries::one(order) - &PowerSeries::x(order);
    let series = one_minus_x
        .inverse()
        .expect("1 - x is invertible")
        .pow(k as u32)
        .shift(2 * k)
        .div_scalar(&fact.q(k as i64))
        .expect("k! is nonzero");
    let ki = k as i64;
    run_check(
        "ward-lah exponential generating function",
        format!("k={k}, 0<=n<={order}"),
        Execution::Sequential,
        0..=order as i64,
        |n| vec![Point::nk(n, ki)],
        |p| {
            let n = p.n;
            let expected = if n >= ki {
                Rational::new(t.get(n - ki, ki), fact.get(n))
            } else {
                Rational::zero()
            };
            Eval::Compared {
                lhs: expected,
                rhs: series.coeff(n as usize),
            }
        },
    )
}

// ---------------------------------------------------------------------------
// Varied Ward numbers
// ---------------------------------------------------------------------------

/// `T(n,k) = 2n(2n-1)/(n+k) * ((n+k-1) T(n-1,k) + k T(n-1,k-1))`
pub fn check_varied_ward1_recurrence_on(
    t: &Triangle,
    max_n: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::VariedWard1, max_n);
    run_check(
        "varied ward1 triangular recurrence",
        format!("1<=k<=n<={max_n}"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            let inner = qi(n + k - 1) * q(t.get(n - 1, k)) + qi(k) * q(t.get(n - 1, k - 1));
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: rational(2 * n * (2 * n - 1), n + k) * inner,
            }
        },
    )
}

/// `T(n,k) = 2nk(2n-1)/(n+k) * (T(n-1,k) + T(n-1,k-1))`
pub fn check_varied_ward2_recurrence_on(
    t: &Triangle,
    max_n: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::VariedWard2, max_n);
    run_check(
        "varied ward2 triangular recurrence",
        format!("1<=k<=n<={max_n}"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            let inner = q(t.get(n - 1, k)) + q(t.get(n - 1, k - 1));
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: rational(2 * n * k * (2 * n - 1), n + k) * inner,
            }
        },
    )
}

// ---------------------------------------------------------------------------
// Varied Ward-Lah numbers
// ---------------------------------------------------------------------------

/// `T(n,k) = 2n(2n-1) (T(n-1,k) + T(n-1,k-1))`
pub fn check_varied_wardlah_recurrence_on(
    t: &Triangle,
    max_n: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::VariedWardLah, max_n);
    run_check(
        "varied ward-lah triangular recurrence",
        format!("1<=k<=n<={max_n}"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: q(Integer::from(2 * n * (2 * n - 1)) * (t.get(n - 1, k) + t.get(n - 1, k - 1))),
            }
        },
    )
}

/// `T(n,k) = (2n)! sum_{j=0}^{m} binom(m,j)/(2(n-m))! T(n-m,k-j)`
pub fn check_horizontal_varied_wardlah_on(
    t: &Triangle,
    max_n: usize,
    max_m: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::VariedWardLah, max_n);
    let fact = Factorials::new(2 * max_n);
    run_check(
        "varied ward-lah horizontal recurrence",
        format!("1<=k<=n<={max_n}, 1<=m<=min({max_m},n-1)"),
        exec,
        2..=max_n as i64,
        horizontal_points(max_m),
        |p| {
            let (n, k, m) = (p.n, p.k(), p.m());
            let sum: Rational = (0..=m)
                .map(|j| {
                    Rational::new(binomial(m, j), fact.get(2 * (n - m))) * q(t.get(n - m, k - j))
                })
                .sum();
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: fact.q(2 * n) * sum,
            }
        },
    )
}

/// Coefficients of `(x/(1-x))^k` against `T(n,k) / (2n)!`.
pub fn check_gf_variedwardlah_on(t: &Triangle, k: usize, order: usize) -> CheckReport {
    assert!(k >= 1 && k <= order, "need 1 <= k <= order");
    need(t, TriangleKind::VariedWardLah, order);
    let fact = Factorials::new(2 * order);
    let one_minus_x = &PowerSeries::one(order) - &PowerSeries::x(order);
    let ratio = &PowerSeries::x(order) * &one_minus_x.inverse().expect("1 - x is invertible");
    let series = ratio.pow(k as u32);
    let ki = k as i64;
    run_check(
        "varied ward-lah generating function",
        format!("k={k}, 0<=n<={order}"),
        Execution::Sequential,
        0..=order as i64,
        |n| vec![Point::nk(n, ki)],
        |p| {
            let n = p.n;
            Eval::Compared {
                lhs: Rational::new(t.get(n, ki), fact.get(2 * n)),
                rhs: series.coeff(n as usize),
            }
        },
    )
}

/// `(n-k+1)^(n-k rising) L(n,k) = binom(n,k) sum_{j=0}^{k} binom(k,j) T(n-k,j)`
pub fn check_lah_variedwardlah_on(
    t: &Triangle,
    lah: &ReferenceTable,
    max_n: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::VariedWardLah, max_n);
    assert!(lah.max_n() as usize >= max_n);
    run_check(
        "lah and varied ward-lah identity",
        format!("1<=k<=n<={max_n}"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            let lhs = rising_factorial(n - k + 1, (n - k) as u64) * lah.get(n, k);
            let sum: Integer = (0..=k).map(|j| binomial(k, j) * t.get(n - k, j)).sum();
            Eval::Compared {
                lhs: q(lhs),
                rhs: q(binomial(n, k) * sum),
            }
        },
    )
}

// ---------------------------------------------------------------------------
// Binomial Ward numbers
// ---------------------------------------------------------------------------

/// `T(n,k) = 2n(2n-1)/(n+k) * ((n+k-1)/(n-k) T(n-1,k) + T(n-1,k-1))`, `n-k >= 1`.
pub fn check_binomial_ward1_recurrence_on(
    t: &Triangle,
    max_n: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::BinomialWard1, max_n);
    run_check(
        "binomial ward1 triangular recurrence",
        format!("1<=k<=n<={max_n}, n-k>=1"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            if n - k < 1 {
                return Eval::Skipped;
            }
            let inner = rational(n + k - 1, n - k) * q(t.get(n - 1, k)) + q(t.get(n - 1, k - 1));
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: rational(2 * n * (2 * n - 1), n + k) * inner,
            }
        },
    )
}

/// `T(n,k) = 2n(2n-1)/(n+k) * (k/(n-k) T(n-1,k) + T(n-1,k-1))`, `n-k >= 1`.
pub fn check_binomial_ward2_recurrence_on(
    t: &Triangle,
    max_n: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::BinomialWard2, max_n);
    run_check(
        "binomial ward2 triangular recurrence",
        format!("1<=k<=n<={max_n}, n-k>=1"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            if n - k < 1 {
                return Eval::Skipped;
            }
            let inner = rational(k, n - k) * q(t.get(n - 1, k)) + q(t.get(n - 1, k - 1));
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: rational(2 * n * (2 * n - 1), n + k) * inner,
            }
        },
    )
}

/// Row sums against the central Stirling numbers `s(2n, n)` / `S(2n, n)`.
/// Reported as evidence for an open conjecture.
pub fn check_conjecture_rowsums_stirling_on(
    t: &Triangle,
    stirling: &ReferenceTable,
    max_n: usize,
) -> CheckReport {
    let (name, reference) = match t.kind() {
        TriangleKind::BinomialWard1 => (
            "binomial ward1 row sums = central stirling cycle numbers",
            "s(2n,n)",
        ),
        TriangleKind::BinomialWard2 => (
            "binomial ward2 row sums = central stirling set numbers",
            "S(2n,n)",
        ),
        other => panic!("row-sum conjecture is stated for binomial ward numbers, not {other}"),
    };
    need(t, t.kind(), max_n);
    let mut report = row_sum_report(name, reference, t, max_n, |n| stirling.central(n));
    report.conjecture = true;
    report
}

fn row_sum_report(
    name: &str,
    reference: &str,
    t: &Triangle,
    max_n: usize,
    expected: impl Fn(u64) -> Integer,
) -> CheckReport {
    let mut report = CheckReport::new(name, format!("0<=n<={max_n}, rhs {reference}"));
    for n in 0..=max_n {
        let lhs = t.row_sum(n);
        let rhs = expected(n as u64);
        let agree = lhs == rhs;
        report.checked += 1;
        if !agree && report.counterexample.is_none() {
            report.counterexample = Some(Counterexample {
                at: Point::n(n as i64),
                lhs: q(lhs.clone()),
                rhs: q(rhs.clone()),
            });
        }
        report.evidence.push(RowEvidence {
            n: n as u64,
            row_sum: lhs,
            expected: rhs,
        });
    }
    report
}

// ---------------------------------------------------------------------------
// Binomial Ward-Lah numbers
// ---------------------------------------------------------------------------

/// `T(n,k) = 2n(2n-1) (T(n-1,k)/(n-k) + T(n-1,k-1)/k)`, `n-k >= 1`.
pub fn check_binomial_wardlah_recurrence_on(
    t: &Triangle,
    max_n: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::BinomialWardLah, max_n);
    run_check(
        "binomial ward-lah triangular recurrence",
        format!("1<=k<=n<={max_n}, n-k>=1"),
        exec,
        1..=max_n as i64,
        columns(1),
        |p| {
            let (n, k) = (p.n, p.k());
            if n - k < 1 {
                return Eval::Skipped;
            }
            let inner =
                rational(1, n - k) * q(t.get(n - 1, k)) + rational(1, k) * q(t.get(n - 1, k - 1));
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: qi(2 * n * (2 * n - 1)) * inner,
            }
        },
    )
}

/// `T(n,k) = (2n)!/(k!(n-k)!) sum_j (k-j)!(n-m-k+j)!/(2(n-m))! binom(m,j) T(n-m,k-j)`
pub fn check_horizontal_binomial_wardlah_on(
    t: &Triangle,
    max_n: usize,
    max_m: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::BinomialWardLah, max_n);
    let fact = Factorials::new(2 * max_n);
    run_check(
        "binomial ward-lah horizontal recurrence",
        format!("1<=k<=n<={max_n}, 1<=m<=min({max_m},n-1), n-k>=1"),
        exec,
        2..=max_n as i64,
        horizontal_points(max_m),
        |p| {
            let (n, k, m) = (p.n, p.k(), p.m());
            if n - k < 1 {
                return Eval::Skipped;
            }
            // Terms with k-j < 0 or k-j > n-m sit outside the triangle.
            let sum: Rational = (0..=m)
                .filter(|&j| k - j >= 0 && n - m - k + j >= 0)
                .map(|j| {
                    Rational::new(
                        fact.get(k - j) * fact.get(n - m - k + j),
                        fact.get(2 * (n - m)),
                    ) * q(binomial(m, j))
                        * q(t.get(n - m, k - j))
                })
                .sum();
            Eval::Compared {
                lhs: q(t.get(n, k)),
                rhs: Rational::new(fact.get(2 * n), fact.get(k) * fact.get(n - k)) * sum,
            }
        },
    )
}

/// The five-term recurrence for binomial Ward-Lah numbers, `n, k >= 2`.
pub fn check_order5_binomial_wardlah_on(
    t: &Triangle,
    max_n: usize,
    exec: Execution,
) -> CheckReport {
    need(t, TriangleKind::BinomialWardLah, max_n);
    run_check(
        "binomial ward-lah order-5 recurrence",
        format!("2<=k<=n<={max_n}, 2n-3>=0"),
        exec,
        2..=max_n as i64,
        columns(2),
        |p| {
            let (n, k) = (p.n, p.k());
            if 2 * n - 3 < 0 {
                return Eval::Skipped;
            }
            let t = |a: i64, b: i64| q(t.get(a, b));
            let back2 = t(n - 2, k - 2) - qi(2) * t(n - 2, k - 1) + t(n - 2, k);
            let back1 = qi(2 * (n - 1) * (n - 1) - 1) * t(n - 1, k - 1)
                + qi(2 * (n - 1) * (n - 1)) * t(n - 1, k);
            let rhs = rational(-4 * (n - 2) * (2 * n - 1) * (2 * n - 1), n) * back2
                + rational(4 * (2 * n - 1), n * (2 * n - 3)) * back1;
            Eval::Compared { lhs: t(n, k), rhs }
        },
    )
}

/// `sum_k T(n,k) = L(2n, n)`.
pub fn check_central_lah_rowsums_on(
    t: &Triangle,
    lah: &ReferenceTable,
    max_n: usize,
) -> CheckReport {
    need(t, TriangleKind::BinomialWardLah, max_n);
    row_sum_report(
        "binomial ward-lah row sums = central lah numbers",
        "L(2n,n)",
        t,
        max_n,
        |n| lah.central(n),
    )
}

// ---------------------------------------------------------------------------
// Cross-family relations
// ---------------------------------------------------------------------------

/// Varied: `T*(n,k) (n+k)^(n falling) = (2n)! X(n,k)`;
/// binomial: `T°(n,k) (n+k)! (n-k)! = (2n)! X(n,k)`.
pub fn check_scaling_on(
    t: &Triangle,
    base: &Triangle,
    max_n: usize,
    exec: Execution,
) -> CheckReport {
    use crate::triangle::Scale;
    let kind = t.kind();
    assert_ne!(
        kind.scale(),
        Scale::Plain,
        "scaling relation needs a varied or binomial kind"
    );
    need(t, kind, max_n);
    need(base, kind.family().plain(), max_n);
    let fact = Factorials::new(2 * max_n);
    run_check(
        &format!("{kind} scaling relation"),
        format!("0<=k<=n<={max_n}"),
        exec,
        0..=max_n as i64,
        columns(0),
        |p| {
            let (n, k) = (p.n, p.k());
            let weight = match kind.scale() {
                Scale::Varied => fact.get(n + k) / fact.get(k),
                _ => fact.get(n + k) * fact.get(n - k),
            };
            Eval::Compared {
                lhs: q(t.get(n, k) * weight),
                rhs: q(fact.get(2 * n) * base.get(n, k)),
            }
        },
    )
}

/// Closed-form values on the columns `k = 1`, `k = n` and `k = n - 1`.
pub fn check_special_values_on(t: &Triangle, max_n: usize) -> CheckReport {
    let kind = t.kind();
    need(t, kind, max_n);
    let fact = Factorials::new(2 * max_n + 1);
    // (column offset from which the point is taken, minimum n, value)
    type Rule<'a> = (fn(i64) -> i64, i64, Box<dyn Fn(i64) -> Integer + 'a>);
    let f = &fact;
    let rules: Vec<Rule> = match kind {
        TriangleKind::WardLah => vec![
            (|_| 1, 1, Box::new(move |n| f.get(n + 1))),
            (|n| n, 1, Box::new(move |n| f.get(2 * n) / f.get(n))),
            (
                |n| n - 1,
                2,
                Box::new(move |n| f.get(2 * n - 1) / f.get(n - 2)),
            ),
        ],
        TriangleKind::VariedWardLah => vec![
            (|_| 1, 1, Box::new(move |n| f.get(2 * n))),
            (|n| n, 1, Box::new(move |n| f.get(2 * n))),
            (|n| n - 1, 2, Box::new(move |n| f.get(2 * n) * (n - 1))),
        ],
        TriangleKind::BinomialWardLah => vec![
            (|_| 1, 1, Box::new(move |n| f.get(2 * n) / f.get(n - 1))),
            (|n| n, 1, Box::new(move |n| f.get(2 * n) / f.get(n))),
            (|n| n - 1, 2, Box::new(move |n| f.get(2 * n) / f.get(n - 2))),
        ],
        other => panic!("no closed-form special values for {other}"),
    };
    let mut report = CheckReport::new(
        &format!("{kind} special values"),
        format!("n<={max_n}, k in {{1, n-1, n}}"),
    );
    'rows: for n in 1..=max_n as i64 {
        for (column, min_n, value) in &rules {
            if n < *min_n {
                report.skipped += 1;
                continue;
            }
            let k = column(n);
            let (lhs, rhs) = (t.get(n, k), value(n));
            report.checked += 1;
            if lhs != rhs {
                report.counterexample = Some(Counterexample {
                    at: Point::nk(n, k),
                    lhs: q(lhs),
                    rhs: q(rhs),
                });
                break 'rows;
            }
        }
    }
    report
}

/// Entrywise comparison of two builds of the same kind over `0..=max_n`.
pub fn check_strategy_equivalence(a: &Triangle, b: &Triangle, max_n: usize) -> CheckReport {
    assert_eq!(a.kind(), b.kind());
    need(a, a.kind(), max_n);
    need(b, b.kind(), max_n);
    let mut report = CheckReport::new(
        &format!("{} {} = {}", a.kind(), a.strategy(), b.strategy()),
        format!("0<=k<=n<={max_n}"),
    );
    report.checked = (max_n + 1) * (max_n + 2) / 2;
    if let Some((n, k)) = a.truncated(max_n).first_difference(&b.truncated(max_n)) {
        report.counterexample = Some(Counterexample {
            at: Point::nk(n as i64, k as i64),
            lhs: q(a.get(n as i64, k as i64)),
            rhs: q(b.get(n as i64, k as i64)),
        });
    }
    report
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// Generating-function checks cover `k <= 8` up to this order.
pub const GF_MAX_K: usize = 8;
pub const GF_ORDER: usize = 24;

/// The strategy each kind's identity checks read from by default: closed
/// forms for the Lah family, rescaled Ward recurrences for the varied and
/// binomial Ward kinds, so no recurrence is checked against itself.
pub fn reference_strategy(kind: TriangleKind) -> Strategy {
    use TriangleKind::*;
    match kind {
        Ward1 | Ward2 => Strategy::Recurrence,
        WardLah | VariedWardLah | BinomialWardLah => Strategy::Explicit,
        VariedWard1 | VariedWard2 | BinomialWard1 | BinomialWard2 => Strategy::Scaling,
    }
}

/// One triangle per kind, the inputs of the identity suite.
#[derive(Debug, Clone)]
pub struct TriangleSet {
    triangles: BTreeMap<TriangleKind, Triangle>,
    stirling1: ReferenceTable,
    stirling2: ReferenceTable,
    lah: ReferenceTable,
}

impl TriangleSet {
    /// Every kind built to `rows` by its [`reference_strategy`].
    pub fn build(cache: &TriangleCache, rows: usize) -> Result<Self, Error> {
        let triangles = TriangleKind::ALL
            .into_iter()
            .map(|kind| Ok((kind, cache.triangle(kind, rows, reference_strategy(kind))?)))
            .collect::<Result<BTreeMap<_, _>, Error>>()?;
        let max_ref = 2 * rows as u64;
        Ok(TriangleSet {
            triangles,
            stirling1: Reference::Stirling1.table(max_ref),
            stirling2: Reference::Stirling2.table(max_ref),
            lah: Reference::Lah.table(max_ref),
        })
    }

    pub fn get(&self, kind: TriangleKind) -> &Triangle {
        &self.triangles[&kind]
    }

    pub fn get_mut(&mut self, kind: TriangleKind) -> &mut Triangle {
        self.triangles
            .get_mut(&kind)
            .expect("every kind is present")
    }

    pub fn replace(&mut self, triangle: Triangle) {
        self.triangles.insert(triangle.kind(), triangle);
    }

    pub fn rows(&self) -> usize {
        self.triangles
            .values()
            .map(Triangle::max_n)
            .min()
            .unwrap_or(0)
    }
}

/// Every proven identity over `max_n` (horizontal recurrences use every
/// `m <= n - 1`; generating functions use `k <= 8`, order 24). Conjectures
/// are not included; see [`conjecture_suite_on`].
pub fn identity_suite_on(set: &TriangleSet, max_n: usize, exec: Execution) -> Vec<CheckReport> {
    TriangleKind::ALL
        .into_iter()
        .flat_map(|kind| checks_of(set, kind, max_n, exec))
        .collect()
}

/// The checks of [`identity_suite_on`] that read `kind`'s triangle. For a
/// plain Ward kind this includes the scaling checks of its rescaled kinds.
pub fn identity_suite_for(
    set: &TriangleSet,
    kind: TriangleKind,
    max_n: usize,
    exec: Execution,
) -> Vec<CheckReport> {
    let mut reports = checks_of(set, kind, max_n, exec);
    if kind.scale() == Scale::Plain {
        for other in TriangleKind::ALL {
            if other != kind && other.family().plain() == kind {
                reports.push(check_scaling_on(set.get(other), set.get(kind), max_n, exec));
            }
        }
    }
    reports
}

/// Checks whose primary input is `kind`; each check of the suite appears
/// under exactly one kind.
fn checks_of(
    set: &TriangleSet,
    kind: TriangleKind,
    max_n: usize,
    exec: Execution,
) -> Vec<CheckReport> {
    use TriangleKind::*;
    assert!(set.rows() >= max_n.max(GF_ORDER), "triangle set too small");
    let t = set.get(kind);
    let gf = |f: fn(&Triangle, usize, usize) -> CheckReport| {
        exec.map(1..GF_MAX_K + 1, |k| f(t, k, GF_ORDER))
    };
    let mut reports = match kind {
        Ward1 => vec![check_ward1_recurrence_on(t, max_n, exec)],
        Ward2 => vec![check_ward2_recurrence_on(t, max_n, exec)],
        WardLah => {
            let mut r = vec![
                check_wardlah_alternating_sum_on(t, max_n, exec),
                check_wardlah_recurrence_rational_on(t, max_n, exec),
                check_wardlah_recurrence_integer_on(t, max_n, exec),
                check_wardlah_m1_recurrence_on(t, max_n, exec),
                check_horizontal_wardlah_on(t, max_n, max_n, exec),
                check_order3_wardlah_on(t, max_n, exec),
            ];
            r.extend(gf(check_egf_wardlah_on));
            r
        }
        VariedWard1 => vec![check_varied_ward1_recurrence_on(t, max_n, exec)],
        VariedWard2 => vec![check_varied_ward2_recurrence_on(t, max_n, exec)],
        VariedWardLah => {
            let mut r = vec![
                check_varied_wardlah_recurrence_on(t, max_n, exec),
                check_horizontal_varied_wardlah_on(t, max_n, max_n, exec),
                check_lah_variedwardlah_on(t, &set.lah, max_n, exec),
            ];
            r.extend(gf(check_gf_variedwardlah_on));
            r
        }
        BinomialWard1 => vec![check_binomial_ward1_recurrence_on(t, max_n, exec)],
        BinomialWard2 => vec![check_binomial_ward2_recurrence_on(t, max_n, exec)],
        BinomialWardLah => vec![
            check_binomial_wardlah_recurrence_on(t, max_n, exec),
            check_horizontal_binomial_wardlah_on(t, max_n, max_n, exec),
            check_order5_binomial_wardlah_on(t, max_n, exec),
            check_central_lah_rowsums_on(t, &set.lah, max_n),
        ],
    };
    if kind.scale() != Scale::Plain {
        reports.push(check_scaling_on(
            t,
            set.get(kind.family().plain()),
            max_n,
            exec,
        ));
    }
    if kind.family() == Family::WardLah {
        reports.push(check_special_values_on(t, max_n));
    }
    reports
}

/// Row-sum evidence for both central-Stirling conjectures.
pub fn conjecture_suite_on(set: &TriangleSet, max_n: usize) -> Vec<CheckReport> {
    vec![
        check_conjecture_rowsums_stirling_on(
            set.get(TriangleKind::BinomialWard1),
            &set.stirling1,
            max_n,
        ),
        check_conjecture_rowsums_stirling_on(
            set.get(TriangleKind::BinomialWard2),
            &set.stirling2,
            max_n,
        ),
    ]
}

/// Builds the reference triangles and runs [`identity_suite_on`].
pub fn identity_suite(max_n: usize) -> Result<Vec<CheckReport>, Error> {
    let cache = TriangleCache::default();
    let set = TriangleSet::build(&cache, max_n.max(GF_ORDER))?;
    Ok(identity_suite_on(&set, max_n, cache.execution()))
}

/// Which row-sum relation to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSumRelation {
    /// Binomial Ward numbers of the first kind against `s(2n, n)`.
    Stirling1,
    /// Binomial Ward numbers of the second kind against `S(2n, n)`.
    Stirling2,
    /// Binomial Ward-Lah numbers against `L(2n, n)` (a theorem).
    CentralLah,
}

impl std::str::FromStr for RowSumRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "stirling1" => Ok(RowSumRelation::Stirling1),
            "stirling2" => Ok(RowSumRelation::Stirling2),
            "central-lah" | "lah" => Ok(RowSumRelation::CentralLah),
            _ => Err(Error::Parse(format!("unknown row-sum relation {s:?}"))),
        }
    }
}

// ---------------------------------------------------------------------------
// Convenience entry points building their own triangles
// ---------------------------------------------------------------------------

fn reference_triangle(kind: TriangleKind, rows: usize) -> Triangle {
    crate::triangle::triangle(kind, rows, reference_strategy(kind))
        .expect("reference strategies are supported and exact")
}

pub fn check_horizontal_wardlah(max_n: usize, max_m: usize) -> CheckReport {
    let t = reference_triangle(TriangleKind::WardLah, max_n);
    check_horizontal_wardlah_on(&t, max_n, max_m, Execution::default())
}

pub fn check_order3_wardlah(max_n: usize) -> CheckReport {
    let t = reference_triangle(TriangleKind::WardLah, max_n);
    check_order3_wardlah_on(&t, max_n, Execution::default())
}

pub fn check_order5_binomial_wardlah(max_n: usize) -> CheckReport {
    let t = reference_triangle(TriangleKind::BinomialWardLah, max_n);
    check_order5_binomial_wardlah_on(&t, max_n, Execution::default())
}

pub fn check_egf_wardlah(k: usize, order: usize) -> CheckReport {
    let t = reference_triangle(TriangleKind::WardLah, order);
    check_egf_wardlah_on(&t, k, order)
}

pub fn check_gf_variedwardlah(k: usize, order: usize) -> CheckReport {
    let t = reference_triangle(TriangleKind::VariedWardLah, order);
    check_gf_variedwardlah_on(&t, k, order)
}

pub fn check_lah_variedwardlah(max_n: usize) -> CheckReport {
    let t = reference_triangle(TriangleKind::VariedWardLah, max_n);
    let lah = Reference::Lah.table(max_n as u64);
    check_lah_variedwardlah_on(&t, &lah, max_n, Execution::default())
}

pub fn check_conjecture_rowsums_stirling(kind: TriangleKind, max_n: usize) -> CheckReport {
    let reference = match kind {
        TriangleKind::BinomialWard1 => Reference::Stirling1,
        TriangleKind::BinomialWard2 => Reference::Stirling2,
        other => panic!("row-sum conjecture is stated for binomial ward numbers, not {other}"),
    };
    let t = reference_triangle(kind, max_n);
    check_conjecture_rowsums_stirling_on(&t, &reference.table(2 * max_n as u64), max_n)
}

pub fn check_central_lah_rowsums(max_n: usize) -> CheckReport {
    let t = reference_triangle(TriangleKind::BinomialWardLah, max_n);
    check_central_lah_rowsums_on(&t, &Reference::Lah.table(2 * max_n as u64), max_n)
}

pub fn check_row_sums(relation: RowSumRelation, max_n: usize) -> CheckReport {
    match relation {
        RowSumRelation::Stirling1 => {
            check_conjecture_rowsums_stirling(TriangleKind::BinomialWard1, max_n)
        }
        RowSumRelation::Stirling2 => {
            check_conjecture_rowsums_stirling(TriangleKind::BinomialWard2, max_n)
        }
        RowSumRelation::CentralLah => check_central_lah_rowsums(max_n),
    }
}

#[cfg(test)]
mod tests;
