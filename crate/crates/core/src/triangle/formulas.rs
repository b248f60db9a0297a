//! Per-entry formulas and the recurrence row step for each kind.
//!
//! Every function here assumes `1 <= k <= n`; boundary entries are
//! resolved by the caller.

use num_traits::Zero;

use super::kind::{Scale, Strategy, TriangleKind};
use crate::arith::{
    binomial, exact_div, factorial, falling_factorial, signed_by_parity, to_integer, Integer,
    Rational,
};
use crate::partition::partition_transform;
use crate::Error;

fn int(v: u64) -> Integer {
    Integer::from(v)
}

/// `binom(n-1, k-1)`, the common core of the Lah-family closed forms.
fn lah_core(n: u64, k: u64) -> Integer {
    binomial(n as i64 - 1, k as i64 - 1)
}

/// Closed forms for the three Lah-family kinds.
pub(crate) fn explicit(kind: TriangleKind, n: u64, k: u64) -> Result<Integer, Error> {
    match kind {
        TriangleKind::WardLah => Ok(factorial(n + k) / factorial(k) * lah_core(n, k)),
        TriangleKind::VariedWardLah => Ok(factorial(2 * n) * lah_core(n, k)),
        TriangleKind::BinomialWardLah => exact_div(
            &(factorial(2 * n) * lah_core(n, k)),
            &(factorial(k) * factorial(n - k)),
        ),
        _ => Err(Error::UnsupportedStrategy {
            kind,
            strategy: Strategy::Explicit,
        }),
    }
}

/// `sum_{m=0}^{k} (-1)^{m+k} binom(n+k, n+m) binom(n+m-1, m-1) (n+m)!/m!`
pub(crate) fn alternating_sum(n: u64, k: u64) -> Integer {
    let (ni, ki) = (n as i64, k as i64);
    (0..=k)
        .map(|m| {
            let mi = m as i64;
            let term = binomial(ni + ki, ni + mi)
                * binomial(ni + mi - 1, mi - 1)
                * (factorial(n + m) / factorial(m));
            signed_by_parity(term, m + k)
        })
        .sum()
}

/// `(-1)^k * scale * P(n, k)` where the scale depends on the kind.
pub(crate) fn via_partition_transform(
    kind: TriangleKind,
    n: u64,
    k: u64,
) -> Result<Integer, Error> {
    let p = partition_transform(n, k, &kind.family().argument_sequence());
    let scale = match kind.scale() {
        Scale::Plain => Rational::from_integer(falling_factorial((n + k) as i64, n)),
        Scale::Varied => Rational::from_integer(factorial(2 * n)),
        Scale::Binomial => Rational::new(factorial(2 * n), factorial(k) * factorial(n - k)),
    };
    let value = signed_by_parity(scale * p, k);
    to_integer(&value).ok_or(Error::NonIntegral {
        kind,
        n: n as usize,
        k: k as usize,
        value,
    })
}

/// Rescales a base-family entry `base = X(n, k)` to `kind`.
pub(crate) fn scale_from_base(
    kind: TriangleKind,
    n: u64,
    k: u64,
    base: &Integer,
) -> Result<Integer, Error> {
    match kind.scale() {
        Scale::Plain => Ok(base.clone()),
        Scale::Varied => exact_div(
            &(factorial(2 * n) * base),
            &falling_factorial((n + k) as i64, n),
        ),
        Scale::Binomial => Ok(binomial(2 * n as i64, (n + k) as i64) * base),
    }
}

/// One step of the canonical recurrence: entry `(n, k)` from row `n - 1`.
/// `prev(j)` must return 0 outside `0..=n-1`.
pub(crate) fn recurrence_step(
    kind: TriangleKind,
    n: u64,
    k: u64,
    prev: &dyn Fn(i64) -> Integer,
) -> Result<Integer, Error> {
    use TriangleKind::*;
    let ki = k as i64;
    let (up, diag) = (prev(ki), prev(ki - 1));
    let two_n = int(2 * n) * (2 * n - 1);
    let v = match kind {
        Ward1 => int(n + k - 1) * (up + diag),
        Ward2 => int(k) * up + int(n + k - 1) * diag,
        WardLah => int(2 * (n + k - 1)) * diag + int(n + 2 * k - 1) * up,
        VariedWard1 => exact_div(
            &(two_n * (int(n + k - 1) * up + int(k) * diag)),
            &int(n + k),
        )?,
        VariedWard2 => exact_div(&(two_n * int(k) * (up + diag)), &int(n + k))?,
        VariedWardLah => two_n * (up + diag),
        BinomialWard1 | BinomialWard2 | BinomialWardLah if k == n => {
            // Diagonal: binom(2n, 2n) = 1 times the base family's own
            // recurrence restricted to k = n.
            let base = recurrence_step(kind.family().plain(), n, k, &|j| {
                if j == ki - 1 {
                    diag.clone()
                } else {
                    Integer::zero()
                }
            })?;
            scale_from_base(kind, n, k, &base)?
        }
        BinomialWard1 => exact_div(
            &(two_n * (int(n + k - 1) * up + int(n - k) * diag)),
            &(int(n + k) * (n - k)),
        )?,
        BinomialWard2 => exact_div(
            &(two_n * (int(k) * up + int(n - k) * diag)),
            &(int(n + k) * (n - k)),
        )?,
        BinomialWardLah => exact_div(
            &(two_n * (int(k) * up + int(n - k) * diag)),
            &(int(k) * (n - k)),
        )?,
    };
    Ok(v)
}

/// Which base triangle a scaling build reads from.
pub(crate) fn scaling_base(kind: TriangleKind) -> (TriangleKind, Strategy) {
    (kind.family().plain(), Strategy::Recurrence)
}
