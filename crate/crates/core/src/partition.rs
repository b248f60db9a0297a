//! Integer partitions with a fixed largest part, and the partition
//! transformation `P(n, k)` of an argument sequence `a_1, a_2, ...`:
//!
//! ```text
//! P(n, k) = sum over partitions q of n with q_0 = k of
//!           (-1)^q_0 * prod_{j < len(q)} binom(q_j, q_{j+1}) * a_{j+1}^{q_j}
//! ```
//!
//! with `q_len = 0`. The binomial pairs *adjacent* parts.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::{binomial, rational, signed_by_parity, Rational};

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u64>);

impl Partition {
    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> u64 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Lazily yields the partitions of `n` whose largest part is exactly `k`,
/// in decreasing lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u64>>,
}

impl Partitions {
    pub fn new(n: u64, k: u64) -> Self {
        let current = if n == 0 && k == 0 {
            Some(Vec::new())
        } else if k == 0 || k > n {
            None
        } else {
            let mut parts = vec![k];
            fill_greedy(&mut parts, n - k, k);
            Some(parts)
        };
        Partitions { current }
    }
}

/// Appends the lexicographically largest partition of `rest` with parts at most `cap`.
fn fill_greedy(parts: &mut Vec<u64>, mut rest: u64, cap: u64) {
    while rest > 0 {
        let p = rest.min(cap);
        parts.push(p);
        rest -= p;
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        // Successor: strip trailing ones, decrement the last part > 1 (never
        // the leading part), refill greedily with the freed amount.
        let mut next = current.clone();
        let mut freed = 0;
        while next.len() > 1 && next.last() == Some(&1) {
            next.pop();
            freed += 1;
        }
        if next.len() > 1 {
            let last = next.pop().unwrap();
            next.push(last - 1);
            fill_greedy(&mut next, freed + 1, last - 1);
            self.current = Some(next);
        }
        Some(Partition(current))
    }
}

pub fn enumerate_partitions(n: u64, k: u64) -> Vec<Partition> {
    Partitions::new(n, k).collect()
}

/// Argument sequence `a_j`, indexed from `j = 1`.
#[derive(Clone)]
pub enum ArgumentSequence {
    /// `a_j = 1`
    ConstantOne,
    /// `a_j = j / (j + 1)`
    WardFirstKind,
    /// `a_j = 1 / (j + 1)`
    WardSecondKind,
    Custom(Arc<dyn Fn(u64) -> Rational + Send + Sync>),
}

impl ArgumentSequence {
    pub fn custom(f: impl Fn(u64) -> Rational + Send + Sync + 'static) -> Self {
        ArgumentSequence::Custom(Arc::new(f))
    }

    pub fn term(&self, j: u64) -> Rational {
        debug_assert!(j >= 1);
        match self {
            ArgumentSequence::ConstantOne => Rational::one(),
            ArgumentSequence::WardFirstKind => rational(j, j + 1),
            ArgumentSequence::WardSecondKind => rational(1, j + 1),
            ArgumentSequence::Custom(f) => f(j),
        }
    }
}

impl fmt::Debug for ArgumentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArgumentSequence::ConstantOne => f.write_str("ConstantOne"),
            ArgumentSequence::WardFirstKind => f.write_str("WardFirstKind"),
            ArgumentSequence::WardSecondKind => f.write_str("WardSecondKind"),
            ArgumentSequence::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Table of `a_j^e` for `1 <= j <= len`, `0 <= e <= max_exp`.
struct PowerTable(Vec<Vec<Rational>>);

impl PowerTable {
    fn new(seq: &ArgumentSequence, len: u64, max_exp: u64) -> Self {
        let rows = (1..=len)
            .map(|j| {
                let a = seq.term(j);
                let mut row = Vec::with_capacity(max_exp as usize + 1);
                let mut acc = Rational::one();
                for _ in 0..=max_exp {
                    row.push(acc.clone());
                    acc *= &a;
                }
                row
            })
            .collect();
        PowerTable(rows)
    }

    fn get(&self, j: u64, e: u64) -> &Rational {
        &self.0[j as usize - 1][e as usize]
    }
}

fn partition_weight(parts: &[u64], powers: &PowerTable) -> Rational {
    let mut w = Rational::one();
    for (j, &q) in parts.iter().enumerate() {
        let next = parts.get(j + 1).copied().unwrap_or(0);
        let b = binomial(q as i64, next as i64);
        w *= Rational::from_integer(b) * powers.get(j as u64 + 1, q);
    }
    signed_by_parity(w, parts[0])
}

/// `P(n, k)` over `seq`. `P(0, 0) = 1`; empty sums are 0.
pub fn partition_transform(n: u64, k: u64, seq: &ArgumentSequence) -> Rational {
    if n == 0 && k == 0 {
        return Rational::one();
    }
    if k == 0 || k > n {
        return Rational::zero();
    }
    // A partition of n with largest part k has at most n - k + 1 parts.
    let powers = PowerTable::new(seq, n - k + 1, k);
    Partitions::new(n, k)
        .map(|q| partition_weight(q.parts(), &powers))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorial, falling_factorial, Integer};

    fn parts_of(n: u64, k: u64) -> Vec<Vec<u64>> {
        enumerate_partitions(n, k)
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect()
    }

    /// All partitions of `n` with parts at most `cap`, by plain recursion.
    fn brute_force(n: u64, cap: u64) -> Vec<Vec<u64>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in 1..=cap.min(n) {
            for mut rest in brute_force(n - p, p) {
                rest.insert(0, p);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(parts_of(4, 2), vec![vec![2, 2], vec![2, 1, 1]]);
        assert_eq!(parts_of(3, 3), vec![vec![3]]);
        assert!(parts_of(2, 3).is_empty());
        assert!(parts_of(3, 0).is_empty());
        assert_eq!(parts_of(0, 0), vec![Vec::<u64>::new()]);
        assert_eq!(
            parts_of(7, 3),
            vec![
                vec![3, 3, 1],
                vec![3, 2, 2],
                vec![3, 2, 1, 1],
                vec![3, 1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 0..=30u64 {
            let everything = brute_force(n, n);
            for k in 0..=n {
                let listed = parts_of(n, k);
                let mut expected: Vec<Vec<u64>> = everything
                    .iter()
                    .filter(|p| p.first().copied().unwrap_or(0) == k)
                    .cloned()
                    .collect();
                expected.sort_by(|a, b| b.cmp(a));
                assert_eq!(listed, expected, "n={n} k={k}");
                // count: partitions of n-k into parts <= k
                let count = brute_force(n - k, k).len();
                assert_eq!(listed.len(), if n > 0 && k == 0 { 0 } else { count });
                for p in &listed {
                    assert!(p.windows(2).all(|w| w[0] >= w[1]));
                    assert!(p.iter().all(|&x| x > 0));
                    assert_eq!(p.iter().sum::<u64>(), n);
                }
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        assert_eq!(enumerate_partitions(20, 6), enumerate_partitions(20, 6));
    }

    #[test]
    fn transform_examples() {
        let one = ArgumentSequence::ConstantOne;
        assert_eq!(partition_transform(2, 1, &one), rational(-1, 1));
        assert_eq!(
            partition_transform(0, 0, &ArgumentSequence::WardSecondKind),
            Rational::one()
        );
        assert_eq!(
            partition_transform(3, 2, &ArgumentSequence::WardSecondKind),
            rational(1, 6)
        );
        assert_eq!(partition_transform(3, 5, &one), Rational::zero());
    }

    #[test]
    fn constant_one_closed_form() {
        let one = ArgumentSequence::ConstantOne;
        for n in 1..=20u64 {
            for k in 1..=n {
                let expected = signed_by_parity(binomial(n as i64 - 1, k as i64 - 1), k);
                assert_eq!(
                    partition_transform(n, k, &one),
                    Rational::from_integer(expected)
                );
            }
        }
    }

    #[test]
    fn lah_reconstruction() {
        let one = ArgumentSequence::ConstantOne;
        for n in 1..=15u64 {
            for k in 1..=n {
                let scale = Rational::new(factorial(n), factorial(k));
                let got = signed_by_parity(scale * partition_transform(n, k, &one), k);
                let lah = factorial(n) / factorial(k) * binomial(n as i64 - 1, k as i64 - 1);
                assert_eq!(got, Rational::from_integer(lah));
            }
        }
    }

    #[test]
    fn scaled_transform_is_integral() {
        let families = [
            ArgumentSequence::ConstantOne,
            ArgumentSequence::WardFirstKind,
            ArgumentSequence::WardSecondKind,
        ];
        for seq in &families {
            for n in 1..=15u64 {
                for k in 1..=n {
                    let scale = falling_factorial((n + k) as i64, n);
                    let v = signed_by_parity(
                        Rational::from_integer(scale) * partition_transform(n, k, seq),
                        k,
                    );
                    assert!(v.is_integer(), "{seq:?} n={n} k={k} -> {v}");
                }
            }
        }
    }

    #[test]
    fn custom_sequence_matches_named() {
        let custom = ArgumentSequence::custom(|j| rational(j, j + 1));
        for n in 1..=8 {
            for k in 1..=n {
                assert_eq!(
                    partition_transform(n, k, &custom),
                    partition_transform(n, k, &ArgumentSequence::WardFirstKind)
                );
            }
        }
        let twos = ArgumentSequence::custom(|_| Rational::from_integer(Integer::from(2)));
        // single partition (2): binom(2,0) * 2^2
        assert_eq!(partition_transform(2, 2, &twos), rational(4, 1));
    }
}
