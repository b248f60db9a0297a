//! Classical reference triangles: unsigned Stirling numbers of both kinds
//! and Lah numbers, each built from its textbook recurrence.

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, Integer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reference {
    /// Unsigned Stirling numbers of the first kind (cycle numbers).
    Stirling1,
    /// Stirling numbers of the second kind (set numbers).
    Stirling2,
    Lah,
}

impl Reference {
    fn step(self, n: u64, k: u64, up: &Integer, diag: &Integer) -> Integer {
        match self {
            // c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
            Reference::Stirling1 => diag + up * (n - 1),
            // S(n,k) = S(n-1,k-1) + k S(n-1,k)
            Reference::Stirling2 => diag + up * k,
            // L(n,k) = L(n-1,k-1) + (n+k-1) L(n-1,k)
            Reference::Lah => diag + up * (n + k - 1),
        }
    }

    /// Rows `0..=max_n` of the triangle.
    pub fn table(self, max_n: u64) -> ReferenceTable {
        let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
        for n in 1..=max_n {
            let prev = &rows[n as usize - 1];
            let at = |k: u64| prev.get(k as usize).cloned().unwrap_or_else(Integer::zero);
            let mut row = vec![Integer::zero()];
            for k in 1..=n {
                row.push(self.step(n, k, &at(k), &at(k - 1)));
            }
            rows.push(row);
        }
        ReferenceTable { rows }
    }

    pub fn value(self, n: u64, k: u64) -> Integer {
        if k > n {
            return Integer::zero();
        }
        self.table(n).get(n as i64, k as i64)
    }

    /// The central value at `(2n, n)`.
    pub fn central(self, n: u64) -> Integer {
        self.value(2 * n, n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceTable {
    rows: Vec<Vec<Integer>>,
}

impl ReferenceTable {
    pub fn max_n(&self) -> u64 {
        self.rows.len() as u64 - 1
    }

    pub fn get(&self, n: i64, k: i64) -> Integer {
        if n < 0 || k < 0 || k > n {
            return Integer::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }

    pub fn central(&self, n: u64) -> Integer {
        self.get(2 * n as i64, n as i64)
    }
}

pub fn stirling1_unsigned(n: u64, k: u64) -> Integer {
    Reference::Stirling1.value(n, k)
}

pub fn stirling2(n: u64, k: u64) -> Integer {
    Reference::Stirling2.value(n, k)
}

pub fn lah(n: u64, k: u64) -> Integer {
    Reference::Lah.value(n, k)
}

/// `n!/k! * binom(n-1, k-1)` for `n, k >= 1`, with `L(0,0) = 1`.
pub fn lah_explicit(n: u64, k: u64) -> Integer {
    match (n, k) {
        (0, 0) => Integer::one(),
        (_, 0) => Integer::zero(),
        _ if k > n => Integer::zero(),
        _ => factorial(n) / factorial(k) * binomial(n as i64 - 1, k as i64 - 1),
    }
}

pub fn central(reference: Reference, n: u64) -> Integer {
    reference.central(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn classical_values() {
        assert_eq!(stirling1_unsigned(4, 2), int(11));
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(lah(2, 1), int(2));
        assert_eq!(stirling1_unsigned(0, 0), int(1));
        assert_eq!(stirling2(5, 0), int(0));
        assert_eq!(lah(3, 5), int(0));
    }

    #[test]
    fn central_values() {
        assert_eq!(central(Reference::Lah, 1), int(2));
        assert_eq!(central(Reference::Stirling2, 1), int(1));
        assert_eq!(central(Reference::Stirling1, 2), int(11));
        assert_eq!(central(Reference::Lah, 0), int(1));
    }

    #[test]
    fn lah_recurrence_matches_closed_form() {
        let table = Reference::Lah.table(30);
        for n in 0..=30u64 {
            for k in 0..=n {
                assert_eq!(
                    table.get(n as i64, k as i64),
                    lah_explicit(n, k),
                    "({n},{k})"
                );
            }
        }
    }

    #[test]
    fn row_sums_are_factorials_and_bell_numbers() {
        // sum_k c(n,k) = n!
        let s1 = Reference::Stirling1.table(12);
        let s2 = Reference::Stirling2.table(12);
        let bell = [
            1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597,
        ];
        for n in 0..=12i64 {
            let c: Integer = (0..=n).map(|k| s1.get(n, k)).sum();
            assert_eq!(c, factorial(n as u64));
            let b: Integer = (0..=n).map(|k| s2.get(n, k)).sum();
            assert_eq!(b, int(bell[n as usize]));
        }
    }
}
