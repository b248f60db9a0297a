//! Exact integer and rational arithmetic plus the factorial family.
//!
//! `Integer` and `Rational` are the `num` big-number types; `BigRational`
//! keeps every value reduced with a positive denominator, which is the
//! canonical form the rest of the crate relies on.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

pub type Integer = BigInt;
pub type Rational = BigRational;

/// `n!`
pub fn factorial(n: u64) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// Falling factorial `x (x-1) ... (x-n+1)`; the empty product is 1.
pub fn falling_factorial(x: i64, n: u64) -> Integer {
    (0..n).fold(Integer::one(), |acc, i| acc * (Integer::from(x) - i))
}

/// Rising factorial `x (x+1) ... (x+n-1)`; the empty product is 1.
pub fn rising_factorial(x: i64, n: u64) -> Integer {
    (0..n).fold(Integer::one(), |acc, i| acc * (Integer::from(x) + i))
}

/// Binomial coefficient with the conventions used throughout the crate:
/// zero for a negative lower index or for `k > n >= 0`, and
/// `(-1)^k binom(k-n-1, k)` for a negative upper index.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    if n < 0 {
        let magnitude = binomial(k - n - 1, k);
        return if k % 2 == 0 { magnitude } else { -magnitude };
    }
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    // Multiplicative form; each partial product is itself a binomial, so
    // the division is always exact.
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Divides `a` by `b`, failing unless the quotient is an exact integer.
pub fn exact_div(a: &Integer, b: &Integer) -> Result<Integer, Error> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision {
            dividend: a.clone(),
            divisor: b.clone(),
        })
    }
}

/// Returns the numerator of `r` when its reduced denominator is 1.
pub fn to_integer(r: &Rational) -> Option<Integer> {
    r.is_integer().then(|| r.numer().clone())
}

pub fn rational(numer: impl Into<Integer>, denom: impl Into<Integer>) -> Rational {
    Rational::new(numer.into(), denom.into())
}

pub fn from_integer(i: Integer) -> Rational {
    Rational::from_integer(i)
}

/// `(-1)^e` applied to `value`.
pub(crate) fn signed_by_parity<T: std::ops::Neg<Output = T>>(value: T, e: u64) -> T {
    if e.is_multiple_of(2) {
        value
    } else {
        -value
    }
}

/// Number of bits in the magnitude of `x` (0 for zero).
pub fn bit_length(x: &Integer) -> u64 {
    x.abs().bits()
}

/// Parses a decimal integer with optional leading sign.
pub fn parse_integer(s: &str) -> Result<Integer, Error> {
    s.parse::<Integer>()
        .map_err(|_| Error::Parse(format!("not a decimal integer: {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::gcd;
    use proptest::prelude::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(1), int(1));
        assert_eq!(factorial(6), int(720));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(5, 3), int(60));
        assert_eq!(falling_factorial(7, 0), int(1));
        assert_eq!(falling_factorial(3, 5), int(0));
        assert_eq!(falling_factorial(-2, 2), int(6));
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(2, 3), int(24));
        assert_eq!(rising_factorial(9, 0), int(1));
        assert_eq!(rising_factorial(1, 4), int(24));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial(-2, 3), int(-4));
        assert_eq!(binomial(2, 5), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(-1, 0), int(1));
    }

    #[test]
    fn exact_div_rejects_remainder() {
        assert_eq!(exact_div(&int(12), &int(4)).unwrap(), int(3));
        assert_eq!(exact_div(&int(-12), &int(4)).unwrap(), int(-3));
        assert!(matches!(
            exact_div(&int(13), &int(4)),
            Err(Error::InexactDivision { .. })
        ));
        assert!(matches!(
            exact_div(&int(1), &int(0)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn no_negative_zero() {
        let z = -int(0);
        assert_eq!(z, Integer::zero());
        assert_eq!(z.to_string(), "0");
        assert_eq!(rational(0, -5).to_string(), "0");
    }

    #[test]
    fn rational_display() {
        assert_eq!(rational(6, 4).to_string(), "3/2");
        assert_eq!(rational(8, 4).to_string(), "2");
        assert_eq!(rational(3, -6).to_string(), "-1/2");
    }

    #[test]
    fn decimal_round_trip() {
        let big = factorial(40);
        assert_eq!(parse_integer(&big.to_string()).unwrap(), big);
        assert_eq!(parse_integer("-17").unwrap(), int(-17));
        assert!(parse_integer("12a").is_err());
    }

    #[test]
    fn binomial_matches_factorial_ratio() {
        for n in 0..=30u64 {
            for k in 0..=n {
                let expected = factorial(n) / (factorial(k) * factorial(n - k));
                assert_eq!(binomial(n as i64, k as i64), expected, "({n},{k})");
            }
        }
    }

    #[test]
    fn falling_times_factorial_is_factorial() {
        for x in 0..=30u64 {
            for n in 0..=x {
                assert_eq!(
                    falling_factorial(x as i64, n) * factorial(x - n),
                    factorial(x)
                );
            }
        }
    }

    #[test]
    fn rising_is_shifted_falling() {
        for x in 1..=30i64 {
            for n in 1..=30u64 {
                assert_eq!(
                    rising_factorial(x, n),
                    falling_factorial(x + n as i64 - 1, n)
                );
            }
        }
    }

    proptest! {
        #[test]
        fn rationals_are_reduced(p in -10_000i64..10_000, q in 1i64..10_000) {
            let r = rational(p, q);
            prop_assert!(r.denom() > &Integer::zero());
            prop_assert_eq!(gcd(r.numer().clone(), r.denom().clone()), Integer::one());
        }

        #[test]
        fn rational_times_reciprocal_is_one(p in 1i64..10_000, q in 1i64..10_000, neg in any::<bool>()) {
            let p = if neg { -p } else { p };
            let r = rational(p, q);
            prop_assert_eq!(&r * r.recip(), Rational::one());
        }
    }
}
