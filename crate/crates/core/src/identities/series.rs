//! Truncated formal power series over the rationals.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::Error;

/// `c_0 + c_1 x + ... + c_N x^N`, with everything past `x^N` dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, Rational::one())
    }

    /// `c x^power`; zero when `power > order`.
    pub fn monomial(order: usize, power: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(order, 1, Rational::one())
    }

    /// Pads with zeros or truncates to `order`.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut coeffs: Vec<Rational> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero past the truncation order.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn div_scalar(&self, c: &Rational) -> Result<Self, Error> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.scale(&c.recip()))
    }

    /// Multiplication by `x^m`.
    pub fn shift(&self, m: usize) -> Self {
        let order = self.order();
        Self::from_coeffs(
            order,
            std::iter::repeat_n(Rational::zero(), m).chain(self.coeffs.iter().cloned()),
        )
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, Error> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv_c0 = c0.recip();
        let mut out = vec![inv_c0.clone()];
        for n in 1..=self.order() {
            let acc: Rational = (1..=n).map(|i| &self.coeffs[i] * &out[n - i]).sum();
            out.push(-acc * &inv_c0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|i| f(&self.coeffs[i], &rhs.coeffs[i]))
                .collect(),
        }
    }
}

// Binary operations truncate to the smaller of the two orders.

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }
}

impl Add for PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: PowerSeries) -> PowerSeries {
        &self + &rhs
    }
}

impl Sub for PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: PowerSeries) -> PowerSeries {
        &self - &rhs
    }
}

impl Mul for PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: PowerSeries) -> PowerSeries {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, rational};
    use proptest::prelude::*;

    const ORDER: usize = 8;

    fn series() -> impl Strategy<Value = PowerSeries> {
        prop::collection::vec((-9i64..10, 1i64..6), ORDER + 1).prop_map(|cs| {
            PowerSeries::from_coeffs(ORDER, cs.into_iter().map(|(p, q)| rational(p, q)))
        })
    }

    #[test]
    fn one_minus_x_inverse_powers() {
        for order in [0usize, 5, 30] {
            let one_minus_x = &PowerSeries::one(order) - &PowerSeries::x(order);
            let inv = one_minus_x.inverse().unwrap();
            for k in 1..=8u32 {
                let s = inv.pow(k);
                for n in 0..=order {
                    let expected = binomial((n + k as usize) as i64 - 1, n as i64);
                    assert_eq!(s.coeff(n), Rational::from_integer(expected), "k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn inverse_needs_constant_term() {
        assert_eq!(PowerSeries::x(4).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn shift_and_coeff() {
        let s = PowerSeries::from_coeffs(4, [1, 2, 3, 4, 5].map(|v| rational(v, 1)));
        let shifted = s.shift(2);
        assert_eq!(shifted.coeff(0), Rational::zero());
        assert_eq!(shifted.coeff(2), rational(1, 1));
        assert_eq!(shifted.coeff(4), rational(3, 1));
        assert_eq!(shifted.coeff(9), Rational::zero());
        assert_eq!(
            s.div_scalar(&rational(2, 1)).unwrap().coeff(1),
            rational(1, 1)
        );
        assert!(s.div_scalar(&Rational::zero()).is_err());
    }

    proptest! {
        #[test]
        fn ring_laws(a in series(), b in series(), c in series()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, PowerSeries::zero(ORDER));
        }

        #[test]
        fn truncation_commutes_with_multiplication(a in series(), b in series(), m in 0usize..=ORDER) {
            prop_assert_eq!((&a * &b).truncate(m), &a.truncate(m) * &b.truncate(m));
        }

        #[test]
        fn inverse_is_inverse(a in series()) {
            prop_assume!(!a.coeff(0).is_zero());
            prop_assert_eq!(&a * &a.inverse().unwrap(), PowerSeries::one(ORDER));
        }
    }
}
