//! Truncated power series over an exact field scalar.

use std::ops::{Add, Mul, Sub};

use num_traits::One;

use crate::error::Error;
use crate::rational::factorial;
use crate::scalar::Scalar;
use crate::Rational;

/// A power series truncated at a fixed order.
///
/// Invariant: the coefficient vector has exactly `order + 1` entries, one for
/// each power of t from t^0 through t^order. Binary operations truncate to
/// the smaller operand order, so a coefficient is never fabricated beyond
/// what both inputs determine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<T> {
    order: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> Series<T> {
    /// Builds a series from coefficients in ascending order of t; the
    /// truncation order is the index of the last entry.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series carries at least its constant term"
        );
        Series {
            order: coeffs.len() - 1,
            coeffs,
        }
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Series {
            order,
            coeffs: vec![T::zero(); order + 1],
        }
    }

    /// The constant series 1 at the given order.
    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The coefficient of t^i; i must be within the truncation order.
    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Drops coefficients beyond the given order, which must not exceed the
    /// current one.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend a truncated series");
        Series {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Adds a constant to the t^0 coefficient.
    pub fn add_constant(&self, c: T) -> Self {
        let mut out = self.clone();
        let cur = std::mem::replace(&mut out.coeffs[0], T::zero());
        out.coeffs[0] = cur + c;
        out
    }

    /// Multiplies every coefficient by c.
    pub fn scale(&self, c: &T) -> Self {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// The multiplicative inverse as a truncated series, at the same order.
    ///
    /// With a = a_0 + a_1 t + ..., the coefficients of b = 1/a satisfy
    /// b_0 = 1/a_0 and b_n = -(1/a_0) * sum_{i=1..n} a_i b_{n-i}, which is
    /// exact division throughout. Fails when a_0 = 0.
    pub fn inverse(&self) -> Result<Series<T>, Error> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let a0_inv = T::one() / self.coeffs[0].clone();
        let mut b: Vec<T> = Vec::with_capacity(self.order + 1);
        b.push(a0_inv.clone());
        for n in 1..=self.order {
            let mut s = T::zero();
            for i in 1..=n {
                s = s + self.coeffs[i].clone() * b[n - i].clone();
            }
            b.push(-(a0_inv.clone() * s));
        }
        Ok(Series {
            order: self.order,
            coeffs: b,
        })
    }
}

impl Series<Rational> {
    /// The exponential series e^(c*t) = sum_i c^i t^i / i!, truncated at the
    /// given order.
    pub fn exp(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c_pow = Rational::one();
        for i in 0..=order {
            coeffs.push(&c_pow / Rational::from_integer(factorial(i as u32)));
            c_pow *= c;
        }
        Series::from_coeffs(coeffs)
    }
}

impl<T: Scalar> Add for &Series<T> {
    type Output = Series<T>;

    fn add(self, rhs: &Series<T>) -> Series<T> {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
            .collect();
        Series { order, coeffs }
    }
}

impl<T: Scalar> Sub for &Series<T> {
    type Output = Series<T>;

    fn sub(self, rhs: &Series<T>) -> Series<T> {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone())
            .collect();
        Series { order, coeffs }
    }
}

impl<T: Scalar> Mul for &Series<T> {
    type Output = Series<T>;

    fn mul(self, rhs: &Series<T>) -> Series<T> {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![T::zero(); order + 1];
        for i in 0..=order {
            for j in 0..=(order - i) {
                let term = self.coeffs[i].clone() * rhs.coeffs[j].clone();
                let cur = std::mem::replace(&mut coeffs[i + j], T::zero());
                coeffs[i + j] = cur + term;
            }
        }
        Series { order, coeffs }
    }
}
