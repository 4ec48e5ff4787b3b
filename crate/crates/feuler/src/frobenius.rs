//! Frobenius-Euler numbers and polynomials over exact rationals.
//!
//! The Frobenius-Euler numbers H_n(u), for a rational u != 1, have the
//! exponential generating function (1 - u) / (e^t - u). Expanding the
//! defining relation coefficient by coefficient gives the recurrence
//!
//! ```text
//! H_0(u) = 1,    H_n(u) = (1 / (u - 1)) * sum_{k=0}^{n-1} C(n, k) H_k(u)
//! ```
//!
//! and the polynomials extend the numbers umbrally:
//!
//! ```text
//! H_n(u, x) = sum_{k=0}^{n} C(n, k) H_k(u) x^(n-k),
//! ```
//!
//! equivalently through the generating function (1 - u) e^(xt) / (e^t - u).
//!
//! Both descriptions are implemented as genuinely separate code paths: the
//! recurrence route lives in [`FEContext`] and the generating-function route
//! in [`numbers_via_gf`] and [`poly_via_gf`], which expand and invert
//! truncated series. The two routes are cross-checked in the test suite and
//! by the identity harness; neither is defined in terms of the other.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::factorial;
use crate::{PolyQ, Rational, SeriesQ};

/// Largest index the recurrence cache will grow to by default.
pub const DEFAULT_N_LIMIT: u32 = 512;

/// Extra series coefficients computed beyond the requested index, so the
/// generating-function route never reads at the edge of its truncation.
pub const SERIES_HEADROOM: usize = 8;

fn check_u(u: &Rational) -> Result<(), Error> {
    if u.is_one() {
        Err(Error::InvalidParameter(
            "u = 1 is not a valid Frobenius-Euler parameter (e^t - u vanishes at t = 0)".into(),
        ))
    } else {
        Ok(())
    }
}

/// Recurrence-route computation of H_n(u) with a growing cache.
///
/// A context is pinned to one parameter u; values H_0(u) through H_n(u) are
/// filled in on demand and reused. The context is not internally
/// synchronized: share one per thread, or compute through separate contexts,
/// which agree because the values are exact.
#[derive(Clone, Debug)]
pub struct FEContext {
    u: Rational,
    inv_u_minus_1: Rational,
    h: Vec<Rational>,
    limit: u32,
}

impl FEContext {
    /// A context for the parameter u, rejecting u = 1.
    pub fn new(u: Rational) -> Result<Self, Error> {
        FEContext::with_limit(u, DEFAULT_N_LIMIT)
    }

    /// A context with a custom cache growth cap.
    pub fn with_limit(u: Rational, limit: u32) -> Result<Self, Error> {
        check_u(&u)?;
        let inv_u_minus_1 = Rational::one() / (&u - Rational::one());
        Ok(FEContext {
            u,
            inv_u_minus_1,
            h: Vec::new(),
            limit,
        })
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    fn extend_to(&mut self, n: u32) -> Result<(), Error> {
        if n > self.limit {
            return Err(Error::LimitExceeded {
                what: "Frobenius-Euler index n",
                requested: n as u128,
                cap: self.limit as u128,
            });
        }
        for m in self.h.len()..=(n as usize) {
            if m == 0 {
                self.h.push(Rational::one());
                continue;
            }
            let mut sum = Rational::zero();
            let mut binom = BigInt::one();
            for k in 0..m {
                sum += Rational::from_integer(binom.clone()) * &self.h[k];
                // C(m, k+1) from C(m, k); the division is exact.
                binom = binom * BigInt::from(m - k) / BigInt::from(k + 1);
            }
            self.h.push(sum * &self.inv_u_minus_1);
        }
        Ok(())
    }

    /// H_n(u) by the recurrence, cached.
    pub fn number(&mut self, n: u32) -> Result<Rational, Error> {
        self.extend_to(n)?;
        Ok(self.h[n as usize].clone())
    }

    /// H_n(u, x) as a polynomial in x, assembled from the umbral expansion.
    pub fn poly(&mut self, n: u32) -> Result<PolyQ, Error> {
        self.extend_to(n)?;
        let n = n as usize;
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut binom = BigInt::one();
        for j in 0..=n {
            // Coefficient of x^j is C(n, j) H_(n-j)(u).
            coeffs.push(Rational::from_integer(binom.clone()) * &self.h[n - j]);
            if j < n {
                binom = binom * BigInt::from(n - j) / BigInt::from(j + 1);
            }
        }
        Ok(PolyQ::new(coeffs))
    }

    /// H_n(u, x) at a rational point, through [`FEContext::poly`].
    pub fn eval(&mut self, n: u32, x: &Rational) -> Result<Rational, Error> {
        Ok(self.poly(n)?.eval(x))
    }
}

/// The generating function (1 - u) / (e^t - u) as a truncated series.
fn number_gf(u: &Rational, order: usize) -> Result<SeriesQ, Error> {
    let denom = SeriesQ::exp(&Rational::one(), order).add_constant(-u.clone());
    let inv = denom.inverse()?;
    Ok(inv.scale(&(Rational::one() - u)))
}

/// H_0(u) through H_max_n(u) by expanding (1 - u) / (e^t - u).
///
/// The series is built with [`SERIES_HEADROOM`] extra coefficients and the
/// n-th number is n! times the coefficient of t^n.
pub fn numbers_via_gf(u: &Rational, max_n: u32) -> Result<Vec<Rational>, Error> {
    check_u(u)?;
    let order = max_n as usize + SERIES_HEADROOM;
    let gf = number_gf(u, order)?;
    Ok(extract_egf_values(&gf, max_n))
}

/// H_0(u, x) through H_max_n(u, x) at the point x, by expanding
/// (1 - u) e^(xt) / (e^t - u).
pub fn poly_via_gf(u: &Rational, x: &Rational, max_n: u32) -> Result<Vec<Rational>, Error> {
    check_u(u)?;
    let order = max_n as usize + SERIES_HEADROOM;
    let gf = &number_gf(u, order)? * &SeriesQ::exp(x, order);
    Ok(extract_egf_values(&gf, max_n))
}

/// Reads values out of an exponential generating function: entry n is
/// n! times the coefficient of t^n.
fn extract_egf_values(gf: &SeriesQ, max_n: u32) -> Vec<Rational> {
    (0..=max_n)
        .map(|n| gf.coeff(n as usize) * Rational::from_integer(factorial(n)))
        .collect()
}
