//! Fermionic p-adic integration of u^eta * poly(eta) against mu_(-1).
//!
//! For an odd prime p, the fermionic integral of f over the p-adic integers
//! is the limit of alternating partial sums
//!
//! ```text
//! I(f) = lim_N  S_N(f),    S_N(f) = sum_{xi=0}^{p^N - 1} (-1)^xi f(xi).
//! ```
//!
//! Everything here keeps two views of that limit. The numeric route computes
//! the exact rational partial sums S_N and watches their residues stabilize
//! mod p^M; the closed-form route expresses the same integral through
//! Frobenius-Euler numbers, since for f(eta) = u^eta * eta^m the limit is
//! (2 / (u + 1)) H_m(-1/u). The identity harness compares the two and this
//! module never substitutes one for the other.
//!
//! The shift identity I(f_1) + I(f) = 2 f(0), with f_1(eta) = f(eta + 1),
//! has a finite-level form: for every level N (p odd, so p^N is odd),
//!
//! ```text
//! S_N(f_1) + S_N(f) = f(0) + f(p^N),
//! ```
//!
//! because the two alternating sums telescope. [`shift_residual`] returns
//! the exact difference of the two sides, which is zero for every N, not
//! just in the limit.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::Error;
use crate::frobenius::FEContext;
use crate::{PolyQ, Rational};

/// Default cap on the number of terms any partial sum may expand.
pub const DEFAULT_TERM_CAP: u64 = 1_000_000;

/// An odd prime, validated at construction so the integration routines can
/// take primality for granted.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct OddPrime(u64);

impl OddPrime {
    /// Accepts an odd prime; rejects 2, composites, and anything below 3.
    pub fn new(p: u64) -> Result<Self, Error> {
        if p < 3 || p.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "p = {p} is not an odd prime"
            )));
        }
        let mut d = 3;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::InvalidParameter(format!(
                    "p = {p} is not an odd prime"
                )));
            }
            d += 2;
        }
        Ok(OddPrime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The p-adic valuation of a rational, with a distinct marker for v_p(0).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    /// True when the valuation is at least `bound`; infinity passes every
    /// bound.
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Valuation::Infinite => true,
            Valuation::Finite(v) => v >= bound,
        }
    }
}

fn count_factor(x: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut x = x.clone();
    let mut count = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return count;
        }
        x = q;
        count += 1;
    }
}

/// v_p(q): the exponent of p in the numerator minus the exponent in the
/// denominator, or [`Valuation::Infinite`] for q = 0.
pub fn valuation(q: &Rational, p: OddPrime) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    Valuation::Finite(count_factor(q.numer(), p.0) - count_factor(q.denom(), p.0))
}

/// A p-adic integer known mod p^precision.
///
/// Invariant: 0 <= residue < p^precision and precision >= 1. Arithmetic
/// carries the minimum of the operand precisions, never more than either
/// side actually knows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicInt {
    p: u64,
    precision: u32,
    residue: BigUint,
}

impl PadicInt {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    /// p^precision.
    pub fn modulus(&self) -> BigUint {
        BigUint::from(self.p).pow(self.precision)
    }

    /// Forgets information down to a smaller precision.
    pub fn reduce_to(&self, precision: u32) -> PadicInt {
        assert!(
            (1..=self.precision).contains(&precision),
            "can only reduce to a known precision"
        );
        let modulus = BigUint::from(self.p).pow(precision);
        PadicInt {
            p: self.p,
            precision,
            residue: &self.residue % modulus,
        }
    }

    fn binop(&self, rhs: &PadicInt, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> PadicInt {
        assert_eq!(self.p, rhs.p, "p-adic arithmetic requires a common prime");
        let precision = self.precision.min(rhs.precision);
        let modulus = BigInt::from(BigUint::from(self.p).pow(precision));
        let raw = f(
            &BigInt::from(self.residue.clone()),
            &BigInt::from(rhs.residue.clone()),
        );
        PadicInt {
            p: self.p,
            precision,
            residue: raw
                .mod_floor(&modulus)
                .to_biguint()
                .expect("mod_floor of a positive modulus is non-negative"),
        }
    }
}

impl std::ops::Add for &PadicInt {
    type Output = PadicInt;

    fn add(self, rhs: &PadicInt) -> PadicInt {
        self.binop(rhs, |a, b| a + b)
    }
}

impl std::ops::Sub for &PadicInt {
    type Output = PadicInt;

    fn sub(self, rhs: &PadicInt) -> PadicInt {
        self.binop(rhs, |a, b| a - b)
    }
}

impl std::ops::Mul for &PadicInt {
    type Output = PadicInt;

    fn mul(self, rhs: &PadicInt) -> PadicInt {
        self.binop(rhs, |a, b| a * b)
    }
}

impl fmt::Display for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.residue, self.p, self.precision)
    }
}

fn modular_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let gcd = a.extended_gcd(modulus);
    if !gcd.gcd.is_one() {
        return None;
    }
    Some(gcd.x.mod_floor(modulus))
}

/// Reduces a rational mod p^precision: numerator times the modular inverse
/// of the denominator. Fails when p divides the denominator.
pub fn from_rational(q: &Rational, p: OddPrime, precision: u32) -> Result<PadicInt, Error> {
    if precision == 0 {
        return Err(Error::InvalidParameter(
            "p-adic precision must be at least 1".into(),
        ));
    }
    let modulus = BigInt::from(p.0).pow(precision);
    let inv = modular_inverse(&q.denom().mod_floor(&modulus), &modulus).ok_or_else(|| {
        Error::NonInvertibleDenominator {
            denom: q.denom().to_string(),
            p: p.0,
            precision,
        }
    })?;
    let residue = (q.numer() * inv).mod_floor(&modulus);
    Ok(PadicInt {
        p: p.0,
        precision,
        residue: residue
            .to_biguint()
            .expect("mod_floor of a positive modulus is non-negative"),
    })
}

/// The integrand u^eta * poly(eta) with u != 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegrandSpec {
    u: Rational,
    poly: PolyQ,
}

impl IntegrandSpec {
    pub fn new(u: Rational, poly: PolyQ) -> Result<Self, Error> {
        if u.is_zero() {
            return Err(Error::InvalidParameter(
                "integrand base u must be nonzero".into(),
            ));
        }
        Ok(IntegrandSpec { u, poly })
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn poly(&self) -> &PolyQ {
        &self.poly
    }

    /// f(xi) as an exact rational, for an integer point xi.
    pub fn value_at(&self, xi: u64) -> Rational {
        let point = Rational::from_integer(BigInt::from(xi));
        let u_pow = Rational::new(Pow::pow(self.u.numer(), xi), Pow::pow(self.u.denom(), xi));
        u_pow * self.poly.eval(&point)
    }
}

/// Incremental alternating sum over 0 <= xi < bound, resumable so higher
/// levels extend lower ones instead of starting over.
///
/// The running value is held as a single big-integer numerator over the
/// known denominator b^(k-1) * d, where u = a/b in lowest terms, d is the
/// common denominator of the polynomial coefficients, and k is the number
/// of terms taken so far. Rational arithmetic in this loop would reduce by
/// a gcd on every addition, which is quadratic in the size of u^k; the
/// integer form needs no reduction at all.
struct AlternatingSum {
    /// Numerator and denominator of u in lowest terms.
    a: BigInt,
    b: BigInt,
    /// Common denominator of the polynomial coefficients.
    d: BigInt,
    /// Coefficients of d * poly, all integers.
    scaled_coeffs: Vec<BigInt>,
    next_xi: u64,
    /// a^next_xi.
    a_pow: BigInt,
    /// The sum over xi < next_xi, scaled by b^(next_xi - 1) * d.
    numer: BigInt,
}

impl AlternatingSum {
    fn new(spec: &IntegrandSpec) -> Self {
        let mut d = BigInt::one();
        for c in spec.poly.coeffs() {
            d = d.lcm(c.denom());
        }
        let scaled_coeffs = spec
            .poly
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&d / c.denom()))
            .collect();
        AlternatingSum {
            a: spec.u.numer().clone(),
            b: spec.u.denom().clone(),
            d,
            scaled_coeffs,
            next_xi: 0,
            a_pow: BigInt::one(),
            numer: BigInt::zero(),
        }
    }

    /// d * poly(xi), an exact integer, by Horner's rule.
    fn scaled_poly_value(&self, xi: u64) -> BigInt {
        let x = BigInt::from(xi);
        let mut acc = BigInt::zero();
        for c in self.scaled_coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    fn extend_to(&mut self, bound: u64) {
        while self.next_xi < bound {
            let xi = self.next_xi;
            // Rescale the previous sum from b^(xi-1) to b^xi before adding
            // the term a^xi * P(xi); the very first term needs no rescale.
            if xi > 0 && !self.b.is_one() {
                self.numer *= &self.b;
            }
            let term = &self.a_pow * self.scaled_poly_value(xi);
            if xi.is_multiple_of(2) {
                self.numer += term;
            } else {
                self.numer -= term;
            }
            self.a_pow *= &self.a;
            self.next_xi += 1;
        }
    }

    /// The exact partial sum over xi < next_xi as a rational.
    fn value(&self) -> Rational {
        if self.next_xi == 0 {
            return Rational::zero();
        }
        let denom = Pow::pow(&self.b, self.next_xi - 1) * &self.d;
        if denom.is_one() {
            // Skip the reduction: gcd against a huge numerator is the slow
            // path this type exists to avoid.
            Rational::from_integer(self.numer.clone())
        } else {
            Rational::new(self.numer.clone(), denom)
        }
    }

    /// The partial sum reduced mod p^precision without building the
    /// rational: the numerator reduces in one division and the denominator
    /// b^(k-1) * d inverts by modular exponentiation.
    fn residue(&self, p: OddPrime, precision: u32) -> Result<PadicInt, Error> {
        let modulus = BigInt::from(p.0).pow(precision);
        let exponent = BigInt::from(self.next_xi.saturating_sub(1));
        let denom = (self.b.modpow(&exponent, &modulus) * &self.d).mod_floor(&modulus);
        let inv =
            modular_inverse(&denom, &modulus).ok_or_else(|| Error::NonInvertibleDenominator {
                denom: denom.to_string(),
                p: p.0,
                precision,
            })?;
        let residue = (self.numer.mod_floor(&modulus) * inv).mod_floor(&modulus);
        Ok(PadicInt {
            p: p.0,
            precision,
            residue: residue
                .to_biguint()
                .expect("mod_floor of a positive modulus is non-negative"),
        })
    }
}

fn checked_term_count(p: OddPrime, level: u32, cap: u64) -> Result<u64, Error> {
    let terms = (p.0 as u128).checked_pow(level).unwrap_or(u128::MAX);
    if terms > cap as u128 {
        return Err(Error::LimitExceeded {
            what: "partial sum term count p^N",
            requested: terms,
            cap: cap as u128,
        });
    }
    Ok(terms as u64)
}

/// The exact rational partial sum S_N = sum_{xi < p^N} (-1)^xi u^xi poly(xi),
/// with the default term cap.
pub fn partial_sum(spec: &IntegrandSpec, p: OddPrime, level: u32) -> Result<Rational, Error> {
    partial_sum_capped(spec, p, level, DEFAULT_TERM_CAP)
}

/// [`partial_sum`] with an explicit cap on p^N.
pub fn partial_sum_capped(
    spec: &IntegrandSpec,
    p: OddPrime,
    level: u32,
    cap: u64,
) -> Result<Rational, Error> {
    let terms = checked_term_count(p, level, cap)?;
    let mut sum = AlternatingSum::new(spec);
    sum.extend_to(terms);
    Ok(sum.value())
}

fn check_integrand_for_limit(spec: &IntegrandSpec, p: OddPrime) -> Result<(), Error> {
    if valuation(&spec.u, p) != Valuation::Finite(0) {
        return Err(Error::InvalidParameter(format!(
            "u = {} is not a {p}-adic unit",
            spec.u
        )));
    }
    let distance = &spec.u - Rational::one();
    if !valuation(&distance, p).at_least(1) {
        return Err(Error::InvalidParameter(format!(
            "u = {} does not satisfy |u - 1|_{p} < 1, so u^xi has no {p}-adic limit",
            spec.u
        )));
    }
    Ok(())
}

/// The fermionic integral as a p-adic number mod p^precision, by watching
/// partial sum residues: levels are expanded until two consecutive
/// increments vanish mod p^precision, with the default term cap.
pub fn integral(spec: &IntegrandSpec, p: OddPrime, precision: u32) -> Result<PadicInt, Error> {
    integral_capped(spec, p, precision, DEFAULT_TERM_CAP)
}

/// [`integral`] with an explicit cap on the number of expanded terms.
pub fn integral_capped(
    spec: &IntegrandSpec,
    p: OddPrime,
    precision: u32,
    cap: u64,
) -> Result<PadicInt, Error> {
    if precision == 0 {
        return Err(Error::InvalidParameter(
            "p-adic precision must be at least 1".into(),
        ));
    }
    check_integrand_for_limit(spec, p)?;
    for c in spec.poly.coeffs() {
        if count_factor(c.denom(), p.0) != 0 {
            return Err(Error::NonInvertibleDenominator {
                denom: c.denom().to_string(),
                p: p.0,
                precision,
            });
        }
    }
    let mut sum = AlternatingSum::new(spec);
    let mut history: Vec<BigUint> = Vec::new();
    for level in 1.. {
        let terms = match checked_term_count(p, level, cap) {
            Ok(t) => t,
            Err(_) => {
                return Err(Error::NoConvergence {
                    p: p.0,
                    precision,
                    cap,
                })
            }
        };
        sum.extend_to(terms);
        let residue = sum.residue(p, precision)?;
        history.push(residue.residue().clone());
        // Stable means three consecutive levels with the same residue.
        let len = history.len();
        if len >= 3 && history[len - 1] == history[len - 2] && history[len - 2] == history[len - 3]
        {
            return Ok(residue);
        }
    }
    unreachable!("the level loop either returns or errors")
}

/// The same integral in closed form: for f(eta) = u^eta * poly(eta) with
/// poly = sum_m c_m eta^m,
///
/// ```text
/// I(f) = (2 / (u + 1)) * sum_m c_m H_m(-1/u),
/// ```
///
/// an exact rational. Requires u outside {0, -1}: at u = -1 the closed form
/// has a pole and the corresponding limit does not exist.
pub fn integral_exact_via_fe(spec: &IntegrandSpec) -> Result<Rational, Error> {
    let minus_one = -Rational::one();
    if spec.u == minus_one {
        return Err(Error::InvalidParameter(
            "u = -1: the closed form 2/(u + 1) has a pole".into(),
        ));
    }
    let v = -Rational::one() / &spec.u;
    let mut ctx = FEContext::new(v)?;
    let mut acc = Rational::zero();
    for (m, c) in spec.poly.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc += c * ctx.number(m as u32)?;
    }
    let two = Rational::from_integer(2.into());
    Ok(two / (&spec.u + Rational::one()) * acc)
}

/// The exact finite-level residual of the shift identity,
///
/// ```text
/// S_N(f_1) + S_N(f) - f(0) - f(p^N),    f_1(eta) = f(eta + 1),
/// ```
///
/// which telescopes to zero for every level N because p^N is odd. Kept as a
/// computation rather than a constant so the telescoping is actually checked.
pub fn shift_residual(spec: &IntegrandSpec, p: OddPrime, level: u32) -> Result<Rational, Error> {
    let shifted = IntegrandSpec::new(
        spec.u.clone(),
        spec.poly
            .compose_affine(&Rational::one(), &Rational::one())
            .scale(&spec.u),
    )?;
    let boundary = checked_term_count(p, level, DEFAULT_TERM_CAP)?;
    let s_shifted = partial_sum(&shifted, p, level)?;
    let s_plain = partial_sum(spec, p, level)?;
    let f_zero = spec.value_at(0);
    let f_boundary = spec.value_at(boundary);
    Ok(s_shifted + s_plain - f_zero - f_boundary)
}
