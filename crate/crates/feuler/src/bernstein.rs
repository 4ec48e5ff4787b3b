//! Bernstein basis polynomials with exact rational coefficients.
//!
//! The degree-n Bernstein basis polynomial with index k is
//!
//! ```text
//! B_(k,n)(x) = C(n, k) x^k (1 - x)^(n - k),    0 <= k <= n.
//! ```
//!
//! The basis is a partition of unity, satisfies the reflection symmetry
//! B_(k,n)(x) = B_(n-k,n)(1 - x), and products sharing a common index k
//! collapse to a single scaled basis-like form; those facts are exercised by
//! the test suite rather than assumed.

use num_traits::One;

use crate::error::Error;
use crate::rational::binomial;
use crate::{PolyQ, Rational};

/// A valid basis position: the pair (k, n) with 0 <= k <= n.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct BernsteinIndex {
    k: u32,
    n: u32,
}

impl BernsteinIndex {
    /// Checks 0 <= k <= n at construction, so every held index is valid.
    pub fn new(k: u32, n: u32) -> Result<Self, Error> {
        if k > n {
            return Err(Error::InvalidIndex { k, n });
        }
        Ok(BernsteinIndex { k, n })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// B_(k,n) as a dense polynomial, by binomial expansion of (1 - x)^(n - k):
/// the coefficient of x^(k+l) is C(n, k) C(n-k, l) (-1)^l.
pub fn poly(idx: BernsteinIndex) -> PolyQ {
    let (k, n) = (idx.k as usize, idx.n as usize);
    let head = binomial(idx.n, idx.k);
    let mut coeffs = vec![Rational::from_integer(0.into()); n + 1];
    for l in 0..=(n - k) {
        let mut c = &head * binomial(idx.n - idx.k, l as u32);
        if l % 2 == 1 {
            c = -c;
        }
        coeffs[k + l] = Rational::from_integer(c);
    }
    PolyQ::new(coeffs)
}

/// B_(k,n)(x) by the product form C(n, k) x^k (1 - x)^(n - k), kept separate
/// from [`poly`] so the two can be checked against each other.
pub fn eval(idx: BernsteinIndex, x: &Rational) -> Rational {
    let one_minus_x = Rational::one() - x;
    let mut acc = Rational::from_integer(binomial(idx.n, idx.k));
    for _ in 0..idx.k {
        acc *= x;
    }
    for _ in 0..(idx.n - idx.k) {
        acc *= &one_minus_x;
    }
    acc
}

/// The degree-n Bernstein operator applied to sampled values: with
/// samples[k] = f(k/n), returns sum_k f(k/n) B_(k,n)(x). The degree must be
/// positive and the sample vector must have exactly n + 1 entries.
pub fn operator(samples: &[Rational], n: u32, x: &Rational) -> Result<Rational, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "Bernstein operator degree must be positive".into(),
        ));
    }
    if samples.len() != n as usize + 1 {
        return Err(Error::LengthMismatch {
            expected: n as usize + 1,
            got: samples.len(),
        });
    }
    let mut acc = Rational::from_integer(0.into());
    for (k, sample) in samples.iter().enumerate() {
        acc += sample * eval(BernsteinIndex::new(k as u32, n).expect("k <= n"), x);
    }
    Ok(acc)
}

/// The product of Bernstein basis polynomials sharing one index k, in closed
/// form: for degrees n_1 .. n_s,
///
/// ```text
/// prod_i B_(k,n_i)(x) = (prod_i C(n_i, k)) x^(s*k) (1 - x)^(sum n_i - s*k),
/// ```
///
/// expanded to dense coefficients. The factors must all carry the same k;
/// the list must be non-empty.
pub fn product(indices: &[BernsteinIndex]) -> Result<PolyQ, Error> {
    let first = indices.first().ok_or_else(|| {
        Error::InvalidParameter("Bernstein product needs at least one index".into())
    })?;
    for idx in indices {
        if idx.k != first.k {
            return Err(Error::MixedK {
                first: first.k,
                second: idx.k,
            });
        }
    }
    let k = first.k as usize;
    let s = indices.len();
    let total: usize = indices.iter().map(|idx| idx.n as usize).sum();
    let m = total - s * k;
    let mut head = num_bigint::BigInt::from(1);
    for idx in indices {
        head *= binomial(idx.n, idx.k);
    }
    let mut coeffs = vec![Rational::from_integer(0.into()); total + 1];
    for l in 0..=m {
        let mut c = &head * binomial(m as u32, l as u32);
        if l % 2 == 1 {
            c = -c;
        }
        coeffs[s * k + l] = Rational::from_integer(c);
    }
    Ok(PolyQ::new(coeffs))
}
