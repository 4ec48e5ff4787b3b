//! Polynomial and truncated-series arithmetic.

use feuler::rational::rat;
use feuler::{Error, PolyQ, Rational, SeriesQ};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn poly(coeffs: &[(i64, i64)]) -> PolyQ {
    PolyQ::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
}

#[test]
fn trailing_zero_coefficients_are_trimmed() {
    let p = poly(&[(1, 1), (2, 1), (0, 1), (0, 1)]);
    assert_eq!(p.degree(), Some(1));
    assert_eq!(p.coeffs().len(), 2);
    assert!(PolyQ::new(vec![Rational::zero()]).is_zero());
    assert_eq!(PolyQ::zero().degree(), None);
}

#[test]
fn eval_is_horner_at_rational_points() {
    // 1 - 3x + 2x^2 at x = 5/2 is 6
    let p = poly(&[(1, 1), (-3, 1), (2, 1)]);
    assert_eq!(p.eval(&rat(5, 2)), rat(6, 1));
    assert_eq!(p.eval(&Rational::zero()), Rational::one());
}

#[test]
fn product_of_binomials() {
    let one_plus_x = poly(&[(1, 1), (1, 1)]);
    let square = &one_plus_x * &one_plus_x;
    assert_eq!(square, poly(&[(1, 1), (2, 1), (1, 1)]));
    assert_eq!(one_plus_x.pow(5).coeff(2), rat(10, 1));
}

#[test]
fn compose_affine_substitutes_a_plus_b_x() {
    // p(x) = x^2, p(1 + 2x) = 1 + 4x + 4x^2
    let p = PolyQ::monomial(Rational::one(), 2);
    let q = p.compose_affine(&rat(1, 1), &rat(2, 1));
    assert_eq!(q, poly(&[(1, 1), (4, 1), (4, 1)]));
}

#[test]
fn reflecting_twice_is_the_identity() {
    let p = poly(&[(3, 2), (-1, 3), (0, 1), (7, 1)]);
    let reflected = p.compose_affine(&rat(1, 1), &rat(-1, 1));
    assert_ne!(reflected, p);
    assert_eq!(reflected.compose_affine(&rat(1, 1), &rat(-1, 1)), p);
}

#[test]
fn series_exp_has_reciprocal_factorials() {
    let e = SeriesQ::exp(&Rational::one(), 5);
    assert_eq!(*e.coeff(0), Rational::one());
    assert_eq!(*e.coeff(3), rat(1, 6));
    assert_eq!(*e.coeff(5), rat(1, 120));
    let e2 = SeriesQ::exp(&rat(2, 1), 3);
    assert_eq!(*e2.coeff(3), rat(8, 6));
}

#[test]
fn series_inverse_requires_invertible_constant_term() {
    let t = SeriesQ::from_coeffs(vec![Rational::zero(), Rational::one()]);
    assert!(matches!(t.inverse(), Err(Error::ZeroConstantTerm)));
}

#[test]
fn series_product_truncates_at_the_common_order() {
    let e = SeriesQ::exp(&Rational::one(), 6);
    let inv = SeriesQ::exp(&rat(-1, 1), 6);
    let product = &e * &inv;
    assert_eq!(product, SeriesQ::one(6));
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| rat(n, d))
}

fn poly_strategy(max_degree: usize) -> impl Strategy<Value = PolyQ> {
    prop::collection::vec(rational_strategy(), 0..=max_degree + 1).prop_map(PolyQ::new)
}

proptest! {
    #[test]
    fn eval_commutes_with_multiplication(
        p in poly_strategy(6),
        q in poly_strategy(6),
        x in rational_strategy(),
    ) {
        let direct = (&p * &q).eval(&x);
        prop_assert_eq!(direct, p.eval(&x) * q.eval(&x));
    }

    #[test]
    fn eval_commutes_with_addition(
        p in poly_strategy(6),
        q in poly_strategy(6),
        x in rational_strategy(),
    ) {
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
    }

    #[test]
    fn compose_affine_agrees_with_eval(
        p in poly_strategy(5),
        a in rational_strategy(),
        b in rational_strategy(),
        x in rational_strategy(),
    ) {
        // p(a + b x) evaluated at x equals the composed polynomial at x
        let composed = p.compose_affine(&a, &b);
        prop_assert_eq!(composed.eval(&x), p.eval(&(&a + &b * &x)));
    }

    #[test]
    fn series_times_its_inverse_is_one(p in poly_strategy(5), c in rational_strategy()) {
        // force an invertible constant term
        let constant = if c.is_zero() { Rational::one() } else { c };
        let mut coeffs = vec![constant];
        coeffs.extend(p.coeffs().iter().cloned());
        let a = SeriesQ::from_coeffs(coeffs);
        let inv = a.inverse().unwrap();
        prop_assert_eq!(&a * &inv, SeriesQ::one(a.order()));
    }
}
