//! Frobenius-Euler numbers and polynomials along both routes.

use feuler::frobenius::{numbers_via_gf, poly_via_gf, FEContext};
use feuler::rational::rat;
use feuler::{Error, Rational};
use num_traits::One;

fn numbers(u: Rational, max: u32) -> Vec<Rational> {
    let mut ctx = FEContext::new(u).unwrap();
    (0..=max).map(|n| ctx.number(n).unwrap()).collect()
}

#[test]
fn recurrence_spot_values() {
    assert_eq!(
        numbers(rat(2, 1), 3),
        vec![rat(1, 1), rat(1, 1), rat(3, 1), rat(13, 1)]
    );
    assert_eq!(
        numbers(rat(-1, 2), 2),
        vec![rat(1, 1), rat(-2, 3), rat(2, 9)]
    );
    assert_eq!(numbers(rat(-2, 1), 2)[2], rat(-1, 9));
}

#[test]
fn series_route_spot_values() {
    let h = numbers_via_gf(&rat(2, 1), 3).unwrap();
    assert_eq!(h, vec![rat(1, 1), rat(1, 1), rat(3, 1), rat(13, 1)]);
}

#[test]
fn routes_agree_on_mixed_parameters() {
    for u in [rat(3, 1), rat(5, 3), rat(-1, 2), rat(-1, 1), rat(7, 11)] {
        let via_series = numbers_via_gf(&u, 20).unwrap();
        assert_eq!(numbers(u, 20), via_series);
    }
}

#[test]
fn reduces_to_euler_polynomial_values_at_minus_one() {
    // H_n(-1) is the value at 0 of the n-th Euler polynomial
    let h = numbers(rat(-1, 1), 4);
    assert_eq!(
        h,
        vec![rat(1, 1), rat(-1, 2), rat(0, 1), rat(1, 4), rat(0, 1)]
    );
}

#[test]
fn polynomial_evaluation_spot_values() {
    let mut ctx = FEContext::new(rat(-1, 2)).unwrap();
    assert_eq!(ctx.eval(1, &rat(2, 1)).unwrap(), rat(4, 3));
    assert_eq!(ctx.eval(2, &rat(2, 1)).unwrap(), rat(14, 9));
}

#[test]
fn polynomial_shape_is_monic_with_constant_term_h_n() {
    let mut ctx = FEContext::new(rat(5, 3)).unwrap();
    for n in 0..=6u32 {
        let p = ctx.poly(n).unwrap();
        assert_eq!(p.degree(), Some(n as usize));
        assert_eq!(p.coeff(n as usize), Rational::one());
        assert_eq!(p.coeff(0), ctx.number(n).unwrap());
    }
}

#[test]
fn evaluating_at_zero_recovers_the_numbers() {
    let mut ctx = FEContext::new(rat(-3, 7)).unwrap();
    for n in 0..=8u32 {
        assert_eq!(ctx.eval(n, &rat(0, 1)).unwrap(), ctx.number(n).unwrap());
    }
}

#[test]
fn gf_polynomial_route_matches_context_eval() {
    let (u, x) = (rat(3, 1), rat(1, 2));
    let via_gf = poly_via_gf(&u, &x, 10).unwrap();
    let mut ctx = FEContext::new(u).unwrap();
    for (n, value) in via_gf.iter().enumerate() {
        assert_eq!(ctx.eval(n as u32, &x).unwrap(), *value);
    }
}

#[test]
fn parameter_one_is_rejected_on_both_routes() {
    assert!(matches!(
        FEContext::new(rat(1, 1)),
        Err(Error::InvalidParameter(_))
    ));
    assert!(numbers_via_gf(&rat(1, 1), 4).is_err());
}

#[test]
fn index_limit_is_enforced() {
    let mut ctx = FEContext::with_limit(rat(2, 1), 16).unwrap();
    assert!(ctx.number(16).is_ok());
    assert!(matches!(ctx.number(17), Err(Error::LimitExceeded { .. })));
}
