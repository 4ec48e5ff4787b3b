//! p-adic reductions, alternating partial sums, and the fermionic integral.

use feuler::expr::parse_poly;
use feuler::padic::{
    from_rational, integral, integral_exact_via_fe, partial_sum, shift_residual, valuation,
    IntegrandSpec, OddPrime, Valuation,
};
use feuler::rational::rat;
use feuler::{Error, PolyQ, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn p3() -> OddPrime {
    OddPrime::new(3).unwrap()
}

fn spec(u: Rational, poly: &str) -> IntegrandSpec {
    IntegrandSpec::new(u, parse_poly(poly).unwrap()).unwrap()
}

#[test]
fn odd_primes_are_validated() {
    assert!(OddPrime::new(2).is_err());
    assert!(OddPrime::new(9).is_err());
    assert!(OddPrime::new(1).is_err());
    assert!(OddPrime::new(0).is_err());
    for p in [3u64, 5, 7, 11, 13, 47] {
        assert_eq!(OddPrime::new(p).unwrap().get(), p);
    }
}

#[test]
fn valuation_counts_powers_of_p() {
    assert_eq!(valuation(&rat(18, 1), p3()), Valuation::Finite(2));
    assert_eq!(valuation(&rat(2, 9), p3()), Valuation::Finite(-2));
    assert_eq!(valuation(&rat(5, 7), p3()), Valuation::Finite(0));
    assert_eq!(valuation(&Rational::zero(), p3()), Valuation::Infinite);
    assert!(Valuation::Infinite.at_least(100));
    assert!(!Valuation::Finite(1).at_least(2));
}

#[test]
fn rational_reduction_spot_values() {
    // 2/5 mod 3^6: inverse of 5 is 1312, and 2*1312 = 2624 = 292 + 2*3^6... reduced: 292
    let r = from_rational(&rat(2, 5), p3(), 6).unwrap();
    assert_eq!(r.residue().to_string(), "292");
    assert_eq!(r.to_string(), "292 mod 3^6");
    let r = from_rational(&rat(-8, 25), p3(), 6).unwrap();
    assert_eq!(r.residue().to_string(), "58");
}

#[test]
fn reduction_rejects_denominators_divisible_by_p() {
    assert!(matches!(
        from_rational(&rat(1, 3), p3(), 4),
        Err(Error::NonInvertibleDenominator { .. })
    ));
}

#[test]
fn reduce_to_drops_precision_consistently() {
    let wide = from_rational(&rat(2, 5), p3(), 8).unwrap();
    let narrow = wide.reduce_to(6);
    assert_eq!(narrow, from_rational(&rat(2, 5), p3(), 6).unwrap());
}

#[test]
fn partial_sums_match_direct_summation() {
    // sum_{xi < 3} (-1)^xi 4^xi = 1 - 4 + 16 = 13
    let s = spec(rat(4, 1), "1");
    assert_eq!(partial_sum(&s, p3(), 1).unwrap(), rat(13, 1));
    // one more level: sum_{xi < 9} (-1)^xi 4^xi = (1 + 4^9) / 5
    assert_eq!(partial_sum(&s, p3(), 2).unwrap(), rat(52429, 1));
    // a fractional u keeps the sum exact
    let s = spec(rat(1, 4), "x");
    let direct: Rational = (0..9)
        .map(|xi| {
            let sign = if xi % 2 == 0 { 1 } else { -1 };
            rat(sign, 1) * rat(1, 4).pow(xi) * rat(xi as i64, 1)
        })
        .sum();
    assert_eq!(partial_sum(&s, p3(), 2).unwrap(), direct);
}

#[test]
fn integrand_values_include_the_exponential_factor() {
    let s = spec(rat(4, 1), "x^2");
    assert_eq!(s.value_at(0), rat(0, 1));
    assert_eq!(s.value_at(3), rat(64 * 9, 1));
}

#[test]
fn exact_integral_spot_values() {
    assert_eq!(
        integral_exact_via_fe(&spec(rat(2, 1), "1")).unwrap(),
        rat(2, 3)
    );
    assert_eq!(
        integral_exact_via_fe(&spec(rat(2, 1), "1 - x")).unwrap(),
        rat(10, 9)
    );
    assert_eq!(
        integral_exact_via_fe(&spec(rat(2, 1), "x^2")).unwrap(),
        rat(4, 27)
    );
    assert_eq!(
        integral_exact_via_fe(&spec(rat(4, 1), "1")).unwrap(),
        rat(2, 5)
    );
    assert_eq!(
        integral_exact_via_fe(&spec(rat(4, 1), "x")).unwrap(),
        rat(-8, 25)
    );
    assert_eq!(
        integral_exact_via_fe(&spec(rat(4, 1), "1 - x")).unwrap(),
        rat(18, 25)
    );
}

#[test]
fn exact_integral_rejects_the_pole() {
    assert!(integral_exact_via_fe(&spec(rat(-1, 1), "x")).is_err());
}

#[test]
fn numeric_integral_stabilizes_to_the_closed_form() {
    for (u, poly) in [(4, "1"), (4, "x"), (7, "x^2"), (7, "(1 - x)^2")] {
        let s = spec(rat(u, 1), poly);
        let numeric = integral(&s, p3(), 8).unwrap();
        let exact = integral_exact_via_fe(&s).unwrap();
        assert_eq!(
            numeric,
            from_rational(&exact, p3(), 8).unwrap(),
            "u={u} poly={poly}"
        );
    }
}

#[test]
fn numeric_integral_requires_a_unit_near_one() {
    // not a 3-adic unit
    let err = integral(&spec(rat(3, 1), "1"), p3(), 4).unwrap_err();
    assert!(err.to_string().contains("unit"), "{err}");
    // a unit, but |u - 1|_3 = 1, so u^xi has no limit
    let err = integral(&spec(rat(2, 1), "1"), p3(), 4).unwrap_err();
    assert!(err.to_string().contains("|u - 1|"), "{err}");
}

#[test]
fn numeric_integral_rejects_coefficients_with_p_in_the_denominator() {
    let s = IntegrandSpec::new(rat(4, 1), PolyQ::constant(rat(1, 3))).unwrap();
    assert!(matches!(
        integral(&s, p3(), 4),
        Err(Error::NonInvertibleDenominator { .. })
    ));
}

#[test]
fn shift_residual_vanishes_on_fixed_cases() {
    for (u, p, level, poly) in [
        (rat(4, 1), 3u64, 2u32, "x^3"),
        (rat(7, 1), 5, 1, "1 + x"),
        (rat(1, 1), 7, 1, "x"),
        (rat(-2, 3), 3, 3, "x^2 - 5"),
    ] {
        let s = IntegrandSpec::new(u, parse_poly(poly).unwrap()).unwrap();
        let residual = shift_residual(&s, OddPrime::new(p).unwrap(), level).unwrap();
        assert!(residual.is_zero(), "u, p={p}, level={level}, poly={poly}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shift_residual_vanishes_on_random_integrands(
        numer in -20i64..=20,
        denom in 1i64..=10,
        coeffs in prop::collection::vec((-30i64..=30, 1i64..=12), 0..=5),
        p_choice in 0usize..3,
        level in 1u32..=3,
    ) {
        let u = rat(numer, denom);
        prop_assume!(!u.is_zero());
        let poly = PolyQ::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect());
        let s = IntegrandSpec::new(u, poly).unwrap();
        let p = OddPrime::new([3, 5, 7][p_choice]).unwrap();
        let residual = shift_residual(&s, p, level).unwrap();
        prop_assert_eq!(residual, Rational::zero());
    }
}
