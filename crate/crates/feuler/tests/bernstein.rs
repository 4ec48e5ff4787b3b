//! Bernstein basis polynomials: exact coefficients and classical properties.

use feuler::bernstein::{eval, operator, poly, product, BernsteinIndex};
use feuler::rational::rat;
use feuler::{Error, PolyQ, Rational};
use num_traits::{One, Zero};

fn idx(k: u32, n: u32) -> BernsteinIndex {
    BernsteinIndex::new(k, n).unwrap()
}

#[test]
fn index_requires_k_at_most_n() {
    assert!(BernsteinIndex::new(3, 2).is_err());
    assert_eq!(idx(2, 5).k(), 2);
    assert_eq!(idx(2, 5).n(), 5);
}

#[test]
fn basis_polynomial_coefficients() {
    // B_(1,3) = 3x(1-x)^2 = 3x - 6x^2 + 3x^3
    let b13 = poly(idx(1, 3));
    assert_eq!(b13.coeffs(), &[rat(0, 1), rat(3, 1), rat(-6, 1), rat(3, 1)]);
    assert_eq!(b13.to_string(), "3*x^3 - 6*x^2 + 3*x");
    assert_eq!(poly(idx(0, 0)), PolyQ::one());
}

#[test]
fn eval_agrees_with_the_polynomial() {
    for n in 0..=6u32 {
        for k in 0..=n {
            for x in [rat(0, 1), rat(1, 1), rat(1, 2), rat(-2, 3), rat(7, 5)] {
                assert_eq!(eval(idx(k, n), &x), poly(idx(k, n)).eval(&x));
            }
        }
    }
    assert_eq!(eval(idx(1, 3), &rat(1, 2)), rat(3, 8));
}

#[test]
fn endpoint_values_select_the_extreme_indices() {
    for n in 1..=8u32 {
        for k in 0..=n {
            let at_zero = eval(idx(k, n), &Rational::zero());
            let at_one = eval(idx(k, n), &Rational::one());
            assert_eq!(at_zero, if k == 0 { rat(1, 1) } else { rat(0, 1) });
            assert_eq!(at_one, if k == n { rat(1, 1) } else { rat(0, 1) });
        }
    }
}

#[test]
fn partition_of_unity_up_to_degree_twenty() {
    for n in 0..=20u32 {
        let mut sum = PolyQ::zero();
        for k in 0..=n {
            sum = &sum + &poly(idx(k, n));
        }
        assert_eq!(sum, PolyQ::one(), "degree {n}");
    }
}

#[test]
fn reflection_symmetry_as_polynomial_equality_up_to_degree_twenty() {
    // B_(k,n)(x) = B_(n-k,n)(1-x), compared coefficient by coefficient
    for n in 0..=20u32 {
        for k in 0..=n {
            let reflected = poly(idx(n - k, n)).compose_affine(&Rational::one(), &-Rational::one());
            assert_eq!(poly(idx(k, n)), reflected, "k={k} n={n}");
        }
    }
}

#[test]
fn degree_lowering_recursion() {
    // B_(k,n) = (1-x) B_(k,n-1) + x B_(k-1,n-1), with out-of-range terms zero
    let x = PolyQ::x();
    let one_minus_x = &PolyQ::one() - &x;
    for n in 1..=12u32 {
        for k in 0..=n {
            let lower = if k < n {
                poly(idx(k, n - 1))
            } else {
                PolyQ::zero()
            };
            let shifted = if k >= 1 {
                poly(idx(k - 1, n - 1))
            } else {
                PolyQ::zero()
            };
            let combined = &(&one_minus_x * &lower) + &(&x * &shifted);
            assert_eq!(poly(idx(k, n)), combined, "k={k} n={n}");
        }
    }
}

#[test]
fn operator_reproduces_affine_functions() {
    // with samples f(k/n) for f(t) = 3t - 2, the operator returns f(x) exactly
    for n in 1..=10u32 {
        let samples: Vec<Rational> = (0..=n)
            .map(|k| rat(3 * k as i64, n as i64) - rat(2, 1))
            .collect();
        for x in [rat(0, 1), rat(1, 3), rat(1, 2), rat(5, 4)] {
            assert_eq!(
                operator(&samples, n, &x).unwrap(),
                rat(3, 1) * &x - rat(2, 1)
            );
        }
    }
}

#[test]
fn operator_validates_its_inputs() {
    assert!(matches!(
        operator(&[rat(1, 1)], 0, &rat(1, 2)),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        operator(&[rat(1, 1), rat(2, 1)], 2, &rat(1, 2)),
        Err(Error::LengthMismatch { .. })
    ));
}

#[test]
fn closed_form_product_matches_direct_multiplication() {
    // all factor combinations with a shared k and total degree at most 12
    for n1 in 0..=6u32 {
        for n2 in 0..=6u32 {
            for k in 0..=n1.min(n2) {
                let direct = &poly(idx(k, n1)) * &poly(idx(k, n2));
                let closed = product(&[idx(k, n1), idx(k, n2)]).unwrap();
                assert_eq!(closed, direct, "k={k} n1={n1} n2={n2}");
            }
        }
    }
    // a three-factor case
    let triple = product(&[idx(1, 2), idx(1, 3), idx(1, 4)]).unwrap();
    let direct = &(&poly(idx(1, 2)) * &poly(idx(1, 3))) * &poly(idx(1, 4));
    assert_eq!(triple, direct);
}

#[test]
fn product_rejects_mixed_k_and_empty_input() {
    assert!(matches!(
        product(&[idx(1, 2), idx(2, 4)]),
        Err(Error::MixedK { .. })
    ));
    assert!(product(&[]).is_err());
}
