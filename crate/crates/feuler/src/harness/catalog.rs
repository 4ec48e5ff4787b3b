//! The claim catalog: every identity the harness checks.
//!
//! Routing discipline: where a Frobenius-Euler value appears on both sides
//! of a claim, the left side computes it through the recurrence route
//! ([`FEContext`]) and the right side through the generating-function route
//! ([`frobenius::numbers_via_gf`] / [`frobenius::poly_via_gf`]), so the two
//! sides never share an intermediate value. Integral left sides go through
//! the closed form on the expanded integrand, or through numeric partial
//! sums where the claim is about the limit itself.
//!
//! Each route memoizes its own values per parameter; the two routes never
//! read each other's cache.
//!
//! Claims carry no expected status. Whether an identity holds is decided by
//! running it; several catalog entries are included precisely because the
//! sweep refutes them, alongside corrected forms that it verifies.

use std::cell::RefCell;
use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::grid::{Grid, FOLD_NAMES};
use super::{Claim, EvalOutcome, ParamPoint, ParamValue, Value};
use crate::bernstein::{self, BernsteinIndex};
use crate::frobenius::{self, FEContext};
use crate::padic::{self, IntegrandSpec, OddPrime};
use crate::rational::binomial;
use crate::{PolyQ, Rational};

/// Every claim the harness knows, in catalog order. Reports sort by id, so
/// the order here does not affect output.
pub fn claim_catalog() -> Vec<Claim> {
    vec![
        Claim {
            id: "C1",
            statement: "generating-function values satisfy the recurrence \
                        (u - 1) H_n(u) = sum_{k=0}^{n-1} C(n,k) H_k(u) with H_0(u) = 1",
            enumerate: enum_n_u,
            domain_check: domain_u_not_one,
            branch: no_branch,
            lhs: c1_lhs,
            rhs: c1_rhs,
        },
        Claim {
            id: "C2",
            statement: "the p-adic limit of alternating partial sums of u^eta (x + eta)^n \
                        equals (2/(u+1)) H_n(-1/u, x) mod p^precision",
            enumerate: enum_padic,
            domain_check: domain_integral_u,
            branch: no_branch,
            lhs: c2_lhs,
            rhs: c2_rhs,
        },
        Claim {
            id: "C3",
            statement: "H_n(u, x) via the umbral expansion equals H_n(u, x) via the \
                        generating function",
            enumerate: enum_n_x_u,
            domain_check: domain_u_not_one,
            branch: no_branch,
            lhs: c3_lhs,
            rhs: c3_rhs,
        },
        Claim {
            id: "C4",
            statement: "H_n(-1/u, 1 - x) = (-1)^n H_n(-1/u, x)",
            enumerate: enum_n_x_u,
            domain_check: domain_reciprocal_u,
            branch: no_branch,
            lhs: c4_lhs,
            rhs: c4_rhs,
        },
        Claim {
            id: "C4-fixed",
            statement: "H_n(-1/u, 1 - x) = (-1)^n H_n(-u, x)",
            enumerate: enum_n_x_u,
            domain_check: domain_reciprocal_u,
            branch: no_branch,
            lhs: c4_lhs,
            rhs: c4_fixed_rhs,
        },
        Claim {
            id: "C5",
            statement: "u^2 H_n(-1/u, 2) = u^2 + u + H_n(-1/u) for n >= 1",
            enumerate: enum_n_u,
            domain_check: domain_positive_n_reciprocal_u,
            branch: no_branch,
            lhs: c5_lhs,
            rhs: c5_rhs,
        },
        Claim {
            id: "C6",
            statement: "I(u^eta (1 - eta)^n) = (2/(u+1)) H_n(-1/u, 2)",
            enumerate: enum_n_u,
            domain_check: domain_integral_u,
            branch: no_branch,
            lhs: c6_lhs,
            rhs: c6_rhs,
        },
        Claim {
            id: "C6-fixed",
            statement: "I(u^eta (1 - eta)^n) = (2/(u+1)) H_n(-u, 2)",
            enumerate: enum_n_u,
            domain_check: domain_integral_u,
            branch: no_branch,
            lhs: c6_lhs,
            rhs: c6_fixed_rhs,
        },
        Claim {
            id: "C7",
            statement: "I(u^eta (1 - eta)^n) = 2/(u+1) + 2/(u^2+u) + (2/(u^3+u)) H_n(-1/u) \
                        for n >= 1",
            enumerate: enum_n_u,
            domain_check: domain_positive_n_integral_u,
            branch: no_branch,
            lhs: c6_lhs,
            rhs: c7_rhs,
        },
        Claim {
            id: "C7-fixed",
            statement: "I(u^eta (1 - eta)^n) = (2/(u+1)) (1 + u + u^2 H_n(-u)) for n >= 1",
            enumerate: enum_n_u,
            domain_check: domain_positive_n_integral_u,
            branch: no_branch,
            lhs: c6_lhs,
            rhs: c7_fixed_rhs,
        },
        Claim {
            id: "C8a",
            statement: "I(B_(k,n)(eta) u^eta) = (2/(u+1)) C(n,k) \
                        sum_{l=0}^{n-k} C(n-k,l) (-1)^l H_(k+l)(-1/u)",
            enumerate: enum_n_k_u,
            domain_check: domain_integral_u,
            branch: no_branch,
            lhs: c8a_lhs,
            rhs: c8a_rhs,
        },
        Claim {
            id: "C8b",
            statement: "sum_{l=0}^{n-k} C(n-k,l) (-1)^l H_(k+l)(-1/u) equals \
                        1 + 1/u + H_n(-1/u)/u^2 when k = 0, and \
                        sum_{l=0}^{k} C(k,l) (-1)^(k+l) (1 + 1/u + H_(n-l)(-1/u)/u^2) \
                        when k > 0, for n > k",
            enumerate: enum_n_k_u,
            domain_check: domain_c8b,
            branch: branch_k,
            lhs: c8b_lhs,
            rhs: c8b_rhs,
        },
        Claim {
            id: "C9",
            statement: "I(B_(k,n1) B_(k,n2) u^eta) equals \
                        2/(u+1) + 2/(u^2+u) + (2/(u^3+u)) H_(n1+n2)(-1/u) when k = 0, and \
                        C(n1,k) C(n2,k) sum_{l=0}^{2k} C(2k,l) (-1)^(2k+l) of the same form \
                        in H_(n1+n2-l)(-1/u) when k > 0, for n1 + n2 > 2k",
            enumerate: enum_pair_k_u,
            domain_check: domain_pair_integral,
            branch: branch_k,
            lhs: c9_lhs,
            rhs: c9_rhs,
        },
        Claim {
            id: "C10a",
            statement: "I(B_(k,n1) B_(k,n2) u^eta) = (2/(u+1)) C(n1,k) C(n2,k) \
                        sum_{l=0}^{n1+n2-2k} C(n1+n2-2k,l) (-1)^l H_(2k+l)(-1/u) \
                        for n1 + n2 > 2k",
            enumerate: enum_pair_k_u,
            domain_check: domain_pair_integral,
            branch: no_branch,
            lhs: c9_lhs,
            rhs: c10a_rhs,
        },
        Claim {
            id: "C10b",
            statement: "sum_{l=0}^{n1+n2-2k} C(n1+n2-2k,l) (-1)^l H_(2k+l)(-1/u) equals \
                        1 + 1/u + H_(n1+n2)(-1/u)/u^2 when k = 0, and \
                        sum_{l=0}^{2k} C(2k,l) (-1)^(2k+l) (1 + 1/u + H_(n1+n2-l)(-1/u)/u^2) \
                        when k > 0, for n1 + n2 > 2k",
            enumerate: enum_pair_k_u,
            domain_check: domain_pair_reciprocal,
            branch: branch_k,
            lhs: c10b_lhs,
            rhs: c10b_rhs,
        },
        Claim {
            id: "C11",
            statement: "I(prod_i B_(k,ni) u^eta) equals \
                        2/(u+1) + 2/(u^2+u) + (2/(u^3+u)) H_(sum n)(-1/u) when k = 0, and \
                        (prod_i C(ni,k)) sum_{l=0}^{sk} C(sk,l) (-1)^(sk+l) of the same form \
                        in H_(sum n - l)(-1/u) when k > 0, for sum n > s k",
            enumerate: enum_sfold,
            domain_check: domain_sfold_integral,
            branch: branch_k,
            lhs: c11_lhs,
            rhs: c11_rhs,
        },
        Claim {
            id: "C12a",
            statement: "I(prod_i B_(k,ni) u^eta) = (2/(u+1)) (prod_i C(ni,k)) \
                        sum_{l=0}^{sum n - sk} C(sum n - sk, l) (-1)^l H_(sk+l)(-1/u) \
                        for sum n > s k",
            enumerate: enum_sfold,
            domain_check: domain_sfold_integral,
            branch: no_branch,
            lhs: c11_lhs,
            rhs: c12a_rhs,
        },
        Claim {
            id: "C12b",
            statement: "u^2 sum_{l=0}^{sum n - sk} C(sum n - sk, l) (-1)^l H_(sk+l)(-1/u) \
                        equals u^2 + u + H_(sum n)(-1/u) when k = 0, and \
                        sum_{l=0}^{sk} C(sk,l) (-1)^(sk+l) (u^2 + u + H_(sum n - l)(-1/u)) \
                        when k > 0, for sum n > s k",
            enumerate: enum_sfold,
            domain_check: domain_sfold_reciprocal,
            branch: branch_k,
            lhs: c12b_lhs,
            rhs: c12b_rhs,
        },
        Claim {
            id: "C-SHIFT",
            statement: "S_N(f_1) + S_N(f) = f(0) + f(p^N) at every finite level N, \
                        for f(eta) = u^eta eta^d and f_1(eta) = f(eta + 1)",
            enumerate: enum_shift,
            domain_check: domain_shift,
            branch: no_branch,
            lhs: shift_lhs,
            rhs: shift_rhs,
        },
        Claim {
            id: "C-BSYM",
            statement: "B_(k,n)(x) = B_(n-k,n)(1 - x)",
            enumerate: enum_n_k_x,
            domain_check: domain_none,
            branch: no_branch,
            lhs: bsym_lhs,
            rhs: bsym_rhs,
        },
    ]
}

// ---- parameter plumbing ----

fn int(v: i64) -> ParamValue {
    ParamValue::Int(v)
}

fn rat_of(q: &Rational) -> ParamValue {
    ParamValue::Rat(q.clone())
}

fn whole(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn n_param(pt: &ParamPoint) -> u32 {
    pt.int("n") as u32
}

fn k_param(pt: &ParamPoint) -> u32 {
    pt.int("k") as u32
}

/// The fold degrees (n1, .., ns) of an s-fold point.
fn fold_params(pt: &ParamPoint) -> Vec<u32> {
    let s = pt.int("s") as usize;
    FOLD_NAMES[..s]
        .iter()
        .map(|name| pt.int(name) as u32)
        .collect()
}

// ---- enumerations ----

fn enum_n_u(grid: &Grid) -> Vec<ParamPoint> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for u in &grid.u {
            out.push(ParamPoint::new(vec![
                ("n", int(n as i64)),
                ("u", rat_of(u)),
            ]));
        }
    }
    out
}

fn enum_n_x_u(grid: &Grid) -> Vec<ParamPoint> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for x in &grid.x {
            for u in &grid.u {
                out.push(ParamPoint::new(vec![
                    ("n", int(n as i64)),
                    ("x", rat_of(x)),
                    ("u", rat_of(u)),
                ]));
            }
        }
    }
    out
}

fn enum_n_k_u(grid: &Grid) -> Vec<ParamPoint> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for k in 0..=n {
            for u in &grid.u {
                out.push(ParamPoint::new(vec![
                    ("n", int(n as i64)),
                    ("k", int(k as i64)),
                    ("u", rat_of(u)),
                ]));
            }
        }
    }
    out
}

fn enum_pair_k_u(grid: &Grid) -> Vec<ParamPoint> {
    let mut out = Vec::new();
    for &n1 in &grid.n {
        for &n2 in &grid.n {
            for k in 0..=n1.min(n2) {
                for u in &grid.u {
                    out.push(ParamPoint::new(vec![
                        ("n1", int(n1 as i64)),
                        ("n2", int(n2 as i64)),
                        ("k", int(k as i64)),
                        ("u", rat_of(u)),
                    ]));
                }
            }
        }
    }
    out
}

fn enum_sfold(grid: &Grid) -> Vec<ParamPoint> {
    let mut out = Vec::new();
    for &s in &grid.s {
        for tuple in tuples(&grid.n, s as usize) {
            let min = tuple.iter().copied().min().unwrap_or(0);
            for k in 0..=min {
                for u in &grid.u {
                    let mut entries = vec![("s", int(s as i64))];
                    for (name, &ni) in FOLD_NAMES.iter().zip(&tuple) {
                        entries.push((name, int(ni as i64)));
                    }
                    entries.push(("k", int(k as i64)));
                    entries.push(("u", rat_of(u)));
                    out.push(ParamPoint::new(entries));
                }
            }
        }
    }
    out
}

fn tuples(values: &[u32], s: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..s {
        let mut next = Vec::with_capacity(out.len() * values.len());
        for prefix in &out {
            for &v in values {
                let mut tuple = prefix.clone();
                tuple.push(v);
                next.push(tuple);
            }
        }
        out = next;
    }
    out
}

fn enum_padic(grid: &Grid) -> Vec<ParamPoint> {
    let mut out = Vec::new();
    for &n in &grid.padic.n {
        for x in &grid.padic.x {
            for u in &grid.padic.u {
                for &p in &grid.padic.p {
                    out.push(ParamPoint::new(vec![
                        ("n", int(n as i64)),
                        ("x", rat_of(x)),
                        ("u", rat_of(u)),
                        ("p", int(p as i64)),
                        ("precision", int(grid.padic.precision as i64)),
                    ]));
                }
            }
        }
    }
    out
}

fn enum_shift(grid: &Grid) -> Vec<ParamPoint> {
    let mut out = Vec::new();
    for u in &grid.shift.u {
        for &p in &grid.shift.p {
            for &level in &grid.shift.level {
                for &degree in &grid.shift.degree {
                    out.push(ParamPoint::new(vec![
                        ("u", rat_of(u)),
                        ("p", int(p as i64)),
                        ("level", int(level as i64)),
                        ("degree", int(degree as i64)),
                    ]));
                }
            }
        }
    }
    out
}

fn enum_n_k_x(grid: &Grid) -> Vec<ParamPoint> {
    let mut out = Vec::new();
    for &n in &grid.n {
        for k in 0..=n {
            for x in &grid.x {
                out.push(ParamPoint::new(vec![
                    ("n", int(n as i64)),
                    ("k", int(k as i64)),
                    ("x", rat_of(x)),
                ]));
            }
        }
    }
    out
}

// ---- domain checks ----

fn domain_none(_: &ParamPoint) -> Option<String> {
    None
}

fn domain_u_not_one(pt: &ParamPoint) -> Option<String> {
    if pt.rat("u").is_one() {
        Some("u = 1 excluded: H_n(u) is undefined".into())
    } else {
        None
    }
}

/// Exclusions for claims phrased in the parameter -1/u.
fn reciprocal_exclusion(u: &Rational) -> Option<String> {
    if u.is_zero() {
        Some("u = 0 excluded: the parameter -1/u is undefined".into())
    } else if *u == -Rational::one() {
        Some("u = -1 excluded: -1/u = 1 is not a valid Frobenius-Euler parameter".into())
    } else {
        None
    }
}

/// Exclusions for claims with the integral factor 2/(u+1).
fn integral_exclusion(u: &Rational) -> Option<String> {
    if u.is_zero() {
        Some("u = 0 excluded: the parameter -1/u is undefined".into())
    } else if *u == -Rational::one() {
        Some("u = -1 excluded: 2/(u+1) has a pole".into())
    } else {
        None
    }
}

fn domain_reciprocal_u(pt: &ParamPoint) -> Option<String> {
    reciprocal_exclusion(pt.rat("u"))
}

fn domain_integral_u(pt: &ParamPoint) -> Option<String> {
    integral_exclusion(pt.rat("u"))
}

fn require_positive_n(pt: &ParamPoint) -> Option<String> {
    if n_param(pt) == 0 {
        Some("n = 0 excluded: the identity requires n >= 1".into())
    } else {
        None
    }
}

fn domain_positive_n_reciprocal_u(pt: &ParamPoint) -> Option<String> {
    require_positive_n(pt).or_else(|| reciprocal_exclusion(pt.rat("u")))
}

fn domain_positive_n_integral_u(pt: &ParamPoint) -> Option<String> {
    require_positive_n(pt).or_else(|| integral_exclusion(pt.rat("u")))
}

fn domain_c8b(pt: &ParamPoint) -> Option<String> {
    if n_param(pt) <= k_param(pt) {
        return Some("excluded: the branch forms require n > k".into());
    }
    reciprocal_exclusion(pt.rat("u"))
}

fn pair_degree_check(pt: &ParamPoint) -> Option<String> {
    let total = pt.int("n1") + pt.int("n2");
    if total <= 2 * pt.int("k") {
        return Some("excluded: the identity requires n1 + n2 > 2k".into());
    }
    None
}

fn domain_pair_integral(pt: &ParamPoint) -> Option<String> {
    pair_degree_check(pt).or_else(|| integral_exclusion(pt.rat("u")))
}

fn domain_pair_reciprocal(pt: &ParamPoint) -> Option<String> {
    pair_degree_check(pt).or_else(|| reciprocal_exclusion(pt.rat("u")))
}

fn sfold_degree_check(pt: &ParamPoint) -> Option<String> {
    let total: i64 = fold_params(pt).iter().map(|&n| n as i64).sum();
    if total <= pt.int("s") * pt.int("k") {
        return Some("excluded: the identity requires sum n > s k".into());
    }
    None
}

fn domain_sfold_integral(pt: &ParamPoint) -> Option<String> {
    sfold_degree_check(pt).or_else(|| integral_exclusion(pt.rat("u")))
}

fn domain_sfold_reciprocal(pt: &ParamPoint) -> Option<String> {
    sfold_degree_check(pt).or_else(|| reciprocal_exclusion(pt.rat("u")))
}

fn domain_shift(pt: &ParamPoint) -> Option<String> {
    if pt.rat("u").is_zero() {
        Some("u = 0 excluded: u^eta is not an integrand".into())
    } else {
        None
    }
}

// ---- branches ----

fn no_branch(_: &ParamPoint) -> Option<&'static str> {
    None
}

fn branch_k(pt: &ParamPoint) -> Option<&'static str> {
    if pt.int("k") == 0 {
        Some("k = 0")
    } else {
        Some("k > 0")
    }
}

// ---- evaluation building blocks ----

fn err_reason<T>(r: Result<T, crate::Error>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn v_of(u: &Rational) -> Rational {
    -Rational::one() / u
}

thread_local! {
    // Recurrence-route contexts, keyed by parameter. Only recurrence-side
    // evaluators touch this.
    static RECURRENCE_CTX: RefCell<HashMap<Rational, FEContext>> = RefCell::new(HashMap::new());
    // Generating-function-route values, keyed by parameter. Only series-side
    // evaluators touch this.
    static SERIES_VALUES: RefCell<HashMap<Rational, Vec<Rational>>> =
        RefCell::new(HashMap::new());
}

fn with_recurrence_context<R>(
    u: &Rational,
    f: impl FnOnce(&mut FEContext) -> Result<R, crate::Error>,
) -> Result<R, String> {
    RECURRENCE_CTX.with(|cell| {
        let mut map = cell.borrow_mut();
        let ctx = match map.entry(u.clone()) {
            Entry::Occupied(slot) => slot.into_mut(),
            Entry::Vacant(slot) => slot.insert(err_reason(FEContext::new(u.clone()))?),
        };
        err_reason(f(ctx))
    })
}

/// H_0(u) .. H_max(u) along the recurrence route.
fn h_recurrence(u: &Rational, max: u32) -> Result<Vec<Rational>, String> {
    with_recurrence_context(u, |ctx| {
        let mut out = Vec::with_capacity(max as usize + 1);
        for n in 0..=max {
            out.push(ctx.number(n)?);
        }
        Ok(out)
    })
}

/// H_0(u) .. H_max(u) along the generating-function route.
fn h_series(u: &Rational, max: u32) -> Result<Vec<Rational>, String> {
    SERIES_VALUES.with(|cell| {
        let mut map = cell.borrow_mut();
        if let Some(values) = map.get(u) {
            if values.len() > max as usize {
                return Ok(values[..=max as usize].to_vec());
            }
        }
        let values = err_reason(frobenius::numbers_via_gf(u, max))?;
        map.insert(u.clone(), values.clone());
        Ok(values)
    })
}

/// sum_{l=0}^{top} C(top, l) (-1)^l values[offset + l].
fn alternating_h_sum(values: &[Rational], top: u32, offset: u32) -> Rational {
    let mut acc = Rational::zero();
    for l in 0..=top {
        let term = Rational::from_integer(binomial(top, l)) * &values[(offset + l) as usize];
        if l % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// sum_{l=0}^{top} C(top, l) (-1)^(top+l) inner(values[total - l]).
fn branch_alternating_sum(
    values: &[Rational],
    top: u32,
    total: u32,
    inner: impl Fn(&Rational) -> Rational,
) -> Rational {
    let mut acc = Rational::zero();
    for l in 0..=top {
        let term = Rational::from_integer(binomial(top, l)) * inner(&values[(total - l) as usize]);
        if (top + l).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn two_over_u_plus_one(u: &Rational) -> Rational {
    whole(2) / (u + Rational::one())
}

/// (1 - x)^n as a polynomial.
fn one_minus_x_pow(n: u32) -> PolyQ {
    PolyQ::new(vec![Rational::one(), -Rational::one()]).pow(n)
}

/// The closed form of the integral, with the Frobenius-Euler values pulled
/// from the recurrence-route cache. Mirrors [`padic::integral_exact_via_fe`].
fn exact_integral(u: &Rational, poly: PolyQ) -> Result<Rational, String> {
    let spec = err_reason(IntegrandSpec::new(u.clone(), poly))?;
    if *spec.u() == -Rational::one() {
        return Err(crate::Error::InvalidParameter(
            "u = -1: the closed form 2/(u + 1) has a pole".into(),
        )
        .to_string());
    }
    let acc = with_recurrence_context(&v_of(u), |ctx| {
        let mut acc = Rational::zero();
        for (m, c) in spec.poly().coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * ctx.number(m as u32)?;
        }
        Ok(acc)
    })?;
    Ok(two_over_u_plus_one(u) * acc)
}

fn rat_value(q: Rational) -> EvalOutcome {
    Ok(Value::Rat(q))
}

// ---- C1 ----

fn c1_lhs(pt: &ParamPoint) -> EvalOutcome {
    let n = n_param(pt);
    let values = h_series(pt.rat("u"), n)?;
    rat_value(values[n as usize].clone())
}

fn c1_rhs(pt: &ParamPoint) -> EvalOutcome {
    let n = n_param(pt);
    if n == 0 {
        return rat_value(Rational::one());
    }
    let u = pt.rat("u");
    let h = h_recurrence(u, n - 1)?;
    let mut sum = Rational::zero();
    for (k, value) in h.iter().enumerate() {
        sum += Rational::from_integer(binomial(n, k as u32)) * value;
    }
    rat_value(sum / (u - Rational::one()))
}

// ---- C2 ----

fn c2_lhs(pt: &ParamPoint) -> EvalOutcome {
    let n = n_param(pt);
    let p = err_reason(OddPrime::new(pt.int("p") as u64))?;
    let precision = pt.int("precision") as u32;
    let poly = PolyQ::new(vec![pt.rat("x").clone(), Rational::one()]).pow(n);
    let spec = err_reason(IntegrandSpec::new(pt.rat("u").clone(), poly))?;
    Ok(Value::Padic(err_reason(padic::integral(
        &spec, p, precision,
    ))?))
}

fn c2_rhs(pt: &ParamPoint) -> EvalOutcome {
    let n = n_param(pt);
    let u = pt.rat("u");
    let p = err_reason(OddPrime::new(pt.int("p") as u64))?;
    let precision = pt.int("precision") as u32;
    let value = with_recurrence_context(&v_of(u), |ctx| ctx.eval(n, pt.rat("x")))?;
    let exact = two_over_u_plus_one(u) * value;
    Ok(Value::Padic(err_reason(padic::from_rational(
        &exact, p, precision,
    ))?))
}

// ---- C3 ----

fn c3_lhs(pt: &ParamPoint) -> EvalOutcome {
    let value = with_recurrence_context(pt.rat("u"), |ctx| ctx.eval(n_param(pt), pt.rat("x")))?;
    rat_value(value)
}

fn c3_rhs(pt: &ParamPoint) -> EvalOutcome {
    let n = n_param(pt);
    let values = err_reason(frobenius::poly_via_gf(pt.rat("u"), pt.rat("x"), n))?;
    rat_value(values[n as usize].clone())
}

// ---- C4 and C4-fixed ----

fn c4_lhs(pt: &ParamPoint) -> EvalOutcome {
    let point = Rational::one() - pt.rat("x");
    let value = with_recurrence_context(&v_of(pt.rat("u")), |ctx| ctx.eval(n_param(pt), &point))?;
    rat_value(value)
}

fn signed_gf_eval(parameter: Rational, pt: &ParamPoint) -> EvalOutcome {
    let n = n_param(pt);
    let values = err_reason(frobenius::poly_via_gf(&parameter, pt.rat("x"), n))?;
    let mut value = values[n as usize].clone();
    if n % 2 == 1 {
        value = -value;
    }
    rat_value(value)
}

fn c4_rhs(pt: &ParamPoint) -> EvalOutcome {
    signed_gf_eval(v_of(pt.rat("u")), pt)
}

fn c4_fixed_rhs(pt: &ParamPoint) -> EvalOutcome {
    signed_gf_eval(-pt.rat("u").clone(), pt)
}

// ---- C5 ----

fn c5_lhs(pt: &ParamPoint) -> EvalOutcome {
    let u = pt.rat("u");
    let value = with_recurrence_context(&v_of(u), |ctx| ctx.eval(n_param(pt), &whole(2)))?;
    rat_value(u * u * value)
}

fn c5_rhs(pt: &ParamPoint) -> EvalOutcome {
    let n = n_param(pt);
    let u = pt.rat("u");
    let values = h_series(&v_of(u), n)?;
    rat_value(u * u + u + &values[n as usize])
}

// ---- C6, C6-fixed, C7, C7-fixed share the integral left side ----

fn c6_lhs(pt: &ParamPoint) -> EvalOutcome {
    let value = exact_integral(pt.rat("u"), one_minus_x_pow(n_param(pt)))?;
    rat_value(value)
}

fn c6_rhs(pt: &ParamPoint) -> EvalOutcome {
    let n = n_param(pt);
    let u = pt.rat("u");
    let values = err_reason(frobenius::poly_via_gf(&v_of(u), &whole(2), n))?;
    rat_value(two_over_u_plus_one(u) * &values[n as usize])
}

fn c6_fixed_rhs(pt: &ParamPoint) -> EvalOutcome {
    let n = n_param(pt);
    let u = pt.rat("u");
    let values = err_reason(frobenius::poly_via_gf(&-u.clone(), &whole(2), n))?;
    rat_value(two_over_u_plus_one(u) * &values[n as usize])
}

fn c7_rhs(pt: &ParamPoint) -> EvalOutcome {
    let n = n_param(pt);
    let u = pt.rat("u");
    let values = h_series(&v_of(u), n)?;
    let u2 = u * u;
    let u3 = &u2 * u;
    let value =
        two_over_u_plus_one(u) + whole(2) / (&u2 + u) + whole(2) / (u3 + u) * &values[n as usize];
    rat_value(value)
}

fn c7_fixed_rhs(pt: &ParamPoint) -> EvalOutcome {
    let n = n_param(pt);
    let u = pt.rat("u");
    let values = h_series(&-u.clone(), n)?;
    let inner = Rational::one() + u + u * u * &values[n as usize];
    rat_value(two_over_u_plus_one(u) * inner)
}

// ---- C8a and C8b ----

fn c8a_lhs(pt: &ParamPoint) -> EvalOutcome {
    let idx = err_reason(BernsteinIndex::new(k_param(pt), n_param(pt)))?;
    rat_value(exact_integral(pt.rat("u"), bernstein::poly(idx))?)
}

fn c8a_rhs(pt: &ParamPoint) -> EvalOutcome {
    let (n, k) = (n_param(pt), k_param(pt));
    let u = pt.rat("u");
    let values = h_series(&v_of(u), n)?;
    let sum = alternating_h_sum(&values, n - k, k);
    rat_value(two_over_u_plus_one(u) * Rational::from_integer(binomial(n, k)) * sum)
}

fn c8b_lhs(pt: &ParamPoint) -> EvalOutcome {
    let (n, k) = (n_param(pt), k_param(pt));
    let values = h_recurrence(&v_of(pt.rat("u")), n)?;
    rat_value(alternating_h_sum(&values, n - k, k))
}

/// 1 + 1/u + h/u^2, the branch form shared by C8b and C10b right sides.
fn reciprocal_affine(u: &Rational) -> impl Fn(&Rational) -> Rational + '_ {
    move |h| {
        let ui = Rational::one() / u;
        Rational::one() + &ui + &ui * &ui * h
    }
}

fn c8b_rhs(pt: &ParamPoint) -> EvalOutcome {
    let (n, k) = (n_param(pt), k_param(pt));
    let u = pt.rat("u");
    let values = h_series(&v_of(u), n)?;
    let inner = reciprocal_affine(u);
    let value = if k == 0 {
        inner(&values[n as usize])
    } else {
        branch_alternating_sum(&values, k, n, inner)
    };
    rat_value(value)
}

// ---- C9, C10a, C10b ----

fn pair_total(pt: &ParamPoint) -> u32 {
    (pt.int("n1") + pt.int("n2")) as u32
}

fn c9_lhs(pt: &ParamPoint) -> EvalOutcome {
    let k = k_param(pt);
    let b1 = err_reason(BernsteinIndex::new(k, pt.int("n1") as u32))?;
    let b2 = err_reason(BernsteinIndex::new(k, pt.int("n2") as u32))?;
    let integrand = &bernstein::poly(b1) * &bernstein::poly(b2);
    rat_value(exact_integral(pt.rat("u"), integrand)?)
}

/// 2/(u+1) + 2/(u^2+u) + (2/(u^3+u)) h, the form C9 and C11 branch on.
fn cubic_affine(u: &Rational) -> impl Fn(&Rational) -> Rational + '_ {
    move |h| {
        let u2 = u * u;
        let u3 = &u2 * u;
        two_over_u_plus_one(u) + whole(2) / (u2 + u) + whole(2) / (u3 + u) * h
    }
}

fn c9_rhs(pt: &ParamPoint) -> EvalOutcome {
    let k = k_param(pt);
    let total = pair_total(pt);
    let u = pt.rat("u");
    let values = h_series(&v_of(u), total)?;
    let inner = cubic_affine(u);
    let value = if k == 0 {
        inner(&values[total as usize])
    } else {
        let head = binomial(pt.int("n1") as u32, k) * binomial(pt.int("n2") as u32, k);
        Rational::from_integer(head) * branch_alternating_sum(&values, 2 * k, total, inner)
    };
    rat_value(value)
}

fn c10a_rhs(pt: &ParamPoint) -> EvalOutcome {
    let k = k_param(pt);
    let total = pair_total(pt);
    let u = pt.rat("u");
    let values = h_series(&v_of(u), total)?;
    let head = binomial(pt.int("n1") as u32, k) * binomial(pt.int("n2") as u32, k);
    let sum = alternating_h_sum(&values, total - 2 * k, 2 * k);
    rat_value(two_over_u_plus_one(u) * Rational::from_integer(head) * sum)
}

fn c10b_lhs(pt: &ParamPoint) -> EvalOutcome {
    let k = k_param(pt);
    let total = pair_total(pt);
    let values = h_recurrence(&v_of(pt.rat("u")), total)?;
    rat_value(alternating_h_sum(&values, total - 2 * k, 2 * k))
}

fn c10b_rhs(pt: &ParamPoint) -> EvalOutcome {
    let k = k_param(pt);
    let total = pair_total(pt);
    let u = pt.rat("u");
    let values = h_series(&v_of(u), total)?;
    let inner = reciprocal_affine(u);
    let value = if k == 0 {
        inner(&values[total as usize])
    } else {
        branch_alternating_sum(&values, 2 * k, total, inner)
    };
    rat_value(value)
}

// ---- C11, C12a, C12b ----

fn sfold_total(pt: &ParamPoint) -> u32 {
    fold_params(pt).iter().sum()
}

fn c11_lhs(pt: &ParamPoint) -> EvalOutcome {
    let k = k_param(pt);
    let mut integrand = PolyQ::one();
    for n in fold_params(pt) {
        let idx = err_reason(BernsteinIndex::new(k, n))?;
        integrand = &integrand * &bernstein::poly(idx);
    }
    rat_value(exact_integral(pt.rat("u"), integrand)?)
}

fn fold_binomial_product(pt: &ParamPoint) -> BigInt {
    let k = k_param(pt);
    let mut head = BigInt::from(1);
    for n in fold_params(pt) {
        head *= binomial(n, k);
    }
    head
}

fn c11_rhs(pt: &ParamPoint) -> EvalOutcome {
    let k = k_param(pt);
    let s = pt.int("s") as u32;
    let total = sfold_total(pt);
    let u = pt.rat("u");
    let values = h_series(&v_of(u), total)?;
    let inner = cubic_affine(u);
    let value = if k == 0 {
        inner(&values[total as usize])
    } else {
        Rational::from_integer(fold_binomial_product(pt))
            * branch_alternating_sum(&values, s * k, total, inner)
    };
    rat_value(value)
}

fn c12a_rhs(pt: &ParamPoint) -> EvalOutcome {
    let k = k_param(pt);
    let s = pt.int("s") as u32;
    let total = sfold_total(pt);
    let u = pt.rat("u");
    let values = h_series(&v_of(u), total)?;
    let sum = alternating_h_sum(&values, total - s * k, s * k);
    rat_value(two_over_u_plus_one(u) * Rational::from_integer(fold_binomial_product(pt)) * sum)
}

fn c12b_lhs(pt: &ParamPoint) -> EvalOutcome {
    let k = k_param(pt);
    let s = pt.int("s") as u32;
    let total = sfold_total(pt);
    let u = pt.rat("u");
    let values = h_recurrence(&v_of(u), total)?;
    rat_value(u * u * alternating_h_sum(&values, total - s * k, s * k))
}

fn c12b_rhs(pt: &ParamPoint) -> EvalOutcome {
    let k = k_param(pt);
    let s = pt.int("s") as u32;
    let total = sfold_total(pt);
    let u = pt.rat("u");
    let values = h_series(&v_of(u), total)?;
    let inner = |h: &Rational| u * u + u + h;
    let value = if k == 0 {
        inner(&values[total as usize])
    } else {
        branch_alternating_sum(&values, s * k, total, inner)
    };
    rat_value(value)
}

// ---- C-SHIFT ----

fn shift_point(pt: &ParamPoint) -> Result<(IntegrandSpec, OddPrime, u32), String> {
    let degree = pt.int("degree") as usize;
    let poly = PolyQ::monomial(Rational::one(), degree);
    let spec = err_reason(IntegrandSpec::new(pt.rat("u").clone(), poly))?;
    let p = err_reason(OddPrime::new(pt.int("p") as u64))?;
    Ok((spec, p, pt.int("level") as u32))
}

fn shift_lhs(pt: &ParamPoint) -> EvalOutcome {
    let (spec, p, level) = shift_point(pt)?;
    let shifted_poly = spec
        .poly()
        .compose_affine(&Rational::one(), &Rational::one())
        .scale(spec.u());
    let shifted = err_reason(IntegrandSpec::new(spec.u().clone(), shifted_poly))?;
    let sum = err_reason(padic::partial_sum(&shifted, p, level))?
        + err_reason(padic::partial_sum(&spec, p, level))?;
    rat_value(sum)
}

fn shift_rhs(pt: &ParamPoint) -> EvalOutcome {
    let (spec, p, level) = shift_point(pt)?;
    let boundary = p
        .get()
        .checked_pow(level)
        .filter(|&b| b <= padic::DEFAULT_TERM_CAP)
        .ok_or_else(|| "p^N exceeds the term cap".to_string())?;
    rat_value(spec.value_at(0) + spec.value_at(boundary))
}

// ---- C-BSYM ----

fn bsym_lhs(pt: &ParamPoint) -> EvalOutcome {
    let idx = err_reason(BernsteinIndex::new(k_param(pt), n_param(pt)))?;
    rat_value(bernstein::eval(idx, pt.rat("x")))
}

fn bsym_rhs(pt: &ParamPoint) -> EvalOutcome {
    let (n, k) = (n_param(pt), k_param(pt));
    let idx = err_reason(BernsteinIndex::new(n - k, n))?;
    let point = Rational::one() - pt.rat("x");
    rat_value(bernstein::poly(idx).eval(&point))
}
