//! Parameter grids for sweeps: defaults, TOML overrides, and caps.

use num_traits::Signed;
use serde::Deserialize;

use crate::error::Error;
use crate::rational::{parse_rational, rat};
use crate::Rational;

/// The parameter lists a sweep draws from.
///
/// Claim enumerations derive dependent ranges themselves (a basis position k
/// always ranges over 0..=min(n_i)), so the grid only holds independent
/// axes. The p-adic and shift families carry their own sub-grids because
/// their parameters (odd primes, units near 1, finite levels) do not
/// overlap the algebraic axes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    /// Polynomial and number indices.
    pub n: Vec<u32>,
    /// Fold counts for products of s Bernstein factors.
    pub s: Vec<u32>,
    /// The Frobenius-Euler parameter axis.
    pub u: Vec<Rational>,
    /// Evaluation points.
    pub x: Vec<Rational>,
    pub padic: PadicGrid,
    pub shift: ShiftGrid,
}

/// Sub-grid for claims comparing numeric p-adic limits to closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicGrid {
    pub p: Vec<u64>,
    pub u: Vec<Rational>,
    pub n: Vec<u32>,
    pub x: Vec<Rational>,
    /// Residues are compared mod p^precision.
    pub precision: u32,
}

/// Sub-grid for the finite-level shift identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftGrid {
    pub u: Vec<Rational>,
    pub p: Vec<u64>,
    pub level: Vec<u32>,
    pub degree: Vec<u32>,
}

impl Default for Grid {
    /// The desk-scale default sweep.
    ///
    /// The p-adic sub-grid is narrower than the algebraic axes: every point
    /// there expands partial sums with tens of thousands of exact terms, and
    /// the defaults are chosen so a full sweep stays well under a minute.
    fn default() -> Self {
        Grid {
            n: (0..=8).collect(),
            s: vec![2, 3],
            u: vec![rat(2, 1), rat(3, 1), rat(5, 1), rat(-1, 2), rat(5, 3)],
            x: vec![rat(0, 1), rat(1, 1), rat(2, 1), rat(-1, 1), rat(1, 2)],
            padic: PadicGrid {
                p: vec![3],
                u: vec![rat(4, 1), rat(7, 1)],
                n: (0..=6).collect(),
                x: vec![rat(0, 1), rat(1, 1), rat(2, 1)],
                precision: 8,
            },
            shift: ShiftGrid {
                u: vec![rat(1, 1), rat(4, 1), rat(7, 1), rat(10, 1)],
                p: vec![3, 5, 7],
                level: vec![1, 2, 3],
                degree: (0..=4).collect(),
            },
        }
    }
}

/// Upper bounds a grid must respect before a sweep will run it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCaps {
    pub max_n: u32,
    pub max_s: u32,
    /// Cap on |numerator| and denominator of every u entry.
    pub max_u_magnitude: u64,
    pub max_precision: u32,
    pub max_level: u32,
    pub max_p: u64,
}

impl Default for GridCaps {
    fn default() -> Self {
        GridCaps {
            max_n: 8,
            max_s: 3,
            max_u_magnitude: 16,
            max_precision: 10,
            max_level: 5,
            max_p: 50,
        }
    }
}

fn check_range(what: &str, values: &[u32], cap: u32) -> Result<(), Error> {
    for &v in values {
        if v > cap {
            return Err(Error::Grid(format!(
                "{what} = {v} exceeds the cap of {cap}"
            )));
        }
    }
    Ok(())
}

fn check_u_axis(what: &str, values: &[Rational], cap: u64) -> Result<(), Error> {
    let cap_int = num_bigint::BigInt::from(cap);
    for u in values {
        if u.numer().abs() > cap_int || u.denom().abs() > cap_int {
            return Err(Error::Grid(format!(
                "{what} = {u} exceeds the magnitude cap of {cap}"
            )));
        }
    }
    Ok(())
}

fn check_primes(what: &str, values: &[u64], cap: u64) -> Result<(), Error> {
    for &p in values {
        if p > cap {
            return Err(Error::Grid(format!(
                "{what} = {p} exceeds the cap of {cap}"
            )));
        }
    }
    Ok(())
}

impl Grid {
    /// Rejects grids outside the caps, so a sweep's cost stays bounded by
    /// construction rather than by luck.
    pub fn validate(&self, caps: &GridCaps) -> Result<(), Error> {
        check_range("n", &self.n, caps.max_n)?;
        check_range("s", &self.s, caps.max_s)?;
        if self.s.contains(&0) {
            return Err(Error::Grid("s = 0 is not a product shape".into()));
        }
        if self.s.iter().any(|&s| s as usize > FOLD_NAMES.len()) {
            return Err(Error::Grid(format!(
                "s above {} is unsupported",
                FOLD_NAMES.len()
            )));
        }
        check_u_axis("u", &self.u, caps.max_u_magnitude)?;
        check_u_axis("padic.u", &self.padic.u, caps.max_u_magnitude)?;
        check_u_axis("shift.u", &self.shift.u, caps.max_u_magnitude)?;
        check_range("padic.n", &self.padic.n, caps.max_n)?;
        check_primes("padic.p", &self.padic.p, caps.max_p)?;
        check_primes("shift.p", &self.shift.p, caps.max_p)?;
        if self.padic.precision == 0 || self.padic.precision > caps.max_precision {
            return Err(Error::Grid(format!(
                "padic.precision = {} is outside 1..={}",
                self.padic.precision, caps.max_precision
            )));
        }
        check_range("shift.level", &self.shift.level, caps.max_level)?;
        check_range("shift.degree", &self.shift.degree, caps.max_n)?;
        Ok(())
    }

    /// Parses a TOML grid description; absent keys keep their defaults.
    pub fn from_toml(text: &str) -> Result<Grid, Error> {
        let file: GridFile = toml::from_str(text).map_err(|e| Error::Grid(e.to_string()))?;
        let mut grid = Grid::default();
        if let Some(n) = file.n {
            grid.n = n;
        }
        if let Some(s) = file.s {
            grid.s = s;
        }
        if let Some(u) = file.u {
            grid.u = parse_rationals("u", &u)?;
        }
        if let Some(x) = file.x {
            grid.x = parse_rationals("x", &x)?;
        }
        if let Some(padic) = file.padic {
            if let Some(p) = padic.p {
                grid.padic.p = p;
            }
            if let Some(u) = padic.u {
                grid.padic.u = parse_rationals("padic.u", &u)?;
            }
            if let Some(n) = padic.n {
                grid.padic.n = n;
            }
            if let Some(x) = padic.x {
                grid.padic.x = parse_rationals("padic.x", &x)?;
            }
            if let Some(precision) = padic.precision {
                grid.padic.precision = precision;
            }
        }
        if let Some(shift) = file.shift {
            if let Some(u) = shift.u {
                grid.shift.u = parse_rationals("shift.u", &u)?;
            }
            if let Some(p) = shift.p {
                grid.shift.p = p;
            }
            if let Some(level) = shift.level {
                grid.shift.level = level;
            }
            if let Some(degree) = shift.degree {
                grid.shift.degree = degree;
            }
        }
        Ok(grid)
    }
}

/// Parameter names for components of an s-fold product, which bounds the
/// supported fold count.
pub(crate) const FOLD_NAMES: [&str; 8] = ["n1", "n2", "n3", "n4", "n5", "n6", "n7", "n8"];

fn parse_rationals(what: &str, values: &[String]) -> Result<Vec<Rational>, Error> {
    values
        .iter()
        .map(|v| parse_rational(v).map_err(|e| Error::Grid(format!("{what}: {e}"))))
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GridFile {
    n: Option<Vec<u32>>,
    s: Option<Vec<u32>>,
    u: Option<Vec<String>>,
    x: Option<Vec<String>>,
    padic: Option<PadicFile>,
    shift: Option<ShiftFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PadicFile {
    p: Option<Vec<u64>>,
    u: Option<Vec<String>>,
    n: Option<Vec<u32>>,
    x: Option<Vec<String>>,
    precision: Option<u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ShiftFile {
    u: Option<Vec<String>>,
    p: Option<Vec<u64>>,
    level: Option<Vec<u32>>,
    degree: Option<Vec<u32>>,
}
