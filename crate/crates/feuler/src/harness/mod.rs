//! Identity verification harness: a catalog of claims, a sweep over
//! parameter grids, and deterministic reports.
//!
//! A claim is a pair of independent evaluators for the two sides of a stated
//! identity, together with a parameter enumeration and a domain check. The
//! harness never decides in advance whether an identity is true: it runs
//! both sides exactly and records VERIFIED or REFUTED per parameter point,
//! with the exact values as witnesses. Points outside a claim's domain
//! become SKIPPED rows that say why.
//!
//! Reports are deterministic: results are sorted by claim id and parameter
//! tuple, summaries are ordered maps, and rendering the same sweep twice
//! yields byte-identical output.

pub mod catalog;
pub mod grid;
pub mod report;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::padic::PadicInt;
use crate::Rational;

pub use catalog::claim_catalog;
pub use grid::{Grid, GridCaps};
pub use report::{render, ClaimSummary, Report, ReportFormat};

/// One named parameter value: claim parameters are small integers or exact
/// rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    Rat(Rational),
}

impl ParamValue {
    fn kind_rank(&self) -> u8 {
        match self {
            ParamValue::Int(_) => 0,
            ParamValue::Rat(_) => 1,
        }
    }
}

impl Ord for ParamValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ParamValue::Int(a), ParamValue::Int(b)) => a.cmp(b),
            (ParamValue::Rat(a), ParamValue::Rat(b)) => a.cmp(b),
            // Points of one claim share a shape, so mixed kinds only meet
            // when comparing across differently shaped tuples.
            _ => self.kind_rank().cmp(&other.kind_rank()),
        }
    }
}

impl PartialOrd for ParamValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Rat(q) => write!(f, "{q}"),
        }
    }
}

/// An ordered list of named parameters identifying one claim instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoint {
    entries: Vec<(&'static str, ParamValue)>,
}

impl ParamPoint {
    pub fn new(entries: Vec<(&'static str, ParamValue)>) -> Self {
        ParamPoint { entries }
    }

    pub fn entries(&self) -> &[(&'static str, ParamValue)] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
    }

    /// The named integer parameter; enumeration and evaluators are built as
    /// a pair, so a missing name is a harness bug, not an input error.
    pub fn int(&self, name: &str) -> i64 {
        match self.get(name) {
            Some(ParamValue::Int(v)) => *v,
            other => panic!("parameter {name} should be an integer, got {other:?}"),
        }
    }

    /// The named rational parameter.
    pub fn rat(&self, name: &str) -> &Rational {
        match self.get(name) {
            Some(ParamValue::Rat(q)) => q,
            other => panic!("parameter {name} should be a rational, got {other:?}"),
        }
    }
}

impl Ord for ParamPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries.cmp(&other.entries)
    }
}

impl PartialOrd for ParamPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, value)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{name}={value}")?;
        }
        Ok(())
    }
}

/// An exact witness value produced by one side of a claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rat(Rational),
    Padic(PadicInt),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rat(q) => write!(f, "{q}"),
            Value::Padic(r) => write!(f, "{r}"),
        }
    }
}

/// Outcome of one claim instance.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Refuted,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Skipped => "skipped",
        }
    }
}

/// An evaluator either produces a value or explains why the point is
/// outside the territory it can speak about.
pub type EvalOutcome = Result<Value, String>;

/// One identity, with independent evaluators for its two sides.
///
/// The `lhs` and `rhs` functions must not share intermediate computations:
/// where the same mathematical quantity appears on both sides it is computed
/// along different routes, so a defect in one route cannot silently cancel.
#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    /// The identity in plain mathematical notation.
    pub statement: &'static str,
    /// All parameter points this claim covers in a given grid.
    pub enumerate: fn(&Grid) -> Vec<ParamPoint>,
    /// `Some(reason)` for points outside the identity's stated domain.
    pub domain_check: fn(&ParamPoint) -> Option<String>,
    /// A label for claims whose right side switches form, such as k = 0
    /// versus k > 0.
    pub branch: fn(&ParamPoint) -> Option<&'static str>,
    pub lhs: fn(&ParamPoint) -> EvalOutcome,
    pub rhs: fn(&ParamPoint) -> EvalOutcome,
}

/// The outcome of one claim at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim: &'static str,
    pub params: ParamPoint,
    pub branch: Option<&'static str>,
    pub status: Status,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub reason: Option<String>,
}

/// Evaluates both sides of a claim at one point.
///
/// Domain exclusions and evaluator preconditions produce SKIPPED results
/// carrying the reason; they never abort a sweep. A point inside the domain
/// always yields a definite VERIFIED or REFUTED with both exact values.
pub fn run_claim(claim: &Claim, params: ParamPoint) -> ClaimResult {
    let branch = (claim.branch)(&params);
    if let Some(reason) = (claim.domain_check)(&params) {
        return ClaimResult {
            claim: claim.id,
            params,
            branch,
            status: Status::Skipped,
            lhs: None,
            rhs: None,
            reason: Some(reason),
        };
    }
    let lhs = match (claim.lhs)(&params) {
        Ok(v) => v,
        Err(reason) => {
            return ClaimResult {
                claim: claim.id,
                params,
                branch,
                status: Status::Skipped,
                lhs: None,
                rhs: None,
                reason: Some(reason),
            }
        }
    };
    let rhs = match (claim.rhs)(&params) {
        Ok(v) => v,
        Err(reason) => {
            return ClaimResult {
                claim: claim.id,
                params,
                branch,
                status: Status::Skipped,
                lhs: None,
                rhs: None,
                reason: Some(reason),
            }
        }
    };
    let status = if lhs == rhs {
        Status::Verified
    } else {
        Status::Refuted
    };
    ClaimResult {
        claim: claim.id,
        params,
        branch,
        status,
        lhs: Some(lhs),
        rhs: Some(rhs),
        reason: None,
    }
}

/// Runs every claim over the grid and assembles a deterministic report.
pub fn sweep(claims: &[Claim], grid: &Grid, caps: &GridCaps) -> Result<Report, Error> {
    sweep_filtered(claims, grid, caps, &[])
}

/// [`sweep`] restricted to points matching a parameter filter.
///
/// A point passes when every filter entry either names a parameter the
/// point does not have, or matches its value exactly. This is how a single
/// reported row is replayed on its own.
pub fn sweep_filtered(
    claims: &[Claim],
    grid: &Grid,
    caps: &GridCaps,
    filter: &[(&'static str, ParamValue)],
) -> Result<Report, Error> {
    grid.validate(caps)?;
    let mut results = Vec::new();
    let mut summary: BTreeMap<&'static str, ClaimSummary> = BTreeMap::new();
    for claim in claims {
        summary.entry(claim.id).or_default();
        for point in (claim.enumerate)(grid) {
            let passes = filter
                .iter()
                .all(|(name, want)| point.get(name).is_none_or(|have| have == want));
            if passes {
                results.push(run_claim(claim, point));
            }
        }
    }
    results.sort_by(|a, b| a.claim.cmp(b.claim).then_with(|| a.params.cmp(&b.params)));
    for result in &results {
        let entry = summary.entry(result.claim).or_default();
        match result.status {
            Status::Verified => entry.verified += 1,
            Status::Refuted => {
                entry.refuted += 1;
                if entry.first_refutation.is_none() {
                    entry.first_refutation = Some(result.clone());
                }
            }
            Status::Skipped => entry.skipped += 1,
        }
    }
    Ok(Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        grid: grid.clone(),
        point_filter: filter.to_vec(),
        results,
        summary,
    })
}
