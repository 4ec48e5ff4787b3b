//! Report assembly and rendering.
//!
//! Both renderers are pure functions of the report value. Key order in JSON
//! objects is alphabetical and rows arrive pre-sorted from the sweep, so
//! the same sweep always renders to identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Map, Value as Json};

use super::grid::Grid;
use super::{ClaimResult, ParamPoint, ParamValue, Value};
use crate::Rational;

/// Everything one sweep produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub version: String,
    pub grid: Grid,
    /// The parameter restriction the sweep ran under; empty for full sweeps.
    pub point_filter: Vec<(&'static str, ParamValue)>,
    pub results: Vec<ClaimResult>,
    pub summary: BTreeMap<&'static str, ClaimSummary>,
}

/// Per-claim tallies, plus the first refuted row in sweep order as the
/// canonical counterexample.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClaimSummary {
    pub verified: u64,
    pub refuted: u64,
    pub skipped: u64,
    pub first_refutation: Option<ClaimResult>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Markdown,
}

/// Renders a report to its final textual form, newline-terminated.
pub fn render(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut text = serde_json::to_string_pretty(&report_json(report))
                .expect("report values contain no non-serializable data");
            text.push('\n');
            text
        }
        ReportFormat::Markdown => render_markdown(report),
    }
}

fn report_json(report: &Report) -> Json {
    let mut top = Map::new();
    top.insert("version".into(), json!(report.version));
    top.insert("grid".into(), grid_json(&report.grid));
    if !report.point_filter.is_empty() {
        let mut filter = Map::new();
        for (name, value) in &report.point_filter {
            filter.insert((*name).into(), param_value_json(value));
        }
        top.insert("point_filter".into(), Json::Object(filter));
    }
    top.insert(
        "results".into(),
        Json::Array(report.results.iter().map(result_json).collect()),
    );
    let mut summary = Map::new();
    for (id, tally) in &report.summary {
        summary.insert(
            (*id).into(),
            json!({
                "verified": tally.verified,
                "refuted": tally.refuted,
                "skipped": tally.skipped,
                "first_refutation": tally
                    .first_refutation
                    .as_ref()
                    .map_or(Json::Null, result_json),
            }),
        );
    }
    top.insert("summary".into(), Json::Object(summary));
    Json::Object(top)
}

fn grid_json(grid: &Grid) -> Json {
    json!({
        "n": grid.n,
        "s": grid.s,
        "u": rationals_json(&grid.u),
        "x": rationals_json(&grid.x),
        "padic": {
            "p": grid.padic.p,
            "u": rationals_json(&grid.padic.u),
            "n": grid.padic.n,
            "x": rationals_json(&grid.padic.x),
            "precision": grid.padic.precision,
        },
        "shift": {
            "u": rationals_json(&grid.shift.u),
            "p": grid.shift.p,
            "level": grid.shift.level,
            "degree": grid.shift.degree,
        },
    })
}

fn rationals_json(values: &[Rational]) -> Json {
    Json::Array(values.iter().map(|q| Json::String(q.to_string())).collect())
}

fn param_value_json(value: &ParamValue) -> Json {
    match value {
        ParamValue::Int(v) => json!(v),
        ParamValue::Rat(q) => Json::String(q.to_string()),
    }
}

fn params_json(params: &ParamPoint) -> Json {
    let mut map = Map::new();
    for (name, value) in params.entries() {
        map.insert((*name).into(), param_value_json(value));
    }
    Json::Object(map)
}

fn witness_json(value: &Option<Value>) -> Json {
    value
        .as_ref()
        .map_or(Json::Null, |v| Json::String(v.to_string()))
}

fn result_json(result: &ClaimResult) -> Json {
    json!({
        "claim": result.claim,
        "params": params_json(&result.params),
        "branch": result.branch,
        "status": result.status.as_str(),
        "lhs": witness_json(&result.lhs),
        "rhs": witness_json(&result.rhs),
        "reason": result.reason,
    })
}

fn render_markdown(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Identity sweep report");
    let _ = writeln!(out);
    let _ = writeln!(out, "version {}", report.version);
    let _ = writeln!(out);
    let _ = writeln!(out, "## Grid");
    let _ = writeln!(out);
    let _ = writeln!(out, "```json");
    let grid = serde_json::to_string_pretty(&grid_json(&report.grid))
        .expect("grid values contain no non-serializable data");
    let _ = writeln!(out, "{grid}");
    let _ = writeln!(out, "```");
    if !report.point_filter.is_empty() {
        let filter: Vec<String> = report
            .point_filter
            .iter()
            .map(|(name, value)| format!("{name}={value}"))
            .collect();
        let _ = writeln!(out);
        let _ = writeln!(out, "Point filter: `{}`", filter.join(", "));
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "## Results");
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "| claim | params | branch | status | lhs | rhs | reason |"
    );
    let _ = writeln!(out, "|---|---|---|---|---|---|---|");
    for result in &report.results {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            result.claim,
            result.params,
            result.branch.unwrap_or(""),
            result.status.as_str(),
            display_witness(&result.lhs),
            display_witness(&result.rhs),
            result.reason.as_deref().unwrap_or(""),
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "## Summary");
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "| claim | verified | refuted | skipped | first refutation |"
    );
    let _ = writeln!(out, "|---|---|---|---|---|");
    for (id, tally) in &report.summary {
        let witness = tally
            .first_refutation
            .as_ref()
            .map_or_else(String::new, |r| {
                format!(
                    "{}: {} vs {}",
                    r.params,
                    display_witness(&r.lhs),
                    display_witness(&r.rhs)
                )
            });
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            id, tally.verified, tally.refuted, tally.skipped, witness
        );
    }
    out
}

fn display_witness(value: &Option<Value>) -> String {
    value.as_ref().map_or_else(String::new, |v| v.to_string())
}
