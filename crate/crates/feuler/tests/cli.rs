//! End-to-end runs of the command-line interface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn feuler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_feuler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn tmp_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn fe_numbers_csv_and_plain() {
    let out = feuler(&["fe-numbers", "--u", "2", "--max-n", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0,1\n1,1\n2,3\n");

    let out = feuler(&["fe-numbers", "--u", "-1/2", "--max-n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "H_0(-1/2) = 1\nH_1(-1/2) = -2/3\n");
}

#[test]
fn fe_numbers_json_is_parseable() {
    let out = feuler(&[
        "fe-numbers",
        "--u",
        "5/3",
        "--max-n",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["u"], "5/3");
    assert_eq!(doc["values"].as_array().unwrap().len(), 4);
}

#[test]
fn fe_numbers_cross_check_reports_agreement() {
    let out = feuler(&["fe-numbers", "--u", "5/3", "--max-n", "12", "--cross-check"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("cross-check passed"));
}

#[test]
fn invalid_parameter_is_a_computation_error() {
    let out = feuler(&["fe-numbers", "--u", "1", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:"));
}

#[test]
fn unparseable_rational_is_a_usage_error() {
    let out = feuler(&["fe-numbers", "--u", "two", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn fe_poly_prints_polynomials_and_values() {
    let out = feuler(&["fe-poly", "--u", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "x^2 + 2*x + 3\n");

    let out = feuler(&["fe-poly", "--u", "-1/2", "--n", "2", "--x", "2"]);
    assert_eq!(stdout(&out), "14/9\n");
}

#[test]
fn bernstein_prints_basis_and_values() {
    let out = feuler(&["bernstein", "--k", "1", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3*x^3 - 6*x^2 + 3*x\n");

    let out = feuler(&["bernstein", "--k", "1", "--n", "3", "--eval", "1/2"]);
    assert_eq!(stdout(&out), "3/8\n");

    let out = feuler(&["bernstein", "--k", "4", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn integrate_numeric_and_exact() {
    let out = feuler(&["integrate", "--p", "3", "--u", "4", "--poly", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3937 mod 3^8\n");

    let out = feuler(&[
        "integrate",
        "--p",
        "3",
        "--u",
        "4",
        "--poly",
        "1",
        "--exact",
    ]);
    assert_eq!(stdout(&out), "2/5\n");

    let out = feuler(&[
        "integrate",
        "--p",
        "3",
        "--u",
        "4",
        "--poly",
        "1",
        "--precision",
        "6",
    ]);
    assert_eq!(stdout(&out), "292 mod 3^6\n");
}

#[test]
fn integrate_rejects_parameters_without_a_limit() {
    let out = feuler(&["integrate", "--p", "3", "--u", "2", "--poly", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("|u - 1|"));
}

#[test]
fn malformed_polynomial_is_a_usage_error_with_offset() {
    let out = feuler(&["integrate", "--p", "3", "--u", "4", "--poly", "2x"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("byte 1"), "{}", stderr(&out));
}

#[test]
fn verify_single_claim_json() {
    let out = feuler(&["verify", "--claims", "C1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["summary"]["C1"]["verified"], 45);
    assert_eq!(doc["summary"]["C1"]["refuted"], 0);
}

#[test]
fn verify_accepts_the_singular_claim_alias() {
    let out = feuler(&["verify", "--claim", "C-BSYM"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_rejects_unknown_claim_ids() {
    let out = feuler(&["verify", "--claims", "C99"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("unknown claim id 'C99'"), "{err}");
    assert!(err.contains("C-SHIFT"), "{err}");
}

#[test]
fn verify_point_filters_narrow_the_sweep() {
    let out = feuler(&[
        "verify", "--claims", "C4", "--n", "1", "--u", "2", "--x", "2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = doc["results"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["status"], "refuted");
    assert_eq!(rows[0]["lhs"], "-5/3");
    assert_eq!(rows[0]["rhs"], "-4/3");
    assert_eq!(doc["point_filter"].as_object().unwrap().len(), 3);
    assert_eq!(doc["point_filter"]["n"], 1);
    assert_eq!(doc["point_filter"]["u"], "2");
}

#[test]
fn verify_exit_three_on_refutation_when_asked() {
    let out = feuler(&["verify", "--claims", "C4", "--fail-on-refuted"]);
    assert_eq!(out.status.code(), Some(3));

    let out = feuler(&["verify", "--claims", "C4-fixed", "--fail-on-refuted"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_writes_report_files() {
    let path = tmp_path("verify_report.md");
    let out = feuler(&[
        "verify",
        "--claims",
        "C1",
        "--format",
        "markdown",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("report written"));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# Identity sweep report"));
}

#[test]
fn verify_grid_file_errors() {
    let out = feuler(&[
        "verify",
        "--claims",
        "C1",
        "--grid",
        "/nonexistent/grid.toml",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cannot read grid file"));

    let bad = tmp_path("bad_grid.toml");
    std::fs::write(&bad, "nonsense = true\n").unwrap();
    let out = feuler(&["verify", "--claims", "C1", "--grid", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // a readable grid beyond the caps is a computation error, not usage
    let oversized = tmp_path("oversized_grid.toml");
    std::fs::write(&oversized, "n = [40]\n").unwrap();
    let out = feuler(&[
        "verify",
        "--claims",
        "C1",
        "--grid",
        oversized.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_accepts_custom_grid_files() {
    let path = tmp_path("small_grid.toml");
    std::fs::write(&path, "n = [0, 1, 2]\nu = [\"3\"]\n").unwrap();
    let out = feuler(&[
        "verify",
        "--claims",
        "C1",
        "--grid",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["summary"]["C1"]["verified"], 3);
}

#[test]
fn help_and_version_exit_zero() {
    let out = feuler(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for sub in ["fe-numbers", "fe-poly", "bernstein", "integrate", "verify"] {
        assert!(text.contains(sub), "missing {sub}");
    }

    let out = feuler(&["--version"]);
    assert_eq!(out.status.code(), Some(0));

    let out = feuler(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
}
