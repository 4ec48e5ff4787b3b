//! Command-line front end: number tables, polynomial printing, p-adic
//! integration, and identity sweeps.
//!
//! Exit codes: 0 on success, 1 on usage or input-parse errors, 2 on
//! computation errors (violated preconditions, exceeded limits), 3 when
//! `verify --fail-on-refuted` finds a refuted point. Results go to standard
//! output, diagnostics to standard error.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use feuler::bernstein::{self, BernsteinIndex};
use feuler::expr::parse_poly;
use feuler::frobenius::{self, FEContext};
use feuler::harness::{self, claim_catalog, render, Grid, GridCaps, ParamValue, ReportFormat};
use feuler::padic::{self, IntegrandSpec, OddPrime};
use feuler::rational::parse_rational;
use feuler::Rational;

#[derive(Parser)]
#[command(
    name = "feuler",
    version,
    about = "Exact Frobenius-Euler numbers, Bernstein polynomials, fermionic \
             p-adic integrals, and an identity verification harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
// parsed once; the size spread between variants is irrelevant
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Print H_0(u) through H_max-n(u), computed by the recurrence.
    FeNumbers {
        /// The parameter u, as p/q (u != 1).
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        /// Largest index to print.
        #[arg(long)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Plain)]
        format: TableFormat,
        /// Recompute every value through the generating function and fail
        /// on any disagreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// Print the polynomial H_n(u, x), or its value at a point.
    FePoly {
        /// The parameter u, as p/q (u != 1).
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        /// Polynomial index.
        #[arg(long)]
        n: u32,
        /// Evaluate at this point instead of printing the polynomial.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Print the Bernstein basis polynomial B_(k,n), or its value at a point.
    Bernstein {
        /// Basis position, 0 <= k <= n.
        #[arg(long)]
        k: u32,
        /// Basis degree.
        #[arg(long)]
        n: u32,
        /// Evaluate at this point instead of printing the polynomial.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
    },
    /// Fermionic p-adic integral of u^x * poly(x).
    Integrate {
        /// An odd prime.
        #[arg(long)]
        p: u64,
        /// The base u, as p/q; the numeric route needs |u - 1|_p < 1.
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        /// The polynomial factor, for example "(1-x)^2" or "1/2 + x^3".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Report the residue mod p^precision.
        #[arg(long, default_value_t = 8)]
        precision: u32,
        /// Print the exact rational limit from the closed form instead of
        /// watching partial sums stabilize.
        #[arg(long)]
        exact: bool,
    },
    /// Sweep the identity catalog over a parameter grid and report every
    /// point as verified, refuted, or skipped.
    Verify {
        /// Comma-separated claim ids, or "all".
        #[arg(long, alias = "claim", default_value = "all")]
        claims: String,
        /// Path to a TOML grid file, or "default" for the built-in grid.
        #[arg(long, default_value = "default")]
        grid: String,
        #[arg(long, value_enum, default_value_t = ReportKind::Json)]
        format: ReportKind,
        /// Write the report to this file instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Exit with status 3 when any checked point is refuted.
        #[arg(long)]
        fail_on_refuted: bool,
        /// Only run points with this n.
        #[arg(long)]
        n: Option<i64>,
        /// Only run points with this k.
        #[arg(long)]
        k: Option<i64>,
        /// Only run points with this fold count s.
        #[arg(long)]
        s: Option<i64>,
        /// Only run points with this n1.
        #[arg(long)]
        n1: Option<i64>,
        /// Only run points with this n2.
        #[arg(long)]
        n2: Option<i64>,
        /// Only run points with this n3.
        #[arg(long)]
        n3: Option<i64>,
        /// Only run points with this u (as p/q).
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        /// Only run points with this x (as p/q).
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Only run points with this prime p.
        #[arg(long)]
        p: Option<i64>,
        /// Only run points with this partial-sum level.
        #[arg(long)]
        level: Option<i64>,
        /// Only run points with this monomial degree.
        #[arg(long)]
        degree: Option<i64>,
        /// Override the p-adic sub-grid precision.
        #[arg(long)]
        precision: Option<u32>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum TableFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Copy, Clone, ValueEnum)]
enum ReportKind {
    Json,
    Markdown,
}

impl From<ReportKind> for ReportFormat {
    fn from(kind: ReportKind) -> ReportFormat {
        match kind {
            ReportKind::Json => ReportFormat::Json,
            ReportKind::Markdown => ReportFormat::Markdown,
        }
    }
}

/// A diagnostic plus the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    /// Bad input text or values: exit code 1.
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    /// A violated computational precondition or exceeded limit: exit code 2.
    fn compute(err: feuler::Error) -> Failure {
        Failure {
            code: 2,
            message: err.to_string(),
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version go to standard output and exit 0; genuine
            // usage errors exit 1 per the documented contract.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::FeNumbers {
            u,
            max_n,
            format,
            cross_check,
        } => fe_numbers(&u, max_n, format, cross_check),
        Command::FePoly { u, n, x } => fe_poly(&u, n, x.as_deref()),
        Command::Bernstein { k, n, eval } => bernstein_cmd(k, n, eval.as_deref()),
        Command::Integrate {
            p,
            u,
            poly,
            precision,
            exact,
        } => integrate(p, &u, &poly, precision, exact),
        Command::Verify {
            claims,
            grid,
            format,
            report,
            fail_on_refuted,
            n,
            k,
            s,
            n1,
            n2,
            n3,
            u,
            x,
            p,
            level,
            degree,
            precision,
        } => {
            let ints = [
                ("n", n),
                ("k", k),
                ("s", s),
                ("n1", n1),
                ("n2", n2),
                ("n3", n3),
                ("p", p),
                ("level", level),
                ("degree", degree),
            ];
            let rats = [("u", u), ("x", x)];
            verify(VerifyArgs {
                claims,
                grid,
                format,
                report,
                fail_on_refuted,
                ints,
                rats,
                precision,
            })
        }
    }
}

fn parse_rational_arg(what: &str, text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| Failure::usage(format!("{what}: {e}")))
}

fn fe_numbers(
    u_text: &str,
    max_n: u32,
    format: TableFormat,
    cross_check: bool,
) -> Result<i32, Failure> {
    let u = parse_rational_arg("--u", u_text)?;
    let mut ctx = FEContext::new(u.clone()).map_err(Failure::compute)?;
    let mut values = Vec::with_capacity(max_n as usize + 1);
    for n in 0..=max_n {
        values.push(ctx.number(n).map_err(Failure::compute)?);
    }
    if cross_check {
        let series = frobenius::numbers_via_gf(&u, max_n).map_err(Failure::compute)?;
        if let Some(n) = (0..values.len()).find(|&n| values[n] != series[n]) {
            return Err(Failure {
                code: 2,
                message: format!(
                    "cross-check failed at n = {n}: recurrence gives {}, \
                     generating function gives {}",
                    values[n], series[n]
                ),
            });
        }
        eprintln!("cross-check passed: both routes agree for n <= {max_n}");
    }
    match format {
        TableFormat::Plain => {
            for (n, value) in values.iter().enumerate() {
                println!("H_{n}({u}) = {value}");
            }
        }
        TableFormat::Csv => {
            for (n, value) in values.iter().enumerate() {
                println!("{n},{value}");
            }
        }
        TableFormat::Json => {
            let doc = json!({
                "u": u.to_string(),
                "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("strings serialize")
            );
        }
    }
    Ok(0)
}

fn fe_poly(u_text: &str, n: u32, x: Option<&str>) -> Result<i32, Failure> {
    let u = parse_rational_arg("--u", u_text)?;
    let mut ctx = FEContext::new(u).map_err(Failure::compute)?;
    match x {
        None => println!("{}", ctx.poly(n).map_err(Failure::compute)?),
        Some(x_text) => {
            let x = parse_rational_arg("--x", x_text)?;
            println!("{}", ctx.eval(n, &x).map_err(Failure::compute)?);
        }
    }
    Ok(0)
}

fn bernstein_cmd(k: u32, n: u32, eval: Option<&str>) -> Result<i32, Failure> {
    let idx = BernsteinIndex::new(k, n).map_err(Failure::compute)?;
    match eval {
        None => println!("{}", bernstein::poly(idx)),
        Some(x_text) => {
            let x = parse_rational_arg("--eval", x_text)?;
            println!("{}", bernstein::eval(idx, &x));
        }
    }
    Ok(0)
}

fn integrate(
    p: u64,
    u_text: &str,
    poly_text: &str,
    precision: u32,
    exact: bool,
) -> Result<i32, Failure> {
    let p = OddPrime::new(p).map_err(Failure::compute)?;
    let u = parse_rational_arg("--u", u_text)?;
    let poly = parse_poly(poly_text).map_err(|e| Failure::usage(format!("--poly: {e}")))?;
    let spec = IntegrandSpec::new(u, poly).map_err(Failure::compute)?;
    if exact {
        let value = padic::integral_exact_via_fe(&spec).map_err(Failure::compute)?;
        println!("{value}");
    } else {
        let residue = padic::integral(&spec, p, precision).map_err(Failure::compute)?;
        println!("{residue}");
    }
    Ok(0)
}

struct VerifyArgs {
    claims: String,
    grid: String,
    format: ReportKind,
    report: Option<PathBuf>,
    fail_on_refuted: bool,
    ints: [(&'static str, Option<i64>); 9],
    rats: [(&'static str, Option<String>); 2],
    precision: Option<u32>,
}

fn verify(args: VerifyArgs) -> Result<i32, Failure> {
    let catalog = claim_catalog();
    let selected: Vec<_> = if args.claims == "all" {
        catalog
    } else {
        let mut picked = Vec::new();
        for id in args.claims.split(',') {
            let id = id.trim();
            match catalog.iter().find(|c| c.id == id) {
                Some(claim) => picked.push(*claim),
                None => {
                    let known: Vec<_> = catalog.iter().map(|c| c.id).collect();
                    return Err(Failure::usage(format!(
                        "unknown claim id '{id}'; known ids: {}",
                        known.join(", ")
                    )));
                }
            }
        }
        picked
    };

    let mut grid = if args.grid == "default" {
        Grid::default()
    } else {
        let text = fs::read_to_string(&args.grid)
            .map_err(|e| Failure::usage(format!("cannot read grid file '{}': {e}", args.grid)))?;
        Grid::from_toml(&text).map_err(|e| Failure::usage(e.to_string()))?
    };
    if let Some(precision) = args.precision {
        grid.padic.precision = precision;
    }

    let mut filter: Vec<(&'static str, ParamValue)> = Vec::new();
    for (name, value) in args.ints {
        if let Some(v) = value {
            filter.push((name, ParamValue::Int(v)));
        }
    }
    for (name, value) in &args.rats {
        if let Some(text) = value {
            let q = parse_rational_arg(&format!("--{name}"), text)?;
            filter.push((name, ParamValue::Rat(q)));
        }
    }

    let report = harness::sweep_filtered(&selected, &grid, &GridCaps::default(), &filter)
        .map_err(Failure::compute)?;
    let text = render(&report, args.format.into());
    match &args.report {
        None => print!("{text}"),
        Some(path) => {
            fs::write(path, &text).map_err(|e| Failure {
                code: 2,
                message: format!("cannot write report to '{}': {e}", path.display()),
            })?;
            eprintln!("report written to {}", path.display());
        }
    }

    let any_refuted = report.summary.values().any(|tally| tally.refuted > 0);
    if args.fail_on_refuted && any_refuted {
        return Ok(3);
    }
    Ok(0)
}
