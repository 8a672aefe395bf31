//! Command-line interface: `sconvex-ineq <verify|sweep|optimize|means|check-sconvex>`.
//!
//! Exit codes: 0 when every checked inequality holds, 1 when some report is a
//! violation (an unsatisfied bound, a failed identity or constant check, a
//! failed s-convexity test), 2 on usage, parse, or evaluation errors.
//!
//! Output is a JSON envelope `{tool_version, command, reports}` by default;
//! the bound-shaped commands (`verify identity|bound|hh|simpson` and `sweep`)
//! can emit CSV instead. A `--config FILE` JSON object can supply any flag's
//! value (keys named like the flags); explicit flags override the file.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundKind, CorollaryId};
use crate::core::{BoundReport, InequalityParams, Interval};
use crate::error::Error;
use crate::explorer::{self, RowStatus, SweepRow, SweepSpec, WhichBound};
use crate::functions::Builtin;
use crate::identities;
use crate::means;
use crate::sconvexity;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_TOL: f64 = 1e-10;
const TOL_MIN: f64 = 1e-14;
const TOL_MAX: f64 = 1e-2;
const CSV_HEADER: &str = "s,lambda,mu,p,r,u,v,lhs,rhs,margin,ratio,satisfied,quad_error";

/// Parses `std::env::args`, runs the command, writes the report, and returns
/// the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            if let Err(e) = emit(&outcome) {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
            if outcome.pass {
                EXIT_PASS
            } else {
                EXIT_VIOLATION
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Parser)]
#[command(
    name = "sconvex-ineq",
    version,
    about = "Verify weighted trapezoid/midpoint/Simpson-type integral inequalities \
             for s-convex functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities, bounds, classical baselines, and reference constants
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Evaluate a (s, lambda, mu, p, r) grid described by a JSON spec file
    Sweep(SweepArgs),
    /// Search the weights (lambda, mu) minimizing a bound
    Optimize(OptimizeArgs),
    /// Print special means and the mean-inequality consequences
    Means(MeansArgs),
    /// Grid-check s-convexity of a builtin function
    #[command(name = "check-sconvex")]
    CheckSconvex(CheckArgs),
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Evaluate both sides of the weighted integral identity and compare
    Identity(IdentityArgs),
    /// Compare the closed-form absolute moments against the quadrature oracle
    Lemma2(Lemma2Args),
    /// Evaluate the deviation functional against one closed-form bound
    Bound(BoundArgs),
    /// Check the midpoint <= mean <= endpoint-average chain
    Hh(HhArgs),
    /// Check the classical Simpson remainder bound
    Simpson(SimpsonArgs),
    /// Recompute the cataloged reference constants at printed precision
    Corollary(CorollaryArgs),
}

/// Flags shared by every command: output format, destination, config file.
#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format (default json)
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON file with default values for any flag of this command
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct IdentityArgs {
    /// Function selector: power:q=Q | invpower:s=S | exp | xlnx | abs_shift:c=C
    #[arg(long = "f")]
    function: Option<String>,
    #[arg(long)]
    u: Option<f64>,
    #[arg(long)]
    v: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    /// Quadrature tolerance in [1e-14, 1e-2]
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct Lemma2Args {
    /// Offset y in [0, 1] of the moment integrals
    #[arg(long)]
    y: Option<f64>,
    /// Exponent x > 0 of the moment integrals
    #[arg(long)]
    x: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct BoundArgs {
    /// Which bound: t0 (Hölder) or t1 (power mean)
    #[arg(long)]
    which: Option<String>,
    #[arg(long = "f")]
    function: Option<String>,
    #[arg(long)]
    u: Option<f64>,
    #[arg(long)]
    v: Option<f64>,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    /// Also grid-check that |f'|^r is s-convex and annotate the report
    #[arg(long)]
    check_hypothesis: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct HhArgs {
    #[arg(long = "f")]
    function: Option<String>,
    #[arg(long)]
    u: Option<f64>,
    #[arg(long)]
    v: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SimpsonArgs {
    #[arg(long = "f")]
    function: Option<String>,
    #[arg(long)]
    u: Option<f64>,
    #[arg(long)]
    v: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CorollaryArgs {
    /// Preset id: i|ii|iii|iv|v|vi|s1_half|s1_third|s1_twothirds|midpoint_trapezoid|all
    #[arg(long)]
    id: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// JSON sweep specification (function, interval, grids, which, ...)
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Override the sweep spec file's function selector
    #[arg(long = "f")]
    function: Option<String>,
    #[arg(long)]
    u: Option<f64>,
    #[arg(long)]
    v: Option<f64>,
    /// Override which bound to sweep: t0|t1|both
    #[arg(long)]
    which: Option<String>,
    #[arg(long)]
    tol: Option<f64>,
    /// Grid-check the s-convexity hypothesis for each row
    #[arg(long)]
    check_hypothesis: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OptimizeArgs {
    /// Which bound: t0 (Hölder, needs --p) or t1 (power mean, needs --r)
    #[arg(long)]
    which: Option<String>,
    #[arg(long = "f")]
    function: Option<String>,
    #[arg(long)]
    u: Option<f64>,
    #[arg(long)]
    v: Option<f64>,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct MeansArgs {
    #[arg(long)]
    u: Option<f64>,
    #[arg(long)]
    v: Option<f64>,
    /// Order of the generalized logarithmic mean to print (default 1)
    #[arg(long)]
    lp: Option<f64>,
    /// Mean-inequality consequence to evaluate: p1 | p2 | p3
    #[arg(long)]
    prop: Option<String>,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long = "f")]
    function: Option<String>,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long)]
    u: Option<f64>,
    #[arg(long)]
    v: Option<f64>,
    /// Number of grid points per axis (default 50)
    #[arg(long)]
    grid: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

/// Keys a `--config` JSON file may supply; they mirror the flag names.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    f: Option<String>,
    u: Option<f64>,
    v: Option<f64>,
    s: Option<f64>,
    lambda: Option<f64>,
    mu: Option<f64>,
    p: Option<f64>,
    r: Option<f64>,
    tol: Option<f64>,
    which: Option<String>,
    id: Option<String>,
    y: Option<f64>,
    x: Option<f64>,
    grid: Option<usize>,
    lp: Option<f64>,
    prop: Option<String>,
    spec: Option<PathBuf>,
    check_hypothesis: Option<bool>,
    format: Option<Format>,
    out: Option<PathBuf>,
}

fn load_config(path: &Option<PathBuf>) -> Result<FileConfig, Error> {
    match path {
        None => Ok(FileConfig::default()),
        Some(p) => {
            let text = fs::read_to_string(p)?;
            serde_json::from_str(&text)
                .map_err(|e| Error::parse(format!("config file {}: {e}", p.display())))
        }
    }
}

fn require<T>(flag: Option<T>, file: Option<T>, name: &str) -> Result<T, Error> {
    flag.or(file)
        .ok_or_else(|| Error::parse(format!("missing required value --{name} (flag or config)")))
}

fn resolve_tol(flag: Option<f64>, file: Option<f64>) -> Result<f64, Error> {
    let tol = flag.or(file).unwrap_or(DEFAULT_TOL);
    if !(TOL_MIN..=TOL_MAX).contains(&tol) {
        return Err(Error::Range {
            field: "tol",
            value: tol,
            requirement: "must lie in [1e-14, 1e-2]",
        });
    }
    Ok(tol)
}

fn parse_bound_kind(which: &str) -> Result<BoundKind, Error> {
    match which {
        "t0" | "holder" => Ok(BoundKind::Holder),
        "t1" | "power_mean" => Ok(BoundKind::PowerMean),
        other => Err(Error::parse(format!(
            "unknown bound selector `{other}` (expected t0 or t1)"
        ))),
    }
}

fn parse_which_bound(which: &str) -> Result<WhichBound, Error> {
    match which {
        "t0" | "holder" => Ok(WhichBound::Holder),
        "t1" | "power_mean" => Ok(WhichBound::PowerMean),
        "both" => Ok(WhichBound::Both),
        other => Err(Error::parse(format!(
            "unknown bound selector `{other}` (expected t0, t1, or both)"
        ))),
    }
}

/// Builds params from optional p and r: both given are validated as
/// conjugates downstream; p alone derives r; r alone is power-mean shaped.
fn build_params(
    s: f64,
    lambda: f64,
    mu: f64,
    p: Option<f64>,
    r: Option<f64>,
    kind: BoundKind,
) -> Result<InequalityParams, Error> {
    match (kind, p, r) {
        (_, Some(p), Some(r)) => Ok(InequalityParams {
            s,
            lambda,
            mu,
            p: Some(p),
            r,
        }),
        (_, Some(p), None) => Ok(InequalityParams::holder(s, lambda, mu, p)),
        (BoundKind::PowerMean, None, Some(r)) => Ok(InequalityParams::power_mean(s, lambda, mu, r)),
        (BoundKind::Holder, None, _) => Err(Error::parse(
            "the t0 bound needs --p (conjugate r is derived, or pass --r as well)",
        )),
        (BoundKind::PowerMean, None, None) => {
            Err(Error::parse("the t1 bound needs --r (any r >= 1)"))
        }
    }
}

struct Outcome {
    pass: bool,
    body: String,
    out: Option<PathBuf>,
}

fn emit(outcome: &Outcome) -> Result<(), Error> {
    match &outcome.out {
        Some(path) => fs::write(path, &outcome.body)?,
        None => print!("{}", outcome.body),
    }
    Ok(())
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    tool_version: &'static str,
    command: &'static str,
    reports: Vec<T>,
}

fn render_json<T: Serialize>(command: &'static str, reports: Vec<T>) -> Result<String, Error> {
    let envelope = Envelope {
        tool_version: env!("CARGO_PKG_VERSION"),
        command,
        reports,
    };
    Ok(serde_json::to_string_pretty(&envelope)? + "\n")
}

fn json_only(format: Format, command: &str) -> Result<(), Error> {
    if format == Format::Csv {
        return Err(Error::parse(format!(
            "`{command}` has no CSV form; use --format json"
        )));
    }
    Ok(())
}

/// One line of the CSV schema. Missing values render as empty fields.
#[derive(Default)]
struct CsvRow {
    s: Option<f64>,
    lambda: Option<f64>,
    mu: Option<f64>,
    p: Option<f64>,
    r: Option<f64>,
    u: Option<f64>,
    v: Option<f64>,
    lhs: Option<f64>,
    rhs: Option<f64>,
    margin: Option<f64>,
    ratio: Option<f64>,
    satisfied: Option<bool>,
    quad_error: Option<f64>,
    status: Option<String>,
}

impl CsvRow {
    fn from_report(report: &BoundReport) -> CsvRow {
        CsvRow {
            s: Some(report.params.s),
            lambda: Some(report.params.lambda),
            mu: Some(report.params.mu),
            p: report.params.p,
            r: Some(report.params.r),
            u: Some(report.interval.u()),
            v: Some(report.interval.v()),
            lhs: Some(report.lhs),
            rhs: Some(report.rhs),
            margin: Some(report.margin),
            ratio: Some(report.ratio),
            satisfied: Some(report.satisfied),
            quad_error: Some(report.quad_error),
            status: None,
        }
    }
}

fn csv_field(value: &str) -> String {
    if value.contains([',', '"', '\n']) {
        format!("\"{}\"", value.replace('"', "\"\""))
    } else {
        value.to_string()
    }
}

fn fmt_f64(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn render_csv(rows: &[CsvRow], with_status: bool) -> String {
    let mut text = String::from(CSV_HEADER);
    if with_status {
        text.push_str(",status");
    }
    text.push('\n');
    for row in rows {
        let mut fields = vec![
            fmt_f64(row.s),
            fmt_f64(row.lambda),
            fmt_f64(row.mu),
            fmt_f64(row.p),
            fmt_f64(row.r),
            fmt_f64(row.u),
            fmt_f64(row.v),
            fmt_f64(row.lhs),
            fmt_f64(row.rhs),
            fmt_f64(row.margin),
            fmt_f64(row.ratio),
            row.satisfied.map(|b| b.to_string()).unwrap_or_default(),
            fmt_f64(row.quad_error),
        ];
        if with_status {
            fields.push(csv_field(row.status.as_deref().unwrap_or("")));
        }
        text.push_str(&fields.join(","));
        text.push('\n');
    }
    text
}

fn execute(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Verify(VerifyCommand::Identity(args)) => cmd_identity(args),
        Command::Verify(VerifyCommand::Lemma2(args)) => cmd_lemma2(args),
        Command::Verify(VerifyCommand::Bound(args)) => cmd_bound(args),
        Command::Verify(VerifyCommand::Hh(args)) => cmd_hh(args),
        Command::Verify(VerifyCommand::Simpson(args)) => cmd_simpson(args),
        Command::Verify(VerifyCommand::Corollary(args)) => cmd_corollary(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Optimize(args) => cmd_optimize(args),
        Command::Means(args) => cmd_means(args),
        Command::CheckSconvex(args) => cmd_check_sconvex(args),
    }
}

fn resolve_output(output: &OutputArgs, cfg: &FileConfig) -> (Format, Option<PathBuf>) {
    let format = output.format.or(cfg.format).unwrap_or(Format::Json);
    let out = output.out.clone().or_else(|| cfg.out.clone());
    (format, out)
}

#[derive(Serialize)]
struct IdentityReport {
    function: String,
    interval: Interval,
    lambda: f64,
    mu: f64,
    lhs: f64,
    rhs: f64,
    abs_diff: f64,
    threshold: f64,
    quad_error: f64,
    passed: bool,
}

fn cmd_identity(args: IdentityArgs) -> Result<Outcome, Error> {
    let cfg = load_config(&args.output.config)?;
    let (format, out) = resolve_output(&args.output, &cfg);
    let selector = require(args.function, cfg.f, "f")?;
    let u = require(args.u, cfg.u, "u")?;
    let v = require(args.v, cfg.v, "v")?;
    let lambda = require(args.lambda, cfg.lambda, "lambda")?;
    let mu = require(args.mu, cfg.mu, "mu")?;
    let tol = resolve_tol(args.tol, cfg.tol)?;

    let iv = Interval::new(u, v)?;
    let f = Builtin::parse(&selector)?.spec_on(iv)?;
    let lhs = identities::identity_lhs_with_error(&f, iv, lambda, mu, tol)?;
    let rhs = identities::identity_rhs_with_error(&f, iv, lambda, mu, tol)?;
    let abs_diff = (lhs.value - rhs.value).abs();
    let quad_error = lhs.quad_error + rhs.quad_error;
    let threshold = quad_error + 1e-12 * (1.0 + lhs.value.abs() + rhs.value.abs());
    let passed = abs_diff <= threshold;
    let report = IdentityReport {
        function: f.label().to_string(),
        interval: iv,
        lambda,
        mu,
        lhs: lhs.value,
        rhs: rhs.value,
        abs_diff,
        threshold,
        quad_error,
        passed,
    };
    let body = match format {
        Format::Json => render_json("verify identity", vec![&report])?,
        Format::Csv => render_csv(
            &[CsvRow {
                lambda: Some(lambda),
                mu: Some(mu),
                u: Some(u),
                v: Some(v),
                lhs: Some(report.lhs),
                rhs: Some(report.rhs),
                margin: Some(report.rhs - report.lhs),
                satisfied: Some(passed),
                quad_error: Some(quad_error),
                ..CsvRow::default()
            }],
            false,
        ),
    };
    Ok(Outcome {
        pass: passed,
        body,
        out,
    })
}

#[derive(Serialize)]
struct MomentReport {
    y: f64,
    x: f64,
    m0_closed: f64,
    m0_quadrature: f64,
    m0_abs_diff: f64,
    m1_closed: f64,
    m1_quadrature: f64,
    m1_abs_diff: f64,
    rel_tolerance: f64,
    passed: bool,
}

fn cmd_lemma2(args: Lemma2Args) -> Result<Outcome, Error> {
    const REL_TOL: f64 = 1e-9;
    let cfg = load_config(&args.output.config)?;
    let (format, out) = resolve_output(&args.output, &cfg);
    json_only(format, "verify lemma2")?;
    let y = require(args.y, cfg.y, "y")?;
    let x = require(args.x, cfg.x, "x")?;
    let tol = resolve_tol(args.tol, cfg.tol)?;

    let closed = identities::abs_moments(y, x)?;
    let (q0, q1) = identities::abs_moments_by_quadrature(y, x, tol)?;
    let m0_abs_diff = (closed.m0 - q0.value).abs();
    let m1_abs_diff = (closed.m1 - q1.value).abs();
    let passed = m0_abs_diff <= q0.error_estimate + REL_TOL * closed.m0
        && m1_abs_diff <= q1.error_estimate + REL_TOL * closed.m1;
    let report = MomentReport {
        y,
        x,
        m0_closed: closed.m0,
        m0_quadrature: q0.value,
        m0_abs_diff,
        m1_closed: closed.m1,
        m1_quadrature: q1.value,
        m1_abs_diff,
        rel_tolerance: REL_TOL,
        passed,
    };
    Ok(Outcome {
        pass: passed,
        body: render_json("verify lemma2", vec![&report])?,
        out,
    })
}

#[derive(Serialize)]
struct AnnotatedBoundReport {
    #[serde(flatten)]
    report: BoundReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    hypothesis_ok: Option<bool>,
}

fn cmd_bound(args: BoundArgs) -> Result<Outcome, Error> {
    let cfg = load_config(&args.output.config)?;
    let (format, out) = resolve_output(&args.output, &cfg);
    let kind = parse_bound_kind(&require(args.which, cfg.which, "which")?)?;
    let selector = require(args.function, cfg.f, "f")?;
    let u = require(args.u, cfg.u, "u")?;
    let v = require(args.v, cfg.v, "v")?;
    let s = require(args.s, cfg.s, "s")?;
    let lambda = require(args.lambda, cfg.lambda, "lambda")?;
    let mu = require(args.mu, cfg.mu, "mu")?;
    let tol = resolve_tol(args.tol, cfg.tol)?;
    let check_hypothesis = args.check_hypothesis || cfg.check_hypothesis.unwrap_or(false);
    let params = build_params(s, lambda, mu, args.p.or(cfg.p), args.r.or(cfg.r), kind)?;

    let iv = Interval::new(u, v)?;
    let f = Builtin::parse(&selector)?.spec_on(iv)?;
    let report = bounds::bound_report(&f, iv, params, kind, tol)?;
    let hypothesis_ok = if check_hypothesis {
        let g = sconvexity::derivative_magnitude_power(&f, params.r);
        Some(sconvexity::check_s_convex(&g, params.s, iv, sconvexity::DEFAULT_GRID)?.passes)
    } else {
        None
    };
    let pass = report.satisfied;
    let body = match format {
        Format::Json => render_json(
            "verify bound",
            vec![AnnotatedBoundReport {
                report,
                hypothesis_ok,
            }],
        )?,
        Format::Csv => render_csv(&[CsvRow::from_report(&report)], false),
    };
    Ok(Outcome { pass, body, out })
}

fn cmd_hh(args: HhArgs) -> Result<Outcome, Error> {
    let cfg = load_config(&args.output.config)?;
    let (format, out) = resolve_output(&args.output, &cfg);
    let selector = require(args.function, cfg.f, "f")?;
    let u = require(args.u, cfg.u, "u")?;
    let v = require(args.v, cfg.v, "v")?;
    let tol = resolve_tol(args.tol, cfg.tol)?;

    let iv = Interval::new(u, v)?;
    let f = Builtin::parse(&selector)?.spec_on(iv)?;
    let report = bounds::hermite_hadamard_check(&f, iv, tol)?;
    let pass = report.left_ok && report.right_ok;
    let body = match format {
        Format::Json => render_json("verify hh", vec![&report])?,
        Format::Csv => render_csv(
            &[
                CsvRow {
                    u: Some(u),
                    v: Some(v),
                    lhs: Some(report.midpoint_value),
                    rhs: Some(report.mean_integral),
                    margin: Some(report.mean_integral - report.midpoint_value),
                    satisfied: Some(report.left_ok),
                    quad_error: Some(report.quad_error),
                    ..CsvRow::default()
                },
                CsvRow {
                    u: Some(u),
                    v: Some(v),
                    lhs: Some(report.mean_integral),
                    rhs: Some(report.endpoint_average),
                    margin: Some(report.endpoint_average - report.mean_integral),
                    satisfied: Some(report.right_ok),
                    quad_error: Some(report.quad_error),
                    ..CsvRow::default()
                },
            ],
            false,
        ),
    };
    Ok(Outcome { pass, body, out })
}

fn cmd_simpson(args: SimpsonArgs) -> Result<Outcome, Error> {
    let cfg = load_config(&args.output.config)?;
    let (format, out) = resolve_output(&args.output, &cfg);
    let selector = require(args.function, cfg.f, "f")?;
    let u = require(args.u, cfg.u, "u")?;
    let v = require(args.v, cfg.v, "v")?;
    let tol = resolve_tol(args.tol, cfg.tol)?;

    let iv = Interval::new(u, v)?;
    let f = Builtin::parse(&selector)?.spec_on(iv)?;
    let report = bounds::simpson_classical_check(&f, iv, tol)?;
    let pass = report.satisfied;
    let body = match format {
        Format::Json => render_json("verify simpson", vec![&report])?,
        Format::Csv => render_csv(&[CsvRow::from_report(&report)], false),
    };
    Ok(Outcome { pass, body, out })
}

fn cmd_corollary(args: CorollaryArgs) -> Result<Outcome, Error> {
    let cfg = load_config(&args.output.config)?;
    let (format, out) = resolve_output(&args.output, &cfg);
    json_only(format, "verify corollary")?;
    let id = require(args.id, cfg.id, "id")?;
    let checks = if id == "all" {
        CorollaryId::ALL
            .iter()
            .map(|&id| bounds::verify_corollary(id))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        vec![bounds::verify_corollary(CorollaryId::parse(&id)?)?]
    };
    let pass = checks.iter().all(|c| c.all_ok);
    Ok(Outcome {
        pass,
        body: render_json("verify corollary", checks)?,
        out,
    })
}

fn status_label(status: &RowStatus) -> String {
    match status {
        RowStatus::Ok => "ok".to_string(),
        RowStatus::HypothesisFailed => "hypothesis_failed".to_string(),
        RowStatus::Error { message } => format!("error: {message}"),
    }
}

fn sweep_csv_row(row: &SweepRow) -> CsvRow {
    let mut csv = match &row.report {
        Some(report) => CsvRow::from_report(report),
        None => CsvRow {
            s: Some(row.params.s),
            lambda: Some(row.params.lambda),
            mu: Some(row.params.mu),
            p: row.params.p,
            r: Some(row.params.r),
            ..CsvRow::default()
        },
    };
    csv.status = Some(status_label(&row.status));
    csv
}

fn cmd_sweep(args: SweepArgs) -> Result<Outcome, Error> {
    let cfg = load_config(&args.output.config)?;
    let (format, out) = resolve_output(&args.output, &cfg);
    let spec_path = require(args.spec, cfg.spec, "spec")?;
    let text = fs::read_to_string(&spec_path)?;
    let mut spec: SweepSpec = serde_json::from_str(&text)
        .map_err(|e| Error::parse(format!("sweep spec {}: {e}", spec_path.display())))?;
    if let Some(f) = args.function.or(cfg.f) {
        spec.function = f;
    }
    if let Some(u) = args.u.or(cfg.u) {
        spec.u = u;
    }
    if let Some(v) = args.v.or(cfg.v) {
        spec.v = v;
    }
    if let Some(which) = args.which.or(cfg.which) {
        spec.which = parse_which_bound(&which)?;
    }
    if let Some(tol) = args.tol.or(cfg.tol) {
        spec.tol = tol;
    }
    if args.check_hypothesis || cfg.check_hypothesis.unwrap_or(false) {
        spec.check_hypothesis = true;
    }
    if !(TOL_MIN..=TOL_MAX).contains(&spec.tol) {
        return Err(Error::Range {
            field: "tol",
            value: spec.tol,
            requirement: "must lie in [1e-14, 1e-2]",
        });
    }

    let rows = explorer::sweep(&spec)?;
    // Violations are unsatisfied rows whose hypothesis was not flagged;
    // per-row evaluation errors are recorded, not fatal.
    let pass = !rows.iter().any(|row| {
        row.status == RowStatus::Ok && row.report.as_ref().is_some_and(|r| !r.satisfied)
    });
    let body = match format {
        Format::Json => render_json("sweep", rows)?,
        Format::Csv => {
            let csv_rows: Vec<CsvRow> = rows.iter().map(sweep_csv_row).collect();
            render_csv(&csv_rows, true)
        }
    };
    Ok(Outcome { pass, body, out })
}

fn cmd_optimize(args: OptimizeArgs) -> Result<Outcome, Error> {
    let cfg = load_config(&args.output.config)?;
    let (format, out) = resolve_output(&args.output, &cfg);
    json_only(format, "optimize")?;
    let kind = parse_bound_kind(&require(args.which, cfg.which, "which")?)?;
    let selector = require(args.function, cfg.f, "f")?;
    let u = require(args.u, cfg.u, "u")?;
    let v = require(args.v, cfg.v, "v")?;
    let s = require(args.s, cfg.s, "s")?;
    let tol = resolve_tol(args.tol, cfg.tol)?;
    let base = build_params(s, 0.0, 0.0, args.p.or(cfg.p), args.r.or(cfg.r), kind)?;

    let iv = Interval::new(u, v)?;
    let f = Builtin::parse(&selector)?.spec_on(iv)?;
    let optimum = explorer::minimize_bound(&f, iv, base, kind, tol)?;
    let pass = optimum.satisfied;
    Ok(Outcome {
        pass,
        body: render_json("optimize", vec![&optimum])?,
        out,
    })
}

#[derive(Serialize)]
struct PropositionReport {
    prop: String,
    #[serde(flatten)]
    report: BoundReport,
}

#[derive(Serialize)]
struct MeansReport {
    means: means::MeanValues,
    #[serde(skip_serializing_if = "Option::is_none")]
    proposition: Option<PropositionReport>,
}

fn cmd_means(args: MeansArgs) -> Result<Outcome, Error> {
    let cfg = load_config(&args.output.config)?;
    let (format, out) = resolve_output(&args.output, &cfg);
    json_only(format, "means")?;
    let u = require(args.u, cfg.u, "u")?;
    let v = require(args.v, cfg.v, "v")?;
    let lp = args.lp.or(cfg.lp).unwrap_or(1.0);
    let values = means::compute_means(u, v, Some(lp))?;

    let proposition = match args.prop.or(cfg.prop).as_deref() {
        None => None,
        Some(prop @ ("p1" | "p2")) => {
            let s = require(args.s, cfg.s, "s")?;
            let lambda = require(args.lambda, cfg.lambda, "lambda")?;
            let mu = require(args.mu, cfg.mu, "mu")?;
            let p = args.p.or(cfg.p);
            let r = args.r.or(cfg.r);
            let report = if prop == "p1" {
                let params = build_params(s, lambda, mu, p, r, BoundKind::Holder)?;
                means::proposition_xs_holder(u, v, params)?
            } else {
                let params = build_params(s, lambda, mu, p, r, BoundKind::PowerMean)?;
                means::proposition_xs_powermean(u, v, params)?
            };
            Some(PropositionReport {
                prop: prop.to_string(),
                report,
            })
        }
        // p3 is fully pinned (s = r = 1, lambda = mu = 1/3); weight and
        // order flags are accepted but not consulted.
        Some("p3") => Some(PropositionReport {
            prop: "p3".to_string(),
            report: means::proposition_inverse_power(u, v)?,
        }),
        Some(other) => {
            return Err(Error::parse(format!(
                "unknown proposition `{other}` (expected p1, p2, or p3)"
            )))
        }
    };
    let pass = proposition.as_ref().is_none_or(|p| p.report.satisfied);
    Ok(Outcome {
        pass,
        body: render_json(
            "means",
            vec![MeansReport {
                means: values,
                proposition,
            }],
        )?,
        out,
    })
}

#[derive(Serialize)]
struct SConvexityCliReport {
    function: String,
    interval: Interval,
    #[serde(flatten)]
    report: sconvexity::SConvexityReport,
}

fn cmd_check_sconvex(args: CheckArgs) -> Result<Outcome, Error> {
    let cfg = load_config(&args.output.config)?;
    let (format, out) = resolve_output(&args.output, &cfg);
    json_only(format, "check-sconvex")?;
    let selector = require(args.function, cfg.f, "f")?;
    let s = require(args.s, cfg.s, "s")?;
    let u = require(args.u, cfg.u, "u")?;
    let v = require(args.v, cfg.v, "v")?;
    let grid = args.grid.or(cfg.grid).unwrap_or(sconvexity::DEFAULT_GRID);

    let iv = Interval::new(u, v)?;
    let f = Builtin::parse(&selector)?.spec_on(iv)?;
    let report = sconvexity::check_s_convex(&f, s, iv, grid)?;
    let pass = report.passes;
    Ok(Outcome {
        pass,
        body: render_json(
            "check-sconvex",
            vec![SConvexityCliReport {
                function: f.label().to_string(),
                interval: iv,
                report,
            }],
        )?,
        out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_selectors_accept_both_spellings() {
        assert_eq!(parse_bound_kind("t0").unwrap(), BoundKind::Holder);
        assert_eq!(parse_bound_kind("holder").unwrap(), BoundKind::Holder);
        assert_eq!(parse_bound_kind("t1").unwrap(), BoundKind::PowerMean);
        assert!(parse_bound_kind("t2").is_err());
        assert_eq!(parse_which_bound("both").unwrap(), WhichBound::Both);
    }

    #[test]
    fn tolerance_window_is_enforced() {
        assert_eq!(resolve_tol(None, None).unwrap(), DEFAULT_TOL);
        assert_eq!(resolve_tol(Some(1e-6), None).unwrap(), 1e-6);
        assert_eq!(resolve_tol(None, Some(1e-4)).unwrap(), 1e-4);
        // Flag beats file.
        assert_eq!(resolve_tol(Some(1e-3), Some(1e-8)).unwrap(), 1e-3);
        assert!(resolve_tol(Some(1e-15), None).is_err());
        assert!(resolve_tol(Some(0.5), None).is_err());
    }

    #[test]
    fn params_builder_demands_the_right_exponent() {
        let p = build_params(0.5, 0.3, 0.3, Some(2.0), None, BoundKind::Holder).unwrap();
        assert_eq!(p.p, Some(2.0));
        assert_eq!(p.r, 2.0);
        assert!(build_params(0.5, 0.3, 0.3, None, Some(2.0), BoundKind::Holder).is_err());
        assert!(build_params(0.5, 0.3, 0.3, None, None, BoundKind::PowerMean).is_err());
        let pm = build_params(0.5, 0.3, 0.3, None, Some(1.5), BoundKind::PowerMean).unwrap();
        assert_eq!(pm.p, None);
        assert_eq!(pm.r, 1.5);
    }

    #[test]
    fn csv_rows_escape_status_and_blank_missing_fields() {
        let row = CsvRow {
            lambda: Some(0.5),
            mu: Some(0.25),
            u: Some(0.0),
            v: Some(1.0),
            lhs: Some(1.0 / 3.0),
            satisfied: Some(true),
            status: Some("error: bad, \"quoted\"".to_string()),
            ..CsvRow::default()
        };
        let text = render_csv(&[row], true);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), format!("{CSV_HEADER},status"));
        let line = lines.next().unwrap();
        assert!(line.starts_with(",0.5,0.25,,,0,1,0.3333333333333333,,,,true,"));
        assert!(line.ends_with("\"error: bad, \"\"quoted\"\"\""));
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn config_files_reject_unknown_keys() {
        let dir = std::env::temp_dir().join("sconvex-ineq-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad-config.json");
        std::fs::write(&path, r#"{"frobnicate": 1}"#).unwrap();
        assert!(load_config(&Some(path.clone())).is_err());
        std::fs::write(&path, r#"{"u": 1.0, "v": 2.0, "f": "exp"}"#).unwrap();
        let cfg = load_config(&Some(path)).unwrap();
        assert_eq!(cfg.u, Some(1.0));
        assert_eq!(cfg.f.as_deref(), Some("exp"));
    }

    #[test]
    fn cli_parses_the_documented_command_lines() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
        let cli = Cli::try_parse_from([
            "sconvex-ineq",
            "verify",
            "identity",
            "--f",
            "power:q=2",
            "--u",
            "0",
            "--v",
            "1",
            "--lambda",
            "1",
            "--mu",
            "1",
        ])
        .unwrap();
        match cli.command {
            Command::Verify(VerifyCommand::Identity(args)) => {
                assert_eq!(args.function.as_deref(), Some("power:q=2"));
                assert_eq!(args.lambda, Some(1.0));
            }
            _ => panic!("wrong command parsed"),
        }
        let cli = Cli::try_parse_from([
            "sconvex-ineq",
            "check-sconvex",
            "--f",
            "power:q=0.5",
            "--s",
            "0.5",
            "--u",
            "0",
            "--v",
            "4",
            "--grid",
            "50",
        ])
        .unwrap();
        assert!(matches!(cli.command, Command::CheckSconvex(_)));
    }
}
