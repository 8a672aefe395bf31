//! Sweeps both bounds over a grid of (s, lambda, mu, p, r) tuples for one
//! function and interval, flags rows whose s-convexity hypothesis fails the
//! grid check, and summarizes tightness. One quadrature evaluation is shared
//! by every row, so large grids stay cheap.
//!
//! Run with: `cargo run --example parameter_sweep`

use sconvex_ineq::error::Error;
use sconvex_ineq::explorer::{self, RowStatus, SweepSpec, WhichBound};

fn main() -> Result<(), Error> {
    let spec = SweepSpec {
        function: "exp".to_string(),
        u: 0.0,
        v: 1.0,
        s: vec![0.5, 1.0],
        lambda: vec![0.0, 1.0 / 3.0, 0.5, 1.0],
        mu: vec![1.0 / 3.0, 0.5],
        p: vec![2.0],
        r: vec![1.0, 2.0],
        which: WhichBound::Both,
        tol: 1e-10,
        check_hypothesis: true,
    };
    let rows = explorer::sweep(&spec)?;
    println!(
        "{} rows for {} on [{}, {}] (Hölder rows from p, power-mean rows from r)\n",
        rows.len(),
        spec.function,
        spec.u,
        spec.v
    );
    println!(
        "{:<11} {:>4} {:>6} {:>6} {:>3} {:>3} {:>13} {:>13} {:>7}  status",
        "bound", "s", "lambda", "mu", "p", "r", "deviation", "bound", "ratio"
    );
    let mut tightest: Option<&explorer::SweepRow> = None;
    for row in &rows {
        let p = row.params.p.map(|p| p.to_string()).unwrap_or_default();
        match (&row.status, &row.report) {
            (RowStatus::Ok | RowStatus::HypothesisFailed, Some(report)) => {
                println!(
                    "{:<11} {:>4} {:>6.3} {:>6.3} {:>3} {:>3} {:>13.6e} {:>13.6e} {:>7.4}  {}",
                    format!("{:?}", row.which).to_lowercase(),
                    row.params.s,
                    row.params.lambda,
                    row.params.mu,
                    p,
                    row.params.r,
                    report.lhs,
                    report.rhs,
                    report.ratio,
                    match row.status {
                        RowStatus::Ok => "ok",
                        _ => "hypothesis failed",
                    }
                );
                if row.status == RowStatus::Ok
                    && tightest
                        .and_then(|t| t.report.as_ref())
                        .is_none_or(|t| report.ratio > t.ratio)
                {
                    tightest = Some(row);
                }
            }
            (RowStatus::Error { message }, _) => {
                println!(
                    "{:<11} {:>4} {:>6.3} {:>6.3} {:>3} {:>3} {:>13} {:>13} {:>7}  error: {}",
                    format!("{:?}", row.which).to_lowercase(),
                    row.params.s,
                    row.params.lambda,
                    row.params.mu,
                    p,
                    row.params.r,
                    "-",
                    "-",
                    "-",
                    message
                );
            }
            _ => unreachable!("rows without an error always carry a report"),
        }
    }
    if let Some(row) = tightest {
        let report = row.report.as_ref().expect("tightest row is an ok row");
        println!(
            "\ntightest row: ratio {:.4} at s={}, lambda={:.3}, mu={:.3} ({:?})",
            report.ratio, row.params.s, row.params.lambda, row.params.mu, row.which
        );
    }
    Ok(())
}
