//! Confirms the weighted deviation identity numerically: the combination
//!
//! ```text
//! (lambda f(u) + mu f(v))/2 + (2 - lambda - mu)/2 f((u+v)/2) - mean(f)
//! ```
//!
//! equals a weighted integral of f' over the two half-intervals, for *any*
//! real weights — including ones far outside [0, 1].
//!
//! Run with: `cargo run --example verify_identity`

use sconvex_ineq::error::Error;
use sconvex_ineq::functions::Builtin;
use sconvex_ineq::identities;
use sconvex_ineq::Interval;

fn main() -> Result<(), Error> {
    let iv = Interval::new(1.0, 3.0)?;
    let cases = [
        ("power:q=2", 1.0, 1.0),       // pure trapezoid weights
        ("power:q=2", 0.0, 0.0),       // pure midpoint weights
        ("exp", 1.0 / 3.0, 1.0 / 3.0), // Simpson weights
        ("xlnx", 0.7, 0.2),            // asymmetric
        ("invpower:s=1", -0.5, 1.8),   // weights outside [0, 1]
    ];

    println!(
        "identity check on [{}, {}] (tolerance 1e-10)",
        iv.u(),
        iv.v()
    );
    println!(
        "{:<14} {:>6} {:>6} {:>22} {:>22} {:>12}",
        "function", "lambda", "mu", "lhs", "rhs", "|lhs-rhs|"
    );
    for (selector, lambda, mu) in cases {
        let f = Builtin::parse(selector)?.spec_on(iv)?;
        let lhs = identities::identity_lhs(&f, iv, lambda, mu, 1e-10)?;
        let rhs = identities::identity_rhs(&f, iv, lambda, mu, 1e-10)?;
        println!(
            "{:<14} {:>6} {:>6} {:>22.15e} {:>22.15e} {:>12.3e}",
            selector,
            lambda,
            mu,
            lhs,
            rhs,
            (lhs - rhs).abs()
        );
    }
    Ok(())
}
