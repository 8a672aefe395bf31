//! Evaluates the Hölder-type upper bound for the weighted deviation of an
//! s-convex integrand and compares it with the actual deviation.
//!
//! The bound needs conjugate exponents 1/p + 1/r = 1 and assumes |f'|^r is
//! s-convex on the interval; its endpoint weights are the constants
//! c_big(s) and c_small(s).
//!
//! Run with: `cargo run --example holder_bound`

use sconvex_ineq::bounds::{self, BoundKind};
use sconvex_ineq::error::Error;
use sconvex_ineq::functions::Builtin;
use sconvex_ineq::{InequalityParams, Interval};

fn main() -> Result<(), Error> {
    let iv = Interval::new(0.0, 1.0)?;
    println!("Hölder-type bound on [{}, {}]", iv.u(), iv.v());
    println!(
        "{:<12} {:>4} {:>6} {:>6} {:>4} {:>14} {:>14} {:>8}",
        "function", "s", "lambda", "mu", "p", "deviation", "bound", "ratio"
    );

    let cases = [
        ("power:q=2", 1.0, 0.5, 0.5, 2.0),
        ("power:q=2", 1.0, 1.0, 1.0, 2.0),
        ("power:q=1.5", 0.5, 0.3, 0.3, 2.0),
        ("exp", 1.0, 1.0 / 3.0, 1.0 / 3.0, 3.0),
        ("power:q=3", 1.0, 0.2, 0.8, 10.0),
    ];
    for (selector, s, lambda, mu, p) in cases {
        let f = Builtin::parse(selector)?.spec_on(iv)?;
        let params = InequalityParams::holder(s, lambda, mu, p);
        let report = bounds::bound_report(&f, iv, params, BoundKind::Holder, 1e-10)?;
        assert!(report.satisfied, "bound must dominate the deviation");
        println!(
            "{:<12} {:>4} {:>6.3} {:>6.3} {:>4} {:>14.8e} {:>14.8e} {:>8.4}",
            selector, s, lambda, mu, p, report.lhs, report.rhs, report.ratio
        );
    }

    println!("\nendpoint weights of the bound:");
    println!("{:>5} {:>20} {:>20}", "s", "c_big(s)", "c_small(s)");
    for s in [0.25, 0.5, 0.75, 1.0] {
        println!(
            "{:>5} {:>20.15} {:>20.15}",
            s,
            bounds::c_big(s),
            bounds::c_small(s)
        );
    }
    println!("(at s = 1 they reduce to 3/2 and 1/2: the classical weights)");
    Ok(())
}
