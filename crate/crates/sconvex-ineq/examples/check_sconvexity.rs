//! Grid-checks the defining inequality of s-convexity (second sense),
//!
//! ```text
//! f(a x + (1-a) y) <= a^s f(x) + (1-a)^s f(y),   x, y >= 0, a in [0, 1],
//! ```
//!
//! reports a concrete witness when it fails, and estimates the largest
//! admissible s for a few functions.
//!
//! Run with: `cargo run --example check_sconvexity`

use sconvex_ineq::error::Error;
use sconvex_ineq::functions::Builtin;
use sconvex_ineq::sconvexity;
use sconvex_ineq::{FunctionSpec, Interval};

fn main() -> Result<(), Error> {
    println!(
        "grid checks ({} points per axis):",
        sconvexity::DEFAULT_GRID
    );
    let cases = [
        ("power:q=2", 1.0, 0.0, 3.0),   // convex, s = 1
        ("power:q=0.5", 0.5, 0.0, 4.0), // sqrt is s-convex exactly up to 1/2
        ("exp", 0.25, 0.0, 2.0),        // nonneg convex => s-convex for all s
        ("xlnx", 0.5, 0.1, 1.0),        // negative values break s < 1
    ];
    for (selector, s, u, v) in cases {
        let iv = Interval::new(u, v)?;
        let f = Builtin::parse(selector)?.spec_on(iv)?;
        let report = sconvexity::check_s_convex(&f, s, iv, sconvexity::DEFAULT_GRID)?;
        print!(
            "  {:<14} s = {:<4} on [{}, {}]: {}",
            selector,
            s,
            u,
            v,
            if report.passes { "holds" } else { "FAILS" }
        );
        match report.witness {
            Some(w) => println!(
                "  witness: x={:.4}, y={:.4}, a={:.4}, violation={:.3e}",
                w.x, w.y, w.alpha, w.violation
            ),
            None => println!("  (max signed violation {:.3e})", report.max_violation),
        }
    }

    let neg = FunctionSpec::new("negated square", |x: f64| -x * x, |x: f64| -2.0 * x);
    let unit = Interval::new(0.0, 1.0)?;
    let report = sconvexity::check_s_convex(&neg, 1.0, unit, sconvexity::DEFAULT_GRID)?;
    let w = report
        .witness
        .expect("concave functions fail with a witness");
    println!(
        "  {:<14} s = 1    on [0, 1]: FAILS  witness: x={:.4}, y={:.4}, a={:.4}, violation={:.3e}",
        "-x^2", w.x, w.y, w.alpha, w.violation
    );

    println!("\nlargest admissible s (bisection over grid checks):");
    for (selector, u, v) in [("power:q=0.5", 0.0, 4.0), ("power:q=2", 0.0, 3.0)] {
        let iv = Interval::new(u, v)?;
        let f = Builtin::parse(selector)?.spec_on(iv)?;
        let s_max = sconvexity::estimate_max_s(&f, iv, sconvexity::DEFAULT_GRID)?;
        println!("  {:<14} on [{}, {}]: s_max ≈ {:.3}", selector, u, v, s_max);
    }

    println!("\nbound hypotheses are statements about |f'|^r:");
    let iv = Interval::new(0.1, 1.0)?;
    let f = Builtin::parse("xlnx")?.spec_on(iv)?;
    for r in [1.0, 2.0] {
        let g = sconvexity::derivative_magnitude_power(&f, r);
        let ok = sconvexity::check_s_convex(&g, 1.0, iv, sconvexity::DEFAULT_GRID)?.passes;
        println!(
            "  |d/dx xlnx|^{} is {} on [0.1, 1] at s = 1",
            r,
            if ok { "s-convex" } else { "NOT s-convex" }
        );
    }
    Ok(())
}
