//! Evaluates the power-mean upper bound for the weighted deviation and shows
//! its weight quartet (E, L, I, F): scaled moments of the identity kernels
//! against s-powers. Works for any r >= 1, including r = 1, where the
//! Hölder-type bound does not apply.
//!
//! Run with: `cargo run --example power_mean_bound`

use sconvex_ineq::bounds::{self, BoundKind};
use sconvex_ineq::error::Error;
use sconvex_ineq::functions::Builtin;
use sconvex_ineq::{InequalityParams, Interval};

fn main() -> Result<(), Error> {
    let iv = Interval::new(0.0, 2.0)?;
    println!("power-mean bound on [{}, {}]", iv.u(), iv.v());
    println!(
        "{:<12} {:>4} {:>6} {:>6} {:>4} {:>14} {:>14} {:>8}",
        "function", "s", "lambda", "mu", "r", "deviation", "bound", "ratio"
    );
    let cases = [
        ("power:q=2", 1.0, 1.0, 1.0, 1.0),
        ("power:q=2", 1.0, 0.5, 0.5, 2.0),
        ("power:q=1.5", 0.5, 1.0 / 3.0, 1.0 / 3.0, 1.0),
        ("exp", 1.0, 0.25, 0.75, 1.5),
    ];
    for (selector, s, lambda, mu, r) in cases {
        let f = Builtin::parse(selector)?.spec_on(iv)?;
        let params = InequalityParams::power_mean(s, lambda, mu, r);
        let report = bounds::bound_report(&f, iv, params, BoundKind::PowerMean, 1e-10)?;
        assert!(report.satisfied, "bound must dominate the deviation");
        println!(
            "{:<12} {:>4} {:>6.3} {:>6.3} {:>4} {:>14.8e} {:>14.8e} {:>8.4}",
            selector, s, lambda, mu, r, report.lhs, report.rhs, report.ratio
        );
    }

    println!("\nweight quartet at lambda = 1/3, mu = 2/3:");
    println!(
        "{:>5} {:>16} {:>16} {:>16} {:>16}",
        "s", "E(s,lambda)", "L(s,lambda)", "I(s,mu)", "F(s,mu)"
    );
    for s in [0.25, 0.5, 1.0] {
        let set = bounds::coefficient_set(s, 1.0 / 3.0, 2.0 / 3.0)?;
        println!(
            "{:>5} {:>16.12} {:>16.12} {:>16.12} {:>16.12}",
            s, set.e, set.l, set.i, set.f
        );
    }
    println!("(swapping a -> 1-a in the defining integrals gives I = L(s, mu), F = E(s, mu))");
    Ok(())
}
