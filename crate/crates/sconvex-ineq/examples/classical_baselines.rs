//! Checks the classical baselines the weighted bounds generalize:
//!
//! * the midpoint/mean/endpoint-average chain for convex f,
//! * the Simpson remainder cap |deviation| <= sup|f''''| (v-u)^4 / 2880
//!   written here for the unit-normalized deviation, and
//! * the trapezoid-weight hand case: deviation of x^2 on [0,1] is exactly
//!   1/6, against the bound 1/4.
//!
//! Run with: `cargo run --example classical_baselines`

use sconvex_ineq::bounds::{self, BoundKind};
use sconvex_ineq::error::Error;
use sconvex_ineq::functions::Builtin;
use sconvex_ineq::{InequalityParams, Interval};

fn main() -> Result<(), Error> {
    let iv = Interval::new(0.0, 1.0)?;

    println!("midpoint <= integral mean <= endpoint average (convex functions):");
    for selector in ["power:q=2", "exp", "power:q=4"] {
        let f = Builtin::parse(selector)?.spec_on(iv)?;
        let hh = bounds::hermite_hadamard_check(&f, iv, 1e-10)?;
        println!(
            "  {:<12} {:>13.9} <= {:>13.9} <= {:>13.9}   (left {}, right {})",
            selector,
            hh.midpoint_value,
            hh.mean_integral,
            hh.endpoint_average,
            hh.left_ok,
            hh.right_ok
        );
    }

    println!("\nSimpson-weight deviation vs fourth-derivative remainder cap:");
    for selector in ["power:q=4", "exp", "power:q=3"] {
        let f = Builtin::parse(selector)?.spec_on(iv)?;
        let report = bounds::simpson_classical_check(&f, iv, 1e-10)?;
        println!(
            "  {:<12} deviation {:>13.9e}  cap {:>13.9e}  satisfied {}",
            selector, report.lhs, report.rhs, report.satisfied
        );
    }
    println!("  (x^4: deviation is exactly 1/120 = 0.008333…, cap 3/160 = 0.01875)");

    println!("\ntrapezoid-weight hand case for x^2 on [0, 1]:");
    let square = Builtin::parse("power:q=2")?.spec_on(iv)?;
    let params = InequalityParams::power_mean(1.0, 1.0, 1.0, 1.0);
    let report = bounds::bound_report(&square, iv, params, BoundKind::PowerMean, 1e-10)?;
    println!(
        "  deviation {:.15} (= 1/6), bound {:.15} (= 1/4), satisfied {}",
        report.lhs, report.rhs, report.satisfied
    );
    Ok(())
}
