//! Cross-checks the closed-form absolute moments
//!
//! ```text
//! m0(y, x) = ∫₀¹ |y - a|^x da      m1(y, x) = ∫₀¹ a |y - a|^x da
//! ```
//!
//! against the adaptive quadrature oracle. These moments supply the
//! prefactors of the Hölder-type bound.
//!
//! Run with: `cargo run --example moment_formulas`

use sconvex_ineq::error::Error;
use sconvex_ineq::identities;

fn main() -> Result<(), Error> {
    println!(
        "{:>5} {:>5} {:>20} {:>20} {:>11} {:>11}",
        "y", "x", "m0 (closed)", "m1 (closed)", "m0 diff", "m1 diff"
    );
    for y in [0.0, 0.25, 0.5, 0.7, 1.0] {
        for x in [0.5, 2.0, 3.3] {
            let closed = identities::abs_moments(y, x)?;
            let (q0, q1) = identities::abs_moments_by_quadrature(y, x, 1e-12)?;
            println!(
                "{:>5} {:>5} {:>20.15} {:>20.15} {:>11.3e} {:>11.3e}",
                y,
                x,
                closed.m0,
                closed.m1,
                (closed.m0 - q0.value).abs(),
                (closed.m1 - q1.value).abs()
            );
        }
    }

    // The first moment at a conjugate exponent drives the Hölder prefactor:
    // 0.25 * m0(1/2, p)^(1/p) collapses to 1/(8 (p+1)^(1/p)).
    println!("\nsymmetric-weight prefactor identity:");
    for p in [2.0, 3.0, 10.0] {
        let m0 = identities::abs_moments(0.5, p)?.m0;
        let lhs = 0.25 * m0.powf(1.0 / p);
        let rhs = 1.0 / (8.0 * (p + 1.0).powf(1.0 / p));
        println!("  p = {p:>4}: 0.25 m0^(1/p) = {lhs:.15}   1/(8(p+1)^(1/p)) = {rhs:.15}");
    }
    Ok(())
}
