//! Prints the special means of positive pairs — arithmetic A, logarithmic L,
//! identric I, and the generalized logarithmic mean L_p — and evaluates the
//! three mean inequalities obtained by applying the bounds to x^s and 1/x.
//!
//! Run with: `cargo run --example special_means`

use sconvex_ineq::error::Error;
use sconvex_ineq::means;
use sconvex_ineq::InequalityParams;

fn main() -> Result<(), Error> {
    println!(
        "{:>4} {:>4} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "u", "v", "L = L_-1", "identric", "L_1 = A", "L_2", "A"
    );
    for (u, v) in [(1.0, 2.0), (1.0, 3.0), (2.0, 5.0), (0.5, 4.0)] {
        let base = means::compute_means(u, v, None)?;
        let l2 = means::generalized_log_mean(u, v, 2.0)?;
        println!(
            "{:>4} {:>4} {:>12.8} {:>12.8} {:>12.8} {:>12.8} {:>12.8}",
            u,
            v,
            base.logarithmic,
            base.identric,
            means::generalized_log_mean(u, v, 1.0)?,
            l2,
            base.arithmetic
        );
    }
    println!("(u < L < I < A < v always; L_p is increasing in p)");

    let (u, v) = (1.0, 2.0);
    println!("\nmean inequalities on ({u}, {v}):");

    let p1 = means::proposition_xs_holder(u, v, InequalityParams::holder(0.5, 0.5, 0.5, 2.0))?;
    println!(
        "  x^s with Hölder bound      (s=1/2, lambda=mu=1/2, p=2):\n\
         \x20   |deviation| = {:.12}  <=  bound {:.12}  (variant {:.12}): {}",
        p1.lhs,
        p1.rhs,
        p1.variant_rhs
            .expect("x^s reduction always reports the variant"),
        p1.satisfied
    );

    let p2 =
        means::proposition_xs_powermean(u, v, InequalityParams::power_mean(0.5, 0.5, 0.5, 2.0))?;
    println!(
        "  x^s with power-mean bound  (s=1/2, lambda=mu=1/2, r=2):\n\
         \x20   |deviation| = {:.12}  <=  bound {:.12}: {}",
        p2.lhs, p2.rhs, p2.satisfied
    );

    let p3 = means::proposition_inverse_power(u, v)?;
    println!(
        "  1/x with Simpson weights   (s=1, lambda=mu=1/3, r=1):\n\
         \x20   |A/H-type combination - 1/L| = {:.12}  <=  (5/36)(v-u)A(u^-2,v^-2) = {:.12}: {}",
        p3.lhs, p3.rhs, p3.satisfied
    );
    Ok(())
}
