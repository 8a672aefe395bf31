//! Recomputes every cataloged reference constant — the numeric prefactors and
//! endpoint weights of the two bounds at preset parameter choices — and
//! compares each against its published decimal at the precision it was
//! printed with.
//!
//! Run with: `cargo run --example corollary_constants`

use sconvex_ineq::bounds::{self, CorollaryId};
use sconvex_ineq::error::Error;

fn main() -> Result<(), Error> {
    let mut all_ok = true;
    for id in CorollaryId::ALL {
        let check = bounds::verify_corollary(id)?;
        let params = check.params;
        println!(
            "{:<20} (s={}, lambda={:.4}, mu={:.4}, r={}{})",
            check.id.name(),
            params.s,
            params.lambda,
            params.mu,
            params.r,
            match params.p {
                Some(p) => format!(", p={p}"),
                None => String::new(),
            }
        );
        for c in &check.checks {
            println!(
                "    {:<10} printed {:>12}  computed {:>20.15}  {}",
                c.name,
                c.printed,
                c.computed,
                if c.ok { "ok" } else { "MISMATCH" }
            );
            all_ok &= c.ok;
        }
    }
    println!(
        "\n{}",
        if all_ok {
            "every printed constant reproduces at its stated precision"
        } else {
            "MISMATCH: at least one constant disagrees with its printed value"
        }
    );
    assert!(all_ok);
    Ok(())
}
