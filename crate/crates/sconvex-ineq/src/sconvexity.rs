//! Empirical s-convexity checking.
//!
//! A function f: [0, inf) -> R is s-convex (in the second sense) for
//! s in (0, 1] when
//!
//! ```text
//! f(a x + (1-a) y) <= a^s f(x) + (1-a)^s f(y)    for all x, y >= 0, a in [0, 1].
//! ```
//!
//! s = 1 recovers ordinary convexity. The check here samples the defining
//! inequality on a finite grid, so a pass is evidence, not a proof; a failure
//! comes with a concrete witness triple.

use serde::{Deserialize, Serialize};

use crate::core::{FunctionSpec, Interval};
use crate::error::Error;

/// Default number of grid points per axis.
pub const DEFAULT_GRID: usize = 50;

/// Pass threshold scale: violations up to 1e-9 * (1 + max |f|) are attributed
/// to rounding.
pub const VIOLATION_TOL: f64 = 1e-9;

/// A triple where the defining inequality failed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub x: f64,
    pub y: f64,
    pub alpha: f64,
    /// f(a x + (1-a) y) - a^s f(x) - (1-a)^s f(y) at the witness (positive).
    pub violation: f64,
}

/// Outcome of a grid check of the defining inequality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SConvexityReport {
    pub s: f64,
    pub grid: usize,
    /// Largest signed violation seen over all sampled triples.
    pub max_violation: f64,
    /// Scale used for the pass threshold: max |f| over the grid.
    pub scale: f64,
    pub passes: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Samples the defining inequality for all pairs from an n-point grid on the
/// domain and an n-point grid of mixing weights.
///
/// The domain must satisfy u >= 0 because s-convexity is a statement about
/// functions on [0, inf).
pub fn check_s_convex(
    f: &FunctionSpec,
    s: f64,
    domain: Interval,
    n: usize,
) -> Result<SConvexityReport, Error> {
    if !(s > 0.0 && s <= 1.0) {
        return Err(Error::Range {
            field: "s",
            value: s,
            requirement: "must lie in (0, 1]",
        });
    }
    domain.require_nonnegative()?;
    if n < 2 {
        return Err(Error::Range {
            field: "n",
            value: n as f64,
            requirement: "grid needs at least 2 points",
        });
    }

    let u = domain.u();
    let step = domain.width() / (n - 1) as f64;
    let grid: Vec<f64> = (0..n).map(|i| u + step * i as f64).collect();
    let values: Vec<f64> = grid.iter().map(|&x| f.eval(x)).collect();
    for (&x, &fx) in grid.iter().zip(&values) {
        if !fx.is_finite() {
            return Err(Error::NonFiniteSample { x });
        }
    }
    let scale = values.iter().fold(0.0_f64, |m, &fx| m.max(fx.abs()));

    // Precompute the mixing weights a^s and (1-a)^s once per alpha.
    let alphas: Vec<(f64, f64, f64)> = (0..n)
        .map(|k| {
            let a = k as f64 / (n - 1) as f64;
            (a, a.powf(s), (1.0 - a).powf(s))
        })
        .collect();

    let mut max_violation = f64::NEG_INFINITY;
    let mut witness = None;
    for (i, &x) in grid.iter().enumerate() {
        for (j, &y) in grid.iter().enumerate() {
            let (fx, fy) = (values[i], values[j]);
            for &(a, a_s, b_s) in &alphas {
                let mixed = f.eval(a * x + (1.0 - a) * y);
                if !mixed.is_finite() {
                    return Err(Error::NonFiniteSample {
                        x: a * x + (1.0 - a) * y,
                    });
                }
                let violation = mixed - a_s * fx - b_s * fy;
                if violation > max_violation {
                    max_violation = violation;
                    witness = Some(Witness {
                        x,
                        y,
                        alpha: a,
                        violation,
                    });
                }
            }
        }
    }

    let threshold = VIOLATION_TOL * (1.0 + scale);
    let passes = max_violation <= threshold;
    Ok(SConvexityReport {
        s,
        grid: n,
        max_violation,
        scale,
        passes,
        witness: if passes { None } else { witness },
    })
}

/// Raises a nonnegative function to the power s. If g is nonnegative and
/// convex, the result is s-convex for every s in (0, 1]: writing
/// g(ax + (1-a)y) <= a g(x) + (1-a) g(y) and using that t^s is increasing and
/// subadditive gives g^s(ax + (1-a)y) <= a^s g^s(x) + (1-a)^s g^s(y).
///
/// The derivative field is a formal chain rule s g^(s-1) g' and is not used by
/// the grid check.
pub fn power_of_convex(g: &FunctionSpec, s: f64) -> Result<FunctionSpec, Error> {
    if !(s > 0.0 && s <= 1.0) {
        return Err(Error::Range {
            field: "s",
            value: s,
            requirement: "must lie in (0, 1]",
        });
    }
    let g_val = g.clone();
    let g_der = g.clone();
    Ok(FunctionSpec::new(
        format!("({})^{s}", g.label()),
        move |x| g_val.eval(x).powf(s),
        move |x| {
            let gx = g_der.eval(x);
            s * gx.powf(s - 1.0) * g_der.eval_prime(x)
        },
    ))
}

/// The map x -> |f'(x)|^r, packaged for hypothesis checking: both closed-form
/// bounds assume this function is s-convex on the interval. The derivative
/// field is a placeholder; the grid check never consults it.
pub fn derivative_magnitude_power(f: &FunctionSpec, r: f64) -> FunctionSpec {
    let inner = f.clone();
    FunctionSpec::new(
        format!("|d/dx {}|^{r}", f.label()),
        move |x| inner.eval_prime(x).abs().powf(r),
        |_| f64::NAN,
    )
}

/// Largest s in (0, 1] at which the grid check passes, located by bisection
/// to 1e-3. Checks s = 1 first; if even a tiny s fails, returns 0. The result
/// is the largest passing point the bisection visited, not a proof of a
/// sharp threshold.
pub fn estimate_max_s(f: &FunctionSpec, domain: Interval, n: usize) -> Result<f64, Error> {
    const S_RESOLUTION: f64 = 1e-3;
    if check_s_convex(f, 1.0, domain, n)?.passes {
        return Ok(1.0);
    }
    let mut lo = S_RESOLUTION;
    if !check_s_convex(f, lo, domain, n)?.passes {
        return Ok(0.0);
    }
    let mut hi = 1.0;
    while hi - lo > S_RESOLUTION {
        let mid = 0.5 * (lo + hi);
        if check_s_convex(f, mid, domain, n)?.passes {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Ordinary convexity check through second divided differences on the same
/// grid: f(x_{i-1}) - 2 f(x_i) + f(x_{i+1}) >= -tol for consecutive triples.
/// At s = 1 this accepts the same smooth functions as [`check_s_convex`].
pub fn convex_by_divided_differences(
    f: &FunctionSpec,
    domain: Interval,
    n: usize,
) -> Result<bool, Error> {
    if n < 3 {
        return Err(Error::Range {
            field: "n",
            value: n as f64,
            requirement: "divided differences need at least 3 points",
        });
    }
    let step = domain.width() / (n - 1) as f64;
    let values: Vec<f64> = (0..n)
        .map(|i| f.eval(domain.u() + step * i as f64))
        .collect();
    let scale = values.iter().fold(0.0_f64, |m, &fx| m.max(fx.abs()));
    let tol = VIOLATION_TOL * (1.0 + scale);
    Ok(values.windows(3).all(|w| w[0] - 2.0 * w[1] + w[2] >= -tol))
}
