//! Numerical verification of weighted trapezoid/midpoint/Simpson-type integral
//! inequalities for s-convex functions, plus their consequences for special
//! means of positive reals.
//!
//! The crate checks three layers, each against an independent adaptive
//! quadrature oracle:
//!
//! 1. an exact integral identity for the weighted deviation
//!    (lambda f(u) + mu f(v))/2 + (2 - lambda - mu)/2 f((u+v)/2) - mean(f),
//! 2. two closed-form upper bounds for that deviation (a Hölder-type bound
//!    and a power-mean bound) whose hypotheses involve s-convexity of |f'|^r,
//! 3. reductions of those bounds to inequalities between arithmetic,
//!    logarithmic, and generalized logarithmic means.
//!
//! The primary interface is the `examples/` directory (one runnable example
//! per capability, `cargo run --example <name>`); the same functionality is
//! scriptable through the thin `sconvex-ineq` binary.
//!
//! Module map:
//!
//! * [`core`] - intervals, function specs, parameters, bound reports
//! * [`functions`] - built-in function family and selector syntax
//! * [`quadrature`] - adaptive Gauss-Kronrod integrator (the oracle)
//! * [`identities`] - the weighted-deviation identity and closed moments
//! * [`sconvexity`] - empirical s-convexity checking on grids
//! * [`bounds`] - the two closed-form bounds, classical baselines, catalog
//! * [`means`] - special means and the bound reductions for x^s and x^(-s)
//! * [`explorer`] - parameter sweeps and bound minimization
//! * [`cli`] - command-line front end used by the `sconvex-ineq` binary

// Validation deliberately writes `!(x > limit)` rather than `x <= limit`:
// the negated form also rejects NaN arguments as out of range.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
pub mod core;
pub mod error;
pub mod explorer;
pub mod functions;
pub mod identities;
pub mod means;
pub mod quadrature;
pub mod sconvexity;

pub use crate::core::{
    conjugate_exponent, validate_params, BoundReport, FunctionSpec, InequalityParams, Interval,
    ParamMode,
};
pub use crate::error::Error;
pub use crate::quadrature::{integrate, integrate_split, QuadResult};
