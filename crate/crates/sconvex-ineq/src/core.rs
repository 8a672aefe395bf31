//! Shared value types: intervals, function specifications, inequality
//! parameters, and the report structure every bound evaluation produces.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Absolute slack added to the right-hand side when deciding whether a bound
/// holds, covering closed-form rounding on top of the quadrature estimate.
pub const SATISFACTION_SLACK: f64 = 1e-12;

/// Tolerance on |1/p + 1/r - 1| for exponent pairs of Hölder-type bounds.
pub const CONJUGACY_TOL: f64 = 1e-12;

/// Relative tolerance of the finite-difference derivative guard.
pub const DERIVATIVE_GUARD_TOL: f64 = 1e-6;

/// A closed interval [u, v] with u < v.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    u: f64,
    v: f64,
}

impl Interval {
    pub fn new(u: f64, v: f64) -> Result<Self, Error> {
        if !u.is_finite() {
            return Err(Error::Range {
                field: "u",
                value: u,
                requirement: "must be finite",
            });
        }
        if !v.is_finite() {
            return Err(Error::Range {
                field: "v",
                value: v,
                requirement: "must be finite",
            });
        }
        if !(u < v) {
            return Err(Error::Range {
                field: "v",
                value: v,
                requirement: "must be strictly greater than u",
            });
        }
        Ok(Interval { u, v })
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.u + self.v)
    }

    pub fn width(&self) -> f64 {
        self.v - self.u
    }

    /// Rejects intervals extending left of zero (s-convexity lives on [0, inf)).
    pub fn require_nonnegative(&self) -> Result<(), Error> {
        if self.u < 0.0 {
            Err(Error::domain(format!(
                "interval [{}, {}] must lie in [0, inf)",
                self.u, self.v
            )))
        } else {
            Ok(())
        }
    }

    /// Rejects intervals whose left endpoint is not strictly positive.
    pub fn require_positive(&self) -> Result<(), Error> {
        if self.u <= 0.0 {
            Err(Error::domain(format!(
                "interval [{}, {}] must lie in (0, inf)",
                self.u, self.v
            )))
        } else {
            Ok(())
        }
    }
}

/// A scalar function together with its derivative and an optional sup bound on
/// the fourth derivative (used only by the classical Simpson remainder).
///
/// Closures are stored behind `Arc` so specs can be cloned cheaply and shared
/// across threads.
#[derive(Clone)]
pub struct FunctionSpec {
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    f_prime: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    fourth_deriv_bound: Option<f64>,
    label: String,
}

impl fmt::Debug for FunctionSpec {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        fm.debug_struct("FunctionSpec")
            .field("label", &self.label)
            .field("fourth_deriv_bound", &self.fourth_deriv_bound)
            .finish()
    }
}

impl FunctionSpec {
    pub fn new(
        label: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f_prime: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        FunctionSpec {
            f: Arc::new(f),
            f_prime: Arc::new(f_prime),
            fourth_deriv_bound: None,
            label: label.into(),
        }
    }

    /// Attaches a sup bound for |f''''| on the interval of interest.
    pub fn with_fourth_deriv_bound(mut self, bound: f64) -> Result<Self, Error> {
        if !(bound >= 0.0) {
            return Err(Error::NegativeValue {
                field: "fourth_deriv_bound",
                value: bound,
            });
        }
        self.fourth_deriv_bound = Some(bound);
        Ok(self)
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn eval_prime(&self, x: f64) -> f64 {
        (self.f_prime)(x)
    }

    pub fn fourth_deriv_bound(&self) -> Option<f64> {
        self.fourth_deriv_bound
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Checks the supplied derivative against a central finite difference of f
    /// at every grid point, to relative tolerance [`DERIVATIVE_GUARD_TOL`].
    ///
    /// Points where either one-sided sample is non-finite are skipped, so the
    /// guard stays usable up to the edge of a function's natural domain.
    pub fn check_derivative(&self, grid: &[f64]) -> Result<(), Error> {
        let h0 = f64::EPSILON.cbrt();
        for &x in grid {
            let h = h0 * x.abs().max(1.0);
            let hi = self.eval(x + h);
            let lo = self.eval(x - h);
            if !hi.is_finite() || !lo.is_finite() {
                continue;
            }
            let measured = (hi - lo) / (2.0 * h);
            let analytic = self.eval_prime(x);
            if !analytic.is_finite() {
                continue;
            }
            let scale = analytic.abs().max(measured.abs()).max(1.0);
            if (measured - analytic).abs() > DERIVATIVE_GUARD_TOL * scale {
                return Err(Error::DerivativeMismatch {
                    label: self.label.clone(),
                    x,
                    analytic,
                    measured,
                });
            }
        }
        Ok(())
    }
}

/// Parameters (s, lambda, mu, p, r) of one weighted inequality instance.
///
/// `p = None` selects the power-mean form of the bound, which only requires
/// `r >= 1`. When `p` is present the pair must be conjugate: 1/p + 1/r = 1
/// with p, r > 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InequalityParams {
    pub s: f64,
    pub lambda: f64,
    pub mu: f64,
    pub p: Option<f64>,
    pub r: f64,
}

impl InequalityParams {
    /// Power-mean parameters: no p, any r >= 1.
    pub fn power_mean(s: f64, lambda: f64, mu: f64, r: f64) -> Self {
        InequalityParams {
            s,
            lambda,
            mu,
            p: None,
            r,
        }
    }

    /// Hölder parameters with r derived as the conjugate of p.
    pub fn holder(s: f64, lambda: f64, mu: f64, p: f64) -> Self {
        InequalityParams {
            s,
            lambda,
            mu,
            p: Some(p),
            r: conjugate_exponent(p),
        }
    }
}

/// The conjugate exponent r with 1/p + 1/r = 1.
pub fn conjugate_exponent(p: f64) -> f64 {
    p / (p - 1.0)
}

/// How strict parameter validation should be.
///
/// The weighted identity holds for arbitrary real weights, so `Identity` only
/// demands finite values; the bounds additionally need lambda, mu in [0, 1]
/// and a valid exponent configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamMode {
    Identity,
    Bound,
}

pub fn validate_params(
    params: InequalityParams,
    mode: ParamMode,
) -> Result<InequalityParams, Error> {
    let InequalityParams {
        s,
        lambda,
        mu,
        p,
        r,
    } = params;
    if !(s > 0.0 && s <= 1.0) {
        return Err(Error::Range {
            field: "s",
            value: s,
            requirement: "must lie in (0, 1]",
        });
    }
    for (field, value) in [("lambda", lambda), ("mu", mu)] {
        if !value.is_finite() {
            return Err(Error::Range {
                field,
                value,
                requirement: "must be finite",
            });
        }
        if mode == ParamMode::Bound && !(0.0..=1.0).contains(&value) {
            return Err(Error::Range {
                field,
                value,
                requirement: "must lie in [0, 1] for bound evaluation",
            });
        }
    }
    match p {
        Some(p) => {
            if !(p > 1.0) {
                return Err(Error::Range {
                    field: "p",
                    value: p,
                    requirement: "must be finite and exceed 1",
                });
            }
            if !(r > 1.0) {
                return Err(Error::Range {
                    field: "r",
                    value: r,
                    requirement: "must be finite and exceed 1 when p is present",
                });
            }
            if (1.0 / p + 1.0 / r - 1.0).abs() > CONJUGACY_TOL {
                return Err(Error::Conjugacy { p, r });
            }
        }
        None => {
            if !(r >= 1.0 && r.is_finite()) {
                return Err(Error::Range {
                    field: "r",
                    value: r,
                    requirement: "must be finite and at least 1",
                });
            }
        }
    }
    Ok(params)
}

/// Outcome of evaluating one inequality instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub lhs: f64,
    pub rhs: f64,
    /// rhs - lhs. Negative means the inequality failed beyond all slack.
    pub margin: f64,
    /// lhs / rhs; 0 when both sides vanish.
    pub ratio: f64,
    /// Quadrature error estimate carried by the left-hand side (0 when both
    /// sides are closed forms).
    pub quad_error: f64,
    pub satisfied: bool,
    pub params: InequalityParams,
    pub interval: Interval,
    /// Alternative right-hand side with the derivative-scale factor kept
    /// inside the r-th root; also a valid upper bound where reported.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant_rhs: Option<f64>,
}

impl BoundReport {
    pub fn from_parts(
        lhs: f64,
        rhs: f64,
        quad_error: f64,
        params: InequalityParams,
        interval: Interval,
    ) -> Self {
        let ratio = if rhs == 0.0 {
            if lhs == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            lhs / rhs
        };
        BoundReport {
            lhs,
            rhs,
            margin: rhs - lhs,
            ratio,
            quad_error,
            satisfied: lhs <= rhs + quad_error + SATISFACTION_SLACK,
            params,
            interval,
            variant_rhs: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_rejects_degenerate_and_reversed() {
        assert!(Interval::new(1.0, 1.0).is_err());
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
        let iv = Interval::new(1.0, 3.0).unwrap();
        assert_eq!(iv.midpoint(), 2.0);
        assert_eq!(iv.width(), 2.0);
    }

    #[test]
    fn interval_domain_guards() {
        let iv = Interval::new(-1.0, 1.0).unwrap();
        assert!(iv.require_nonnegative().is_err());
        let iv = Interval::new(0.0, 1.0).unwrap();
        assert!(iv.require_nonnegative().is_ok());
        assert!(iv.require_positive().is_err());
        let iv = Interval::new(0.5, 1.0).unwrap();
        assert!(iv.require_positive().is_ok());
    }

    #[test]
    fn bound_mode_accepts_conjugate_pair() {
        let params = InequalityParams::holder(0.5, 0.5, 0.5, 2.0);
        let validated = validate_params(params, ParamMode::Bound).unwrap();
        assert_eq!(validated, params);
    }

    #[test]
    fn bound_mode_rejects_non_conjugate_pair() {
        let params = InequalityParams {
            s: 0.5,
            lambda: 0.5,
            mu: 0.5,
            p: Some(3.0),
            r: 2.0,
        };
        match validate_params(params, ParamMode::Bound) {
            Err(Error::Conjugacy { p, r }) => {
                assert_eq!(p, 3.0);
                assert_eq!(r, 2.0);
            }
            other => panic!("expected conjugacy error, got {other:?}"),
        }
    }

    #[test]
    fn identity_mode_allows_weights_outside_unit_interval() {
        let params = InequalityParams::power_mean(1.0, -0.2, 1.4, 1.0);
        assert!(validate_params(params, ParamMode::Identity).is_ok());
        assert!(validate_params(params, ParamMode::Bound).is_err());
    }

    #[test]
    fn bound_mode_rejects_bad_s_and_r() {
        let bad_s = InequalityParams::power_mean(0.0, 0.5, 0.5, 1.0);
        assert!(validate_params(bad_s, ParamMode::Bound).is_err());
        let bad_s2 = InequalityParams::power_mean(1.2, 0.5, 0.5, 1.0);
        assert!(validate_params(bad_s2, ParamMode::Bound).is_err());
        let bad_r = InequalityParams::power_mean(1.0, 0.5, 0.5, 0.9);
        assert!(validate_params(bad_r, ParamMode::Bound).is_err());
    }

    #[test]
    fn validation_is_idempotent() {
        let params = InequalityParams::holder(0.3, 0.3, 0.3, 2.0);
        let once = validate_params(params, ParamMode::Bound).unwrap();
        let twice = validate_params(once, ParamMode::Bound).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn conjugate_pairs_validate_across_p_range() {
        for k in 1..60 {
            let p = 1.0 + 0.25 * k as f64;
            let params = InequalityParams::holder(0.5, 0.2, 0.8, p);
            assert!(
                validate_params(params, ParamMode::Bound).is_ok(),
                "conjugate pair for p = {p} should validate"
            );
        }
    }

    #[test]
    fn fourth_bound_must_be_nonnegative() {
        let spec = FunctionSpec::new("x", |x| x, |_| 1.0);
        assert!(spec.clone().with_fourth_deriv_bound(-1.0).is_err());
        let spec = spec.with_fourth_deriv_bound(0.0).unwrap();
        assert_eq!(spec.fourth_deriv_bound(), Some(0.0));
    }

    #[test]
    fn derivative_guard_passes_power_pairs_on_coarse_grid() {
        let spec = FunctionSpec::new("x^3", |x| x.powi(3), |x| 3.0 * x * x);
        let grid: Vec<f64> = (0..100).map(|i| 0.1 + 9.9 * i as f64 / 99.0).collect();
        spec.check_derivative(&grid).unwrap();
    }

    #[test]
    fn derivative_guard_catches_wrong_derivative() {
        let spec = FunctionSpec::new("bad", |x| x * x, |x| 3.0 * x);
        let grid = [0.5, 1.0, 2.0];
        assert!(matches!(
            spec.check_derivative(&grid),
            Err(Error::DerivativeMismatch { .. })
        ));
    }

    #[test]
    fn report_satisfaction_and_ratio_rules() {
        let params = InequalityParams::power_mean(1.0, 0.5, 0.5, 1.0);
        let iv = Interval::new(0.0, 1.0).unwrap();
        let ok = BoundReport::from_parts(0.1, 0.2, 0.0, params, iv);
        assert!(ok.satisfied);
        assert_eq!(ok.ratio, 0.5);
        let tight = BoundReport::from_parts(0.2, 0.2, 0.0, params, iv);
        assert!(tight.satisfied);
        let broken = BoundReport::from_parts(0.3, 0.2, 0.0, params, iv);
        assert!(!broken.satisfied);
        assert!(broken.margin < 0.0);
        let degenerate = BoundReport::from_parts(0.0, 0.0, 0.0, params, iv);
        assert!(degenerate.satisfied);
        assert_eq!(degenerate.ratio, 0.0);
    }
}
