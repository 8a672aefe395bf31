//! The exact integral identity behind every bound in this crate, and the
//! closed moment formulas its proofs rely on.
//!
//! For differentiable f on [u, v] with m = (u + v)/2 and any real weights
//! lambda, mu:
//!
//! ```text
//! (lambda f(u) + mu f(v))/2 + (2 - lambda - mu)/2 * f(m) - 1/(v-u) ∫ f
//!   = (v-u)/4 * ∫₀¹ [ (1 - lambda - a) f'(a u + (1-a) m)
//!                   + (mu - a)        f'(a m + (1-a) v) ] da
//! ```
//!
//! [`identity_lhs`] and [`identity_rhs`] evaluate the two sides numerically;
//! they must agree to quadrature accuracy for every valid input, which is the
//! crate's primary self-check.

use crate::core::{validate_params, FunctionSpec, InequalityParams, Interval, ParamMode};
use crate::error::Error;
use crate::quadrature::{self, QuadResult};

/// The moments of |y - a| over the unit interval:
/// `m0 = ∫₀¹ |y - a|^x da` and `m1 = ∫₀¹ a |y - a|^x da`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentPair {
    pub m0: f64,
    pub m1: f64,
}

/// Closed forms for the absolute moments, valid for x > 0 and 0 <= y <= 1:
///
/// ```text
/// m0 = (y^(x+1) + (1-y)^(x+1)) / (x+1)
/// m1 = (y^(x+2) + (x+1+y) (1-y)^(x+1)) / ((x+1)(x+2))
/// ```
pub fn abs_moments(y: f64, x: f64) -> Result<MomentPair, Error> {
    if !(0.0..=1.0).contains(&y) {
        return Err(Error::Range {
            field: "y",
            value: y,
            requirement: "must lie in [0, 1]",
        });
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Range {
            field: "x",
            value: x,
            requirement: "must be positive and finite",
        });
    }
    let yc = 1.0 - y;
    let m0 = (y.powf(x + 1.0) + yc.powf(x + 1.0)) / (x + 1.0);
    let m1 = (y.powf(x + 2.0) + (x + 1.0 + y) * yc.powf(x + 1.0)) / ((x + 1.0) * (x + 2.0));
    Ok(MomentPair { m0, m1 })
}

/// Quadrature evaluation of the same two moments, splitting at the kink.
/// Used to cross-check [`abs_moments`]; not a public shortcut for it.
pub fn abs_moments_by_quadrature(
    y: f64,
    x: f64,
    tol: f64,
) -> Result<(QuadResult, QuadResult), Error> {
    let m0 = quadrature::integrate_split(|a| (y - a).abs().powf(x), 0.0, 1.0, &[y], tol)?;
    let m1 = quadrature::integrate_split(|a| a * (y - a).abs().powf(x), 0.0, 1.0, &[y], tol)?;
    Ok((m0, m1))
}

/// A value carrying the quadrature error that went into it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadValue {
    pub value: f64,
    pub quad_error: f64,
}

/// Left side of the identity: the weighted combination of f at the endpoints
/// and midpoint minus the integral mean of f.
pub fn identity_lhs(
    f: &FunctionSpec,
    iv: Interval,
    lambda: f64,
    mu: f64,
    tol: f64,
) -> Result<f64, Error> {
    identity_lhs_with_error(f, iv, lambda, mu, tol).map(|qv| qv.value)
}

pub fn identity_lhs_with_error(
    f: &FunctionSpec,
    iv: Interval,
    lambda: f64,
    mu: f64,
    tol: f64,
) -> Result<QuadValue, Error> {
    validate_params(
        InequalityParams::power_mean(1.0, lambda, mu, 1.0),
        ParamMode::Identity,
    )?;
    let mean = quadrature::integrate(|x| f.eval(x), iv.u(), iv.v(), tol)?;
    let width = iv.width();
    let combo = 0.5 * (lambda * f.eval(iv.u()) + mu * f.eval(iv.v()))
        + 0.5 * (2.0 - lambda - mu) * f.eval(iv.midpoint());
    Ok(QuadValue {
        value: combo - mean.value / width,
        quad_error: mean.error_estimate / width,
    })
}

/// Right side of the identity: the weighted integral of f' over the two half
/// intervals, pulled back to the unit interval.
pub fn identity_rhs(
    f: &FunctionSpec,
    iv: Interval,
    lambda: f64,
    mu: f64,
    tol: f64,
) -> Result<f64, Error> {
    identity_rhs_with_error(f, iv, lambda, mu, tol).map(|qv| qv.value)
}

pub fn identity_rhs_with_error(
    f: &FunctionSpec,
    iv: Interval,
    lambda: f64,
    mu: f64,
    tol: f64,
) -> Result<QuadValue, Error> {
    validate_params(
        InequalityParams::power_mean(1.0, lambda, mu, 1.0),
        ParamMode::Identity,
    )?;
    let (u, v, m) = (iv.u(), iv.v(), iv.midpoint());
    let g = move |a: f64| {
        (1.0 - lambda - a) * f.eval_prime(a * u + (1.0 - a) * m)
            + (mu - a) * f.eval_prime(a * m + (1.0 - a) * v)
    };
    let integral = quadrature::integrate(g, 0.0, 1.0, tol)?;
    let scale = iv.width() / 4.0;
    Ok(QuadValue {
        value: scale * integral.value,
        quad_error: scale * integral.error_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions;

    const TOL: f64 = 1e-10;

    fn unit() -> Interval {
        Interval::new(0.0, 1.0).unwrap()
    }

    #[test]
    fn moments_match_hand_computed_values() {
        // ∫ a^2 = 1/3, ∫ a * a^2 = 1/4
        let m = abs_moments(0.0, 2.0).unwrap();
        assert!((m.m0 - 1.0 / 3.0).abs() < 1e-15);
        assert!((m.m1 - 0.25).abs() < 1e-15);

        // ∫ |1/2 - a| = 1/4, ∫ a |1/2 - a| = 1/8
        let m = abs_moments(0.5, 1.0).unwrap();
        assert!((m.m0 - 0.25).abs() < 1e-15);
        assert!((m.m1 - 0.125).abs() < 1e-15);

        // ∫ (1-a)^3 = 1/4, ∫ a (1-a)^3 = 1/20
        let m = abs_moments(1.0, 3.0).unwrap();
        assert!((m.m0 - 0.25).abs() < 1e-15);
        assert!((m.m1 - 0.05).abs() < 1e-15);
    }

    #[test]
    fn moments_reject_bad_arguments() {
        assert!(abs_moments(-0.1, 1.0).is_err());
        assert!(abs_moments(1.1, 1.0).is_err());
        assert!(abs_moments(0.5, 0.0).is_err());
        assert!(abs_moments(0.5, -1.0).is_err());
    }

    #[test]
    fn moments_agree_with_quadrature_at_a_kinked_exponent() {
        let closed = abs_moments(0.5, 0.3).unwrap();
        let (q0, q1) = abs_moments_by_quadrature(0.5, 0.3, 1e-12).unwrap();
        assert!((closed.m0 - q0.value).abs() <= 1e-9 * closed.m0.abs());
        assert!((closed.m1 - q1.value).abs() <= 1e-9 * closed.m1.abs());
    }

    #[test]
    fn m0_is_symmetric_in_y() {
        // On a dyadic grid both y and 1-y are exact, so the two evaluations
        // perform literally the same arithmetic and must agree bit for bit.
        for k in 0..=32 {
            let y = k as f64 / 32.0;
            for x in [0.3, 1.0, 2.5] {
                let a = abs_moments(y, x).unwrap().m0;
                let b = abs_moments(1.0 - y, x).unwrap().m0;
                assert_eq!(
                    a.to_bits(),
                    b.to_bits(),
                    "m0({y}, {x}) vs m0({}, {x})",
                    1.0 - y
                );
            }
        }
        // Off the dyadic grid the complement 1-y rounds, so symmetry holds to
        // rounding error rather than bitwise.
        for y in [0.05, 0.3, 0.7, 0.9] {
            for x in [0.3, 1.0, 2.5] {
                let a = abs_moments(y, x).unwrap().m0;
                let b = abs_moments(1.0 - y, x).unwrap().m0;
                assert!((a - b).abs() <= 4.0 * f64::EPSILON * a.abs());
            }
        }
    }

    #[test]
    fn square_function_gives_one_sixth_on_both_sides() {
        let f = functions::power(2.0);
        let lhs = identity_lhs(&f, unit(), 1.0, 1.0, TOL).unwrap();
        let rhs = identity_rhs(&f, unit(), 1.0, 1.0, TOL).unwrap();
        assert!((lhs - 1.0 / 6.0).abs() <= 1e-12);
        assert!((rhs - 1.0 / 6.0).abs() <= 1e-12);
    }

    #[test]
    fn constants_vanish_on_both_sides() {
        let f = functions::constant(7.0);
        // Weights sum to 2, so the combination reproduces the constant.
        let lhs = identity_lhs(&f, unit(), 0.3, 0.9, TOL).unwrap();
        let rhs = identity_rhs(&f, unit(), 0.3, 0.9, TOL).unwrap();
        assert!(lhs.abs() <= 1e-12);
        assert!(rhs.abs() <= 1e-12);
    }

    #[test]
    fn linear_function_with_zero_weights_balances() {
        let f = functions::power(1.0);
        let lhs = identity_lhs(&f, unit(), 0.0, 0.0, TOL).unwrap();
        let rhs = identity_rhs(&f, unit(), 0.0, 0.0, TOL).unwrap();
        assert!(lhs.abs() <= 1e-12, "midpoint equals mean for linear f");
        assert!(rhs.abs() <= 1e-12);
    }

    #[test]
    fn identity_holds_for_negative_and_large_weights() {
        let f = functions::exponential();
        let iv = Interval::new(0.5, 2.0).unwrap();
        for (lambda, mu) in [(-1.0, 2.0), (2.0, -1.0), (-0.5, -0.5), (1.7, 0.2)] {
            let lhs = identity_lhs(&f, iv, lambda, mu, TOL).unwrap();
            let rhs = identity_rhs(&f, iv, lambda, mu, TOL).unwrap();
            assert!(
                (lhs - rhs).abs() <= 100.0 * TOL,
                "identity failed at lambda={lambda}, mu={mu}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn identity_rejects_non_finite_weights() {
        let f = functions::power(2.0);
        assert!(identity_lhs(&f, unit(), f64::NAN, 0.0, TOL).is_err());
        assert!(identity_rhs(&f, unit(), 0.0, f64::INFINITY, TOL).is_err());
    }
}
