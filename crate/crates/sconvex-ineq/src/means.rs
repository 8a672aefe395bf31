//! Special means (arithmetic, logarithmic, generalized logarithmic) and the
//! worked mean-inequality consequences of the two closed-form bounds for the
//! model functions x^s and 1/x.

use crate::bounds;
use crate::core::{validate_params, BoundReport, InequalityParams, Interval, ParamMode};
use crate::error::Error;
use crate::functions::Builtin;
use serde::Serialize;

/// A(u, v) = (u + v)/2.
pub fn arithmetic_mean(u: f64, v: f64) -> f64 {
    0.5 * (u + v)
}

/// L(u, v) = (v - u)/(ln v - ln u) for distinct positive arguments, extended
/// continuously by L(u, u) = u.
pub fn logarithmic_mean(u: f64, v: f64) -> Result<f64, Error> {
    require_positive_pair(u, v)?;
    if u == v {
        return Ok(u);
    }
    Ok((v - u) / (v.ln() - u.ln()))
}

/// Generalized logarithmic mean
/// L_p(u, v) = ((v^(p+1) - u^(p+1)) / ((p+1)(v-u)))^(1/p).
///
/// The removable cases are handled exactly: p = 1 is the arithmetic mean,
/// p = 0 the identric mean (1/e)(v^v/u^u)^(1/(v-u)), and p = -1 the
/// logarithmic mean.
pub fn generalized_log_mean(u: f64, v: f64, p: f64) -> Result<f64, Error> {
    require_positive_pair(u, v)?;
    if !p.is_finite() {
        return Err(Error::Range {
            field: "p",
            value: p,
            requirement: "must be finite",
        });
    }
    if u == v {
        return Ok(u);
    }
    if p == 1.0 {
        return Ok(arithmetic_mean(u, v));
    }
    if p == 0.0 {
        let exponent = (v * v.ln() - u * u.ln()) / (v - u) - 1.0;
        return Ok(exponent.exp());
    }
    if p == -1.0 {
        return logarithmic_mean(u, v);
    }
    Ok(((v.powf(p + 1.0) - u.powf(p + 1.0)) / ((p + 1.0) * (v - u))).powf(1.0 / p))
}

fn require_positive_pair(u: f64, v: f64) -> Result<(), Error> {
    for (field, value) in [("u", u), ("v", v)] {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::Range {
                field,
                value,
                requirement: "must be finite and > 0",
            });
        }
    }
    Ok(())
}

/// Value of L_p at a specific order, for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeneralizedMean {
    pub p: f64,
    pub value: f64,
}

/// The mean values reported by the `means` command.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeanValues {
    pub u: f64,
    pub v: f64,
    pub arithmetic: f64,
    pub logarithmic: f64,
    pub identric: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generalized: Option<GeneralizedMean>,
}

/// Computes the standard means of (u, v), plus L_p when an order is given.
pub fn compute_means(u: f64, v: f64, lp: Option<f64>) -> Result<MeanValues, Error> {
    require_positive_pair(u, v)?;
    let generalized = match lp {
        Some(p) => Some(GeneralizedMean {
            p,
            value: generalized_log_mean(u, v, p)?,
        }),
        None => None,
    };
    Ok(MeanValues {
        u,
        v,
        arithmetic: arithmetic_mean(u, v),
        logarithmic: logarithmic_mean(u, v)?,
        identric: generalized_log_mean(u, v, 0.0)?,
        generalized,
    })
}

/// Closed form of the weighted deviation for f(x) = x^s:
/// |(lambda u^s + mu v^s)/2 + (2-lambda-mu)/2 A(u,v)^s - L_s(u,v)^s|.
/// The integral mean of x^s is the s-th power of the generalized logarithmic
/// mean of order s, so no quadrature is involved.
fn xs_deviation(u: f64, v: f64, s: f64, lambda: f64, mu: f64) -> f64 {
    let mean_pow = (v.powf(s + 1.0) - u.powf(s + 1.0)) / ((s + 1.0) * (v - u));
    let combo = 0.5 * (lambda * u.powf(s) + mu * v.powf(s))
        + 0.5 * (2.0 - lambda - mu) * arithmetic_mean(u, v).powf(s);
    (combo - mean_pow).abs()
}

fn xs_interval(u: f64, v: f64, s: f64) -> Result<Interval, Error> {
    let iv = Interval::new(u, v)?;
    if s < 1.0 {
        // f'(x) = s x^(s-1) blows up at 0 for s < 1.
        iv.require_positive()?;
    } else {
        iv.require_nonnegative()?;
    }
    Ok(iv)
}

/// Mean inequality obtained by feeding f(x) = x^s (whose derivative modulus
/// is s-convex of the same order s) into the Hölder-type bound. Both sides
/// are closed forms in special means.
///
/// `variant_rhs` carries the right side scaled by s^(1/r - 1): some published
/// statements of this consequence factor the derivative coefficient s out of
/// the r-th root as s^(1/r) instead of s, and the variant makes that reading
/// available next to the exact one.
pub fn proposition_xs_holder(
    u: f64,
    v: f64,
    params: InequalityParams,
) -> Result<BoundReport, Error> {
    let params = validate_params(params, ParamMode::Bound)?;
    if params.p.is_none() {
        return Err(Error::MissingExponent);
    }
    let iv = xs_interval(u, v, params.s)?;
    let f = Builtin::Power { q: params.s }.spec_on(iv)?;
    let rhs = bounds::holder_bound(&f, iv, params)?;
    let lhs = xs_deviation(u, v, params.s, params.lambda, params.mu);
    let mut report = BoundReport::from_parts(lhs, rhs, 0.0, params, iv);
    report.variant_rhs = Some(params.s.powf(1.0 / params.r - 1.0) * rhs);
    Ok(report)
}

/// Mean inequality obtained by feeding f(x) = x^s into the power-mean bound.
/// At r = 1, lambda = mu = 1 the right side collapses to
/// s (1 + s 2^s) (v - u) / (2^s (s+1)(s+2)) * A(u^(s-1), v^(s-1)).
pub fn proposition_xs_powermean(
    u: f64,
    v: f64,
    params: InequalityParams,
) -> Result<BoundReport, Error> {
    let params = validate_params(params, ParamMode::Bound)?;
    let iv = xs_interval(u, v, params.s)?;
    let f = Builtin::Power { q: params.s }.spec_on(iv)?;
    let rhs = bounds::power_mean_bound(&f, iv, params)?;
    let lhs = xs_deviation(u, v, params.s, params.lambda, params.mu);
    Ok(BoundReport::from_parts(lhs, rhs, 0.0, params, iv))
}

/// Simpson-type mean inequality for f(x) = 1/x on 0 < u < v:
///
/// ```text
/// |(1/u + 1/v)/6 + (2/3)/A(u,v) - 1/L(u,v)| <= (5/36)(v-u) A(u^-2, v^-2)
/// ```
///
/// This is the power-mean bound at s = r = 1, lambda = mu = 1/3, with both
/// sides in closed form (the integral mean of 1/x is 1/L).
pub fn proposition_inverse_power(u: f64, v: f64) -> Result<BoundReport, Error> {
    let iv = Interval::new(u, v)?;
    iv.require_positive()?;
    let params = InequalityParams::power_mean(1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0);
    let lhs = ((u.recip() + v.recip()) / 6.0 + (2.0 / 3.0) / arithmetic_mean(u, v)
        - logarithmic_mean(u, v)?.recip())
    .abs();
    let rhs = (v - u) * (5.0 / 36.0) * arithmetic_mean(u.powi(-2), v.powi(-2));
    Ok(BoundReport::from_parts(lhs, rhs, 0.0, params, iv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::power_mean_bound;
    use proptest::prelude::*;

    #[test]
    fn mean_reference_values() {
        assert_eq!(arithmetic_mean(1.0, 3.0), 2.0);
        assert!((logarithmic_mean(1.0, 2.0).unwrap() - 1.0 / 2.0_f64.ln()).abs() <= 1e-15);
        assert!(
            (logarithmic_mean(1.0, std::f64::consts::E).unwrap() - (std::f64::consts::E - 1.0))
                .abs()
                <= 1e-15
        );
        assert!(
            (generalized_log_mean(1.0, 2.0, 2.0).unwrap() - (7.0_f64 / 3.0).sqrt()).abs() <= 1e-15
        );
        assert!(
            (generalized_log_mean(1.0, 2.0, 0.0).unwrap() - 4.0 / std::f64::consts::E).abs()
                <= 1e-15
        );
    }

    #[test]
    fn generalized_mean_special_orders_are_exact() {
        let (u, v) = (1.1, 3.7);
        assert_eq!(
            generalized_log_mean(u, v, 1.0).unwrap(),
            arithmetic_mean(u, v)
        );
        assert_eq!(
            generalized_log_mean(u, v, -1.0).unwrap(),
            logarithmic_mean(u, v).unwrap()
        );
        // Equal arguments collapse to the argument at every order.
        for p in [-1.0, 0.0, 0.5, 1.0, 3.0] {
            assert_eq!(generalized_log_mean(2.5, 2.5, p).unwrap(), 2.5);
        }
        assert_eq!(logarithmic_mean(2.5, 2.5).unwrap(), 2.5);
    }

    #[test]
    fn generalized_mean_is_continuous_at_removable_orders() {
        let (u, v) = (1.0, 2.0);
        let identric = generalized_log_mean(u, v, 0.0).unwrap();
        let near0 = generalized_log_mean(u, v, 1e-7).unwrap();
        assert!((near0 - identric).abs() <= 1e-6);
        let log_mean = logarithmic_mean(u, v).unwrap();
        let near_neg1 = generalized_log_mean(u, v, -1.0 + 1e-7).unwrap();
        assert!((near_neg1 - log_mean).abs() <= 1e-6);
        let arith = arithmetic_mean(u, v);
        let near1 = generalized_log_mean(u, v, 1.0 + 1e-7).unwrap();
        assert!((near1 - arith).abs() <= 1e-6);
    }

    #[test]
    fn means_require_positive_arguments() {
        assert!(logarithmic_mean(0.0, 1.0).is_err());
        assert!(logarithmic_mean(-1.0, 2.0).is_err());
        assert!(generalized_log_mean(1.0, f64::INFINITY, 2.0).is_err());
        assert!(generalized_log_mean(1.0, 2.0, f64::NAN).is_err());
        assert!(compute_means(0.0, 1.0, None).is_err());
    }

    #[test]
    fn compute_means_bundles_all_values() {
        let m = compute_means(1.0, 2.0, Some(2.0)).unwrap();
        assert_eq!(m.arithmetic, 1.5);
        assert!((m.logarithmic - 1.0 / 2.0_f64.ln()).abs() <= 1e-15);
        assert!((m.identric - 4.0 / std::f64::consts::E).abs() <= 1e-15);
        let g = m.generalized.unwrap();
        assert_eq!(g.p, 2.0);
        assert!((g.value - (7.0_f64 / 3.0).sqrt()).abs() <= 1e-15);
        assert!(compute_means(1.0, 2.0, None).unwrap().generalized.is_none());
    }

    #[test]
    fn xs_holder_hand_case() {
        // s = 1/2, lambda = mu = 1/2, p = r = 2 on [1, 4].
        let params = InequalityParams::holder(0.5, 0.5, 0.5, 2.0);
        let report = proposition_xs_holder(1.0, 4.0, params).unwrap();
        assert!((report.lhs - 0.014986140513460722).abs() <= 1e-12);
        assert!((report.rhs - 0.19687189199342293).abs() <= 1e-12);
        let variant = report.variant_rhs.unwrap();
        assert!((variant - 0.27841889970714985).abs() <= 1e-12);
        // variant = s^(1/r - 1) rhs = sqrt(2) rhs here.
        assert!((variant - 2.0_f64.sqrt() * report.rhs).abs() <= 1e-15);
        assert!(report.satisfied);
    }

    #[test]
    fn xs_holder_lhs_matches_quadrature_functional() {
        for (u, v, s) in [(1.0, 4.0, 0.5), (0.5, 2.0, 0.75), (2.0, 3.0, 1.0)] {
            let params = InequalityParams::holder(s, 0.4, 0.7, 2.0);
            let report = proposition_xs_holder(u, v, params).unwrap();
            let iv = Interval::new(u, v).unwrap();
            let f = Builtin::Power { q: s }.spec_on(iv).unwrap();
            let via_quad = bounds::lhs_functional(&f, iv, params.lambda, params.mu, 1e-12).unwrap();
            assert!(
                (report.lhs - via_quad).abs() <= 1e-9 * (1.0 + via_quad.abs()),
                "closed-form deviation disagrees with quadrature at ({u}, {v}, {s})"
            );
        }
    }

    #[test]
    fn xs_powermean_collapses_at_unit_weights_and_r_one() {
        for s in [0.25, 0.5, 0.75, 1.0] {
            for (u, v) in [(1.0, 2.0), (0.5, 3.0)] {
                let params = InequalityParams::power_mean(s, 1.0, 1.0, 1.0);
                let report = proposition_xs_powermean(u, v, params).unwrap();
                let closed = s * (1.0 + s * 2.0_f64.powf(s)) * (v - u)
                    / (2.0_f64.powf(s) * (s + 1.0) * (s + 2.0))
                    * arithmetic_mean(u.powf(s - 1.0), v.powf(s - 1.0));
                assert!(
                    (report.rhs - closed).abs() <= 1e-12 * closed,
                    "collapse failed at s={s}, ({u}, {v}): {} vs {closed}",
                    report.rhs
                );
                assert!(report.satisfied);
            }
        }
    }

    #[test]
    fn xs_powermean_hand_case() {
        let params = InequalityParams::power_mean(0.5, 1.0, 1.0, 1.0);
        let report = proposition_xs_powermean(1.0, 2.0, params).unwrap();
        assert!((report.lhs - 0.011844635310912541).abs() <= 1e-12);
        assert!((report.rhs - 0.13737734478532142).abs() <= 1e-12);
    }

    #[test]
    fn inverse_power_hand_case() {
        let report = proposition_inverse_power(1.0, 2.0).unwrap();
        assert!((report.lhs - 0.001297263884499135).abs() <= 1e-12);
        assert!((report.rhs - 25.0 / 288.0).abs() <= 1e-15);
        assert!(report.satisfied);
    }

    #[test]
    fn inverse_power_matches_generic_power_mean_bound() {
        for (u, v) in [(1.0, 2.0), (0.5, 4.0), (3.0, 3.5)] {
            let report = proposition_inverse_power(u, v).unwrap();
            let iv = Interval::new(u, v).unwrap();
            let f = Builtin::InvPower { s: 1.0 }.spec_on(iv).unwrap();
            let params = InequalityParams::power_mean(1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0);
            let generic = power_mean_bound(&f, iv, params).unwrap();
            assert!(
                (report.rhs - generic).abs() <= 1e-12 * generic,
                "closed 5/36 form disagrees with generic bound on ({u}, {v})"
            );
        }
    }

    #[test]
    fn xs_propositions_validate_domain_and_exponents() {
        let params = InequalityParams::holder(0.5, 0.5, 0.5, 2.0);
        assert!(proposition_xs_holder(0.0, 1.0, params).is_err());
        let no_p = InequalityParams::power_mean(0.5, 0.5, 0.5, 2.0);
        assert!(matches!(
            proposition_xs_holder(1.0, 2.0, no_p),
            Err(Error::MissingExponent)
        ));
        assert!(proposition_inverse_power(0.0, 1.0).is_err());
        // s = 1 admits u = 0 for the Hölder variant (derivative is constant).
        let s1 = InequalityParams::holder(1.0, 0.5, 0.5, 2.0);
        assert!(proposition_xs_holder(0.0, 1.0, s1).is_ok());
    }

    proptest! {
        #[test]
        fn mean_chain_and_order_monotonicity(
            u in 0.05_f64..10.0,
            gap in 0.01_f64..5.0,
        ) {
            let v = u + gap;
            let l = logarithmic_mean(u, v).unwrap();
            let i = generalized_log_mean(u, v, 0.0).unwrap();
            let a = arithmetic_mean(u, v);
            // Classical chain u < L < I < A < v for distinct arguments.
            prop_assert!(u < l && l < i && i < a && a < v);
            // L_p is nondecreasing in p.
            let orders = [-1.0, 0.0, 0.5, 1.0, 2.0];
            for w in orders.windows(2) {
                let lo = generalized_log_mean(u, v, w[0]).unwrap();
                let hi = generalized_log_mean(u, v, w[1]).unwrap();
                prop_assert!(lo <= hi * (1.0 + 1e-12));
            }
        }

        #[test]
        fn xs_deviation_is_always_dominated(
            s in 0.1_f64..=1.0,
            lambda in 0.0_f64..=1.0,
            mu in 0.0_f64..=1.0,
            u in 0.1_f64..2.0,
            gap in 0.1_f64..3.0,
        ) {
            let params = InequalityParams::power_mean(s, lambda, mu, 1.0);
            let report = proposition_xs_powermean(u, u + gap, params).unwrap();
            prop_assert!(report.satisfied, "lhs {} > rhs {}", report.lhs, report.rhs);
        }
    }
}
