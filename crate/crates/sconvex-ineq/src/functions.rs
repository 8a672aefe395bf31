//! Built-in function family and the `name[:key=value,...]` selector syntax
//! used by the command line and the examples.
//!
//! Available selectors:
//!
//! | selector        | f(x)        | f'(x)              |
//! |-----------------|-------------|--------------------|
//! | `power:q=Q`     | x^Q         | Q x^(Q-1)          |
//! | `invpower:s=S`  | x^(-S)      | -S x^(-S-1)        |
//! | `exp`           | e^x         | e^x                |
//! | `xlnx`          | x ln x      | ln x + 1           |
//! | `abs_shift:c=C` | \|x - C\|   | sign(x - C)        |

use crate::core::{FunctionSpec, Interval};
use crate::error::Error;

/// A parsed builtin selector. Keeping the parameters around (rather than only
/// the closures) lets us derive interval-specific data such as a sup bound on
/// the fourth derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Builtin {
    Power { q: f64 },
    InvPower { s: f64 },
    Exp,
    XLnX,
    AbsShift { c: f64 },
}

impl Builtin {
    /// Parses `name[:key=value,...]`.
    pub fn parse(selector: &str) -> Result<Builtin, Error> {
        let (name, args) = match selector.split_once(':') {
            Some((name, rest)) => (name.trim(), Some(rest)),
            None => (selector.trim(), None),
        };
        let mut kv: Vec<(String, f64)> = Vec::new();
        if let Some(args) = args {
            for piece in args.split(',') {
                let piece = piece.trim();
                if piece.is_empty() {
                    continue;
                }
                let (key, value) = piece.split_once('=').ok_or_else(|| {
                    Error::parse(format!("selector argument `{piece}` is not key=value"))
                })?;
                let value: f64 = value.trim().parse().map_err(|_| {
                    Error::parse(format!(
                        "selector argument `{piece}` has a malformed number"
                    ))
                })?;
                kv.push((key.trim().to_string(), value));
            }
        }
        let lookup = |key: &str| -> Result<f64, Error> {
            kv.iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::parse(format!("selector `{name}` requires `{key}=<value>`")))
        };
        match name {
            "power" => Ok(Builtin::Power { q: lookup("q")? }),
            "invpower" => Ok(Builtin::InvPower { s: lookup("s")? }),
            "exp" => Ok(Builtin::Exp),
            "xlnx" => Ok(Builtin::XLnX),
            "abs_shift" => Ok(Builtin::AbsShift { c: lookup("c")? }),
            other => Err(Error::parse(format!(
                "unknown builtin `{other}` (expected power, invpower, exp, xlnx, or abs_shift)"
            ))),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Builtin::Power { q } => format!("power:q={q}"),
            Builtin::InvPower { s } => format!("invpower:s={s}"),
            Builtin::Exp => "exp".to_string(),
            Builtin::XLnX => "xlnx".to_string(),
            Builtin::AbsShift { c } => format!("abs_shift:c={c}"),
        }
    }

    /// Builds the function/derivative pair.
    pub fn spec(&self) -> FunctionSpec {
        match *self {
            Builtin::Power { q } => FunctionSpec::new(
                self.label(),
                move |x: f64| x.powf(q),
                move |x: f64| q * x.powf(q - 1.0),
            ),
            Builtin::InvPower { s } => FunctionSpec::new(
                self.label(),
                move |x: f64| x.powf(-s),
                move |x: f64| -s * x.powf(-s - 1.0),
            ),
            Builtin::Exp => FunctionSpec::new("exp", f64::exp, f64::exp),
            Builtin::XLnX => FunctionSpec::new("xlnx", |x: f64| x * x.ln(), |x: f64| x.ln() + 1.0),
            Builtin::AbsShift { c } => FunctionSpec::new(
                self.label(),
                move |x: f64| (x - c).abs(),
                move |x: f64| if x >= c { 1.0 } else { -1.0 },
            ),
        }
    }

    /// Builds the pair, checks the builtin is usable on `iv`, and attaches a
    /// fourth-derivative sup bound when one is available there.
    pub fn spec_on(&self, iv: Interval) -> Result<FunctionSpec, Error> {
        match *self {
            Builtin::Power { q } => {
                if q.fract() != 0.0 && iv.u() < 0.0 {
                    return Err(Error::domain(format!(
                        "power:q={q} needs a nonnegative interval for fractional q"
                    )));
                }
                if q < 0.0 && iv.u() <= 0.0 {
                    return Err(Error::domain(format!(
                        "power:q={q} needs a strictly positive interval for negative q"
                    )));
                }
            }
            Builtin::InvPower { .. } | Builtin::XLnX => iv.require_positive()?,
            Builtin::Exp | Builtin::AbsShift { .. } => {}
        }
        let spec = self.spec();
        match self.fourth_derivative_sup(iv) {
            Some(bound) => spec.with_fourth_deriv_bound(bound),
            None => Ok(spec),
        }
    }

    /// Sup of |f''''| over `iv`, when it exists and is finite.
    pub fn fourth_derivative_sup(&self, iv: Interval) -> Option<f64> {
        let (u, v) = (iv.u(), iv.v());
        match *self {
            Builtin::Power { q } => {
                let coeff = q * (q - 1.0) * (q - 2.0) * (q - 3.0);
                if coeff == 0.0 {
                    return Some(0.0);
                }
                let e4 = q - 4.0;
                // |x|^e4 is monotone on a one-signed interval, so the sup sits
                // at an endpoint; unbounded when the exponent is negative and
                // the interval touches zero.
                if e4 >= 0.0 {
                    Some(coeff.abs() * u.abs().max(v.abs()).powf(e4))
                } else if u > 0.0 {
                    Some(coeff.abs() * u.powf(e4))
                } else {
                    None
                }
            }
            Builtin::InvPower { s } => {
                if u > 0.0 {
                    Some(s * (s + 1.0) * (s + 2.0) * (s + 3.0) * u.powf(-s - 4.0))
                } else {
                    None
                }
            }
            Builtin::Exp => Some(v.exp()),
            Builtin::XLnX => {
                if u > 0.0 {
                    Some(2.0 / (u * u * u))
                } else {
                    None
                }
            }
            Builtin::AbsShift { .. } => None,
        }
    }
}

/// Convenience constructors for library callers and the examples.
pub fn power(q: f64) -> FunctionSpec {
    Builtin::Power { q }.spec()
}

pub fn inv_power(s: f64) -> FunctionSpec {
    Builtin::InvPower { s }.spec()
}

pub fn exponential() -> FunctionSpec {
    Builtin::Exp.spec()
}

pub fn x_ln_x() -> FunctionSpec {
    Builtin::XLnX.spec()
}

pub fn abs_shift(c: f64) -> FunctionSpec {
    Builtin::AbsShift { c }.spec()
}

pub fn constant(c: f64) -> FunctionSpec {
    FunctionSpec::new(format!("const:{c}"), move |_| c, |_| 0.0)
}
