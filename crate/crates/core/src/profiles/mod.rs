// SPDX-License-Identifier: Apache-2.0

//! The parameterization function σ(t) and its derivatives.

pub mod expr;
pub mod jet;

use std::fmt;

pub use expr::{parse, Expr, Func};
pub use jet::{Jet, MAX_ORDER};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum ProfileKind {
    Cosh,
    /// σ = κ₀ + κ₁ t + κ₂ t².
    Polynomial([f64; 3]),
    Parsed(Expr),
}

/// σ(t) together with the closed interval on which it may be evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeProfile {
    kind: ProfileKind,
    domain: (f64, f64),
}

/// σ and its derivatives at one time; `values[k]` is the k-th derivative.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeJet {
    pub t: f64,
    pub values: Vec<f64>,
}

impl DerivativeJet {
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn sigma(&self) -> f64 {
        self.values[0]
    }

    pub fn get(&self, k: usize) -> Option<f64> {
        self.values.get(k).copied()
    }

    pub fn to_jet(&self) -> Jet {
        Jet::from_derivatives(&self.values)
    }
}

impl TimeProfile {
    pub fn cosh() -> Self {
        TimeProfile { kind: ProfileKind::Cosh, domain: (f64::NEG_INFINITY, f64::INFINITY) }
    }

    pub fn kind(&self) -> &ProfileKind {
        &self.kind
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    /// Restrict evaluation to `[lo, hi]`.
    pub fn with_domain(mut self, lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(Error::Invalid(format!("empty profile domain [{lo}, {hi}]")));
        }
        self.domain = (lo, hi);
        Ok(self)
    }

    /// Full-order Taylor jet at `t`.
    pub fn taylor(&self, t: f64) -> Result<Jet> {
        let (lo, hi) = self.domain;
        if !t.is_finite() || t < lo || t > hi {
            return Err(Error::Domain(format!("t = {t} outside profile domain [{lo}, {hi}]")));
        }
        match &self.kind {
            ProfileKind::Cosh => {
                let (s, c) = (t.sinh(), t.cosh());
                Ok(Jet::from_derivatives(&[c, s, c, s, c]))
            }
            ProfileKind::Polynomial([k0, k1, k2]) => Ok(Jet::from_derivatives(&[
                k0 + t * (k1 + t * k2),
                k1 + 2.0 * k2 * t,
                2.0 * k2,
                0.0,
                0.0,
            ])),
            ProfileKind::Parsed(e) => e.jet(t),
        }
    }

    pub fn eval_jet(&self, t: f64, order: usize) -> Result<DerivativeJet> {
        if order > MAX_ORDER {
            return Err(Error::Invalid(format!("jet order {order} exceeds {MAX_ORDER}")));
        }
        let j = self.taylor(t)?;
        Ok(DerivativeJet { t, values: j.derivatives()[..=order].to_vec() })
    }
}

impl fmt::Display for TimeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ProfileKind::Cosh => write!(f, "cosh(t)"),
            ProfileKind::Polynomial([a, b, c]) => write!(f, "{a} + {b}*t + {c}*t^2"),
            ProfileKind::Parsed(e) => write!(f, "{e}"),
        }
    }
}

pub fn polynomial_profile(k0: f64, k1: f64, k2: f64) -> TimeProfile {
    TimeProfile {
        kind: ProfileKind::Polynomial([k0, k1, k2]),
        domain: (f64::NEG_INFINITY, f64::INFINITY),
    }
}

/// Parse a σ(t) expression. `cosh(t)` maps to the builtin profile and any
/// polynomial of degree at most two to the polynomial kind.
pub fn parse_profile(spec: &str) -> Result<TimeProfile> {
    let e = parse(spec)?;
    if e == Expr::Call(Func::Cosh, Box::new(Expr::Var)) {
        return Ok(TimeProfile::cosh());
    }
    if let Some(p) = e.polynomial() {
        if p.len() <= 3 {
            let get = |i: usize| p.get(i).copied().unwrap_or(0.0);
            return Ok(polynomial_profile(get(0), get(1), get(2)));
        }
    }
    Ok(TimeProfile { kind: ProfileKind::Parsed(e), domain: (f64::NEG_INFINITY, f64::INFINITY) })
}

pub fn eval_jet(profile: &TimeProfile, t: f64, order: usize) -> Result<DerivativeJet> {
    profile.eval_jet(t, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosh_jet_at_zero() {
        let j = parse_profile("cosh(t)").unwrap().eval_jet(0.0, 4).unwrap();
        assert_eq!(j.values, vec![1.0, 0.0, 1.0, 0.0, 1.0]);
    }

    #[test]
    fn cosh_jet_at_one() {
        let j = TimeProfile::cosh().eval_jet(1.0, 2).unwrap();
        assert_eq!(j.values.len(), 3);
        assert!((j.values[0] - 1.5430806348152437).abs() < 1e-15);
        assert!((j.values[1] - 1.1752011936438014).abs() < 1e-15);
        assert!((j.values[2] - 1.5430806348152437).abs() < 1e-15);
    }

    #[test]
    fn cosh_jet_identities_are_exact() {
        for t in [-2.0, 0.3, 1.0, 4.5] {
            let v = TimeProfile::cosh().eval_jet(t, 4).unwrap().values;
            assert_eq!(v[2], v[0]);
            assert_eq!(v[3], v[1]);
        }
    }

    #[test]
    fn polynomial_examples() {
        let p = parse_profile("1 + 2*t + 3*t^2").unwrap();
        assert_eq!(p.kind(), &ProfileKind::Polynomial([1.0, 2.0, 3.0]));
        assert_eq!(p.eval_jet(1.0, 4).unwrap().values, vec![6.0, 8.0, 6.0, 0.0, 0.0]);
        let q = polynomial_profile(1.0, 0.0, 1.0);
        assert_eq!(q.eval_jet(2.0, 4).unwrap().values, vec![5.0, 4.0, 2.0, 0.0, 0.0]);
        let r = polynomial_profile(0.0, 1.0, 0.0).eval_jet(3.0, 1).unwrap();
        assert_eq!(r.values, vec![3.0, 1.0]);
        let c = polynomial_profile(1.0, 0.0, 0.0).eval_jet(-7.0, 4).unwrap();
        assert_eq!(c.values, vec![1.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn order_zero_holds_only_sigma() {
        let j = TimeProfile::cosh().eval_jet(0.5, 0).unwrap();
        assert_eq!(j.values, vec![0.5f64.cosh()]);
        assert_eq!(j.get(1), None);
    }

    #[test]
    fn domain_is_enforced() {
        let p = TimeProfile::cosh().with_domain(0.0, 1.0).unwrap();
        assert!(p.eval_jet(1.5, 2).is_err());
        assert!(p.eval_jet(0.5, 2).is_ok());
        let ln = parse_profile("ln(t)").unwrap();
        assert!(matches!(ln.eval_jet(-1.0, 4), Err(Error::Domain(_))));
        assert!(TimeProfile::cosh().with_domain(2.0, 1.0).is_err());
        assert!(TimeProfile::cosh().eval_jet(1.0, 5).is_err());
    }

    #[test]
    fn parsed_kind_for_transcendental() {
        let p = parse_profile("1 + sinh(t)^2").unwrap();
        assert!(matches!(p.kind(), ProfileKind::Parsed(_)));
        let v = p.eval_jet(0.7, 4).unwrap().values;
        // 1 + sinh² = cosh², derivatives sinh(2t), 2cosh(2t), 4 sinh(2t), 8 cosh(2t)
        let t2 = 1.4f64;
        let want = [0.7f64.cosh().powi(2), t2.sinh(), 2.0 * t2.cosh(), 4.0 * t2.sinh(), 8.0 * t2.cosh()];
        for (a, b) in v.iter().zip(want) {
            assert!((a - b).abs() < 1e-13 * b.abs().max(1.0), "{a} vs {b}");
        }
    }
}
