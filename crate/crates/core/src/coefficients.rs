// SPDX-License-Identifier: Apache-2.0

//! Scalar coefficient functions of the model at a single time.
//!
//! Time derivatives come from Taylor jets of σ, so nothing here is ever
//! differenced numerically.

use crate::error::{Error, Result};
use crate::profiles::{DerivativeJet, Jet};

/// Relative threshold on |ġ|/g below which the Dyson map is treated as singular.
pub const EPS_SING: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Couplings {
    pub t: f64,
    pub g: f64,
    pub g_dot: f64,
    pub g_ddot: f64,
    pub g_dddot: f64,
    pub m: f64,
    pub m_dot: f64,
    pub c2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DysonCoefficients {
    pub t: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub alpha_dot: f64,
    pub beta_dot: f64,
    pub gamma_dot: f64,
    pub delta_dot: f64,
    pub c1: f64,
}

impl DysonCoefficients {
    /// Static coefficients with vanishing time derivatives.
    pub fn fixed(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Self {
        DysonCoefficients {
            t: 0.0,
            alpha,
            beta,
            gamma,
            delta,
            alpha_dot: 0.0,
            beta_dot: 0.0,
            gamma_dot: 0.0,
            delta_dot: 0.0,
            c1: 0.0,
        }
    }

    pub fn values(&self) -> [f64; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }

    pub fn rates(&self) -> [f64; 4] {
        [self.alpha_dot, self.beta_dot, self.gamma_dot, self.delta_dot]
    }
}

/// Coefficients of h = σ³p⁴ + f_pp p² + f_x x + f_p p + f_xp {x,p} + f_xx x² + C.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianCoefficients {
    pub t: f64,
    pub fpp: f64,
    pub fxp: f64,
    pub fp: f64,
    pub fx: f64,
    pub fxx: f64,
    pub c: f64,
    pub sigma3: f64,
}

/// Ṽ(y) = a₄y⁴ + a₂y² + a₁y + a₀.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialPoly {
    pub t: f64,
    pub a4: f64,
    pub a2: f64,
    pub a1: f64,
    pub a0: f64,
}

impl PotentialPoly {
    pub fn eval(&self, y: f64) -> f64 {
        let y2 = y * y;
        (self.a4 * y2 + self.a2) * y2 + self.a1 * y + self.a0
    }
}

fn check_sigma(jet: &DerivativeJet, min_order: usize) -> Result<()> {
    if jet.order() < min_order {
        return Err(Error::Invalid(format!(
            "jet of order {} supplied, order {min_order} required",
            jet.order()
        )));
    }
    if !(jet.sigma() > 0.0) {
        return Err(Error::Domain(format!("g must be positive (σ = {} at t = {})", jet.sigma(), jet.t)));
    }
    Ok(())
}

fn check_regular(jet: &DerivativeJet) -> Result<()> {
    // |ġ|/g = 3|σ̇|/σ
    if 3.0 * jet.values[1].abs() < EPS_SING * jet.sigma() {
        return Err(Error::Singular { t: jet.t });
    }
    Ok(())
}

pub fn couplings_from_sigma(jet: &DerivativeJet, c2: f64) -> Result<Couplings> {
    check_sigma(jet, 4)?;
    let s = jet.to_jet();
    let sd = s.diff();
    let sdd = sd.diff();
    let g = s.powi(-3)?.scale(0.25);
    let m = (sd * sd - s * sdd * 2.0 + 4.0 * c2).checked_div(&(s * s * 4.0))?;
    let gv = g.derivatives();
    Ok(Couplings {
        t: jet.t,
        g: gv[0],
        g_dot: gv[1],
        g_ddot: gv[2],
        g_dddot: gv[3],
        m: m.value(),
        m_dot: m.derivative(1).expect("m jet has order 2"),
        c2,
    })
}

/// Left-hand side of the third-order compatibility condition between g and m.
pub fn constraint_residual(c: &Couplings) -> f64 {
    let Couplings { g, g_dot: gd, g_ddot: gdd, g_dddot: gddd, m, m_dot: md, .. } = *c;
    9.0 * g * g * (gddd - 6.0 * g * md) + 36.0 * g * gd * (g * m - gdd) + 28.0 * gd * gd * gd
}

/// Magnitude against which [`constraint_residual`] is judged.
pub fn constraint_scale(c: &Couplings) -> f64 {
    let a = (9.0 * c.g * c.g * c.g_dddot).abs();
    let b = (28.0 * c.g_dot.powi(3)).abs();
    1f64.max(a).max(b)
}

pub fn dyson_coefficients(c: &Couplings, c1: f64) -> Result<DysonCoefficients> {
    if !(c.g > 0.0) {
        return Err(Error::Domain(format!("g must be positive (g = {})", c.g)));
    }
    if c.g_dot.abs() < EPS_SING * c.g {
        return Err(Error::Singular { t: c.t });
    }
    let g = Jet::from_derivatives(&[c.g, c.g_dot, c.g_ddot, c.g_dddot]);
    let m = Jet::from_derivatives(&[c.m, c.m_dot]);
    let gd = g.diff();
    let gdd = gd.diff();
    let g2 = g * g;
    let alpha = gd.checked_div(&g.scale(6.0))?;
    let beta = g.scale(6.0).recip()?;
    let num = g2 * g * 12.0 + m * g2 * 6.0 + gd * gd - g * gdd;
    let gamma = num.checked_div(&(gd * g2 * 4.0))?;
    let delta = (g.scale(c1) - g * g.ln()? * 0.5).checked_div(&gd)?;
    let rate = |j: &Jet| j.derivative(1).expect("coefficient jets keep first order");
    Ok(DysonCoefficients {
        t: c.t,
        alpha: alpha.value(),
        beta: beta.value(),
        gamma: gamma.value(),
        delta: delta.value(),
        alpha_dot: rate(&alpha),
        beta_dot: rate(&beta),
        gamma_dot: rate(&gamma),
        delta_dot: rate(&delta),
        c1,
    })
}

struct Sig {
    s: f64,
    sd: f64,
    sdd: f64,
    l: f64,
}

fn sig(jet: &DerivativeJet, c1: f64) -> Result<Sig> {
    check_sigma(jet, 2)?;
    check_regular(jet)?;
    let s = jet.sigma();
    Ok(Sig { s, sd: jet.values[1], sdd: jet.values[2], l: 2.0 * c1 + (4.0 * s * s * s).ln() })
}

fn common(jet: &DerivativeJet, c1: f64, c2: f64, fp: impl Fn(&Sig) -> f64) -> Result<HermitianCoefficients> {
    let q = sig(jet, c1)?;
    let Sig { s, sd, sdd, l } = q;
    let sd2 = sd * sd;
    let fpp = (s * (s * (2.0 * (s * (sd2 - 4.0 * c2) - 2.0) * sdd + 16.0 * c2 * c2 + sd2 * sd2) + 16.0 * c2) + 4.0)
        / (4.0 * s * sd2);
    let fxp = (s * (sd2 - 4.0 * c2) - 2.0) / (4.0 * s * s * sd);
    let fx = -l / (12.0 * s * s * sd);
    let fxx = 1.0 / (4.0 * s * s * s);
    let c = (l * l + 36.0 * sd2 * (4.0 * c2 * c2 + sdd)) / (144.0 * s * sd2) + (sd2 - 4.0 * c2) * sdd / 8.0
        - sd2 / (4.0 * s * s);
    Ok(HermitianCoefficients { t: jet.t, fpp, fxp, fp: fp(&q), fx, fxx, c, sigma3: s * s * s })
}

/// The f-coefficients of h. Every entry is the printed closed form except
/// f_p, which uses the factorized form (2c₁ + ln 4σ³)[σ(4c₂ + σ̇² − 2σσ̈) + 2]/(12σσ̇²)
/// required for h to solve the Dyson equation.
pub fn hermitian_coefficients(jet: &DerivativeJet, c1: f64, c2: f64) -> Result<HermitianCoefficients> {
    common(jet, c1, c2, |q| {
        (q.l * (q.s * (4.0 * c2 + q.sd * q.sd - 2.0 * q.s * q.sdd) + 2.0)) / (12.0 * q.s * q.sd * q.sd)
    })
}

/// Same as [`hermitian_coefficients`] but with f_p exactly as typeset,
/// where only c₁ multiplies the bracket. Kept for transcription checks.
pub fn hermitian_coefficients_printed(jet: &DerivativeJet, c1: f64, c2: f64) -> Result<HermitianCoefficients> {
    common(jet, c1, c2, |q| {
        let bracket = q.s * (4.0 * c2 + q.sd * q.sd - 2.0 * q.s * q.sdd) + 2.0;
        (2.0 * c1 * bracket + (4.0 * q.s.powi(3)).ln()) / (12.0 * q.s * q.sd * q.sd)
    })
}

/// The f-coefficients read off the g, m form of h (valid for c₁ = c₂ = 0).
pub fn hermitian_coefficients_simplified(c: &Couplings) -> Result<HermitianCoefficients> {
    let Couplings { g, g_dot: gd, m, .. } = *c;
    if !(g > 0.0) {
        return Err(Error::Domain(format!("g must be positive (g = {g})")));
    }
    if gd.abs() < EPS_SING * g {
        return Err(Error::Singular { t: c.t });
    }
    let lg = g.ln();
    let gd2 = gd * gd;
    Ok(HermitianCoefficients {
        t: c.t,
        sigma3: 1.0 / (4.0 * g),
        fpp: 18.0 * g * g * (2.0 * g + m) / gd2 + gd2 / (72.0 * g.powi(3)) - (2.0 * g + m) / (4.0 * g),
        fp: -3.0 * (g * g * m + g.powi(3)) * lg / gd2,
        fx: g * g * lg / gd,
        fxp: gd / (12.0 * g) - 6.0 * g * g / gd,
        fxx: g,
        c: (1296.0 * g.powi(8) * lg * lg + gd2.powi(3) - 36.0 * gd2 * gd2 * g * g * (2.0 * g + m))
            / (5184.0 * g.powi(5) * gd2)
            - m / 2.0,
    })
}

pub fn doublewell_from_hermitian(f: &HermitianCoefficients) -> PotentialPoly {
    let r = f.fxx.sqrt();
    PotentialPoly {
        t: f.t,
        a4: f.sigma3 * f.fxx * f.fxx,
        a2: f.fxx * f.fpp - f.fxp * f.fxp,
        a1: r * f.fp - f.fx * f.fxp / r,
        a0: f.c - f.fx * f.fx / (4.0 * f.fxx),
    }
}

pub fn doublewell_coefficients(jet: &DerivativeJet, c1: f64, c2: f64) -> Result<PotentialPoly> {
    Ok(doublewell_from_hermitian(&hermitian_coefficients(jet, c1, c2)?))
}

/// The double-well coefficients written directly in g, m (c₁ = c₂ = 0).
pub fn doublewell_bounded_form(c: &Couplings) -> Result<PotentialPoly> {
    let Couplings { g, g_dot: gd, m, .. } = *c;
    if !(g > 0.0) {
        return Err(Error::Domain(format!("g must be positive (g = {g})")));
    }
    if gd.abs() < EPS_SING * g {
        return Err(Error::Singular { t: c.t });
    }
    let gd2 = gd * gd;
    Ok(PotentialPoly {
        t: c.t,
        a4: g / 4.0,
        a2: g / 4.0 * (gd2 / (36.0 * g.powi(3)) + 72.0 * g * g * m / gd2 - m / g + 2.0),
        a1: (36.0 * g * g * m + gd2) * g.sqrt() * g.ln() / (12.0 * gd2),
        a0: gd2 * gd2 / (5184.0 * g.powi(5)) - gd2 * m / (144.0 * g.powi(3)) - gd2 / (72.0 * g * g) - m / 2.0,
    })
}

#[derive(Debug, Clone, Copy)]
pub enum Potential<'a> {
    /// V(z) = (m/4)z² − (g/16)z⁴ on the real axis.
    AnharmonicZ(&'a Couplings),
    DoublewellY(&'a PotentialPoly),
}

pub fn potential_eval(p: Potential<'_>, point: f64) -> f64 {
    match p {
        Potential::AnharmonicZ(c) => {
            let z2 = point * point;
            c.m / 4.0 * z2 - c.g / 16.0 * z2 * z2
        }
        Potential::DoublewellY(pp) => pp.eval(point),
    }
}

/// The c₂ that makes m vanish identically for σ = κ₀ + κ₁t + κ₂t².
pub fn massless_c2(k0: f64, k1: f64, k2: f64) -> f64 {
    k0 * k2 - k1 * k1 / 4.0
}

/// Every coefficient family at one time.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSet {
    pub jet: DerivativeJet,
    pub couplings: Couplings,
    pub dyson: DysonCoefficients,
    pub hermitian: HermitianCoefficients,
    pub potential: PotentialPoly,
}

pub fn coefficient_set(profile: &crate::profiles::TimeProfile, t: f64, c1: f64, c2: f64) -> Result<CoefficientSet> {
    let jet = profile.eval_jet(t, crate::profiles::MAX_ORDER)?;
    let couplings = couplings_from_sigma(&jet, c2)?;
    let dyson = dyson_coefficients(&couplings, c1)?;
    let hermitian = hermitian_coefficients(&jet, c1, c2)?;
    let potential = doublewell_from_hermitian(&hermitian);
    Ok(CoefficientSet { jet, couplings, dyson, hermitian, potential })
}
