// SPDX-License-Identifier: Apache-2.0

//! Truncated Taylor arithmetic.
//!
//! A [`Jet`] stores normalized Taylor coefficients `c[k] = f^(k)(t0) / k!`
//! for `k < len`. Every operation truncates to the shorter operand, so a
//! differentiated jet carries one fewer valid coefficient.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Highest derivative order tracked.
pub const MAX_ORDER: usize = 4;
const CAP: usize = MAX_ORDER + 1;

const FACT: [f64; CAP] = [1.0, 1.0, 2.0, 6.0, 24.0];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    c: [f64; CAP],
    len: usize,
}

impl Jet {
    pub fn constant(v: f64) -> Self {
        let mut c = [0.0; CAP];
        c[0] = v;
        Jet { c, len: CAP }
    }

    /// The independent variable expanded at `t0`.
    pub fn variable(t0: f64) -> Self {
        let mut c = [0.0; CAP];
        c[0] = t0;
        c[1] = 1.0;
        Jet { c, len: CAP }
    }

    /// Build from plain derivatives `[f, f', f'', ...]`.
    pub fn from_derivatives(d: &[f64]) -> Self {
        assert!(!d.is_empty() && d.len() <= CAP, "jet needs 1..=5 entries");
        let mut c = [0.0; CAP];
        for (k, v) in d.iter().enumerate() {
            c[k] = v / FACT[k];
        }
        Jet { c, len: d.len() }
    }

    pub fn from_taylor(coeffs: &[f64]) -> Self {
        assert!(!coeffs.is_empty() && coeffs.len() <= CAP);
        let mut c = [0.0; CAP];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Jet { c, len: coeffs.len() }
    }

    /// Number of valid coefficients.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    pub fn taylor(&self) -> &[f64] {
        &self.c[..self.len]
    }

    /// k-th derivative, `None` past the valid order.
    pub fn derivative(&self, k: usize) -> Option<f64> {
        (k < self.len).then(|| self.c[k] * FACT[k])
    }

    pub fn derivatives(&self) -> Vec<f64> {
        (0..self.len).map(|k| self.c[k] * FACT[k]).collect()
    }

    /// Time derivative as a jet (one order shorter).
    pub fn diff(&self) -> Self {
        assert!(self.len > 1, "cannot differentiate a zeroth-order jet");
        let mut c = [0.0; CAP];
        for k in 0..self.len - 1 {
            c[k] = (k + 1) as f64 * self.c[k + 1];
        }
        Jet { c, len: self.len - 1 }
    }

    pub fn truncate(&self, len: usize) -> Self {
        let len = len.min(self.len);
        let mut c = [0.0; CAP];
        c[..len].copy_from_slice(&self.c[..len]);
        Jet { c, len }
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        for v in &mut out.c[..out.len] {
            *v *= s;
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        self.taylor().iter().all(|v| v.is_finite())
    }

    pub fn recip(&self) -> Result<Self> {
        Jet::constant(1.0).truncate(self.len).checked_div(self)
    }

    pub fn checked_div(&self, b: &Jet) -> Result<Self> {
        if b.c[0] == 0.0 {
            return Err(Error::Domain("division by zero".into()));
        }
        let len = self.len.min(b.len);
        let mut q = [0.0; CAP];
        for k in 0..len {
            let mut s = self.c[k];
            for i in 1..=k {
                s -= b.c[i] * q[k - i];
            }
            q[k] = s / b.c[0];
        }
        Ok(Jet { c: q, len })
    }

    pub fn exp(&self) -> Self {
        let mut e = [0.0; CAP];
        e[0] = self.c[0].exp();
        for k in 1..self.len {
            let s: f64 = (1..=k).map(|i| i as f64 * self.c[i] * e[k - i]).sum();
            e[k] = s / k as f64;
        }
        Jet { c: e, len: self.len }
    }

    pub fn ln(&self) -> Result<Self> {
        let a0 = self.c[0];
        if a0 <= 0.0 {
            return Err(Error::Domain(format!("ln of non-positive value {a0}")));
        }
        let mut l = [0.0; CAP];
        l[0] = a0.ln();
        for k in 1..self.len {
            let s: f64 = (1..k).map(|i| i as f64 * l[i] * self.c[k - i]).sum();
            l[k] = (self.c[k] - s / k as f64) / a0;
        }
        Ok(Jet { c: l, len: self.len })
    }

    pub fn sqrt(&self) -> Result<Self> {
        let a0 = self.c[0];
        if a0 < 0.0 || (a0 == 0.0 && self.len > 1) {
            return Err(Error::Domain(format!("sqrt of {a0} has no Taylor expansion")));
        }
        let mut r = [0.0; CAP];
        r[0] = a0.sqrt();
        for k in 1..self.len {
            let s: f64 = (1..k).map(|i| r[i] * r[k - i]).sum();
            r[k] = (self.c[k] - s) / (2.0 * r[0]);
        }
        Ok(Jet { c: r, len: self.len })
    }

    /// Returns `(sin, cos)`.
    pub fn sin_cos(&self) -> (Self, Self) {
        let (mut s, mut c) = ([0.0; CAP], [0.0; CAP]);
        s[0] = self.c[0].sin();
        c[0] = self.c[0].cos();
        for k in 1..self.len {
            let (mut ss, mut cc) = (0.0, 0.0);
            for i in 1..=k {
                ss += i as f64 * self.c[i] * c[k - i];
                cc += i as f64 * self.c[i] * s[k - i];
            }
            s[k] = ss / k as f64;
            c[k] = -cc / k as f64;
        }
        (Jet { c: s, len: self.len }, Jet { c, len: self.len })
    }

    /// Returns `(sinh, cosh)`.
    pub fn sinh_cosh(&self) -> (Self, Self) {
        let (mut s, mut c) = ([0.0; CAP], [0.0; CAP]);
        s[0] = self.c[0].sinh();
        c[0] = self.c[0].cosh();
        for k in 1..self.len {
            let (mut ss, mut cc) = (0.0, 0.0);
            for i in 1..=k {
                ss += i as f64 * self.c[i] * c[k - i];
                cc += i as f64 * self.c[i] * s[k - i];
            }
            s[k] = ss / k as f64;
            c[k] = cc / k as f64;
        }
        (Jet { c: s, len: self.len }, Jet { c, len: self.len })
    }

    pub fn tanh(&self) -> Self {
        let (s, c) = self.sinh_cosh();
        // cosh never vanishes on the reals
        s.checked_div(&c).expect("cosh is positive")
    }

    pub fn powi(&self, n: i32) -> Result<Self> {
        let mut acc = Jet::constant(1.0).truncate(self.len);
        for _ in 0..n.unsigned_abs() {
            acc = acc * *self;
        }
        if n < 0 {
            acc.recip()
        } else {
            Ok(acc)
        }
    }

    /// `self^e` for a jet exponent; requires a positive base.
    pub fn pow(&self, e: &Jet) -> Result<Self> {
        if self.c[0] <= 0.0 {
            return Err(Error::Domain(format!(
                "non-integer power of non-positive base {}",
                self.c[0]
            )));
        }
        Ok((self.ln()? * *e).exp())
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, b: Jet) -> Jet {
        let len = self.len.min(b.len);
        let mut c = [0.0; CAP];
        for k in 0..len {
            c[k] = self.c[k] + b.c[k];
        }
        Jet { c, len }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, b: Jet) -> Jet {
        self + (-b)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, b: Jet) -> Jet {
        let len = self.len.min(b.len);
        let mut c = [0.0; CAP];
        for k in 0..len {
            c[k] = (0..=k).map(|i| self.c[i] * b.c[k - i]).sum();
        }
        Jet { c, len }
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, s: f64) -> Jet {
        self.scale(s)
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(self, s: f64) -> Jet {
        let mut out = self;
        out.c[0] += s;
        out
    }
}

impl Div for Jet {
    type Output = Jet;
    /// Panics on a zero denominator; use [`Jet::checked_div`] on untrusted input.
    fn div(self, b: Jet) -> Jet {
        self.checked_div(&b).expect("jet division by zero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn exp_of_variable_reproduces_all_derivatives() {
        let j = Jet::variable(0.7).exp();
        for d in j.derivatives() {
            assert!(close(d, 0.7f64.exp(), 1e-15));
        }
    }

    #[test]
    fn sin_derivatives_cycle() {
        let t = 1.3f64;
        let (s, _) = Jet::variable(t).sin_cos();
        let want = [t.sin(), t.cos(), -t.sin(), -t.cos(), t.sin()];
        for (a, b) in s.derivatives().iter().zip(want) {
            assert!(close(*a, b, 1e-14));
        }
    }

    #[test]
    fn ln_inverts_exp() {
        let x = Jet::variable(0.4) * Jet::variable(0.4) + 1.0;
        let back = x.ln().unwrap().exp();
        for (a, b) in back.taylor().iter().zip(x.taylor()) {
            assert!(close(*a, *b, 1e-14));
        }
    }

    #[test]
    fn sqrt_squares_back() {
        let x = Jet::variable(2.0).exp();
        let r = x.sqrt().unwrap();
        let sq = r * r;
        for (a, b) in sq.taylor().iter().zip(x.taylor()) {
            assert!(close(*a, *b, 1e-14));
        }
    }

    #[test]
    fn diff_shortens_and_shifts() {
        let x = Jet::variable(2.0);
        let cube = x * x * x;
        let d = cube.diff();
        assert_eq!(d.len(), 4);
        assert_eq!(d.derivatives(), vec![12.0, 12.0, 6.0, 0.0]);
    }

    #[test]
    fn reciprocal_power_matches_division() {
        let x = Jet::variable(1.5).sinh_cosh().1;
        let a = x.powi(-3).unwrap();
        let b = Jet::constant(1.0) / (x * x * x);
        for (u, v) in a.taylor().iter().zip(b.taylor()) {
            assert!(close(*u, *v, 1e-14));
        }
    }

    #[test]
    fn domain_errors() {
        assert!(Jet::constant(-1.0).ln().is_err());
        assert!(Jet::variable(0.0).sqrt().is_err());
        assert!(Jet::constant(1.0).checked_div(&Jet::constant(0.0)).is_err());
    }
}
