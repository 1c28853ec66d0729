// SPDX-License-Identifier: Apache-2.0

//! Operator algebra shared by truncated matrices and exact polynomials.
//!
//! [`Algebra`] is the small interface the closed-form operator expressions
//! are written against. [`Weyl`] realizes it exactly on normal-ordered
//! polynomials in x and p with [x, p] = i, so identities that hold in the
//! infinite-dimensional algebra can be checked with no truncation at all.

use std::collections::BTreeMap;

use num_complex::Complex64 as C;

use crate::error::{Error, Result};

pub const I: C = C::new(0.0, 1.0);

pub fn re(v: f64) -> C {
    C::new(v, 0.0)
}

/// Minimal ring interface over operators built from x and p.
pub trait Algebra {
    type E: Clone;

    fn x(&self) -> Self::E;
    fn p(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn scale(&self, a: &Self::E, s: C) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;

    fn zero(&self) -> Self::E {
        self.scale(&self.one(), C::new(0.0, 0.0))
    }

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.scale(b, re(-1.0)))
    }

    /// Σ cₖ Aₖ.
    fn lin(&self, terms: &[(C, &Self::E)]) -> Self::E {
        let mut acc = self.zero();
        for (c, e) in terms {
            acc = self.add(&acc, &self.scale(e, *c));
        }
        acc
    }

    /// {a, b} = ab + ba.
    fn anti(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(&self.mul(a, b), &self.mul(b, a))
    }

    fn commutator(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }
}

/// Normal-ordered polynomial Σ c_ij xⁱ pʲ.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Poly {
    terms: BTreeMap<(u32, u32), C>,
}

fn binom(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

impl Poly {
    pub fn monomial(i: u32, j: u32, c: C) -> Self {
        let mut p = Poly::default();
        p.push(i, j, c);
        p
    }

    fn push(&mut self, i: u32, j: u32, c: C) {
        let e = self.terms.entry((i, j)).or_insert(C::new(0.0, 0.0));
        *e += c;
        if *e == C::new(0.0, 0.0) {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> C {
        self.terms.get(&(i, j)).copied().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, C)> + '_ {
        self.terms.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        crate::nan_max(self.terms.values().map(|c| c.norm()))
    }

    pub fn degree(&self) -> (u32, u32) {
        self.terms.keys().fold((0, 0), |(a, b), &(i, j)| (a.max(i), b.max(j)))
    }

    /// Remove coefficients with modulus at most `tol`.
    pub fn prune(mut self, tol: f64) -> Self {
        self.terms.retain(|_, c| c.norm() > tol);
        self
    }

    /// Formal adjoint with x† = x, p† = p, re-normal-ordered.
    pub fn adjoint(&self) -> Poly {
        let w = Weyl;
        let mut out = Poly::default();
        for (&(i, j), c) in &self.terms {
            // (c xⁱ pʲ)† = c̄ pʲ xⁱ
            let t = w.mul(&Poly::monomial(0, j, c.conj()), &Poly::monomial(i, 0, re(1.0)));
            out = w.add(&out, &t);
        }
        out
    }
}

/// The Weyl algebra realized on [`Poly`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Weyl;

impl Algebra for Weyl {
    type E = Poly;

    fn x(&self) -> Poly {
        Poly::monomial(1, 0, re(1.0))
    }

    fn p(&self) -> Poly {
        Poly::monomial(0, 1, re(1.0))
    }

    fn one(&self) -> Poly {
        Poly::monomial(0, 0, re(1.0))
    }

    fn zero(&self) -> Poly {
        Poly::default()
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = a.clone();
        for (i, j, c) in b.terms() {
            out.push(i, j, c);
        }
        out
    }

    fn scale(&self, a: &Poly, s: C) -> Poly {
        let mut out = Poly::default();
        for (i, j, c) in a.terms() {
            out.push(i, j, c * s);
        }
        out
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        // xᵃ pᵇ · xᶜ pᵈ with pᵇ xᶜ = Σₛ C(b,s) C(c,s) s! (−i)ˢ x^(c−s) p^(b−s)
        let mut out = Poly::default();
        for (ai, aj, ac) in a.terms() {
            for (bi, bj, bc) in b.terms() {
                let mut phase = re(1.0);
                for s in 0..=aj.min(bi) {
                    let w = binom(aj, s) * binom(bi, s) * factorial(s);
                    out.push(ai + bi - s, aj + bj - s, ac * bc * phase * w);
                    phase *= -I;
                }
            }
        }
        out
    }
}

impl Weyl {
    /// e^G A e^(−G) = Σₙ adⁿ_G(A)/n!, required to terminate.
    pub fn conjugate(&self, g: &Poly, a: &Poly) -> Result<Poly> {
        const MAX_TERMS: u32 = 64;
        let mut term = a.clone();
        let mut acc = a.clone();
        for n in 1..=MAX_TERMS {
            term = self.scale(&self.commutator(g, &term), re(1.0 / n as f64));
            if term.is_zero() {
                return Ok(acc);
            }
            acc = self.add(&acc, &term);
        }
        Err(Error::Invalid("adjoint series did not terminate".into()))
    }
}
