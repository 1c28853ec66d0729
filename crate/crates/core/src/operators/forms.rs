// SPDX-License-Identifier: Apache-2.0

//! Closed-form operator expressions, generic over the algebra they are
//! evaluated in.

use num_complex::Complex64 as C;

use crate::algebra::{re, Algebra, I};
use crate::coefficients::{Couplings, DysonCoefficients, HermitianCoefficients, PotentialPoly};

/// The six operators whose conjugation by η is known in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BchTarget {
    X,
    P,
    X2,
    P2,
    XP2,
    XP,
}

impl BchTarget {
    pub const ALL: [BchTarget; 6] =
        [BchTarget::X, BchTarget::P, BchTarget::X2, BchTarget::P2, BchTarget::XP2, BchTarget::XP];

    pub fn label(self) -> &'static str {
        match self {
            BchTarget::X => "x",
            BchTarget::P => "p",
            BchTarget::X2 => "x^2",
            BchTarget::P2 => "p^2",
            BchTarget::XP2 => "{x,p^2}",
            BchTarget::XP => "{x,p}",
        }
    }

    /// The bare operator A in η A η⁻¹.
    pub fn bare<A: Algebra>(self, alg: &A) -> A::E {
        let (x, p) = (alg.x(), alg.p());
        match self {
            BchTarget::X => x,
            BchTarget::P => p,
            BchTarget::X2 => alg.mul(&x, &x),
            BchTarget::P2 => alg.mul(&p, &p),
            BchTarget::XP2 => alg.anti(&x, &alg.mul(&p, &p)),
            BchTarget::XP => alg.anti(&x, &p),
        }
    }
}

/// Powers p⁰..p⁴ and x, x² precomputed once.
struct Powers<E> {
    one: E,
    x: E,
    x2: E,
    p: E,
    p2: E,
    p3: E,
    p4: E,
}

fn powers<A: Algebra>(alg: &A) -> Powers<A::E> {
    let (x, p) = (alg.x(), alg.p());
    let p2 = alg.mul(&p, &p);
    let p3 = alg.mul(&p2, &p);
    let p4 = alg.mul(&p2, &p2);
    Powers { one: alg.one(), x2: alg.mul(&x, &x), x, p, p2, p3, p4 }
}

/// Right-hand side of η A η⁻¹ for each target.
///
/// The {x,p²} identity carries 2iα{x,p}; the {x,p} one is derived from the
/// x and p images since conjugation is an algebra automorphism.
pub fn bch_closed_form<A: Algebra>(alg: &A, d: &DysonCoefficients, which: BchTarget) -> A::E {
    let (a, b, c, dl) = (d.alpha, d.beta, d.gamma, d.delta);
    let w = powers(alg);
    let k = 3.0 * a * a * b + 2.0 * a * c;
    match which {
        BchTarget::X => x_image(alg, d, &w),
        BchTarget::P => alg.lin(&[(re(1.0), &w.p), (I * a, &w.one)]),
        BchTarget::X2 => {
            let xp = alg.anti(&w.x, &w.p);
            let xp2 = alg.anti(&w.x, &w.p2);
            let shift = C::new(k, -dl);
            alg.lin(&[
                (re(1.0), &w.x2),
                (re(-9.0 * b * b), &w.p4),
                (I * (-12.0 * b * (3.0 * a * b + c)), &w.p3),
                (C::new(54.0 * a * a * b * b + 36.0 * a * b * c + 4.0 * c * c, -6.0 * b * dl), &w.p2),
                (re(4.0 * (3.0 * a * b + c)) * C::new(dl, a * (3.0 * a * b + 2.0 * c)), &w.p),
                (C::new(2.0 * dl, 2.0 * k), &w.x),
                (re(6.0 * a * b + 2.0 * c), &xp),
                (I * (-3.0 * b), &xp2),
                (-(shift * shift), &w.one),
            ])
        }
        BchTarget::P2 => alg.lin(&[(re(1.0), &w.p2), (re(-a * a), &w.one), (I * (2.0 * a), &w.p)]),
        BchTarget::XP2 => {
            let xp = alg.anti(&w.x, &w.p);
            let xp2 = alg.anti(&w.x, &w.p2);
            alg.lin(&[
                (re(1.0), &xp2),
                (I * (-6.0 * b), &w.p4),
                (re(24.0 * a * b + 4.0 * c), &w.p3),
                (C::new(2.0 * dl, 36.0 * a * a * b + 12.0 * a * c), &w.p2),
                (re(-2.0 * a * a), &w.x),
                (C::new(-24.0 * a * a * a * b - 12.0 * a * a * c, 4.0 * a * dl), &w.p),
                (I * (-2.0 * a * a) * C::new(k, -dl), &w.one),
                (I * (2.0 * a), &xp),
            ])
        }
        BchTarget::XP => {
            let xi = x_image(alg, d, &w);
            let pi = alg.lin(&[(re(1.0), &w.p), (I * a, &w.one)]);
            alg.anti(&xi, &pi)
        }
    }
}

fn x_image<A: Algebra>(alg: &A, d: &DysonCoefficients, w: &Powers<A::E>) -> A::E {
    let (a, b, c, dl) = (d.alpha, d.beta, d.gamma, d.delta);
    alg.lin(&[
        (re(1.0), &w.x),
        (C::new(dl, 3.0 * a * a * b + 2.0 * a * c), &w.one),
        (re(6.0 * a * b + 2.0 * c), &w.p),
        (I * (-3.0 * b), &w.p2),
    ])
}

/// i η̇ η⁻¹.
pub fn gauge_left<A: Algebra>(alg: &A, d: &DysonCoefficients) -> A::E {
    let (a, ad, bd, cd, dd) = (d.alpha, d.alpha_dot, d.beta_dot, d.gamma_dot, d.delta_dot);
    let w = powers(alg);
    alg.lin(&[
        (I * ad, &w.x),
        (I * bd, &w.p3),
        (re(-(3.0 * bd * a + cd)), &w.p2),
        (-C::new(dd, 3.0 * bd * a * a + 2.0 * cd * a), &w.p),
        (C::new(bd * a * a * a + cd * a * a, -dd * a), &w.one),
    ])
}

/// i η⁻¹ η̇.
pub fn gauge_right<A: Algebra>(alg: &A, d: &DysonCoefficients) -> A::E {
    let (b, c, dl, ad, bd, cd, dd) =
        (d.beta, d.gamma, d.delta, d.alpha_dot, d.beta_dot, d.gamma_dot, d.delta_dot);
    let w = powers(alg);
    alg.lin(&[
        (I * ad, &w.x),
        (I * bd, &w.p3),
        (re(-(3.0 * ad * b + cd)), &w.p2),
        (-C::new(dd, 2.0 * c * ad), &w.p),
        (I * (-dl * ad), &w.one),
    ])
}

/// H = p² − p/2 + (i/2){x,p²} − m(1+ix) + g(x−i)².
pub fn real_line_hamiltonian<A: Algebra>(alg: &A, c: &Couplings) -> A::E {
    let w = powers(alg);
    let xp2 = alg.anti(&w.x, &w.p2);
    let shifted = alg.lin(&[(re(1.0), &w.x), (-I, &w.one)]);
    let sq = alg.mul(&shifted, &shifted);
    alg.lin(&[
        (re(1.0), &w.p2),
        (re(-0.5), &w.p),
        (I * 0.5, &xp2),
        (re(-c.m), &w.one),
        (I * (-c.m), &w.x),
        (re(c.g), &sq),
    ])
}

/// h = σ³p⁴ + f_pp p² + f_x x + f_p p + f_xp {x,p} + f_xx x² + C.
pub fn hermitian_hamiltonian<A: Algebra>(alg: &A, f: &HermitianCoefficients) -> A::E {
    let w = powers(alg);
    let xp = alg.anti(&w.x, &w.p);
    alg.lin(&[
        (re(f.sigma3), &w.p4),
        (re(f.fpp), &w.p2),
        (re(f.fx), &w.x),
        (re(f.fp), &w.p),
        (re(f.fxp), &xp),
        (re(f.fxx), &w.x2),
        (re(f.c), &w.one),
    ])
}

/// ĥ, with the x and {x,p} terms removed by the unitary U.
pub fn unitary_transformed<A: Algebra>(alg: &A, f: &HermitianCoefficients) -> A::E {
    let w = powers(alg);
    alg.lin(&[
        (re(f.sigma3), &w.p4),
        (re(f.fpp - f.fxp * f.fxp / f.fxx), &w.p2),
        (re(f.fp - f.fx * f.fxp / f.fxx), &w.p),
        (re(f.fxx), &w.x2),
        (re(f.c - f.fx * f.fx / (4.0 * f.fxx)), &w.one),
    ])
}

/// h̃ = p² + a₄x⁴ + a₂x² + a₁x + a₀.
pub fn double_well<A: Algebra>(alg: &A, pp: &PotentialPoly) -> A::E {
    let w = powers(alg);
    let x4 = alg.mul(&w.x2, &w.x2);
    alg.lin(&[
        (re(1.0), &w.p2),
        (re(pp.a4), &x4),
        (re(pp.a2), &w.x2),
        (re(pp.a1), &w.x),
        (re(pp.a0), &w.one),
    ])
}

/// The exponent of U: −i(f_xp/2f_xx) p² − i(f_x/2f_xx) p.
pub fn unitary_exponent<A: Algebra>(alg: &A, f: &HermitianCoefficients) -> A::E {
    let w = powers(alg);
    alg.lin(&[(-I * (f.fxp / (2.0 * f.fxx)), &w.p2), (-I * (f.fx / (2.0 * f.fxx)), &w.p)])
}

/// The momentum factor βp³ + iγp² + iδp of η.
pub fn momentum_exponent<A: Algebra>(alg: &A, d: &DysonCoefficients) -> A::E {
    let w = powers(alg);
    alg.lin(&[(re(d.beta), &w.p3), (I * d.gamma, &w.p2), (I * d.delta, &w.p)])
}

/// η H η⁻¹ + i η̇ η⁻¹ assembled from the closed-form images.
pub fn dyson_image<A: Algebra>(alg: &A, c: &Couplings, d: &DysonCoefficients) -> A::E {
    let x = bch_closed_form(alg, d, BchTarget::X);
    let p = bch_closed_form(alg, d, BchTarget::P);
    let x2 = bch_closed_form(alg, d, BchTarget::X2);
    let p2 = bch_closed_form(alg, d, BchTarget::P2);
    let xp2 = bch_closed_form(alg, d, BchTarget::XP2);
    let one = alg.one();
    // (x − i)² = x² − 2ix − 1
    let conj_h = alg.lin(&[
        (re(1.0), &p2),
        (re(-0.5), &p),
        (I * 0.5, &xp2),
        (re(-c.m - c.g), &one),
        (I * (-c.m - 2.0 * c.g), &x),
        (re(c.g), &x2),
    ]);
    alg.add(&conj_h, &gauge_left(alg, d))
}
