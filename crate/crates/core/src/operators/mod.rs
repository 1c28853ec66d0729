// SPDX-License-Identifier: Apache-2.0

//! Truncated harmonic-oscillator matrices for every operator in the chain
//! H → h → ĥ → h̃, plus the Dyson map, metric and gauge terms.

pub mod expm;
pub mod forms;

use std::io::{self, Write};

use faer::{c64, Mat, Scale};

use crate::algebra::Algebra;
use crate::coefficients::{Couplings, DysonCoefficients, HermitianCoefficients, PotentialPoly};
use crate::error::{Error, Result};
use crate::fmt_f64;
pub use expm::{expm, norm_one};
pub use forms::BchTarget;

/// Largest 1-norm of either exponent factor accepted by [`build_dyson_map`].
pub const OVERFLOW_BUDGET: f64 = 50.0;
pub const MAX_DIM: usize = 1024;
pub const MIN_DIM: usize = 8;

/// Truncation N and length scale ω of the oscillator basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Basis {
    pub n: usize,
    pub omega: f64,
}

impl Basis {
    pub fn new(n: usize, omega: f64) -> Result<Self> {
        if !(MIN_DIM..=MAX_DIM).contains(&n) {
            return Err(Error::Invalid(format!("basis size {n} outside [{MIN_DIM}, {MAX_DIM}]")));
        }
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::Invalid(format!("basis scale ω = {omega} must be positive")));
        }
        Ok(Basis { n, omega })
    }

    /// Default interior projector rank N − 16 (at least 1).
    pub fn interior(&self) -> usize {
        self.n.saturating_sub(16).max(1)
    }

    pub fn doubled(&self) -> Result<Self> {
        Basis::new(2 * self.n, self.omega)
    }
}

/// A dense operator in a given basis.
#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    pub basis: Basis,
    pub data: Mat<c64>,
    pub label: String,
    pub hermitian: bool,
}

impl OperatorMatrix {
    pub fn new(basis: Basis, data: Mat<c64>, label: impl Into<String>) -> Self {
        OperatorMatrix { basis, data, label: label.into(), hermitian: false }
    }

    fn hermitian(basis: Basis, data: Mat<c64>, label: impl Into<String>) -> Self {
        let sym = Scale(c64::new(0.5, 0.0)) * (&data + data.adjoint());
        OperatorMatrix { basis, data: sym, label: label.into(), hermitian: true }
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn max_abs(&self) -> f64 {
        block_max(self.data.as_ref(), self.data.nrows(), self.data.ncols())
    }

    /// max |A − A†|.
    pub fn hermiticity_defect(&self) -> f64 {
        hermiticity_defect(&self.data)
    }

    pub fn is_finite(&self) -> bool {
        self.max_abs().is_finite()
    }

    /// Row-major dump, one matrix row per line as `re,im` pairs.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        let n = self.dim();
        for i in 0..n {
            let row: Vec<String> = (0..n)
                .map(|j| {
                    let z = self.data[(i, j)];
                    format!("{},{}", fmt_f64(z.re), fmt_f64(z.im))
                })
                .collect();
            writeln!(w, "{}", row.join(","))?;
        }
        Ok(())
    }
}

pub fn hermiticity_defect(a: &Mat<c64>) -> f64 {
    block_max((a - a.adjoint()).as_ref(), a.nrows(), a.ncols())
}

fn block_max(a: faer::MatRef<'_, c64>, nr: usize, nc: usize) -> f64 {
    crate::nan_max((0..nc).flat_map(|j| (0..nr).map(move |i| a[(i, j)].norm())))
}

/// max |(Π_k A Π_k)_ij|: the leading k×k block.
pub fn interior_max(a: &Mat<c64>, k: usize) -> f64 {
    let k = k.min(a.nrows());
    block_max(a.as_ref(), k, k)
}

/// max |(A Π_k)_ij|: the first k columns.
pub fn right_projected_max(a: &Mat<c64>, k: usize) -> f64 {
    let k = k.min(a.ncols());
    block_max(a.as_ref(), a.nrows(), k)
}

/// The oscillator matrices x = (a+a†)/√(2ω), p = i√(ω/2)(a†−a).
pub fn basis_matrices(b: &Basis) -> (OperatorMatrix, OperatorMatrix) {
    let (sx, sp) = ((2.0 * b.omega).sqrt().recip(), (b.omega / 2.0).sqrt());
    let x = Mat::<c64>::from_fn(b.n, b.n, |i, j| {
        if i.abs_diff(j) == 1 {
            c64::new((i.max(j) as f64).sqrt() * sx, 0.0)
        } else {
            c64::new(0.0, 0.0)
        }
    });
    let p = Mat::<c64>::from_fn(b.n, b.n, |i, j| {
        let v = (i.max(j) as f64).sqrt() * sp;
        if i == j + 1 {
            c64::new(0.0, v)
        } else if j == i + 1 {
            c64::new(0.0, -v)
        } else {
            c64::new(0.0, 0.0)
        }
    });
    (
        OperatorMatrix { basis: *b, data: x, label: "x".into(), hermitian: true },
        OperatorMatrix { basis: *b, data: p, label: "p".into(), hermitian: true },
    )
}

/// [`Algebra`] over truncated basis matrices; products are plain matrix products.
pub struct MatrixAlgebra {
    pub basis: Basis,
    x: Mat<c64>,
    p: Mat<c64>,
}

impl MatrixAlgebra {
    pub fn new(basis: &Basis) -> Self {
        let (x, p) = basis_matrices(basis);
        MatrixAlgebra { basis: *basis, x: x.data, p: p.data }
    }
}

impl Algebra for MatrixAlgebra {
    type E = Mat<c64>;

    fn x(&self) -> Mat<c64> {
        self.x.clone()
    }

    fn p(&self) -> Mat<c64> {
        self.p.clone()
    }

    fn one(&self) -> Mat<c64> {
        Mat::identity(self.basis.n, self.basis.n)
    }

    fn zero(&self) -> Mat<c64> {
        Mat::zeros(self.basis.n, self.basis.n)
    }

    fn add(&self, a: &Mat<c64>, b: &Mat<c64>) -> Mat<c64> {
        a + b
    }

    fn scale(&self, a: &Mat<c64>, s: c64) -> Mat<c64> {
        Scale(s) * a
    }

    fn mul(&self, a: &Mat<c64>, b: &Mat<c64>) -> Mat<c64> {
        a * b
    }

    fn lin(&self, terms: &[(c64, &Mat<c64>)]) -> Mat<c64> {
        let mut acc = self.zero();
        for (c, m) in terms {
            if *c != c64::new(0.0, 0.0) {
                acc += Scale(*c) * *m;
            }
        }
        acc
    }
}

pub fn build_h_real_line(c: &Couplings, b: &Basis) -> OperatorMatrix {
    let alg = MatrixAlgebra::new(b);
    OperatorMatrix::new(*b, forms::real_line_hamiltonian(&alg, c), format!("H(t={})", c.t))
}

pub fn build_h(f: &HermitianCoefficients, b: &Basis) -> OperatorMatrix {
    let alg = MatrixAlgebra::new(b);
    OperatorMatrix::hermitian(*b, forms::hermitian_hamiltonian(&alg, f), format!("h(t={})", f.t))
}

pub fn build_hhat(f: &HermitianCoefficients, b: &Basis) -> OperatorMatrix {
    let alg = MatrixAlgebra::new(b);
    OperatorMatrix::hermitian(*b, forms::unitary_transformed(&alg, f), format!("hhat(t={})", f.t))
}

pub fn build_htilde(pp: &PotentialPoly, b: &Basis) -> OperatorMatrix {
    let alg = MatrixAlgebra::new(b);
    OperatorMatrix::hermitian(*b, forms::double_well(&alg, pp), format!("htilde(t={})", pp.t))
}

pub fn build_unitary_u(f: &HermitianCoefficients, b: &Basis) -> Result<OperatorMatrix> {
    let alg = MatrixAlgebra::new(b);
    let u = expm(&forms::unitary_exponent(&alg, f))?;
    Ok(OperatorMatrix::new(*b, u, format!("U(t={})", f.t)))
}

/// η = e^{αx} e^{βp³+iγp²+iδp} and its inverse, built from the negated
/// exponents in reverse order rather than by numerical inversion.
pub fn build_dyson_map(d: &DysonCoefficients, b: &Basis) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let alg = MatrixAlgebra::new(b);
    let ax = alg.scale(&alg.x(), c64::new(d.alpha, 0.0));
    let mom = forms::momentum_exponent(&alg, d);
    for e in [&ax, &mom] {
        let norm = norm_one(e);
        if norm > OVERFLOW_BUDGET {
            return Err(Error::Overflow { norm, budget: OVERFLOW_BUDGET });
        }
    }
    let minus = c64::new(-1.0, 0.0);
    let (ex, em) = (expm(&ax)?, expm(&mom)?);
    let (ix, im) = (expm(&alg.scale(&ax, minus))?, expm(&alg.scale(&mom, minus))?);
    Ok((
        OperatorMatrix::new(*b, &ex * &em, format!("eta(t={})", d.t)),
        OperatorMatrix::new(*b, &im * &ix, format!("eta_inv(t={})", d.t)),
    ))
}

/// ρ = η†η.
pub fn build_metric(eta: &OperatorMatrix) -> OperatorMatrix {
    let rho = eta.data.adjoint() * &eta.data;
    OperatorMatrix::hermitian(eta.basis, rho, format!("rho[{}]", eta.label))
}

pub fn build_gauge_left(d: &DysonCoefficients, b: &Basis) -> OperatorMatrix {
    let alg = MatrixAlgebra::new(b);
    OperatorMatrix::new(*b, forms::gauge_left(&alg, d), format!("gauge_left(t={})", d.t))
}

pub fn build_gauge_right(d: &DysonCoefficients, b: &Basis) -> OperatorMatrix {
    let alg = MatrixAlgebra::new(b);
    OperatorMatrix::new(*b, forms::gauge_right(&alg, d), format!("gauge_right(t={})", d.t))
}

/// H̃ = H + i η⁻¹ η̇, from closed forms only.
pub fn build_energy_operator(c: &Couplings, d: &DysonCoefficients, b: &Basis) -> OperatorMatrix {
    let h = build_h_real_line(c, b);
    let g = build_gauge_right(d, b);
    OperatorMatrix::new(*b, &h.data + &g.data, format!("energy(t={})", c.t))
}

/// Closed-form right-hand sides of η A η⁻¹ for all six targets.
pub fn bch_closed_forms(d: &DysonCoefficients, b: &Basis) -> Vec<(BchTarget, OperatorMatrix)> {
    let alg = MatrixAlgebra::new(b);
    BchTarget::ALL
        .iter()
        .map(|&t| {
            let m = forms::bch_closed_form(&alg, d, t);
            (t, OperatorMatrix::new(*b, m, format!("bch[{}](t={})", t.label(), d.t)))
        })
        .collect()
}

/// η H η⁻¹ + i η̇ η⁻¹ evaluated through the closed-form images.
pub fn build_dyson_image(c: &Couplings, d: &DysonCoefficients, b: &Basis) -> OperatorMatrix {
    let alg = MatrixAlgebra::new(b);
    OperatorMatrix::new(*b, forms::dyson_image(&alg, c, d), format!("dyson_image(t={})", c.t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oscillator_elements() {
        let b = Basis::new(8, 1.0).unwrap();
        let (x, p) = basis_matrices(&b);
        assert!((x.data[(0, 1)].re - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(x.hermiticity_defect(), 0.0);
        assert_eq!(p.hermiticity_defect(), 0.0);
        assert!((p.data[(1, 0)].im - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn interior_commutator() {
        let b = Basis::new(64, 1.0).unwrap();
        let (x, p) = basis_matrices(&b);
        let c = &x.data * &p.data - &p.data * &x.data - Scale(c64::new(0.0, 1.0)) * Mat::<c64>::identity(64, 64);
        assert!(interior_max(&c, 60) <= 1e-12);
        assert!(right_projected_max(&c, 60) <= 1e-12);
        // the last diagonal entry carries the truncation defect
        assert!(c.norm_max() > 1.0);
    }

    #[test]
    fn basis_validation() {
        assert!(Basis::new(4, 1.0).is_err());
        assert!(Basis::new(2048, 1.0).is_err());
        assert!(Basis::new(16, 0.0).is_err());
        assert_eq!(Basis::new(48, 1.0).unwrap().interior(), 32);
    }

    #[test]
    fn zero_dyson_coefficients_give_identity() {
        let b = Basis::new(16, 1.0).unwrap();
        let (e, ei) = build_dyson_map(&DysonCoefficients::fixed(0.0, 0.0, 0.0, 0.0), &b).unwrap();
        let id = Mat::<c64>::identity(16, 16);
        assert!((&e.data - &id).norm_max() < 1e-15);
        assert!((&ei.data - &id).norm_max() < 1e-15);
        assert!((build_metric(&e).data - id).norm_max() < 1e-15);
    }

    #[test]
    fn overflow_budget_is_enforced() {
        let b = Basis::new(64, 1.0).unwrap();
        let e = build_dyson_map(&DysonCoefficients::fixed(0.0, 5.0, 0.0, 0.0), &b).unwrap_err();
        assert!(matches!(e, Error::Overflow { .. }));
    }

    #[test]
    fn csv_dump_shape() {
        let b = Basis::new(8, 1.0).unwrap();
        let (x, _) = basis_matrices(&b);
        let mut buf = Vec::new();
        x.write_csv(&mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s.lines().count(), 8);
        assert_eq!(s.lines().next().unwrap().split(',').count(), 16);
    }
}
