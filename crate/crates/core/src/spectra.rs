// SPDX-License-Identifier: Apache-2.0

//! Dense eigensolvers and truncation-convergence control.

use std::cmp::Ordering;
use std::io::{self, Write};

use faer::c64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fmt_f64;
use crate::operators::{Basis, OperatorMatrix};

/// Levels with |Im E| above this never count as converged.
pub const COMPLEX_LEVEL_CUTOFF: f64 = 1e-3;

/// Relative Hermiticity defect tolerated by [`eig_hermitian`].
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Default basis scales tried by [`converged_levels`]: 2⁻⁶ … 2².
pub fn default_omega_sweep() -> Vec<f64> {
    (-6..=2).map(|k| 2f64.powi(k)).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Sorted by real part, ties by imaginary part.
    pub levels: Vec<c64>,
    pub basis: Basis,
    /// Length of the converged prefix.
    pub converged_count: usize,
    /// N → 2N change per level; NaN when not assessed.
    pub error_estimates: Vec<f64>,
    pub converged: Vec<bool>,
}

impl Spectrum {
    /// A spectrum from a single diagonalization, no convergence information.
    pub fn unassessed(mut levels: Vec<c64>, basis: Basis) -> Self {
        levels.sort_by(cmp_levels);
        let n = levels.len();
        Spectrum { levels, basis, converged_count: 0, error_estimates: vec![f64::NAN; n], converged: vec![false; n] }
    }

    /// Mark every level converged with the given per-level estimates.
    pub fn with_estimates(levels: Vec<c64>, basis: Basis, estimates: Vec<f64>, tol: f64) -> Self {
        assert_eq!(levels.len(), estimates.len());
        let converged: Vec<bool> = levels
            .iter()
            .zip(&estimates)
            .map(|(e, err)| *err <= tol * e.norm().max(1.0) && e.im.abs() <= COMPLEX_LEVEL_CUTOFF)
            .collect();
        let converged_count = converged.iter().take_while(|c| **c).count();
        Spectrum { levels, basis, converged_count, error_estimates: estimates, converged }
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn real_parts(&self) -> Vec<f64> {
        self.levels.iter().map(|z| z.re).collect()
    }

    pub fn max_abs_imag(&self, k: usize) -> f64 {
        crate::nan_max(self.levels.iter().take(k).map(|z| z.im.abs()))
    }
}

fn cmp_levels(a: &c64, b: &c64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

pub fn eig_hermitian(a: &OperatorMatrix) -> Result<Spectrum> {
    let defect = a.hermiticity_defect();
    if defect > HERMITIAN_TOL * a.max_abs().max(f64::MIN_POSITIVE) {
        return Err(Error::Invalid(format!("{} is not Hermitian (defect {defect:.3e})", a.label)));
    }
    let ev = a
        .data
        .self_adjoint_eigenvalues(faer::Side::Lower)
        .map_err(|_| Error::Solver(a.label.clone()))?;
    Ok(Spectrum::unassessed(ev.into_iter().map(|e| c64::new(e, 0.0)).collect(), a.basis))
}

pub fn eig_general(a: &OperatorMatrix) -> Result<Spectrum> {
    if !a.is_finite() {
        return Err(Error::Solver(format!("{} has non-finite entries", a.label)));
    }
    let ev = a.data.eigenvalues().map_err(|_| Error::Solver(a.label.clone()))?;
    Ok(Spectrum::unassessed(ev, a.basis))
}

/// Hermitian solver for Hermitian-tagged matrices, general solver otherwise.
pub fn eig_auto(a: &OperatorMatrix) -> Result<Spectrum> {
    if a.hermitian {
        eig_hermitian(a)
    } else {
        eig_general(a)
    }
}

/// How the basis scale is chosen in [`converged_levels`].
#[derive(Debug, Clone, PartialEq)]
pub enum OmegaChoice {
    Fixed,
    Sweep(Vec<f64>),
}

/// Diagonalize `builder` at N and 2N and keep the lowest `k` levels of the
/// larger run. With a sweep, the scale with the longest converged prefix
/// wins, ties going to the smaller worst-case change.
pub fn converged_levels<F>(builder: F, k: usize, b0: &Basis, tol: f64, omega: &OmegaChoice) -> Result<Spectrum>
where
    F: Fn(&Basis) -> Result<OperatorMatrix> + Sync,
{
    if k == 0 {
        return Err(Error::Invalid("level count must be at least 1".into()));
    }
    let scales = match omega {
        OmegaChoice::Fixed => vec![b0.omega],
        OmegaChoice::Sweep(v) if !v.is_empty() => v.clone(),
        OmegaChoice::Sweep(_) => return Err(Error::Invalid("empty ω sweep".into())),
    };
    let runs: Vec<Result<Spectrum>> = scales
        .par_iter()
        .map(|&w| {
            let small = Basis::new(b0.n, w)?;
            let large = small.doubled()?;
            let s1 = eig_auto(&builder(&small)?)?;
            let s2 = eig_auto(&builder(&large)?)?;
            let k = k.min(s1.len());
            let est = (0..k).map(|j| (s2.levels[j] - s1.levels[j]).norm()).collect();
            Ok(Spectrum::with_estimates(s2.levels[..k].to_vec(), large, est, tol))
        })
        .collect();
    let mut best: Option<Spectrum> = None;
    for r in runs {
        let s = r?;
        let worst = |s: &Spectrum| crate::nan_max(s.error_estimates.iter().cloned());
        let better = match &best {
            None => true,
            Some(b) => {
                s.converged_count > b.converged_count
                    || (s.converged_count == b.converged_count && worst(&s) < worst(b))
            }
        };
        if better {
            best = Some(s);
        }
    }
    Ok(best.expect("at least one scale"))
}

/// max over j < k of |Re E_j(s1) − Re E_j(s2)| / max(1, |Re E_j(s1)|).
pub fn match_spectra(s1: &Spectrum, s2: &Spectrum, k: usize) -> Result<f64> {
    for s in [s1, s2] {
        if s.converged_count < k {
            return Err(Error::Insufficient { need: k, have: s.converged_count });
        }
    }
    Ok(match_levels(&s1.real_parts(), &s2.real_parts(), k))
}

/// The same metric on plain level lists, no convergence requirement.
pub fn match_levels(a: &[f64], b: &[f64], k: usize) -> f64 {
    crate::nan_max(a.iter().zip(b).take(k).map(|(x, y)| (x - y).abs() / x.abs().max(1.0)))
}

/// Write `(t, spectrum)` pairs as CSV rows sorted by (t, level).
pub fn write_spectrum_csv<W: Write>(mut w: W, rows: &[(f64, Spectrum)]) -> io::Result<()> {
    writeln!(w, "t,level_index,re,im,error_estimate,converged")?;
    let mut sorted: Vec<&(f64, Spectrum)> = rows.iter().collect();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    for (t, s) in sorted {
        for (j, z) in s.levels.iter().enumerate() {
            writeln!(
                w,
                "{},{},{},{},{},{}",
                fmt_f64(*t),
                j,
                fmt_f64(z.re),
                fmt_f64(z.im),
                fmt_f64(s.error_estimates[j]),
                s.converged[j]
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{re, Algebra};
    use crate::operators::MatrixAlgebra;
    use faer::Mat;

    fn oscillator(b: &Basis) -> Result<OperatorMatrix> {
        let alg = MatrixAlgebra::new(b);
        let (x, p) = (alg.x(), alg.p());
        let m = alg.lin(&[(re(1.0), &alg.mul(&p, &p)), (re(1.0), &alg.mul(&x, &x))]);
        let mut op = OperatorMatrix::new(*b, m, "osc");
        op.hermitian = true;
        Ok(op)
    }

    #[test]
    fn oscillator_levels_are_odd_integers() {
        let s = eig_hermitian(&oscillator(&Basis::new(64, 1.0).unwrap()).unwrap()).unwrap();
        for (j, z) in s.levels.iter().take(10).enumerate() {
            assert!((z.re - (2 * j + 1) as f64).abs() < 1e-10);
            assert_eq!(z.im, 0.0);
        }
    }

    #[test]
    fn identity_levels() {
        let b = Basis::new(8, 1.0).unwrap();
        let mut m = OperatorMatrix::new(b, Mat::<c64>::identity(8, 8), "id");
        m.hermitian = true;
        let s = eig_hermitian(&m).unwrap();
        assert!(s.levels.iter().all(|z| (z.re - 1.0).abs() < 1e-14));
    }

    #[test]
    fn non_hermitian_rejected() {
        let b = Basis::new(8, 1.0).unwrap();
        let mut a = Mat::<c64>::zeros(8, 8);
        a[(0, 1)] = c64::new(1.0, 0.0);
        assert!(eig_hermitian(&OperatorMatrix::new(b, a, "upper")).is_err());
    }

    #[test]
    fn triangular_general() {
        let b = Basis::new(8, 1.0).unwrap();
        let a = Mat::<c64>::from_fn(8, 8, |i, j| {
            if i == j {
                c64::new(8.0 - i as f64, 0.5)
            } else if j > i {
                c64::new(1.0, -1.0)
            } else {
                c64::new(0.0, 0.0)
            }
        });
        let s = eig_general(&OperatorMatrix::new(b, a, "tri")).unwrap();
        for (j, z) in s.levels.iter().enumerate() {
            assert!((z - c64::new(j as f64 + 1.0, 0.5)).norm() < 1e-12);
        }
    }

    #[test]
    fn exact_builder_converges_everywhere() {
        let b = Basis::new(64, 1.0).unwrap();
        let s = converged_levels(oscillator, 5, &b, 1e-8, &OmegaChoice::Fixed).unwrap();
        assert_eq!(s.converged_count, 5);
        assert_eq!(s.basis.n, 128);
    }

    #[test]
    fn match_metric() {
        let b = Basis::new(64, 1.0).unwrap();
        let s = converged_levels(oscillator, 5, &b, 1e-8, &OmegaChoice::Fixed).unwrap();
        assert_eq!(match_spectra(&s, &s, 5).unwrap(), 0.0);
        let mut shifted = s.clone();
        for z in &mut shifted.levels {
            z.re += 0.1;
        }
        let d = match_spectra(&s, &shifted, 1).unwrap();
        assert!((d - 0.1).abs() < 1e-12);
        assert!(match_spectra(&s, &s, 6).is_err());
    }
}
