// SPDX-License-Identifier: Apache-2.0

//! Finite-difference reference spectrum for −d²/dy² + Ṽ(y).
//!
//! Second-order central differences with Dirichlet walls give a symmetric
//! tridiagonal matrix; its lowest eigenvalues come from Sturm-sequence
//! bisection. Each level is refined by one step-halving Richardson pass.

use std::io::{self, Write};

use crate::coefficients::PotentialPoly;
use crate::error::{Error, Result};
use crate::fmt_f64;

/// Required height of the walls above the potential minimum.
pub const DECAY_MARGIN: f64 = 50.0;
pub const DEFAULT_HALF_WIDTH: f64 = 12.0;
pub const DEFAULT_STEP: f64 = 0.005;
pub const MAX_WIDENINGS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub y_min: f64,
    pub y_max: f64,
    pub step: f64,
}

impl Grid {
    pub fn new(y_min: f64, y_max: f64, step: f64) -> Result<Self> {
        let g = Grid { y_min, y_max, step };
        if !(y_max > y_min) || !(step > 0.0) {
            return Err(Error::Invalid(format!("bad grid [{y_min}, {y_max}] step {step}")));
        }
        if g.points() < 100 {
            return Err(Error::Invalid(format!("grid has {} points, need at least 100", g.points())));
        }
        Ok(g)
    }

    /// Interior node count; the two walls are excluded.
    pub fn points(&self) -> usize {
        (((self.y_max - self.y_min) / self.step).round() as usize).saturating_sub(1)
    }

    fn node(&self, i: usize) -> f64 {
        self.y_min + (i + 1) as f64 * self.step
    }

    fn halved(&self) -> Grid {
        Grid { step: self.step / 2.0, ..*self }
    }

    fn widened(&self, factor: f64) -> Grid {
        Grid { y_min: self.y_min * factor, y_max: self.y_max * factor, ..*self }
    }
}

impl Default for Grid {
    fn default() -> Self {
        Grid { y_min: -DEFAULT_HALF_WIDTH, y_max: DEFAULT_HALF_WIDTH, step: DEFAULT_STEP }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridSpectrum {
    pub grid: Grid,
    /// Richardson-extrapolated levels, ascending.
    pub levels: Vec<f64>,
    /// |E(h/2) − E(h)|/3 per level.
    pub error_estimates: Vec<f64>,
    /// Unextrapolated levels at the coarse step.
    pub coarse: Vec<f64>,
}

struct Tridiagonal {
    diag: Vec<f64>,
    off2: f64,
}

impl Tridiagonal {
    fn new<V: Fn(f64) -> f64>(grid: &Grid, v: V) -> Self {
        let h2 = grid.step * grid.step;
        let diag = (0..grid.points()).map(|i| 2.0 / h2 + v(grid.node(i))).collect();
        Tridiagonal { diag, off2: 1.0 / (h2 * h2) }
    }

    /// Number of eigenvalues strictly below `lam`.
    fn count_below(&self, lam: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0;
        for (i, d) in self.diag.iter().enumerate() {
            q = if i == 0 { d - lam } else { d - lam - self.off2 / q };
            if q == 0.0 {
                q = -f64::EPSILON * (d.abs() + lam.abs()).max(1.0);
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The j-th smallest eigenvalue by bisection.
    fn eigenvalue(&self, j: usize) -> f64 {
        let spread = 2.0 * self.off2.sqrt();
        let mut lo = self.diag.iter().cloned().fold(f64::INFINITY, f64::min) - spread;
        let mut hi = self.diag.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + spread;
        while hi - lo > 4.0 * f64::EPSILON * lo.abs().max(hi.abs()).max(1.0) {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    fn lowest(&self, k: usize) -> Vec<f64> {
        (0..k).map(|j| self.eigenvalue(j)).collect()
    }
}

fn check_margin<V: Fn(f64) -> f64>(grid: &Grid, v: &V) -> Result<()> {
    let vmin = (0..grid.points()).map(|i| v(grid.node(i))).fold(f64::INFINITY, f64::min);
    let edge = v(grid.y_min).min(v(grid.y_max));
    if edge < vmin + DECAY_MARGIN {
        return Err(Error::GridTooNarrow { edge, min: vmin, margin: DECAY_MARGIN });
    }
    Ok(())
}

/// Lowest `k` levels of −d²/dy² + v(y) on `grid`.
pub fn fd_spectrum<V: Fn(f64) -> f64>(v: V, grid: &Grid, k: usize) -> Result<GridSpectrum> {
    check_margin(grid, &v)?;
    if k == 0 || k >= grid.points() {
        return Err(Error::Invalid(format!("cannot extract {k} levels from {} points", grid.points())));
    }
    let coarse = Tridiagonal::new(grid, &v).lowest(k);
    let fine = Tridiagonal::new(&grid.halved(), &v).lowest(k);
    let levels = coarse.iter().zip(&fine).map(|(c, f)| (4.0 * f - c) / 3.0).collect();
    let error_estimates = coarse.iter().zip(&fine).map(|(c, f)| (f - c).abs() / 3.0).collect();
    Ok(GridSpectrum { grid: *grid, levels, error_estimates, coarse })
}

pub fn fd_doublewell_spectrum(pp: &PotentialPoly, grid: &Grid, k: usize) -> Result<GridSpectrum> {
    fd_spectrum(|y| pp.eval(y), grid, k)
}

/// [`fd_doublewell_spectrum`] on `grid`, widening it by 1.5 up to three
/// times while the walls are too low.
pub fn fd_doublewell_auto(pp: &PotentialPoly, grid: &Grid, k: usize) -> Result<GridSpectrum> {
    let mut g = *grid;
    for attempt in 0..=MAX_WIDENINGS {
        match fd_doublewell_spectrum(pp, &g, k) {
            Err(Error::GridTooNarrow { .. }) if attempt < MAX_WIDENINGS => g = g.widened(1.5),
            other => return other,
        }
    }
    unreachable!("loop returns on the last attempt")
}

/// Same columns as the oscillator-basis spectrum CSV.
pub fn write_grid_csv<W: Write>(mut w: W, rows: &[(f64, GridSpectrum)], tol: f64) -> io::Result<()> {
    writeln!(w, "t,level_index,re,im,error_estimate,converged")?;
    let mut sorted: Vec<&(f64, GridSpectrum)> = rows.iter().collect();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    for (t, s) in sorted {
        for (j, (e, err)) in s.levels.iter().zip(&s.error_estimates).enumerate() {
            let ok = *err <= tol * e.abs().max(1.0);
            writeln!(w, "{},{},{},{},{},{}", fmt_f64(*t), j, fmt_f64(*e), fmt_f64(0.0), fmt_f64(*err), ok)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_levels() {
        let g = Grid::new(-10.0, 10.0, 0.005).unwrap();
        let s = fd_spectrum(|y| y * y, &g, 5).unwrap();
        for (j, e) in s.levels.iter().enumerate() {
            assert!((e - (2 * j + 1) as f64).abs() < 1e-6, "{j}: {e}");
        }
    }

    #[test]
    fn sturm_count_matches_bisection() {
        let g = Grid::new(-6.0, 6.0, 0.05).unwrap();
        let t = Tridiagonal::new(&g, |y| y * y);
        let e = t.lowest(4);
        for (j, v) in e.iter().enumerate() {
            assert_eq!(t.count_below(*v - 1e-9), j);
            assert_eq!(t.count_below(*v + 1e-9), j + 1);
        }
    }

    #[test]
    fn narrow_grid_rejected_then_widened() {
        let pp = PotentialPoly { t: 0.0, a4: 0.0, a2: 0.1, a1: 0.0, a0: 0.0 };
        let g = Grid::new(-12.0, 12.0, 0.02).unwrap();
        assert!(matches!(fd_doublewell_spectrum(&pp, &g, 2), Err(Error::GridTooNarrow { .. })));
        let s = fd_doublewell_auto(&pp, &g, 2).unwrap();
        assert!(s.grid.y_max > 12.0);
        assert!((s.levels[0] - 0.1f64.sqrt()).abs() < 1e-5);
    }

    #[test]
    fn grid_validation() {
        assert!(Grid::new(1.0, -1.0, 0.01).is_err());
        assert!(Grid::new(-1.0, 1.0, 0.1).is_err());
        assert_eq!(Grid::default().points(), 4799);
    }
}
