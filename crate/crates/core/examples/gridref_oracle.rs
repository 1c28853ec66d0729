// SPDX-License-Identifier: Apache-2.0

//! Finite-difference levels of p² + V(y) with Richardson extrapolation.

use anharmonic_dyson::coefficients::{coefficient_set, PotentialPoly};
use anharmonic_dyson::gridref::{fd_doublewell_auto, fd_doublewell_spectrum, Grid};
use anharmonic_dyson::profiles::TimeProfile;

fn main() -> anharmonic_dyson::Result<()> {
    let quartic = PotentialPoly { t: 0.0, a4: 1.0, a2: 0.0, a1: 0.0, a0: 0.0 };
    for step in [0.02, 0.01, 0.005, 0.0025] {
        let s = fd_doublewell_spectrum(&quartic, &Grid::new(-8.0, 8.0, step)?, 1)?;
        println!("quartic h={step:<7} E0={:.12} coarse={:.12} est={:.1e}", s.levels[0], s.coarse[0], s.error_estimates[0]);
    }

    for t in [0.5, 1.0, 2.0] {
        let cs = coefficient_set(&TimeProfile::cosh(), t, 0.0, 0.0)?;
        let s = fd_doublewell_auto(&cs.potential, &Grid::default(), 5)?;
        println!("cosh t={t}: grid [{}, {}] levels {:.10?}", s.grid.y_min, s.grid.y_max, s.levels);
    }
    Ok(())
}
