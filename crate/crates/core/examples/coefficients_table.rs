// SPDX-License-Identifier: Apache-2.0

//! Couplings, Dyson-map parameters and double-well coefficients for
//! σ = cosh t at a few times.

use anharmonic_dyson::coefficients::{coefficient_set, constraint_residual, constraint_scale};
use anharmonic_dyson::profiles::TimeProfile;

fn main() {
    let profile = TimeProfile::cosh();
    println!("{:>5} {:>12} {:>12} {:>10} {:>12} {:>12} {:>12} {:>12}", "t", "g", "m", "resid", "alpha", "beta", "a2", "a1");
    for t in [0.0, 0.5, 1.0, 1.5, 2.0] {
        match coefficient_set(&profile, t, 0.0, 0.0) {
            Ok(cs) => {
                let c = &cs.couplings;
                let resid = constraint_residual(c) / constraint_scale(c);
                println!(
                    "{t:>5} {:>12.7} {:>12.7} {:>10.1e} {:>12.7} {:>12.7} {:>12.7} {:>12.7}",
                    c.g, c.m, resid, cs.dyson.alpha, cs.dyson.beta, cs.potential.a2, cs.potential.a1
                );
            }
            Err(e) => println!("{t:>5} {e}"),
        }
    }
}
