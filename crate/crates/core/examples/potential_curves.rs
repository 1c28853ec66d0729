// SPDX-License-Identifier: Apache-2.0

//! V(z,t) on the real line next to the bounded Ṽ(y,t), at t = 0.5, 1, 1.5, 2.

use anharmonic_dyson::coefficients::{couplings_from_sigma, doublewell_coefficients, potential_eval, Potential};
use anharmonic_dyson::fmt_f64;
use anharmonic_dyson::profiles::TimeProfile;

fn main() -> anharmonic_dyson::Result<()> {
    let profile = TimeProfile::cosh();
    println!("curve,t,coordinate,v");
    for t in [0.5, 1.0, 1.5, 2.0] {
        let jet = profile.eval_jet(t, 4)?;
        let c = couplings_from_sigma(&jet, 0.0)?;
        let pp = doublewell_coefficients(&jet, 0.0, 0.0)?;
        for i in 0..=16 {
            let q = -4.0 + 0.5 * i as f64;
            println!("anharmonic-z,{},{},{}", fmt_f64(t), fmt_f64(q), fmt_f64(potential_eval(Potential::AnharmonicZ(&c), q)));
            println!("doublewell-y,{},{},{}", fmt_f64(t), fmt_f64(q), fmt_f64(potential_eval(Potential::DoublewellY(&pp), q)));
        }
    }
    Ok(())
}
