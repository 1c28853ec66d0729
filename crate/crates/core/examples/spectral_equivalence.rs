// SPDX-License-Identifier: Apache-2.0

//! Converged spectra of h, ĥ, h̃ and the energy operator at one time.
//!
//! `cargo run --release --example spectral_equivalence -- 2.0`

use anharmonic_dyson::profiles::TimeProfile;
use anharmonic_dyson::verify::{verify_spectral_equivalence, SpectralOptions};

fn main() -> anharmonic_dyson::Result<()> {
    let t: f64 = std::env::args().nth(1).map_or(1.0, |s| s.parse().expect("t must be a number"));
    let opts = SpectralOptions::default();
    let (report, data) = verify_spectral_equivalence(&TimeProfile::cosh(), t, 0.0, 0.0, &opts)?;
    print!("{report}");
    println!("{:>3} {:>20} {:>20} {:>28}", "j", "h", "htilde", "energy-op");
    for j in 0..opts.levels {
        let e = data.energy.levels[j];
        println!("{j:>3} {:>20.12} {:>20.12} {:>14.6}{:+.6}i", data.h.levels[j].re, data.htilde.levels[j].re, e.re, e.im);
    }
    Ok(())
}
