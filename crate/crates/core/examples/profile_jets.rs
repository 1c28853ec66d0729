// SPDX-License-Identifier: Apache-2.0

//! Parse σ(t) expressions and print exact derivative jets.
//!
//! `cargo run --example profile_jets -- "2 + t^2" 0.5`

use anharmonic_dyson::profiles::parse_profile;

fn main() -> anharmonic_dyson::Result<()> {
    let mut args = std::env::args().skip(1);
    let src = args.next().unwrap_or_else(|| "cosh(t)".into());
    let t: f64 = args.next().map_or(1.0, |s| s.parse().expect("t must be a number"));

    let profile = parse_profile(&src)?;
    println!("profile: {profile}");
    let jet = profile.eval_jet(t, 4)?;
    for (k, v) in jet.values.iter().enumerate() {
        println!("  d^{k}σ/dt^{k} ({t}) = {v:+.15e}");
    }

    for bad in ["", "cosh(t", "2*u"] {
        match parse_profile(bad) {
            Ok(_) => println!("{bad:?} parsed"),
            Err(e) => println!("{bad:?}: {e}"),
        }
    }
    Ok(())
}
