// SPDX-License-Identifier: Apache-2.0

//! Residual of the time-dependent Dyson equation on a projected basis,
//! with the 10% negative controls, for both printed constants.

use anharmonic_dyson::operators::Basis;
use anharmonic_dyson::profiles::TimeProfile;
use anharmonic_dyson::verify::{verify_dyson_residual, DysonOptions, DysonRoute};

fn main() -> anharmonic_dyson::Result<()> {
    let profile = TimeProfile::cosh();
    let b = Basis::new(48, 1.0)?;
    let opts = DysonOptions { k: 24, ..DysonOptions::for_basis(&b) };
    for c2 in [0.0, 0.3] {
        print!("{}", verify_dyson_residual(&profile, 1.0, 0.0, c2, &b, &opts)?);
    }
    let exp = DysonOptions { route: DysonRoute::Exponential, ..opts };
    match verify_dyson_residual(&profile, 1.0, 0.0, 0.0, &b, &exp) {
        Ok(r) => print!("{r}"),
        Err(e) => println!("exponential route: {e}"),
    }
    Ok(())
}
