// SPDX-License-Identifier: Apache-2.0

//! The six conjugation identities η A η⁻¹, checked exactly in the Weyl
//! algebra and by brute-force matrix conjugation in a truncated basis.

use anharmonic_dyson::coefficients::DysonCoefficients;
use anharmonic_dyson::operators::Basis;
use anharmonic_dyson::verify::{verify_bch, verify_bch_exact};

fn main() -> anharmonic_dyson::Result<()> {
    let d = DysonCoefficients::fixed(0.3, 0.1, 0.2, 0.5);
    println!("{}", verify_bch_exact(&d, 1e-12)?);

    // Truncation and the growth of e^{βp³} limit the brute-force route.
    for (n, w) in [(16, 0.25), (32, 0.25), (48, 0.25), (48, 1.0)] {
        let b = Basis::new(n, w)?;
        match verify_bch(&d, &b, 1e-7) {
            Ok(r) => print!("{r}"),
            Err(e) => println!("N={n} omega={w}: {e}"),
        }
    }
    Ok(())
}
