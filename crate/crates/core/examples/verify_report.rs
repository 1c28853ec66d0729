// SPDX-License-Identifier: Apache-2.0

//! Run the cheap verification suites over a time grid and emit the CSV
//! report the CLI writes.

use std::io;

use anharmonic_dyson::operators::Basis;
use anharmonic_dyson::profiles::polynomial_profile;
use anharmonic_dyson::verify::{error_report, verify_constraint, verify_dyson_residual, verify_gauge_forms, DysonOptions, VerificationReport};

fn main() -> io::Result<()> {
    // massless quadratic: σ = 1 + t², c₂ = κ₀κ₂ − κ₁²/4
    let profile = polynomial_profile(1.0, 0.0, 1.0);
    let c2 = 1.0;
    let b = Basis::new(48, 1.0).expect("valid basis");
    let ts = [0.0, 0.5, 1.0, 2.0];

    let mut reports = vec![verify_constraint(&profile, &ts, c2)];
    for t in ts {
        let opts = DysonOptions { k: 24, ..DysonOptions::for_basis(&b) };
        reports.push(verify_dyson_residual(&profile, t, 0.0, c2, &b, &opts).unwrap_or_else(|e| error_report("dyson", Some(t), Some(b), &e)));
    }
    reports.push(verify_gauge_forms(&profile, 1.0, 0.0, c2, &b, 1e-5).unwrap_or_else(|e| error_report("gauge", Some(1.0), Some(b), &e)));

    let mut out = io::stdout().lock();
    use std::io::Write;
    writeln!(out, "{}", VerificationReport::csv_header())?;
    for r in &reports {
        r.write_csv_rows(&mut out)?;
    }
    for r in &reports {
        eprint!("{r}");
    }
    Ok(())
}
