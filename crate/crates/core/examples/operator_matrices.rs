// SPDX-License-Identifier: Apache-2.0

//! Truncated-basis operators: hermiticity, the unitary U, the metric ρ
//! and the overflow guard on η.

use anharmonic_dyson::coefficients::{coefficient_set, DysonCoefficients};
use anharmonic_dyson::operators::{build_dyson_map, build_h, build_hhat, build_htilde, build_metric, build_unitary_u, interior_max, Basis};
use anharmonic_dyson::profiles::TimeProfile;
use anharmonic_dyson::spectra::eig_hermitian;
use faer::{c64, Mat};

fn main() -> anharmonic_dyson::Result<()> {
    let cs = coefficient_set(&TimeProfile::cosh(), 1.0, 0.0, 0.0)?;
    let b = Basis::new(96, 1.0)?;
    for m in [build_h(&cs.hermitian, &b), build_hhat(&cs.hermitian, &b), build_htilde(&cs.potential, &b)] {
        println!("{:<14} max|A|={:.3e} max|A-A†|={:.1e}", m.label, m.max_abs(), m.hermiticity_defect());
    }
    let u = build_unitary_u(&cs.hermitian, &b)?;
    let id = Mat::<c64>::identity(b.n, b.n);
    println!("U†U - 1 on Π_{}: {:.1e}", b.n - 8, interior_max(&(u.data.adjoint() * &u.data - &id), b.n - 8));

    match build_dyson_map(&cs.dyson, &Basis::new(48, 1.0)?) {
        Ok(_) => println!("eta built at cosh t=1"),
        Err(e) => println!("eta at cosh t=1: {e}"),
    }
    let small = Basis::new(48, 0.25)?;
    let (eta, eta_inv) = build_dyson_map(&DysonCoefficients::fixed(0.1, 0.05, 0.1, 0.2), &small)?;
    let id = Mat::<c64>::identity(48, 48);
    println!("eta*eta_inv - 1 on Π_32: {:.1e}", interior_max(&(&eta.data * &eta_inv.data - id), 32));
    let rho = eig_hermitian(&build_metric(&eta))?;
    println!("rho spectrum in [{:.3e}, {:.3e}]", rho.levels[0].re, rho.levels[47].re);
    Ok(())
}
