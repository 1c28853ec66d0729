// SPDX-License-Identifier: Apache-2.0

use anharmonic_dyson::coefficients::coefficient_set;
use anharmonic_dyson::operators::Basis;
use anharmonic_dyson::profiles::TimeProfile;
use anharmonic_dyson::spectra::OmegaChoice;
use anharmonic_dyson::verify::{
    verify_constraint, verify_dyson_residual, verify_spectral_equivalence, verify_transcription, DysonOptions,
    SpectralOptions,
};
use proptest::prelude::*;

fn dyson_opts(b: &Basis) -> DysonOptions {
    DysonOptions { k: 24, ..DysonOptions::for_basis(b) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn dyson_residual_and_negative_controls(t in 0.5f64..2.5, c1 in -0.5f64..0.5, c2 in -0.5f64..0.5) {
        let b = Basis::new(48, 1.0).unwrap();
        let r = verify_dyson_residual(&TimeProfile::cosh(), t, c1, c2, &b, &dyson_opts(&b)).unwrap();
        prop_assert!(r.pass(), "{r}");
    }
}

#[test]
fn printed_constant_is_adjudicated_by_the_residual() {
    let b = Basis::new(48, 1.0).unwrap();
    let r = verify_dyson_residual(&TimeProfile::cosh(), 1.0, 0.0, 0.3, &b, &dyson_opts(&b)).unwrap();
    assert!(r.pass(), "{r}");
}

#[test]
fn suites_are_deterministic() {
    let b = Basis::new(48, 1.0).unwrap();
    let p = TimeProfile::cosh();
    let a = verify_dyson_residual(&p, 1.3, 0.1, 0.2, &b, &dyson_opts(&b)).unwrap();
    let c = verify_dyson_residual(&p, 1.3, 0.1, 0.2, &b, &dyson_opts(&b)).unwrap();
    assert_eq!(a, c);
    let ts: Vec<f64> = (5..=30).map(|i| i as f64 / 10.0).collect();
    assert_eq!(verify_constraint(&p, &ts, 0.0), verify_constraint(&p, &ts, 0.0));
    assert!(verify_constraint(&p, &ts, 0.0).pass());
}

#[test]
fn transcription_discrepancies_are_reported() {
    let r = verify_transcription(&TimeProfile::cosh(), 1.0).unwrap();
    assert!(!r.pass());
    for ok in ["simplified_vs_fblock[fpp]", "simplified_vs_fblock[fxx]", "simplified_vs_fblock[C]", "bounded_vs_first_line[a2]"] {
        assert!(r.check(ok).unwrap().pass, "{ok}");
    }
    for bad in ["simplified_vs_fblock[fxp]", "printed_fp_vs_used_fp", "bounded_vs_first_line[a1]"] {
        assert!(!r.check(bad).unwrap().pass, "{bad}");
    }
}

#[test]
fn hermitian_routes_agree_with_the_oracle() {
    let opts = SpectralOptions { n: 128, omega: OmegaChoice::Sweep(vec![0.25, 0.5, 1.0, 2.0]), ..Default::default() };
    let (r, data) = verify_spectral_equivalence(&TimeProfile::cosh(), 1.0, 0.0, 0.0, &opts).unwrap();
    assert!(r.check("match[h,hhat]").unwrap().pass, "{r}");
    let ground = data.grid_ground.unwrap();
    assert!((ground - data.h.levels[0].re).abs() <= 10.0 * opts.tol_grid * ground.abs());
    let cs = coefficient_set(&TimeProfile::cosh(), 1.0, 0.0, 0.0).unwrap();
    assert!(cs.potential.a4 > 0.0);
}
