// SPDX-License-Identifier: Apache-2.0

use anharmonic_dyson::coefficients::{coefficient_set, DysonCoefficients, PotentialPoly};
use anharmonic_dyson::operators::{
    build_dyson_map, build_energy_operator, build_gauge_right, build_h, build_h_real_line, build_hhat, build_htilde,
    build_metric, build_unitary_u, interior_max, Basis, OperatorMatrix,
};
use anharmonic_dyson::profiles::TimeProfile;
use anharmonic_dyson::spectra::eig_hermitian;
use anharmonic_dyson::Error;
use faer::{c64, Mat};
use proptest::prelude::*;

fn hermitian_ok(m: &OperatorMatrix) -> bool {
    m.hermiticity_defect() <= 1e-12 * m.max_abs()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hermitian_builders(t in 0.3f64..3.0, c1 in -1.0f64..1.0, c2 in -1.0f64..1.0, n in 8usize..64, w in 0.1f64..4.0) {
        let cs = coefficient_set(&TimeProfile::cosh(), t, c1, c2).unwrap();
        let b = Basis::new(n, w).unwrap();
        prop_assert!(hermitian_ok(&build_h(&cs.hermitian, &b)));
        prop_assert!(hermitian_ok(&build_hhat(&cs.hermitian, &b)));
        prop_assert!(hermitian_ok(&build_htilde(&cs.potential, &b)));
    }

    #[test]
    fn energy_operator_is_the_exact_sum(t in 0.3f64..3.0, n in 8usize..48) {
        let cs = coefficient_set(&TimeProfile::cosh(), t, 0.0, 0.0).unwrap();
        let b = Basis::new(n, 1.0).unwrap();
        let sum = &build_h_real_line(&cs.couplings, &b).data + &build_gauge_right(&cs.dyson, &b).data;
        let e = build_energy_operator(&cs.couplings, &cs.dyson, &b);
        for j in 0..n {
            for i in 0..n {
                prop_assert_eq!(e.data[(i, j)], sum[(i, j)]);
            }
        }
    }
}

#[test]
fn unitary_u_at_cosh_one() {
    let cs = coefficient_set(&TimeProfile::cosh(), 1.0, 0.0, 0.0).unwrap();
    let b = Basis::new(128, 1.0).unwrap();
    let u = build_unitary_u(&cs.hermitian, &b).unwrap();
    let id = Mat::<c64>::identity(128, 128);
    let defect = interior_max(&(u.data.adjoint() * &u.data - &id), 120);
    assert!(defect <= 1e-10, "unitarity defect {defect:e}");
}

#[test]
fn dyson_map_inverse_for_moderate_coefficients() {
    let d = DysonCoefficients::fixed(0.1, 0.05, 0.1, 0.2);
    for n in [16, 32, 48, 64] {
        let b = Basis::new(n, 0.25).unwrap();
        let (eta, eta_inv) = build_dyson_map(&d, &b).unwrap();
        let dev = interior_max(&(&eta.data * &eta_inv.data - Mat::<c64>::identity(n, n)), b.interior().max(1));
        assert!(dev <= 1e-8, "N={n}: {dev:e}");
    }
}

#[test]
fn large_coefficients_hit_the_overflow_budget() {
    let d = DysonCoefficients::fixed(3.0, 3.0, 3.0, 3.0);
    let b = Basis::new(48, 1.0).unwrap();
    assert!(matches!(build_dyson_map(&d, &b), Err(Error::Overflow { .. })));
    let cs = coefficient_set(&TimeProfile::cosh(), 1.0, 0.0, 0.0).unwrap();
    assert!(matches!(build_dyson_map(&cs.dyson, &b), Err(Error::Overflow { .. })));
}

#[test]
fn metric_is_positive_definite() {
    let spectrum = |d: DysonCoefficients| {
        let b = Basis::new(48, 0.25).unwrap();
        let (eta, _) = build_dyson_map(&d, &b).unwrap();
        eig_hermitian(&build_metric(&eta)).unwrap()
    };
    let s = spectrum(DysonCoefficients::fixed(0.1, 0.05, 0.1, 0.2));
    assert!(s.levels[0].re > 0.0, "lowest eigenvalue {}", s.levels[0].re);
    // Here cond(ρ) exceeds 1/ε, so the lowest level sits at the rounding floor.
    let s = spectrum(DysonCoefficients::fixed(0.3, 0.1, 0.2, 0.5));
    let floor = 48.0 * f64::EPSILON * s.levels[47].re;
    assert!(s.levels[0].re > -floor, "lowest {} below floor {floor}", s.levels[0].re);
}

#[test]
fn quartic_oscillator_matrix() {
    let pp = PotentialPoly { t: 0.0, a4: 1.0, a2: 0.0, a1: 0.0, a0: 0.0 };
    let b = Basis::new(128, 2.0).unwrap();
    let s = eig_hermitian(&build_htilde(&pp, &b)).unwrap();
    assert!((s.levels[0].re - 1.0603620904841828).abs() < 1e-9, "{}", s.levels[0].re);
}
