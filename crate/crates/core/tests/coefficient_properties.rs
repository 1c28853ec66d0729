// SPDX-License-Identifier: Apache-2.0

use anharmonic_dyson::coefficients::{
    constraint_residual, constraint_scale, couplings_from_sigma, dyson_coefficients, hermitian_coefficients,
    massless_c2,
};
use anharmonic_dyson::profiles::{parse_profile, polynomial_profile, TimeProfile};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn profile_strategy() -> impl Strategy<Value = TimeProfile> {
    prop_oneof![
        (0.5f64..2.0, 0.5f64..1.5).prop_map(|(a, b)| parse_profile(&format!("{a}*cosh({b}*t)")).unwrap()),
        (0.5f64..2.0, -1.0f64..1.0, 0.2f64..2.0).prop_map(|(k0, k1, k2)| polynomial_profile(k0 + k1 * k1 / (4.0 * k2), k1, k2)),
        (0.5f64..2.0, 0.2f64..1.0).prop_map(|(a, b)| parse_profile(&format!("{a} + exp({b}*t)")).unwrap()),
    ]
}

proptest! {
    #[test]
    fn derived_couplings_satisfy_the_constraint(p in profile_strategy(), t in 0.2f64..2.5, c2 in -1.0f64..1.0) {
        let jet = p.eval_jet(t, 4).unwrap();
        prop_assume!(jet.values[1].abs() > 1e-3);
        let c = couplings_from_sigma(&jet, c2).unwrap();
        prop_assert!(constraint_residual(&c).abs() <= 1e-9 * constraint_scale(&c));
    }

    #[test]
    fn alpha_is_a_sixth_of_the_log_rate_of_g(p in profile_strategy(), t in 0.2f64..2.5) {
        let g_at = |s: f64| couplings_from_sigma(&p.eval_jet(s, 4).unwrap(), 0.0).unwrap().g;
        let jet = p.eval_jet(t, 4).unwrap();
        prop_assume!(jet.values[1].abs() > 1e-2);
        let c = couplings_from_sigma(&jet, 0.0).unwrap();
        let d = dyson_coefficients(&c, 0.0).unwrap();
        let h = 1e-5;
        let fd = (g_at(t + h).ln() - g_at(t - h).ln()) / (2.0 * h) / 6.0;
        prop_assert!((d.alpha - fd).abs() <= 1e-6 * d.alpha.abs());
        prop_assert!((d.beta - 1.0 / (6.0 * c.g)).abs() <= 1e-12 * d.beta.abs());
    }

    #[test]
    fn quartic_coefficient_is_g(p in profile_strategy(), t in 0.2f64..2.5, c1 in -1.0f64..1.0, c2 in -1.0f64..1.0) {
        let jet = p.eval_jet(t, 4).unwrap();
        prop_assume!(jet.values[1].abs() > 1e-3);
        let f = hermitian_coefficients(&jet, c1, c2).unwrap();
        let c = couplings_from_sigma(&jet, c2).unwrap();
        prop_assert_eq!(f.fxx, c.g);
    }
}

#[test]
fn massless_c2_zeroes_the_mass_at_random_times() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let (k2, k1) = (rng.gen_range(0.2..2.0), rng.gen_range(-1.0..1.0));
        let k0 = k1 * k1 / (4.0 * k2) + rng.gen_range(0.1..2.0);
        let p = polynomial_profile(k0, k1, k2);
        let c2 = massless_c2(k0, k1, k2);
        for _ in 0..100 {
            let t = rng.gen_range(-5.0..5.0);
            let c = couplings_from_sigma(&p.eval_jet(t, 4).unwrap(), c2).unwrap();
            assert!(c.m.abs() <= 1e-12, "κ=({k0},{k1},{k2}) t={t} m={}", c.m);
        }
    }
}

#[test]
fn massless_examples_from_quadratics() {
    assert_eq!(massless_c2(1.0, 0.0, 1.0), 1.0);
    assert_eq!(massless_c2(0.0, 2.0, 0.0), -1.0);
    let c = couplings_from_sigma(&polynomial_profile(1.0, 0.0, 1.0).eval_jet(0.0, 4).unwrap(), 1.0).unwrap();
    assert_eq!(c.m, 0.0);
}
