// SPDX-License-Identifier: Apache-2.0

use anharmonic_dyson::profiles::{parse_profile, polynomial_profile, ProfileKind, TimeProfile};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

/// A few expression shapes with random parameters, all smooth near the sample points.
fn expr_strategy() -> impl Strategy<Value = String> {
    let a = 0.2f64..2.0;
    let b = 0.1f64..1.5;
    prop_oneof![
        (a.clone(), b.clone()).prop_map(|(a, b)| format!("{a}*cosh({b}*t)")),
        (a.clone(), b.clone()).prop_map(|(a, b)| format!("{a} + exp({b}*t)")),
        (a.clone(), b.clone()).prop_map(|(a, b)| format!("({a} + t^2)^{b}")),
        (a.clone(), b.clone()).prop_map(|(a, b)| format!("sqrt({a} + {b}*t*t) + sin(t)/3")),
        (a, b).prop_map(|(a, b)| format!("{a}*t^3 - {b}*t + 2 + tanh(t)")),
    ]
}

#[test]
fn parsed_cosh_is_the_builtin_profile() {
    let parsed = parse_profile("cosh(t)").unwrap();
    let builtin = TimeProfile::cosh();
    for i in 0..=200 {
        let t = -5.0 + 0.05 * i as f64;
        let a = parsed.eval_jet(t, 4).unwrap();
        let b = builtin.eval_jet(t, 4).unwrap();
        for k in 0..=4 {
            assert!(rel(a.values[k], b.values[k]) <= 1e-14 || (a.values[k] - b.values[k]).abs() <= 1e-14, "t={t} k={k}");
        }
    }
}

#[test]
fn general_expression_keeps_the_parsed_kind() {
    let p = parse_profile("1 + t^2 + exp(-t)").unwrap();
    assert!(matches!(p.kind(), ProfileKind::Parsed(_)));
}

proptest! {
    #[test]
    fn first_derivative_matches_central_difference(src in expr_strategy(), t in -1.5f64..1.5) {
        let p = parse_profile(&src).unwrap();
        let h = 1e-5;
        let jet = p.eval_jet(t, 1).unwrap();
        let fd = (p.eval_jet(t + h, 0).unwrap().values[0] - p.eval_jet(t - h, 0).unwrap().values[0]) / (2.0 * h);
        prop_assume!(jet.values[1].abs() > 1e-3);
        prop_assert!(rel(fd, jet.values[1]) <= 1e-8, "{src} at t={t}: jet {} fd {fd}", jet.values[1]);
    }

    #[test]
    fn quadratic_jets_vanish_from_third_order(k0 in -3.0f64..3.0, k1 in -3.0f64..3.0, k2 in -3.0f64..3.0, t in -10.0f64..10.0) {
        let jet = polynomial_profile(k0, k1, k2).eval_jet(t, 4).unwrap();
        prop_assert_eq!(jet.values[3], 0.0);
        prop_assert_eq!(jet.values[4], 0.0);
        prop_assert!((jet.values[2] - 2.0 * k2).abs() <= 1e-15 * k2.abs().max(1.0));
    }

    #[test]
    fn parsed_quadratic_matches_polynomial_profile(k0 in -3.0f64..3.0, k1 in -3.0f64..3.0, k2 in -3.0f64..3.0, t in -4.0f64..4.0) {
        let parsed = parse_profile(&format!("{k0} + {k1}*t + {k2}*t^2")).unwrap();
        let direct = polynomial_profile(k0, k1, k2);
        let (a, b) = (parsed.eval_jet(t, 4).unwrap(), direct.eval_jet(t, 4).unwrap());
        for k in 0..=4 {
            prop_assert!((a.values[k] - b.values[k]).abs() <= 1e-12 * b.values[k].abs().max(1.0));
        }
    }
}
