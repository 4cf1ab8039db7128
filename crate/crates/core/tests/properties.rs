//! Randomized property tests for the spherical-trigonometry kernel and the
//! counting identities.

use a3a4::counting::{counts_from_avc, euler_identities};
use a3a4::sphtrig::{alpha_from_edge, beta_from_gamma, edge_from_alpha};
use proptest::prelude::*;
use std::f64::consts::PI;

proptest! {
    #[test]
    fn edge_alpha_round_trip(alpha in (PI / 3.0 + 1e-6)..(PI - 1e-6)) {
        let a = edge_from_alpha(alpha).unwrap().a;
        let back = alpha_from_edge(a).unwrap();
        prop_assert!((back - alpha).abs() < 1e-9);
    }

    #[test]
    fn beta_from_gamma_satisfies_the_closure_relation(
        a in 0.01..(PI / 2.0 - 0.01),
        gamma in 0.01..(PI - 0.01),
    ) {
        let beta = beta_from_gamma(gamma, a).unwrap();
        let q = (beta / 2.0).tan().recip() * (gamma / 2.0).tan().recip();
        prop_assert!((q - a.cos()).abs() < 1e-9);
        prop_assert!(beta > 0.0 && beta < PI);
    }

    #[test]
    fn antiprism_avc_satisfies_euler_for_any_n(n in 3u32..1000) {
        let avc = a3a4::vertexcomb::avc(&[(1, 1, n, 6), (0, 2, 1, 6 * n - 6)]);
        let r = counts_from_avc(&avc).unwrap();
        prop_assert!(euler_identities(&r));
        prop_assert_eq!(r.f_triangle % 2, 0);
    }
}
