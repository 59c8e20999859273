use proptest::prelude::*;

use recomb_core::baseline::baseline_optimal_distance;
use recomb_core::model::{ai_power_value, optimal_profit, recombination_cost, success_probability};
use recomb_core::ModelParams;

proptest! {
    #[test]
    fn ai_power_increases_in_m(m in 1.01f64..50.0, dm in 0.01f64..10.0, phi in 0.05f64..0.95,
                               alpha in 0.01f64..0.99, kappa in 0.01f64..0.99) {
        let lo = ai_power_value(m, phi, alpha, kappa).value;
        let hi = ai_power_value(m + dm, phi, alpha, kappa).value;
        prop_assert!(hi > lo);
    }

    #[test]
    fn ai_power_peaks_at_kappa(kappa in 0.05f64..0.95, off in 0.001f64..0.04) {
        let at = |a: f64| ai_power_value(2.0, 0.5, a, kappa).value;
        prop_assert!(at(kappa) > at(kappa - off));
        prop_assert!(at(kappa) > at(kappa + off));
    }

    #[test]
    fn cost_is_degree_one_homogeneous(w in 0.01f64..100.0, mu in 0.01f64..100.0, s in 0.01f64..100.0,
                                      alpha in 0.01f64..0.99) {
        let p = ModelParams { alpha, ..ModelParams::default() };
        let c = recombination_cost(w, mu, &p).unwrap();
        let cs = recombination_cost(s * w, s * mu, &p).unwrap();
        prop_assert!((cs - s * c).abs() <= 1e-12 * cs.abs());
    }

    #[test]
    fn profit_beats_nearby_quantities(a in 0.1f64..10.0, w in 0.1f64..10.0, eps in 0.05f64..0.95,
                                      bump in -0.5f64..0.5) {
        let pi = optimal_profit(a, w, eps).unwrap();
        let x_star = (eps * eps * a / w).powf(1.0 / (1.0 - eps));
        let x = x_star * (1.0 + bump);
        let other = eps * a * x.powf(eps) - w * x;
        prop_assert!(pi >= other - 1e-12 * pi.abs());
    }

    #[test]
    fn success_probability_scales(d in 0.0f64..10.0, lam in 0.01f64..10.0, beta in 0.01f64..5.0,
                                  k in 0.1f64..10.0) {
        // Scaling d and λ together leaves p unchanged.
        let p1 = success_probability(d, lam, beta).unwrap();
        let p2 = success_probability(k * d, k * lam, beta).unwrap();
        prop_assert!((p1 - p2).abs() <= 1e-12);
        prop_assert!((0.0..=1.0).contains(&p1));
    }

    #[test]
    fn baseline_distance_tracks_ai_power(m in 1.1f64..10.0, dm in 0.01f64..5.0) {
        let p = ModelParams { m, ..ModelParams::default() };
        let q = ModelParams { m: m + dm, ..p };
        prop_assert!(baseline_optimal_distance(&q).unwrap().d_star > baseline_optimal_distance(&p).unwrap().d_star);
    }
}
