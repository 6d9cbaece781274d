use proptest::prelude::*;

use qwalk::asymptotics::{ks_distance_from, DensityKind, LimitDensity};
use qwalk::closed_form::{
    half_line_exact_split, half_line_exact_total, line_exact, ExactParams, Precision,
};
use qwalk::evolution::identities::{line_pair_residual, probability_copy_residual};
use qwalk::evolution::{evolve_half_line, evolve_line, half_line_states, step_half_line};
use qwalk::{Coin, HalfLineState};

fn admissible() -> impl Strategy<Value = Coin> {
    (-6.0f64..6.0)
        .prop_map(|theta| Coin::new(theta).unwrap())
        .prop_filter("cos and sin away from zero", |c| {
            c.c().abs() > 0.02 && c.s().abs() > 0.02
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3))]

    #[test]
    fn long_runs_stay_normalized(theta in -6.0f64..6.0) {
        let coin = Coin::new(theta).unwrap();
        prop_assert!((evolve_half_line(&coin, 10_000).norm_sqr() - 1.0).abs() <= 1e-12);
        prop_assert!((evolve_line(&coin, 10_000).norm_sqr() - 1.0).abs() <= 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closed_form_matches_evolution(coin in admissible(), t in 1u64..=60) {
        let dd = ExactParams::new(Precision::DoubleDouble);
        let half = evolve_half_line(&coin, t).distribution();
        let line = evolve_line(&coin, t).distribution();
        let split = half_line_exact_split(&coin, t, dd).unwrap();
        prop_assert!(split.max_abs_diff_inner(&half) <= 1e-9);
        prop_assert!(line_exact(&coin, t, dd).unwrap().max_abs_diff(&line) <= 1e-9);
        if t <= 30 {
            let double = ExactParams::new(Precision::Double);
            let split = half_line_exact_split(&coin, t, double).unwrap();
            prop_assert!(split.max_abs_diff_inner(&half) <= 1e-12);
        }
    }

    #[test]
    fn closed_form_is_a_distribution(coin in admissible(), t in 1u64..=60) {
        let dd = ExactParams::new(Precision::DoubleDouble);
        for d in [half_line_exact_total(&coin, t, dd).unwrap(), line_exact(&coin, t, dd).unwrap()] {
            prop_assert!((d.total() - 1.0).abs() <= 1e-9);
            prop_assert!(d.min_prob() >= 0.0);
        }
    }

    #[test]
    fn total_is_the_sum_of_inner_tables(coin in admissible(), t in 1u64..=60) {
        let dd = ExactParams::new(Precision::DoubleDouble);
        let total = half_line_exact_total(&coin, t, dd).unwrap();
        let split = half_line_exact_split(&coin, t, dd).unwrap();
        prop_assert!(total.max_abs_diff(&split) <= 1e-12);
    }

    #[test]
    fn half_line_copies_line_probabilities(theta in -6.0f64..6.0, t in 1u64..=200) {
        let coin = Coin::new(theta).unwrap();
        prop_assume!(!coin.sin_vanishes());
        let half = evolve_half_line(&coin, t).distribution();
        let line = evolve_line(&coin, t).distribution();
        prop_assert!(probability_copy_residual(&half, &line) <= 1e-12);
        prop_assert!(line_pair_residual(&line) <= 1e-12);
    }

    #[test]
    fn global_phase_is_invisible(theta in -6.0f64..6.0, t in 0usize..=100) {
        let coin = Coin::new(theta).unwrap();
        let phased = half_line_states(coin).nth(t).unwrap().distribution();
        let mut plain = HalfLineState::initial_unphased();
        for _ in 0..t {
            plain = step_half_line(&plain, &coin);
        }
        prop_assert!(phased.max_abs_diff_inner(&plain.distribution()) <= 1e-14);
    }

    #[test]
    fn inner_one_density_mirrors_the_line(coin in admissible(), u in 0.0f64..1.0) {
        let inner1 = LimitDensity::new(coin, DensityKind::HalfInner1).unwrap();
        let line = LimitDensity::new(coin, DensityKind::LineTotal).unwrap();
        let y = u * coin.c().abs();
        let (a, b) = (inner1.density_at(y), line.density_at(-y));
        prop_assert!((a - b).abs() <= 1e-14 * b.max(1.0));
    }

    #[test]
    fn densities_vanish_off_support(coin in admissible(), y in -1.5f64..1.5) {
        for kind in DensityKind::ALL {
            let d = LimitDensity::new(coin, kind).unwrap();
            let (lo, hi) = d.support();
            let v = d.density_at(y);
            prop_assert!(v >= 0.0);
            if y < lo || y >= hi {
                prop_assert_eq!(v, 0.0);
            }
        }
    }

    #[test]
    fn cdf_is_monotone(coin in admissible(), mut ys in prop::collection::vec(-1.2f64..1.2, 2..200)) {
        ys.sort_by(f64::total_cmp);
        for kind in [DensityKind::LineTotal, DensityKind::HalfTotal] {
            let d = LimitDensity::new(coin, kind).unwrap();
            let values: Vec<f64> = ys.iter().map(|&y| d.cdf_at(y)).collect();
            prop_assert!(values.windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(values.iter().all(|v| (0.0..=1.0).contains(v)));
        }
    }

    #[test]
    fn ks_distance_is_a_probability(coin in admissible(), t in 1u64..=120) {
        let d = LimitDensity::new(coin, DensityKind::HalfTotal).unwrap();
        let ks = ks_distance_from(&evolve_half_line(&coin, t).distribution(), &d).unwrap().ks;
        prop_assert!((0.0..=1.0).contains(&ks));
    }
}
