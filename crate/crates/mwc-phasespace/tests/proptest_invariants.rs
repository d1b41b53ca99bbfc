use mwc_phasespace::*;
use proptest::prelude::*;

fn point() -> impl Strategy<Value = PhasePoint> {
    (prop::collection::vec(-5.0..5.0f64, 2), prop::collection::vec(-5.0..5.0f64, 2))
        .prop_map(|(x, xi)| PhasePoint::new(x, xi))
}

fn label() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (prop::collection::vec(-6i64..6, 2), prop::collection::vec(-6i64..6, 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sigma_is_antisymmetric(a in point(), b in point()) {
        let s = sigma(&a, &b).unwrap() + sigma(&b, &a).unwrap();
        prop_assert!(s.abs() < 1e-12);
    }

    #[test]
    fn sigma_is_bilinear(a in point(), b in point(), c in point(), t in -3.0..3.0f64) {
        let scaled = PhasePoint::new(b.x.iter().map(|v| v * t).collect(), b.xi.iter().map(|v| v * t).collect());
        let lhs = sigma(&a, &c.add(&scaled)).unwrap();
        let rhs = sigma(&a, &c).unwrap() + t * sigma(&a, &b).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn plane_wave_character_law(a in point(), b in point(), z in point()) {
        let lhs = plane_wave_at(&a.add(&b), &z);
        let rhs = plane_wave_at(&a, &z) * plane_wave_at(&b, &z);
        prop_assert!((lhs - rhs).norm() < 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn translations_compose(seed in 0u64..1000, (p1, m1) in label(), (p2, m2) in label()) {
        let g = PhaseGrid::new(2, 8, 4.0).unwrap();
        let f = random_bandlimited(&g, seed);
        let z1 = g.lattice(&p1, &m1).to_point(&g);
        let z2 = g.lattice(&p2, &m2).to_point(&g);
        let two = translate(&z2, &translate(&z1, &f).unwrap()).unwrap();
        let once = translate(&z1.add(&z2), &f).unwrap();
        prop_assert!(two.rel_l2_diff(&once) < 1e-14);
    }

    #[test]
    fn fourier_is_involutive_and_isometric(seed in 0u64..1000) {
        let g = PhaseGrid::new(2, 6, 3.0).unwrap();
        let f = random_bandlimited(&g, seed);
        let ff = symplectic_fourier(&f);
        prop_assert!((ff.norm_l2() - f.norm_l2()).abs() < 1e-12);
        prop_assert!(symplectic_fourier(&ff).rel_l2_diff(&f) < 1e-12);
    }

    #[test]
    fn coefficient_round_trip(seed in 0u64..1000) {
        let g = PhaseGrid::new(1, 10, 3.0).unwrap();
        let f = random_bandlimited(&g, seed);
        prop_assert!(from_coefficients(&coefficients(&f)).rel_l2_diff(&f) < 1e-13);
    }
}
