use mwc_calculus::*;
use mwc_magfield::{gauge_shift, transversal_gauge, FieldSpec, GaugeScalar};
use mwc_phasespace::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn grid() -> PhaseGrid {
    PhaseGrid::new(2, 6, 5.0).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn quantization_round_trips(seed in 0u64..1000, b in -2.0f64..2.0) {
        let g = grid();
        let q = Quantizer::new(&g, &transversal_gauge(&FieldSpec::constant(b)).unwrap()).unwrap();
        let f = random_bandlimited(&g, seed);
        prop_assert!(q.symbol_of(&q.op(&f)).rel_l2_diff(&f) < 1e-12);
        prop_assert!(q.op(&f.conj()).rel_diff(&q.op(&f).adjoint()) < 1e-12);
    }

    #[test]
    fn product_ignores_gauge(seed in 0u64..1000, b in -1.5f64..1.5) {
        let g = grid();
        let a = transversal_gauge(&FieldSpec::constant(b)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a2 = gauge_shift(&a, GaugeScalar::random_polynomial(&mut rng, 2, 3));
        let f = random_bandlimited(&g, seed);
        let h = random_bandlimited(&g, seed + 1);
        let p1 = moyal_kernel_route(&f, &h, &a).unwrap();
        let p2 = moyal_kernel_route(&f, &h, &a2).unwrap();
        prop_assert!(p1.rel_l2_diff(&p2) < 1e-11);
    }

    #[test]
    fn weyl_system_is_unitary(p0 in -3i64..3, p1 in -3i64..3, k0 in -3i64..3, k1 in -3i64..3, b in -2.0f64..2.0) {
        let g = grid();
        let q = Quantizer::new(&g, &transversal_gauge(&FieldSpec::constant(b)).unwrap()).unwrap();
        let u = q.weyl_system(&g.lattice(&[p0, p1], &[k0, k1]));
        prop_assert!(u.adjoint().mul(&u).rel_diff(&OperatorMatrix::identity(&g)) < 1e-12);
    }
}
