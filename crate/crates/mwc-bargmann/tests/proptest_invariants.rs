use mwc_bargmann::Bargmann;
use mwc_magfield::{transversal_gauge, FieldSpec};
use mwc_phasespace::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn transform_preserves_inner_products(seed in 0u64..10_000, field in -2.0f64..2.0, width in 0.6f64..1.6) {
        let g = PhaseGrid::new(2, 6, 5.0).unwrap();
        let a = transversal_gauge(&FieldSpec::constant(field)).unwrap();
        let v = gaussian_wave(&g, &[0.0, 0.0], &[0.0, 0.0], width);
        let b = Bargmann::new(&g, &a, &v).unwrap();
        let (u, w) = (random_wave(&g, seed), random_wave(&g, seed + 1));
        let lhs = b.transform(&u).inner(&b.transform(&w));
        prop_assert!((lhs - u.inner(&w)).norm() < 1e-12);
    }

    #[test]
    fn projection_is_idempotent(seed in 0u64..10_000, field in -2.0f64..2.0) {
        let g = PhaseGrid::new(2, 6, 5.0).unwrap();
        let a = transversal_gauge(&FieldSpec::constant(field)).unwrap();
        let b = Bargmann::new(&g, &a, &hermite_wave(&g, &[1, 0])).unwrap();
        let phi = mwc_bargmann::BargmannFunction::from_symbol(&random_bandlimited(&g, seed));
        let p = b.project(&phi);
        prop_assert!(b.project(&p).sub(&p).norm() < 1e-10 * p.norm().max(1e-12));
        // self-adjointness: ⟨PΦ, Ψ⟩ = ⟨Φ, PΨ⟩
        let psi = mwc_bargmann::BargmannFunction::from_symbol(&random_bandlimited(&g, seed + 3));
        prop_assert!((p.inner(&psi) - phi.inner(&b.project(&psi))).norm() < 1e-10);
    }
}
