use mwc_magfield::*;
use mwc_phasespace::PhasePoint;
use proptest::prelude::*;

fn pt() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0..3.0f64, 2)
}

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        (-2.0..2.0f64).prop_map(FieldSpec::constant),
        (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64).prop_map(|(a, b, c)| FieldSpec::linear(a, b, c)),
        (0.1..1.5f64, -1.0..1.0f64, 0.5..2.0f64).prop_map(|(a, c, w)| FieldSpec::bump(a, [c, -c], w)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stokes_in_transversal_gauge(b in field(), p in pt(), q in pt(), r in pt()) {
        let a = transversal_gauge(&b).unwrap();
        let lhs = circulation(&a, &p, &q) + circulation(&a, &q, &r) + circulation(&a, &r, &p);
        prop_assert!((lhs - flux_triangle(&b, &p, &q, &r)).abs() < 1e-8);
    }

    #[test]
    fn cyclic_vertex_shift_keeps_flux(b in field(), p in pt(), q in pt(), r in pt()) {
        let f = flux_triangle(&b, &p, &q, &r);
        prop_assert!((f - flux_triangle(&b, &q, &r, &p)).abs() < 1e-10);
    }

    #[test]
    fn cocycle_identity(b in field(), x in pt(), y in pt(), w in pt(), z in pt()) {
        // ω(X,Y;z) ω(X+Y,W;z) = ω(Y,W;z+x) ω(X,Y+W;z): fluxes through a closed tetrahedron cancel
        let px = PhasePoint::new(x.clone(), vec![0.0; 2]);
        let py = PhasePoint::new(y.clone(), vec![0.0; 2]);
        let pw = PhasePoint::new(w, vec![0.0; 2]);
        let zx: Vec<f64> = z.iter().zip(&x).map(|(a, c)| a + c).collect();
        let lhs = cocycle_small(&b, &px, &py, &z) * cocycle_small(&b, &px.add(&py), &pw, &z);
        let rhs = cocycle_small(&b, &py, &pw, &zx) * cocycle_small(&b, &px, &py.add(&pw), &z);
        prop_assert!((lhs - rhs).norm() < 1e-8);
    }

    #[test]
    fn gauge_shift_preserves_fluxes_of_curl(b in field(), c in prop::collection::vec(-1.0..1.0f64, 2), x in pt()) {
        let a = transversal_gauge(&b).unwrap();
        let s = gauge_shift(&a, GaugeScalar::Sine { amp: 0.5, wave: c });
        prop_assert!((curl(&s, &x) - curl(&a, &x)).abs() < 1e-6);
    }
}
