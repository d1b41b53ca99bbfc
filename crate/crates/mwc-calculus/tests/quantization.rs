use mwc_calculus::*;
use mwc_magfield::{gauge_shift, transversal_gauge, FieldSpec, GaugeScalar, PotentialSpec};
use mwc_phasespace::*;

fn grid(n: usize) -> PhaseGrid {
    PhaseGrid::new(2, n, 6.0).unwrap()
}

fn symmetric(b: f64) -> PotentialSpec {
    transversal_gauge(&FieldSpec::constant(b)).unwrap()
}

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

#[test]
fn unit_symbol_quantizes_to_identity() {
    for a in [PotentialSpec::zero(2), symmetric(1.0)] {
        let q = Quantizer::new(&grid(8), &a).unwrap();
        let id = q.op(&Symbol::constant(q.grid(), one()));
        assert!(id.rel_diff(&OperatorMatrix::identity(q.grid())) < 1e-12);
        let back = q.symbol_of(&OperatorMatrix::identity(q.grid()));
        assert!(back.rel_l2_diff(&Symbol::constant(q.grid(), one())) < 1e-12);
    }
}

#[test]
fn momentum_symbol_is_fourier_derivative() {
    let g = PhaseGrid::new(1, 16, 4.0).unwrap();
    let q = Quantizer::new(&g, &PotentialSpec::zero(1)).unwrap();
    let p = q.op(&Symbol::from_fn(&g, |_, xi| C64::new(xi[0], 0.0)));
    // −i∂ by discrete Fourier differentiation on the same grid
    let n = g.n();
    let mut d = OperatorMatrix::zeros(&g);
    for i in 0..n {
        for j in 0..n {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..n {
                acc += g.xi_coord(k) * C64::from_polar(1.0, g.xi_coord(k) * (g.x_coord(i) - g.x_coord(j)));
            }
            d.set(i, j, acc / n as f64);
        }
    }
    assert!(p.rel_diff(&d) < 1e-10);
}

#[test]
fn gauge_covariance_is_exact() {
    let g = grid(8);
    let a = symmetric(1.0);
    let rho = GaugeScalar::Polynomial(vec![(0.3, vec![1, 1]), (-0.2, vec![2, 0]), (0.05, vec![0, 3])]);
    let a2 = gauge_shift(&a, rho.clone());
    let f = random_bandlimited(&g, 3);
    let t1 = Quantizer::new(&g, &a).unwrap().op(&f);
    let t2 = Quantizer::new(&g, &a2).unwrap().op(&f);
    let e = OperatorMatrix::multiplication(&g, |x| C64::from_polar(1.0, rho.value(x)));
    let conj = e.mul(&t1).mul(&e.adjoint());
    assert!(t2.rel_diff(&conj) < 1e-12);
}

#[test]
fn round_trip_and_involution() {
    let g = grid(8);
    let q = Quantizer::new(&g, &symmetric(1.0)).unwrap();
    let f = random_bandlimited(&g, 5);
    assert!(q.symbol_of(&q.op(&f)).rel_l2_diff(&f) < 1e-12);
    assert!(q.op(&f.conj()).rel_diff(&q.op(&f).adjoint()) < 1e-12);
}

#[test]
fn weyl_system_properties() {
    let g = grid(8);
    let q = Quantizer::new(&g, &symmetric(1.0)).unwrap();
    let zero = q.weyl_system(&Lattice::zero(2));
    assert!(zero.rel_diff(&OperatorMatrix::identity(&g)) < 1e-15);
    let y = g.lattice(&[2, -1], &[1, 3]);
    let u = q.weyl_system(&y);
    assert!(u.adjoint().mul(&u).rel_diff(&OperatorMatrix::identity(&g)) < 1e-12);
    // the Weyl system is the quantization of the plane wave
    let e = plane_wave(&y.to_point(&g), &g);
    assert!(q.op(&e).rel_diff(&u) < 1e-12);
    // shift form agrees with dense form
    let s = q.weyl_shift(&y);
    assert!(s.to_dense(&g).rel_diff(&u) < 1e-15);
    // explicit formula on an interior row
    let i = g.pos_flat(&[3, 4]);
    let j = g.pos_flat(&[5, 3]);
    let x = g.position(i);
    let yp = y.to_point(&g);
    let target: Vec<f64> = x.iter().zip(&yp.x).map(|(a, b)| a + b).collect();
    let ph = -(x[0] + yp.x[0] / 2.0) * yp.xi[0] - (x[1] + yp.x[1] / 2.0) * yp.xi[1]
        - mwc_magfield::circulation(q.potential(), &x, &target);
    assert!((u.get(i, j) - C64::from_polar(1.0, ph)).norm() < 1e-12);
}

#[test]
fn product_rule_holds_on_rows_without_wraparound() {
    let g = grid(8);
    let b = FieldSpec::constant(1.0);
    let q = Quantizer::new(&g, &symmetric(1.0)).unwrap();
    let x = g.lattice(&[1, 2], &[-1, 2]);
    let y = g.lattice(&[2, -1], &[3, 1]);
    let lhs = q.weyl_system(&x).mul(&q.weyl_system(&y));
    let xy = x.add(&y);
    let om = OperatorMatrix::multiplication(&g, |z| {
        mwc_magfield::cocycle_big(&b, &x.to_point(&g), &y.to_point(&g), z)
    });
    let rhs = om.mul(&q.weyl_system(&xy));
    let rows = interior_rows(&g, &[&x, &y]);
    assert!(!rows.is_empty());
    assert!(lhs.max_row_diff(&rhs, &rows) < 1e-12);
}

#[test]
fn kernel_route_is_gauge_independent_and_associative() {
    let g = grid(8);
    let f = random_bandlimited(&g, 1);
    let h = random_bandlimited(&g, 2);
    let k = random_bandlimited(&g, 3);
    let a = symmetric(0.8);
    let a2 = gauge_shift(&a, GaugeScalar::Sine { amp: 0.7, wave: vec![0.4, 0.9] });
    let p1 = moyal_kernel_route(&f, &h, &a).unwrap();
    let p2 = moyal_kernel_route(&f, &h, &a2).unwrap();
    assert!(p1.rel_l2_diff(&p2) < 1e-12);
    let q = Quantizer::new(&g, &a).unwrap();
    let left = q.product(&q.product(&f, &h), &k);
    let right = q.product(&f, &q.product(&h, &k));
    assert!(left.rel_l2_diff(&right) < 1e-10);
    let unit = Symbol::constant(&g, one());
    assert!(q.product(&f, &unit).rel_l2_diff(&f) < 1e-12);
    assert!(q.product(&unit, &f).rel_l2_diff(&f) < 1e-12);
}

#[test]
fn kernel_route_without_field_matches_fourier_oracle() {
    for g in [PhaseGrid::new(1, 16, 5.0).unwrap(), grid(8)] {
        let f = gaussian_symbol(&g, &PhasePoint::new(vec![0.5; g.dim()], vec![-0.2; g.dim()]), 1.1, 0.8);
        let h = random_bandlimited(&g, 8);
        let k = moyal_kernel_route(&f, &h, &PotentialSpec::zero(g.dim())).unwrap();
        let o = weyl_product_fourier(&f, &h);
        assert!(k.rel_l2_diff(&o) < 1e-12);
    }
}

#[test]
fn plane_wave_product_without_field() {
    let g = grid(8);
    let x = g.lattice(&[1, 0], &[1, -1]);
    let y = g.lattice(&[-2, 1], &[0, 2]);
    let (px, py) = (x.to_point(&g), y.to_point(&g));
    let lhs = moyal_kernel_route(&plane_wave(&px, &g), &plane_wave(&py, &g), &PotentialSpec::zero(2)).unwrap();
    let s = sigma(&px, &py).unwrap();
    let rhs = plane_wave(&px.add(&py), &g).scale(C64::from_polar(1.0, 0.5 * s));
    assert!(lhs.rel_l2_diff(&rhs) < 1e-12);
}

#[test]
fn direct_route_without_field_reproduces_unit_and_plane_waves() {
    let g = grid(8);
    let zero = FieldSpec::zero(2);
    let pts = vec![Lattice::zero(2), g.lattice(&[1, -1], &[0, 1])];
    let unit = Symbol::constant(&g, one());
    let d = moyal_direct(&unit, &unit, &zero, &pts, 2).unwrap();
    for v in d {
        assert!((v - one()).norm() < 1e-10);
    }
}

#[test]
fn direct_and_kernel_routes_agree_on_gaussians() {
    let g = grid(8);
    let a = symmetric(1.0);
    let b = FieldSpec::constant(1.0);
    let f = gaussian_symbol(&g, &PhasePoint::new(vec![0.5, -0.2], vec![0.1, 0.3]), 1.8, 0.9);
    let h = gaussian_symbol(&g, &PhasePoint::new(vec![-0.3, 0.4], vec![-0.2, 0.0]), 1.8, 0.9);
    let pts = central_points(&g, 6, 11);
    let d = moyal_direct(&f, &h, &b, &pts, 2).unwrap();
    let k = moyal_kernel_route(&f, &h, &a).unwrap();
    let kv: Vec<C64> = pts.iter().map(|p| k.at_lattice(p)).collect();
    let err = rel_l2_vec(&d, &kv);
    assert!(err < 3e-2, "direct vs kernel {err}");
}

#[test]
fn wigner_identities() {
    let g = grid(8);
    let a = symmetric(1.0);
    let q = Quantizer::new(&g, &a).unwrap();
    let u = random_wave(&g, 1);
    let v = random_wave(&g, 2);
    let w = q.wigner(&u, &v);
    assert!(q.op(&w).rel_diff(&OperatorMatrix::rank_one(&u, &v)) < 1e-12);
    for s in 0..20 {
        let f = random_bandlimited(&g, 100 + s);
        let lhs = v.inner(&q.op(&f).apply(&u));
        let rhs = pair_bilinear(&f, &w).unwrap() / (2.0 * std::f64::consts::PI).powi(2);
        assert!((lhs - rhs).norm() < 1e-10 * lhs.norm().max(1e-3));
    }
    // Nyquist labels have no real counterpart on an even grid; the rest is real
    let ww = band_limit(&q.wigner(&u, &u));
    assert!(ww.values().iter().all(|z| z.im.abs() < 1e-10 * ww.max_abs()));
}

#[test]
fn wigner_of_gaussian_has_closed_form() {
    let g = PhaseGrid::new(1, 64, 10.0).unwrap();
    let q = Quantizer::new(&g, &PotentialSpec::zero(1)).unwrap();
    let v = gaussian_wave(&g, &[0.0], &[0.0], 1.0);
    let w = q.wigner(&v, &v);
    let want = Symbol::from_fn(&g, |z, k| C64::new(2.0 * (-z[0] * z[0] - k[0] * k[0]).exp(), 0.0));
    assert!(w.sub(&want).max_abs() < 1e-8);
}

#[test]
fn calibration_constants() {
    let g = grid(8);
    let q = Quantizer::new(&g, &symmetric(1.0)).unwrap();
    let tp = 2.0 * std::f64::consts::PI;
    for s in 0..5 {
        let f = random_bandlimited(&g, s);
        let h = random_bandlimited(&g, s + 50);
        let tr = q.op(&f).mul(&q.op(&h)).trace();
        let pr = pair_bilinear(&f, &h).unwrap();
        assert!((pr - tr * tp * tp).norm() < 1e-10 * pr.norm());
        let ratio = q.op(&f).hs_norm() / f.norm_l2();
        assert!((ratio - 1.0 / tp).abs() < 1e-12);
    }
}
