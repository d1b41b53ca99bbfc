use mwc_calculus::weyl_product_fourier;
use mwc_magfield::{gauge_shift, transversal_gauge, FieldSpec, GaugeScalar, PotentialSpec};
use mwc_modulation::*;
use mwc_phasespace::*;

fn grid2(n: usize) -> PhaseGrid {
    PhaseGrid::new(2, n, 6.0).unwrap()
}

fn symmetric(b: f64) -> PotentialSpec {
    transversal_gauge(&FieldSpec::constant(b)).unwrap()
}

fn gauss(g: &PhaseGrid, c: &[f64], sz: f64, sk: f64) -> Symbol {
    let d = g.dim();
    band_limit(&gaussian_symbol(g, &PhasePoint::new(c[..d].to_vec(), c[d..].to_vec()), sz, sk))
}

fn pairs(g: &PhaseGrid, count: usize, seed: u64) -> Vec<(Lattice, Lattice)> {
    central_points(g, count, seed).into_iter().zip(central_points(g, count, seed + 1)).collect()
}

#[test]
fn zero_symbol_modulates_to_zero() {
    let g = grid2(8);
    let m = Modulator::new(&g, &symmetric(1.0)).unwrap();
    let mf = m.modulated(&random_bandlimited(&g, 1), &Symbol::zeros(&g)).unwrap();
    for (x, y) in pairs(&g, 5, 3) {
        assert_eq!(mf.at(&x, &y), C64::new(0.0, 0.0));
    }
}

#[test]
fn trace_route_matches_literal_pairing() {
    let g = grid2(8);
    let m = Modulator::new(&g, &symmetric(1.0)).unwrap();
    let f = random_bandlimited(&g, 2);
    let h = random_bandlimited(&g, 3);
    let mf = m.modulated(&h, &f).unwrap();
    for (x, y) in pairs(&g, 20, 5) {
        let a = mf.at(&x, &y);
        let b = m.literal(&h, &f, &x, &y).unwrap();
        assert!((a - b).norm() <= 1e-10 * b.norm().max(1e-6), "{a} vs {b}");
    }
}

#[test]
fn output_is_gauge_independent() {
    let g = grid2(8);
    let a = symmetric(1.0);
    let a2 = gauge_shift(&a, GaugeScalar::Sine { amp: 0.5, wave: vec![0.3, -0.7] });
    let f = random_bandlimited(&g, 4);
    let h = random_bandlimited(&g, 5);
    let m1 = Modulator::new(&g, &a).unwrap().modulated(&h, &f).unwrap();
    let m2 = Modulator::new(&g, &a2).unwrap().modulated(&h, &f).unwrap();
    for (x, y) in pairs(&g, 10, 7) {
        let (u, v) = (m1.at(&x, &y), m2.at(&x, &y));
        assert!((u - v).norm() <= 1e-10 * u.norm().max(1e-6));
    }
}

#[test]
fn nonmagnetic_case_is_a_twisted_translation_pairing() {
    let g = grid2(8);
    let m = Modulator::new(&g, &PotentialSpec::zero(2)).unwrap();
    let f = gauss(&g, &[0.5, -0.2, 0.1, 0.3], 1.2, 0.8);
    let h = gauss(&g, &[0.0, 0.4, -0.3, 0.1], 1.2, 0.8);
    let mf = m.modulated(&h, &f).unwrap();
    for (x, y) in pairs(&g, 10, 9) {
        let (px, py) = (x.to_point(&g), y.to_point(&g));
        let shifted = translate(&px.neg(), &f).unwrap();
        let prod = weyl_product_fourier(&shifted, &plane_wave(&py.neg(), &g));
        let want = pairing(&prod, &h).unwrap() * C64::from_polar(1.0, 0.5 * sigma(&px, &py).unwrap());
        let got = mf.at(&x, &y);
        assert!((got - want).norm() <= 1e-8 * want.norm().max(1e-6), "{got} vs {want}");
    }
}

#[test]
fn involution_is_compatible() {
    let g = grid2(8);
    let m = Modulator::new(&g, &symmetric(1.0)).unwrap();
    let f = random_bandlimited(&g, 10);
    let h = random_bandlimited(&g, 11);
    let direct = m.modulated(&h.conj(), &f.conj()).unwrap().lazy(Vec::new());
    let star = crossed_involution(&m.modulated(&h, &f).unwrap().lazy(Vec::new())).unwrap();
    for (x, y) in pairs(&g, 10, 13) {
        let (px, py) = (x.to_point(&g), y.to_point(&g));
        let (a, b) = (direct.eval(&px, &py).unwrap(), star.eval(&px, &py).unwrap());
        assert!((a - b).norm() <= 1e-10 * a.norm().max(1e-6));
    }
    // applying the involution twice gives back the original
    let f2 = m.modulated(&h, &f).unwrap().lazy(Vec::new());
    let twice = crossed_involution(&crossed_involution(&f2).unwrap()).unwrap();
    let (px, py) = (g.lattice(&[1, 0], &[0, -1]).to_point(&g), g.lattice(&[0, 1], &[1, 1]).to_point(&g));
    assert!((twice.eval(&px, &py).unwrap() - f2.eval(&px, &py).unwrap()).norm() < 1e-12);
}

#[test]
fn orthogonality_is_exact_on_the_full_lattice() {
    let g = PhaseGrid::new(1, 8, 5.0).unwrap();
    let m = Modulator::new(&g, &PotentialSpec::zero(1)).unwrap();
    let [f, gg, h, k] = [20, 21, 22, 23].map(|s| random_bandlimited(&g, s));
    let lat = CoarseLattice::new(&g, 1, 8).unwrap();
    let conj_mf = match m.modulated(&h, &f).unwrap().dense(&lat) {
        DoubleSymbol::Dense { grid, lattice, values } => {
            DoubleSymbol::dense(&grid, lattice, values.iter().map(|v| v.conj()).collect())
        }
        DoubleSymbol::Lazy { .. } => unreachable!(),
    };
    let mk = m.modulated(&k, &gg).unwrap().dense(&lat);
    let lhs = double_pairing(&conj_mf, &mk).unwrap();
    let rhs = pairing(&h.conj(), &k).unwrap() * pairing(&f.conj(), &gg).unwrap();
    assert!((lhs - rhs).norm() < 1e-10 * rhs.norm());
}

#[test]
fn inversion_is_exact_on_the_full_lattice() {
    let g = PhaseGrid::new(1, 8, 5.0).unwrap();
    let m = Modulator::new(&g, &PotentialSpec::zero(1)).unwrap();
    let [f, h, k] = [30, 31, 32].map(|s| random_bandlimited(&g, s));
    let lat = CoarseLattice::new(&g, 1, 8).unwrap();
    let back = m.adjoint(&k, &m.modulated(&h, &f).unwrap().dense(&lat)).unwrap();
    let want = f.scale(pairing(&h, &k.conj()).unwrap());
    assert!(back.rel_l2_diff(&want) < 1e-10);
}

#[test]
fn adjoint_pairing_and_zero_input() {
    let g = grid2(6);
    let m = Modulator::new(&g, &symmetric(0.8)).unwrap();
    let lat = CoarseLattice::new(&g, 2, 3).unwrap();
    let f = random_bandlimited(&g, 40);
    let k = random_bandlimited(&g, 41);
    let zero = DoubleSymbol::dense(&g, lat.clone(), vec![C64::new(0.0, 0.0); lat.len() * lat.len()]);
    assert_eq!(m.adjoint(&k, &zero).unwrap().max_abs(), 0.0);
    let big = {
        let r = random_bandlimited(&g, 42);
        let vals = (0..lat.len() * lat.len()).map(|i| r.values()[i % g.nsym()]).collect();
        DoubleSymbol::dense(&g, lat.clone(), vals)
    };
    let conj_mk = match m.modulated(&k, &f).unwrap().dense(&lat) {
        DoubleSymbol::Dense { grid, lattice, values } => {
            DoubleSymbol::dense(&grid, lattice, values.iter().map(|v| v.conj()).collect())
        }
        DoubleSymbol::Lazy { .. } => unreachable!(),
    };
    let lhs = double_pairing(&conj_mk, &big).unwrap();
    let rhs = pairing(&f.conj(), &m.adjoint(&k, &big).unwrap()).unwrap();
    assert!((lhs - rhs).norm() < 1e-10 * lhs.norm());
    assert!(matches!(m.adjoint(&k, &m.modulated(&k, &f).unwrap().lazy(Vec::new())), Err(ModulationError::NotDense)));
}

#[test]
fn crossed_product_paths_agree_and_associate() {
    let g = PhaseGrid::new(1, 6, 4.0).unwrap();
    let m = Modulator::new(&g, &PotentialSpec::zero(1)).unwrap();
    let [f, h, gg, k, p, r] = [50, 51, 52, 53, 54, 55].map(|s| random_bandlimited(&g, s));
    let (mf, mg, mp) = (m.modulated(&h, &f).unwrap(), m.modulated(&k, &gg).unwrap(), m.modulated(&r, &p).unwrap());
    let (lf, lg, lp) = (mf.lazy(Vec::new()), mg.lazy(Vec::new()), mp.lazy(Vec::new()));
    let fg = crossed_product(&lf, &lg).unwrap();
    let x = g.lattice(&[1], &[-1]);
    let y = g.lattice(&[0], &[2]);
    let (px, py) = (x.to_point(&g), y.to_point(&g));
    let slow = fg.eval(&px, &py).unwrap();
    let fast = mf.crossed_at(&mg, &x, &y);
    assert!((slow - fast).norm() < 1e-10 * fast.norm());
    let left = crossed_product(&fg, &lp).unwrap().eval(&px, &py).unwrap();
    let right = crossed_product(&lf, &crossed_product(&lg, &lp).unwrap()).unwrap().eval(&px, &py).unwrap();
    assert!((left - right).norm() < 1e-6 * left.norm());
    assert!(crossed_product(&mf.dense(&CoarseLattice::new(&g, 1, 6).unwrap()), &lg).is_err());
}

#[test]
fn modulation_is_multiplicative_for_idempotent_windows() {
    let g = grid2(8);
    let m = Modulator::new(&g, &symmetric(1.0)).unwrap();
    let q = m.quantizer();
    let w = gaussian_wave(&g, &[0.0, 0.0], &[0.0, 0.0], 1.0);
    let h = q.wigner(&w, &w);
    assert!(q.product(&h, &h).rel_l2_diff(&h) < 1e-10);
    let f = gauss(&g, &[0.5, -0.2, 0.1, 0.3], 1.2, 0.8);
    let gg = gauss(&g, &[-0.3, 0.4, -0.2, 0.0], 1.2, 0.8);
    let (mf, mg) = (m.modulated(&h, &f).unwrap(), m.modulated(&h, &gg).unwrap());
    let mfg = m.modulated(&q.product(&h, &h), &q.product(&f, &gg)).unwrap();
    for (x, y) in pairs(&g, 4, 17) {
        let lhs = mf.crossed_at(&mg, &x, &y);
        let rhs = mfg.at(&x, &y);
        assert!((lhs - rhs).norm() <= 1e-9 * rhs.norm().max(1e-8), "{lhs} vs {rhs}");
    }
}

#[test]
fn tensor_embedding_and_box_product() {
    let g = PhaseGrid::new(1, 6, 4.0).unwrap();
    let m = Modulator::new(&g, &PotentialSpec::zero(1)).unwrap();
    let q = m.quantizer();
    let [f, h, gg, k] = [60, 61, 62, 63].map(|s| random_bandlimited(&g, s));
    // J_k^* J_h = ⟨h, k⟩ id
    let back = j_adjoint(&k, &j_embed(&h, &f)).unwrap();
    assert!(back.rel_l2_diff(&f.scale(pairing(&h, &k).unwrap())) < 1e-12);
    // M(f ⊗ h) is the modulation of f with window h
    let t = modulation_tensor(&m, &TensorSum::simple(&f, &h)).unwrap();
    let x = g.lattice(&[1], &[0]);
    let y = g.lattice(&[-1], &[2]);
    assert_eq!(t.at(&x, &y), m.modulated(&h, &f).unwrap().at(&x, &y));
    // M((f⊗h) □ (g⊗k)) = M(f⊗h) ⋄ M(g⊗k)
    let b = box_product(q, &TensorSum::simple(&f, &h), &TensorSum::simple(&gg, &k));
    let lhs = modulation_tensor(&m, &b).unwrap().at(&x, &y);
    let rhs = t.crossed_at(&modulation_tensor(&m, &TensorSum::simple(&gg, &k)).unwrap(), &x, &y);
    assert!((lhs - rhs).norm() < 1e-10 * rhs.norm());
}

#[test]
fn lemma_identities_hold() {
    let g = grid2(8);
    let q = mwc_calculus::Quantizer::new(&g, &symmetric(1.0)).unwrap();
    let f1 = gauss(&g, &[0.5, -0.2, 0.1, 0.3], 1.2, 0.8);
    let f2 = gauss(&g, &[-0.3, 0.4, -0.2, 0.0], 1.2, 0.8);
    let f3 = gauss(&g, &[0.0, 0.2, 0.3, -0.1], 1.2, 0.8);
    let r = lemma_identities(&q, [&f1, &f2, &f3], &f2).unwrap();
    assert!(r.cyclicity < 1e-10, "{r:?}");
    assert!(r.plane_waves < 1e-10, "{r:?}");
    assert!(r.translation_average < 1e-10, "{r:?}");
}

#[test]
fn trace_pairing_uses_unit_constant() {
    let g = grid2(8);
    let q = mwc_calculus::Quantizer::new(&g, &symmetric(1.0)).unwrap();
    let f = random_bandlimited(&g, 70);
    let h = random_bandlimited(&g, 71);
    let tr = q.op(&f).mul(&q.op(&h)).trace();
    assert!((pairing(&f, &h).unwrap() - tr).norm() < 1e-12 * tr.norm());
}
