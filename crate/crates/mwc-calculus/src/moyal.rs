use std::f64::consts::PI;

use rayon::prelude::*;

use mwc_magfield::{flux_triangle, FieldSpec};
use mwc_phasespace::{coefficients, from_coefficients, Lattice, PhaseGrid, Symbol, C64};

use crate::CalculusError;

/// Applies an `m × len` table along `axis` of a row-major array with the given shape.
fn apply_rect(data: &[C64], shape: &[usize], axis: usize, table: &[C64], m: usize) -> (Vec<C64>, Vec<usize>) {
    let len = shape[axis];
    let inner: usize = shape[axis + 1..].iter().product();
    let outer: usize = shape[..axis].iter().product();
    let mut out = vec![C64::new(0.0, 0.0); outer * m * inner];
    for o in 0..outer {
        for k in 0..m {
            let row = &table[k * len..(k + 1) * len];
            for i in 0..inner {
                let mut acc = C64::new(0.0, 0.0);
                for (j, t) in row.iter().enumerate() {
                    acc += t * data[(o * len + j) * inner + i];
                }
                out[(o * m + k) * inner + i] = acc;
            }
        }
    }
    let mut s = shape.to_vec();
    s[axis] = m;
    (out, s)
}

/// Samples of a grid symbol on an `r`-times finer grid over the same box,
/// by trigonometric interpolation. Layout: position axes then momentum axes,
/// `r n` points each.
fn refine(f: &Symbol, r: usize) -> Vec<C64> {
    let g = f.grid();
    let (n, dim) = (g.n(), g.dim());
    let m = r * n;
    let (hx, hk) = (g.dx() / r as f64, g.dxi() / r as f64);
    let (x0, k0) = (-g.half_extent(), -(n as f64) * g.dxi() / 2.0);
    let c = coefficients(f);
    let np = g.npos();
    // reorder coefficients to [b..., a...] so position slots pair with z
    let mut ba = vec![C64::new(0.0, 0.0); c.values().len()];
    for ia in 0..np {
        for ib in 0..np {
            ba[ib * np + ia] = c.values()[ia * np + ib];
        }
    }
    let tz: Vec<C64> = (0..m)
        .flat_map(|p| (0..n).map(move |b| (p, b)))
        .map(|(p, b)| C64::from_polar(1.0, -(x0 + p as f64 * hx) * g.xi_coord(b)))
        .collect();
    let tk: Vec<C64> = (0..m)
        .flat_map(|q| (0..n).map(move |a| (q, a)))
        .map(|(q, a)| C64::from_polar(1.0, g.x_coord(a) * (k0 + q as f64 * hk)))
        .collect();
    let mut data = ba;
    let mut shape = vec![n; 2 * dim];
    for axis in 0..dim {
        (data, shape) = apply_rect(&data, &shape, axis, &tz, m);
        (data, shape) = apply_rect(&data, &shape, dim + axis, &tk, m);
    }
    data
}

/// Direct quadrature of the composition law
/// `(f #^B g)(X) = π^{−2N} ∬ dY dZ e^{−2iσ(X−Y, X−Z)} e^{−iΓ^B(<x−y+z, y−z+x, z−x+y>)} f(Y) g(Z)`
/// at the requested grid points.
///
/// Both factors are interpolated onto an `refine`-times finer grid before the
/// Riemann sum; the oscillatory factor separates per axis, so the momentum
/// integrals are done first as small matrix transforms.
pub fn moyal_direct(
    f: &Symbol,
    g: &Symbol,
    field: &FieldSpec,
    points: &[Lattice],
    refine_by: usize,
) -> Result<Vec<C64>, CalculusError> {
    if f.grid() != g.grid() {
        return Err(CalculusError::Grid(mwc_phasespace::GridError::GridMismatch));
    }
    let grid = *f.grid();
    let dim = grid.dim();
    let r = refine_by.max(1);
    let m = r * grid.n();
    let (hx, hk) = (grid.dx() / r as f64, grid.dxi() / r as f64);
    let (x0, k0) = (-grid.half_extent(), -(grid.n() as f64) * grid.dxi() / 2.0);
    let fr = refine(f, r);
    let gr = refine(g, r);
    let mp = m.pow(dim as u32);
    let coords: Vec<Vec<f64>> = (0..mp)
        .map(|p| {
            let d = if dim == 1 { [p, 0] } else { [p / m, p % m] };
            (0..dim).map(|a| x0 + d[a] as f64 * hx).collect()
        })
        .collect();
    let prefactor = (hx * hk).powi(2 * dim as i32) / PI.powi(2 * dim as i32);

    let eval = |pt: &Lattice| -> C64 {
        let xp = pt.to_point(&grid);
        let (x, xi) = (&xp.x, &xp.xi);
        let mut p1 = vec![C64::new(0.0, 0.0); mp * mp];
        let mut p2 = vec![C64::new(0.0, 0.0); mp * mp];
        // per-axis tables for the two oscillatory factors
        let t1: Vec<Vec<C64>> = (0..dim)
            .map(|d| {
                (0..m * m)
                    .map(|idx| {
                        let (zp, eq) = (idx / m, idx % m);
                        let ph = -2.0 * (x[d] - (x0 + zp as f64 * hx)) * (xi[d] - (k0 + eq as f64 * hk));
                        C64::from_polar(1.0, ph)
                    })
                    .collect()
            })
            .collect();
        let t2: Vec<Vec<C64>> = (0..dim)
            .map(|d| {
                (0..m * m)
                    .map(|idx| {
                        let (yp, zq) = (idx / m, idx % m);
                        let ph = 2.0 * (x[d] - (x0 + yp as f64 * hx)) * (xi[d] - (k0 + zq as f64 * hk));
                        C64::from_polar(1.0, ph)
                    })
                    .collect()
            })
            .collect();
        let rshape = vec![m; dim];
        for y in 0..mp {
            let mut row = fr[y * mp..(y + 1) * mp].to_vec();
            for d in 0..dim {
                row = apply_rect(&row, &rshape, d, &t1[d], m).0;
            }
            p1[y * mp..(y + 1) * mp].copy_from_slice(&row);
            let mut row = gr[y * mp..(y + 1) * mp].to_vec();
            for d in 0..dim {
                row = apply_rect(&row, &rshape, d, &t2[d], m).0;
            }
            p2[y * mp..(y + 1) * mp].copy_from_slice(&row);
        }
        let mut acc = C64::new(0.0, 0.0);
        for y in 0..mp {
            for z in 0..mp {
                let (yc, zc) = (&coords[y], &coords[z]);
                let flux = if field.is_zero() {
                    0.0
                } else {
                    let a: Vec<f64> = (0..dim).map(|k| x[k] - yc[k] + zc[k]).collect();
                    let b: Vec<f64> = (0..dim).map(|k| yc[k] - zc[k] + x[k]).collect();
                    let c: Vec<f64> = (0..dim).map(|k| zc[k] - x[k] + yc[k]).collect();
                    flux_triangle(field, &a, &b, &c)
                };
                acc += C64::from_polar(1.0, -flux) * p1[y * mp + z] * p2[z * mp + y];
            }
        }
        acc * prefactor
    };
    Ok(points.par_iter().map(eval).collect())
}

/// Non-magnetic Weyl product computed on the Fourier side from
/// `e_X # e_Y = e^{(i/2)σ(X,Y)} e_{X+Y}`, with the sign picked up when the
/// label `X + Y` is folded back into the centered range.
pub fn weyl_product_fourier(f: &Symbol, g: &Symbol) -> Symbol {
    let grid = *f.grid();
    let (n, dim, np) = (grid.n() as i64, grid.dim(), grid.npos());
    let c = coefficients(f);
    let d = coefficients(g);
    let roots: Vec<C64> = (0..2 * n).map(|k| C64::from_polar(1.0, PI * k as f64 / n as f64)).collect();
    // labels as [pos₀, pos₁, mom₀, mom₁], unused slots zero when N = 1
    let labels: Vec<[i64; 4]> = (0..grid.nsym())
        .map(|i| {
            let l = grid.lattice_of_index(i);
            let mut a = [0i64; 4];
            a[..dim].copy_from_slice(&l.pos);
            a[2..2 + dim].copy_from_slice(&l.mom);
            a
        })
        .collect();
    // sums of two centered labels lie in [−n, n − 2]
    let reduce = |v: i64| {
        if v < -n / 2 {
            v + n
        } else if v >= n / 2 {
            v - n
        } else {
            v
        }
    };
    let digit = |v: i64| (v + n / 2) as usize;
    let nu = grid.n();
    let chunk = np.max(1);
    let partials: Vec<Vec<C64>> = (0..grid.nsym())
        .collect::<Vec<_>>()
        .par_chunks(chunk)
        .map(|xs| {
            let mut out = vec![C64::new(0.0, 0.0); grid.nsym()];
            for &ix in xs {
                let cx = c.values()[ix];
                if cx == C64::new(0.0, 0.0) {
                    continue;
                }
                let lx = &labels[ix];
                for (iy, ly) in labels.iter().enumerate() {
                    let dy = d.values()[iy];
                    let mut k: i64 = 0;
                    let (mut pflat, mut mflat) = (0usize, 0usize);
                    for a in 0..dim {
                        // (i/2)σ(X,Y) = iπ(a'·b − a·b')/n
                        k += ly[a] * lx[2 + a] - lx[a] * ly[2 + a];
                        let (ap, bp) = (lx[a] + ly[a], lx[2 + a] + ly[2 + a]);
                        let (ar, br) = (reduce(ap), reduce(bp));
                        k -= ap * bp - ar * br;
                        pflat = pflat * nu + digit(ar);
                        mflat = mflat * nu + digit(br);
                    }
                    out[pflat * np + mflat] += cx * dy * roots[k.rem_euclid(2 * n) as usize];
                }
            }
            out
        })
        .collect();
    let mut total = vec![C64::new(0.0, 0.0); grid.nsym()];
    for p in partials {
        for (t, v) in total.iter_mut().zip(p) {
            *t += v;
        }
    }
    from_coefficients(&Symbol::new(&grid, total))
}

/// Rows `i` for which every partial sum of the given position shifts stays
/// inside the box without wrapping.
pub fn interior_rows(g: &PhaseGrid, shifts: &[&Lattice]) -> Vec<usize> {
    let n = g.n() as i64;
    (0..g.npos())
        .filter(|&i| {
            let d = g.pos_digits(i);
            let mut cur: Vec<i64> = (0..g.dim()).map(|a| d[a] as i64).collect();
            shifts.iter().all(|s| {
                for (c, v) in cur.iter_mut().zip(&s.pos) {
                    *c += v;
                }
                cur.iter().all(|&c| (0..n).contains(&c))
            })
        })
        .collect()
}

/// `‖a − b‖ / ‖b‖` over sample vectors.
pub fn rel_l2_vec(a: &[C64], b: &[C64]) -> f64 {
    let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum();
    let den: f64 = b.iter().map(|y| y.norm_sqr()).sum();
    (num / den).sqrt()
}
