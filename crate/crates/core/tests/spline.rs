mod common;

use common::{log_uniform, normals, random_grid, random_knots_on, rng, xi};
use lspline::kernel::{coth_scaled, csch_scaled, rho, sigma};
use lspline::reference::{cubic_clamped_fit, fd_derivative, DenseMatrix};
use lspline::{BoundaryCondition, Error, KnotGrid, LSpline, SampleSpec, Tension};
use rand::Rng;

fn inf(v: &[f64]) -> f64 {
    v.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
}

type FnPair = (Box<dyn Fn(f64) -> f64>, Box<dyn Fn(f64) -> f64>);

fn random_bc(r: &mut impl Rng) -> BoundaryCondition {
    if r.gen_bool(0.5) {
        BoundaryCondition::Natural
    } else {
        BoundaryCondition::Clamped { left: r.gen_range(-5.0..5.0), right: r.gen_range(-5.0..5.0) }
    }
}

fn random_fit(r: &mut impl Rng) -> LSpline {
    let n = r.gen_range(2..60);
    let k = log_uniform(r, 1e-2, 1e2);
    let grid = random_grid(r, n, k, 1e-6, 1e2);
    let z = normals(r, n);
    let bc = random_bc(r);
    LSpline::fit(grid, z, xi(k), bc).unwrap()
}

fn dense(a: f64, b: f64, m: usize) -> impl Iterator<Item = f64> {
    (0..m).map(move |i| a + (b - a) * i as f64 / (m - 1) as f64)
}

#[test]
fn interpolates_data() {
    let mut r = rng(51);
    for _ in 0..500 {
        let s = random_fit(&mut r);
        let zmax = inf(s.values());
        for (t, z) in s.knots().iter().zip(s.values()) {
            assert!((s.eval(*t) - z).abs() <= 1e-11 * (1.0 + zmax), "t={t}");
        }
    }
}

#[test]
fn twice_continuously_differentiable() {
    let mut r = rng(52);
    for _ in 0..500 {
        let s = random_fit(&mut r);
        let (t, g, h) = (s.knots(), s.values(), s.grid().widths());
        let k = s.xi().value();
        for j in 1..t.len() - 1 {
            let local = g[j - 1].abs().max(g[j].abs()).max(g[j + 1].abs());
            let inv_h = k + 1.0 / h[j - 1].min(h[j]);
            let left = s.deriv_on_segment(j - 1, t[j], 0).unwrap();
            let right = s.deriv_on_segment(j, t[j], 0).unwrap();
            assert!((left - right).abs() <= 1e-11 * (1.0 + local));
            for order in 1..=2u8 {
                let left = s.deriv_on_segment(j - 1, t[j], order).unwrap();
                let right = s.deriv_on_segment(j, t[j], order).unwrap();
                let scale = left.abs().max(right.abs()) + local * inv_h.powi(order as i32);
                assert!((left - right).abs() <= 1e-8 * scale, "order {order} knot {j}: {left} vs {right}");
            }
        }
    }
}

#[test]
fn clamped_end_slopes_are_met() {
    let mut r = rng(53);
    for _ in 0..300 {
        let n = r.gen_range(2..40);
        let k = log_uniform(&mut r, 1e-3, 1e2);
        let grid = random_grid(&mut r, n, k, 1e-4, 1e2);
        let (d1, d2) = (r.gen_range(-30.0..30.0), r.gen_range(-30.0..30.0));
        let s = LSpline::fit(grid, normals(&mut r, n), xi(k), BoundaryCondition::Clamped { left: d1, right: d2 })
            .unwrap();
        let (a, b) = (s.grid().first(), s.grid().last());
        assert!((s.eval_deriv(a, 1).unwrap() - d1).abs() <= 1e-9 * (1.0 + d1.abs()));
        assert!((s.eval_deriv(b, 1).unwrap() - d2).abs() <= 1e-9 * (1.0 + d2.abs()));
    }
}

/// Exact reproduction of `e^{±ξt}`, `t·e^{±ξt}` and combinations thereof.
#[test]
fn reproduces_null_space() {
    let mut r = rng(54);
    for &k in &[0.5, 5.0, 50.0] {
        let basis: [FnPair; 4] = [
            (Box::new(move |t: f64| (k * t).exp()), Box::new(move |t: f64| k * (k * t).exp())),
            (Box::new(move |t: f64| (-k * t).exp()), Box::new(move |t: f64| -k * (-k * t).exp())),
            (Box::new(move |t: f64| t * (k * t).exp()), Box::new(move |t: f64| (1.0 + k * t) * (k * t).exp())),
            (Box::new(move |t: f64| t * (-k * t).exp()), Box::new(move |t: f64| (1.0 - k * t) * (-k * t).exp())),
        ];
        for _ in 0..10 {
            let c = normals(&mut r, 4);
            let f = |t: f64| basis.iter().zip(&c).map(|((f, _), c)| c * f(t)).sum::<f64>();
            let df = |t: f64| basis.iter().zip(&c).map(|((_, d), c)| c * d(t)).sum::<f64>();
            let n = r.gen_range(3..30);
            let knots = random_knots_on(&mut r, -0.5, 0.5, n, 0.1);
            let z: Vec<f64> = knots.iter().map(|&t| f(t)).collect();
            let bc = BoundaryCondition::Clamped { left: df(-0.5), right: df(0.5) };
            let s = LSpline::fit(KnotGrid::new(knots).unwrap(), z, xi(k), bc).unwrap();
            let want: Vec<f64> = dense(-0.5, 0.5, 1000).map(f).collect();
            let got: Vec<f64> = dense(-0.5, 0.5, 1000).map(|t| s.eval(t)).collect();
            let err = got.iter().zip(&want).fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
            assert!(err <= 1e-9 * inf(&want), "k={k}: {err:e}");
        }
    }
}

#[test]
fn sinh_data_has_zero_moments() {
    let k = 3.0_f64;
    let knots = vec![-1.0, -0.4, 0.1, 0.3, 0.8, 1.5];
    let z: Vec<f64> = knots.iter().map(|&t| (k * t).sinh()).collect();
    let bc = BoundaryCondition::Clamped { left: k * (-k).cosh(), right: k * (1.5 * k).cosh() };
    let s = LSpline::fit(KnotGrid::new(knots).unwrap(), z.clone(), xi(k), bc).unwrap();
    assert!(inf(s.moments()) <= 1e-10 * k * k * inf(&z), "{:?}", s.moments());
    for t in dense(-1.0, 1.5, 500) {
        let want = (k * t).sinh();
        assert!((s.eval(t) - want).abs() <= 1e-10 * inf(&z), "t={t}");
    }
}

#[test]
fn vanishing_tension_is_the_cubic_spline() {
    let mut r = rng(55);
    for _ in 0..50 {
        let n = r.gen_range(2..30);
        let len = r.gen_range(0.5..10.0);
        let knots = random_knots_on(&mut r, 0.0, len, n, 0.05);
        let z = normals(&mut r, n);
        let (d1, d2) = (r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0));
        let oracle = cubic_clamped_fit(&knots, &z, d1, d2).unwrap();
        let (a, b) = (knots[0], knots[n - 1]);
        let s = LSpline::fit(KnotGrid::new(knots).unwrap(), z, xi(1e-8), BoundaryCondition::Clamped { left: d1, right: d2 })
            .unwrap();
        let want: Vec<f64> = dense(a, b, 1000).map(|t| oracle.eval(t)).collect();
        let scale = inf(&want);
        for (t, w) in dense(a, b, 1000).zip(&want) {
            assert!((s.eval(t) - w).abs() <= 1e-8 * scale, "t={t}");
        }
        // at ξ → 0 the moments are the second derivatives
        let m = oracle.moments();
        assert!(s.moments().iter().zip(m).all(|(p, q)| (p - q).abs() <= 1e-8 * (1.0 + inf(m))));
    }
}

#[test]
fn derivatives_match_finite_differences() {
    let mut r = rng(56);
    for _ in 0..200 {
        let n = r.gen_range(2..20);
        let k = log_uniform(&mut r, 1e-2, 20.0);
        let knots = random_knots_on(&mut r, -1.0, 1.0, n, 0.2);
        let s = LSpline::fit(KnotGrid::new(knots).unwrap(), normals(&mut r, n), xi(k), random_bc(&mut r)).unwrap();
        let h_min = inf(&s.grid().widths().iter().map(|w| 1.0 / w).collect::<Vec<_>>()).recip();
        for _ in 0..10 {
            // stay away from knots so the stencil sees one closed form
            let j = r.gen_range(0..n - 1);
            let (a, b) = (s.knots()[j], s.knots()[j + 1]);
            let t = a + (b - a) * r.gen_range(0.2..0.8);
            let step = 1e-4 * h_min;
            let [_, d1, d2] = s.eval_all(t);
            let fd1 = fd_derivative(|u| s.eval_on_segment(j, u), t, 1, step);
            let fd2 = fd_derivative(|u| s.deriv_on_segment(j, u, 1).unwrap(), t, 1, step);
            let sc1 = d1.abs() + inf(s.values()) / h_min;
            let sc2 = d2.abs() + inf(s.values()) / (h_min * h_min);
            assert!((fd1 - d1).abs() <= 1e-6 * sc1, "{fd1} vs {d1}");
            assert!((fd2 - d2).abs() <= 1e-6 * sc2, "{fd2} vs {d2}");
        }
    }
}

#[test]
fn operator_at_knots_returns_moments() {
    let mut r = rng(57);
    for _ in 0..300 {
        let s = random_fit(&mut r);
        for (t, g) in s.knots().iter().zip(s.moments()) {
            assert!((s.eval_l(*t) - g).abs() <= 1e-9 * (1.0 + g.abs()), "t={t}");
        }
    }
}

#[test]
fn operator_is_combination_of_second_pair() {
    let mut r = rng(58);
    for _ in 0..200 {
        let s = random_fit(&mut r);
        let gm = s.moments();
        for _ in 0..10 {
            let t = r.gen_range(s.grid().first()..=s.grid().last());
            let j = s.grid().locate(t);
            let q = s.segment(j).values(t);
            let want = gm[j] * q.a2 + gm[j + 1] * q.b2;
            assert!((s.eval_l(t) - want).abs() <= 1e-9 * (1.0 + inf(gm)), "t={t}");
        }
    }
}

/// `Qᵀg − Rγ` with `Q` and `R` built entry by entry from the hyperbolic
/// functions, independent of the assembly code.
fn natural_residual(s: &LSpline) -> f64 {
    let (n, k, h, g) = (s.knots().len(), s.xi(), s.grid().widths(), s.values());
    let m = n - 2;
    let xk = k.value();
    let mut q = DenseMatrix::zeros(n, m);
    let mut rm = DenseMatrix::zeros(m, m);
    for c in 0..m {
        let (hl, hr) = (h[c], h[c + 1]);
        q[(c, c)] = xk * csch_scaled(xk * hl).unwrap();
        q[(c + 1, c)] = -xk * (coth_scaled(xk * hl).unwrap() + coth_scaled(xk * hr).unwrap());
        q[(c + 2, c)] = xk * csch_scaled(xk * hr).unwrap();
        rm[(c, c)] = rho(k, hl).unwrap() + rho(k, hr).unwrap();
        if c + 1 < m {
            rm[(c, c + 1)] = sigma(k, hr).unwrap();
            rm[(c + 1, c)] = sigma(k, hr).unwrap();
        }
    }
    let gamma = &s.moments()[1..n - 1];
    let rg = rm.mul_vec(gamma);
    let mut worst = 0.0_f64;
    for c in 0..m {
        let terms = [q[(c, c)] * g[c], q[(c + 1, c)] * g[c + 1], q[(c + 2, c)] * g[c + 2]];
        let qtg: f64 = terms.iter().sum();
        let scale = terms.iter().map(|v| v.abs()).sum::<f64>() + rg[c].abs();
        worst = worst.max((qtg - rg[c]).abs() / scale.max(f64::MIN_POSITIVE));
    }
    worst
}

#[test]
fn natural_fit_solves_the_moment_system() {
    let mut r = rng(59);
    for _ in 0..300 {
        let n = r.gen_range(3..80);
        let k = log_uniform(&mut r, 1e-2, 1e2);
        let grid = random_grid(&mut r, n, k, 1e-3, 1e2);
        let s = LSpline::fit(grid, normals(&mut r, n), xi(k), BoundaryCondition::Natural).unwrap();
        assert!(natural_residual(&s) <= 1e-11, "{:e}", natural_residual(&s));
        let gm = s.moments();
        assert_eq!((gm[0], gm[n - 1]), (0.0, 0.0));
        let scale = 1.0 + inf(gm);
        assert!(s.eval_l(s.grid().first()).abs() <= 1e-9 * scale);
        assert!(s.eval_l(s.grid().last()).abs() <= 1e-9 * scale);
    }
}

#[test]
fn two_knots() {
    let grid = KnotGrid::new(vec![0.0, 2.0]).unwrap();
    let s = LSpline::fit(grid.clone(), vec![1.0, 3.0], xi(0.7), BoundaryCondition::Natural).unwrap();
    assert_eq!(s.moments(), &[0.0, 0.0]);
    // g is the L-harmonic interpolant between the two values
    let want = (3.0 * (0.7_f64).sinh() + (0.7_f64).sinh()) / (1.4_f64).sinh();
    assert!((s.eval(1.0) - want).abs() < 1e-14);
    let c = LSpline::fit(grid, vec![1.0, 3.0], xi(0.7), BoundaryCondition::Clamped { left: 0.0, right: 5.0 }).unwrap();
    assert!((c.eval_deriv(0.0, 1).unwrap()).abs() < 1e-12);
    assert!((c.eval_deriv(2.0, 1).unwrap() - 5.0).abs() < 1e-12);
}

#[test]
fn demo_setup() {
    let knots: Vec<f64> = vec![0.0, 0.1667, 0.3333, 0.5, 0.6667, 0.8333, 1.0];
    let z: Vec<f64> = knots.iter().map(|&t| (25.0 * t).sin()).collect();
    let grid = KnotGrid::new(knots.clone()).unwrap();
    let s = LSpline::fit(grid, z.clone(), xi(5.0), BoundaryCondition::Clamped { left: 25.0, right: 25.0 }).unwrap();
    let table = s.sample(&SampleSpec::Points(knots)).unwrap();
    for (v, w) in table.value.iter().zip(&z) {
        assert!((v - w).abs() <= 1e-11);
    }
    assert!((table.deriv1[0] - 25.0).abs() <= 1e-9);
    assert!((table.deriv1[6] - 25.0).abs() <= 1e-9);
    let ends = s.sample(&SampleSpec::Count(2)).unwrap();
    assert_eq!(ends.t, vec![0.0, 1.0]);
    let even = s.sample(&SampleSpec::Count(7)).unwrap();
    assert_eq!(even.len(), 7);
    assert_eq!(*even.t.last().unwrap(), 1.0);
}

#[test]
fn sampling_and_order_errors() {
    let grid = KnotGrid::uniform(0.0, 1.0, 5).unwrap();
    let s = LSpline::fit(grid, vec![0.0, 1.0, 0.0, 1.0, 0.0], Tension::ZERO, BoundaryCondition::Natural).unwrap();
    assert!(matches!(s.sample(&SampleSpec::Points(vec![0.5, 0.2])), Err(Error::BadSpec(_))));
    assert!(matches!(s.sample(&SampleSpec::Points(vec![f64::NAN])), Err(Error::BadSpec(_))));
    assert!(matches!(s.sample(&SampleSpec::Count(1)), Err(Error::BadSpec(_))));
    assert!(matches!(s.eval_deriv(0.5, 3), Err(Error::InvalidOrder(3))));
    assert!(matches!(s.eval_deriv(0.5, 0), Err(Error::InvalidOrder(0))));
    let tab = s.sample(&SampleSpec::Count(11)).unwrap();
    assert!(tab.t.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn extrapolates_with_end_segments() {
    let grid = KnotGrid::new(vec![0.0, 1.0, 2.0]).unwrap();
    let s = LSpline::fit(grid, vec![0.0, 1.0, 0.5], xi(1.0), BoundaryCondition::Natural).unwrap();
    assert_eq!(s.eval(-0.5), s.eval_on_segment(0, -0.5));
    assert_eq!(s.eval(2.5), s.eval_on_segment(1, 2.5));
    // the last knot belongs to the last segment
    assert_eq!(s.grid().locate(2.0), 1);
    assert_eq!(s.grid().locate(1.0), 1);
}

mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn fit_invariants(
            k in 0.0..50.0_f64,
            widths in proptest::collection::vec(0.01..2.0_f64, 1..30),
            seed in any::<u64>(),
            natural in any::<bool>(),
        ) {
            let mut knots = vec![0.0];
            for w in &widths {
                knots.push(knots.last().unwrap() + w);
            }
            let n = knots.len();
            let z = normals(&mut rng(seed), n);
            let bc = if natural {
                BoundaryCondition::Natural
            } else {
                BoundaryCondition::Clamped { left: 1.0, right: -2.0 }
            };
            let s = LSpline::fit(KnotGrid::new(knots).unwrap(), z.clone(), xi(k), bc).unwrap();
            prop_assert_eq!(s.moments().len(), n);
            for (t, v) in s.knots().iter().zip(&z) {
                prop_assert!((s.eval(*t) - v).abs() <= 1e-11 * (1.0 + inf(&z)));
            }
            if natural {
                prop_assert_eq!(s.moments()[0], 0.0);
                prop_assert_eq!(s.moments()[n - 1], 0.0);
            }
        }
    }
}
