//! Library results against independent reference computations.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use zetalab::contour::{
    count_zeros_rectangle, density_window, im_log_delta, lemma21_check, sign_change_count, track_segment,
};
use zetalab::eval::{zeta, zeta_dirichlet, zeta_euler_maclaurin, zeta_global, Method};
use zetalab::func::{AnalyticFn, Xi};
use zetalab::gamma_xi::{gamma_stirling, gamma_weierstrass, log_gamma, xi};
use zetalab::geometry::{Rectangle, Segment};
use zetalab::lemma::{blaschke_factor, jensen_growth_check, BlaschkeSystem};
use zetalab::pseudo::{params_from_height, pseudo_gamma, pseudo_zeta};
use zetalab::{ComplexPoint, Error, PrecisionPolicy};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pt(re: f64, im: f64) -> ComplexPoint {
    ComplexPoint::new(re, im).unwrap()
}

fn pol() -> PrecisionPolicy {
    PrecisionPolicy::default()
}

/// Σ_{n ≤ N} n^{−s} plus the midpoint-rule tail (N + 1/2)^{1−s}/(s − 1).
/// The tail error is below s(s+1)/24 · N^{−s−2}.
fn brute_zeta(s: f64, n: u64) -> f64 {
    let mut sum = 0.0;
    for k in (1..=n).rev() {
        sum += (k as f64).powf(-s);
    }
    sum + (n as f64 + 0.5).powf(1.0 - s) / (s - 1.0)
}

/// Total argument change of f along a → b from the principal argument of
/// successive ratios on a grid of spacing `step`.
fn dense_arg<F: AnalyticFn>(f: &F, a: Complex64, b: Complex64, step: f64) -> f64 {
    let n = ((b - a).norm() / step).ceil() as usize;
    let mut prev = f.eval(a).unwrap();
    let mut total = 0.0;
    for k in 1..=n {
        let z = a + (b - a) * (k as f64 / n as f64);
        let v = f.eval(z).unwrap();
        let d = (v / prev).arg();
        assert!(d.abs() < PI / 2.0, "grid too coarse near {z}");
        total += d;
        prev = v;
    }
    total
}

fn dense_winding<F: AnalyticFn>(f: &F, r: [f64; 4], step: f64) -> f64 {
    let [s0, s1, t0, t1] = r;
    let corners = [c(s0, t0), c(s1, t0), c(s1, t1), c(s0, t1), c(s0, t0)];
    corners.windows(2).map(|w| dense_arg(f, w[0], w[1], step)).sum::<f64>() / TAU
}

#[test]
fn zeta_even_values_against_brute_force() {
    let p = pol();
    for (s, exact) in [(2.0, PI.powi(2) / 6.0), (4.0, PI.powi(4) / 90.0)] {
        let brute = brute_zeta(s, 1_000_000);
        assert!((brute - exact).abs() < 1e-13, "brute force at {s}: {brute}");
        let d = zeta_dirichlet(pt(s, 0.0), &p).unwrap();
        assert!((d.value.re - brute).abs() < 1e-10);
        assert!(d.value.im.abs() < 1e-15);
        let g = zeta_global(pt(s, 0.0), &p).unwrap();
        assert!((g.value - d.value).norm() <= 10.0 * (g.err_estimate + d.err_estimate) + 1e-15);
        let e = zeta_euler_maclaurin(pt(s, 0.0), &p).unwrap();
        assert!((e.value.re - brute).abs() < 1e-10);
    }
}

#[test]
fn dirichlet_refuses_critical_strip() {
    assert!(matches!(zeta_dirichlet(pt(0.5, 0.0), &pol()), Err(Error::Domain(_))));
}

#[test]
fn bernoulli_values_at_non_positive_integers() {
    // ζ(0) = −1/2, ζ(−1) = −1/12, ζ(−3) = 1/120
    let p = pol();
    for (s, want) in [(0.0, -0.5), (-1.0, -1.0 / 12.0), (-3.0, 1.0 / 120.0)] {
        let g = zeta_global(pt(s, 0.0), &p).unwrap().value;
        let e = zeta_euler_maclaurin(pt(s, 0.0), &p).unwrap().value;
        let z = zeta(pt(s, 0.0), &p).unwrap().value;
        for v in [g, e, z] {
            assert!((v - want).norm() < 1e-10, "zeta({s}) = {v}");
        }
    }
    assert!(zeta_global(pt(-2.0, 0.0), &p).unwrap().value.norm() < p.abs_tol);
    assert!(matches!(zeta_global(pt(1.0, 0.0), &p), Err(Error::Pole { .. })));
}

#[test]
fn global_and_euler_maclaurin_agree_in_strip() {
    let p = pol();
    for s in [
        pt(0.5, 14.0),
        pt(0.5, 14.134725141734694),
        pt(0.2, 33.0),
        pt(-1.5, 45.0),
    ] {
        let g = zeta_global(s, &p).unwrap();
        let e = zeta_euler_maclaurin(s, &p).unwrap();
        assert!(
            (g.value - e.value).norm() <= 10.0 * (g.err_estimate + e.err_estimate),
            "{s}: {} vs {}",
            g.value,
            e.value
        );
    }
}

#[test]
fn dispatch_tags() {
    let p = pol();
    assert_eq!(zeta(pt(3.0, 0.0), &p).unwrap().method, Method::Dirichlet);
    assert_eq!(zeta(pt(0.5, 50.0), &p).unwrap().method, Method::GlobalSum);
    assert_eq!(zeta(pt(0.5, 300.0), &p).unwrap().method, Method::EulerMaclaurin);
}

#[test]
fn gamma_known_values() {
    let p = pol();
    let g = gamma_weierstrass(pt(0.5, 0.0), &p).unwrap().value();
    assert!((g - PI.sqrt()).norm() < 1e-12);
    let g = gamma_stirling(pt(0.5, 0.0)).unwrap().value();
    assert!((g - PI.sqrt()).norm() < 1e-12);
    assert!((gamma_weierstrass(pt(1.0, 0.0), &p).unwrap().value() - 1.0).norm() < 1e-13);
    assert!((log_gamma(pt(5.0, 0.0)).unwrap() - 24f64.ln()).norm() < 1e-13);
    assert!(log_gamma(pt(2.0, 0.0)).unwrap().norm() < 1e-14);
    assert!(matches!(gamma_weierstrass(pt(-1.0, 0.0), &p), Err(Error::Pole { .. })));

    let s = pt(0.5, 10.0);
    let a = gamma_weierstrass(s, &p).unwrap().value();
    let b = gamma_stirling(s).unwrap().value();
    assert!((a - b).norm() <= 1e-9 * b.norm());
    // |Γ(1/2 + it)|² = π / cosh(πt)
    assert!((b.norm_sqr() - PI / (PI * 10.0).cosh()).abs() <= 1e-9 * b.norm_sqr());
}

#[test]
fn xi_symmetries_at_examples() {
    let p = pol();
    let a = xi(pt(0.3, 5.0), &p).unwrap();
    let b = xi(pt(0.7, -5.0), &p).unwrap();
    assert!((a - b).norm() <= 1e-9 * a.norm());
    let v = xi(pt(0.5, 14.0), &p).unwrap();
    assert!(v.im.abs() <= 1e-9 * v.norm().max(1e-300));
    // ξ(0) = ξ(1) = 1/2
    assert!((xi(pt(0.0, 0.0), &p).unwrap() - 0.5).norm() < 1e-12);
    assert!((xi(pt(1.0, 0.0), &p).unwrap() - 0.5).norm() < 1e-12);
}

#[test]
fn arg_change_of_square_on_quarter_arc_chord() {
    let seg = Segment::from_complex(c(1.0, 0.0), c(0.0, 1.0)).unwrap();
    let sq = |z: Complex64| -> zetalab::Result<Complex64> { Ok(z * z) };
    let d = im_log_delta(&sq, &seg, &pol()).unwrap();
    let oracle = dense_arg(&sq, c(1.0, 0.0), c(0.0, 1.0), 1e-4);
    assert!((d - PI).abs() < 1e-12);
    assert!((oracle - PI).abs() < 1e-12);
}

#[test]
fn xi_vertical_segment_matches_dense_sampling() {
    let f = Xi(pol());
    let seg = Segment::from_complex(c(2.0, 0.0), c(2.0, 30.0)).unwrap();
    let d = track_segment(&f, &seg, 32, &pol()).unwrap().delta;
    let oracle = dense_arg(&f, c(2.0, 0.0), c(2.0, 30.0), 1e-3);
    assert!((d - oracle).abs() < 1e-6, "{d} vs {oracle}");
}

#[test]
fn xi_zero_counts_match_dense_winding() {
    let f = Xi(pol());
    for (t1, want) in [(30.0, 3), (50.0, 10)] {
        let oracle = dense_winding(&f, [0.0, 1.0, 0.0, t1], 1e-3);
        assert!((oracle - want as f64).abs() < 1e-6, "oracle {oracle}");
        let r = Rectangle::new(0.0, 1.0, 0.0, t1).unwrap();
        assert_eq!(count_zeros_rectangle(&f, &r, &pol()).unwrap().winding, want);
    }
}

#[test]
fn density_windows_match_dense_winding() {
    let f = Xi(pol());
    for (lambda, t, e) in [(0.9, 20.0, 5.0), (0.6, 14.1, 0.5)] {
        let oracle = dense_winding(&f, [lambda, 1.0, t - e, t + e], 1e-3);
        assert!(oracle.abs() < 1e-6);
        assert_eq!(density_window(lambda, t, e, &pol()).unwrap().winding, 0);
    }
    assert!(matches!(density_window(0.9, 20.0, 0.0, &pol()), Err(Error::Domain(_))));
}

#[test]
fn sign_changes_match_fine_grid() {
    let f = Xi(pol());
    let (a, b) = (c(0.6, 14.0), c(0.6, 15.0));
    let seg = Segment::from_complex(a, b).unwrap();
    let n = 100_000;
    let mut prev = f.eval(a).unwrap().re;
    let mut changes = 0;
    for k in 1..=n {
        let v = f.eval(a + (b - a) * (k as f64 / n as f64)).unwrap().re;
        if (v > 0.0) != (prev > 0.0) {
            changes += 1;
        }
        prev = v;
    }
    assert_eq!(sign_change_count(&f, &seg, 1e-3).unwrap(), changes);

    let id = |z: Complex64| -> zetalab::Result<Complex64> { Ok(z) };
    let seg = Segment::from_complex(c(-1.0, -1.0), c(1.0, -1.0)).unwrap();
    assert_eq!(sign_change_count(&id, &seg, 1e-2).unwrap(), 1);
}

#[test]
fn exp_segments_turn_by_their_height() {
    let e = |z: Complex64| -> zetalab::Result<Complex64> { Ok(z.exp()) };
    for (a, b) in [
        (c(0.0, 0.2), c(1.0, 3.0)),
        (c(-2.0, 1.0), c(0.5, -1.5)),
        (c(0.3, 0.0), c(0.3, 3.1)),
    ] {
        let seg = Segment::from_complex(a, b).unwrap();
        let d = im_log_delta(&e, &seg, &pol()).unwrap();
        assert!((d - (b.im - a.im)).abs() < 1e-12);
        let rep = lemma21_check(&e, &seg, 1e-3, &pol()).unwrap();
        assert!(rep.holds);
    }
}

#[test]
fn jensen_closed_form_for_power_of_linear() {
    // f = (z − a)^m, z₀ = 0: M(R)/|f(0)| = ((R + |a|)/|a|)^m and the bound is (R/r)^m.
    let a = c(0.3, 0.4);
    for m in 1..=4 {
        let f = move |z: Complex64| -> zetalab::Result<Complex64> { Ok((z - a).powi(m)) };
        let (r, big_r) = (0.8, 2.0);
        let rep = jensen_growth_check(&f, pt(0.0, 0.0), r, big_r, 2048, &pol()).unwrap();
        let lhs = (big_r / r).powi(m);
        let rhs = ((big_r + a.norm()) / a.norm()).powi(m);
        assert!((rep.lhs - lhs).abs() <= 1e-9 * lhs);
        assert!((rep.rhs - rhs).abs() <= 1e-9 * rhs);
        assert!(rep.holds);
    }
}

#[test]
fn jensen_on_xi_off_the_line() {
    let rep = jensen_growth_check(&Xi(pol()), pt(2.0, 20.0), 1.2, 1.6, 2048, &pol()).unwrap();
    assert!(rep.holds, "{rep:?}");
}

#[test]
fn blaschke_value_at_center() {
    let s0 = pt(1.25, 30.0);
    let sk = pt(0.5, 30.4249);
    let sys = BlaschkeSystem::new(s0, 0.9, vec![sk]).unwrap();
    let got = blaschke_factor(&sys, 0, s0).unwrap();
    let d = s0.as_complex() - sk.as_complex();
    let want = 0.9 * d.conj() / d.norm_sqr();
    assert!((got - want).norm() < 1e-14);
}

#[test]
fn pseudo_functions_closed_forms() {
    let p = params_from_height(10.0, 0.5).unwrap();
    assert!((p.b - 18.0).abs() < 1e-15);
    let q = params_from_height(100.0, 0.5).unwrap();
    assert!((q.c - (2.5 * 100f64.ln() + 1.8f64.ln()) / 900.0).abs() < 1e-16);
    assert!(params_from_height(1.0, 0.5).is_err());

    let half = pt(0.5, 0.0);
    assert!((pseudo_zeta(half, &p).unwrap() - 2.0).norm() < 1e-15);
    assert!((pseudo_gamma(half, &p).unwrap() - 2.0).norm() < 1e-15);
    // A(σ) = 2[cos⁴ θ + sin⁴ θ], θ = C(σ − 1/2) log B / 4
    for k in -20..=20 {
        let sigma = k as f64 * 0.5;
        let th = p.c * (sigma - 0.5) * p.b.ln() / 4.0;
        let want = 2.0 * (th.cos().powi(4) + th.sin().powi(4));
        let got = pseudo_zeta(pt(sigma, 0.0), &p).unwrap();
        assert!((got.re - want).abs() < 1e-13 && got.im.abs() < 1e-13);
    }
}
