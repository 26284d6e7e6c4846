//! Γ by two independent routes, and the completed function
//! ξ(s) = π^{−s/2} (s/2) Γ(s/2) (s − 1) ζ(s).
//!
//! [`gamma_weierstrass`] sums the canonical product
//! 1/Γ(s) = s e^{γ₀ s} Π (1 + s/n) e^{−s/n} in log form and serves as the
//! reference; [`log_gamma`] is the Stirling series after a recurrence shift
//! into Re ≥ 10 and is what everything else uses.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bernoulli::stirling_coefficient;
use crate::cmath::EPS;
use crate::error::{Error, Result};
use crate::eval::{zeta, zeta_times_s_minus_one};
use crate::sum::ComplexSum;
use crate::types::{ComplexPoint, PrecisionPolicy};

/// Euler–Mascheroni constant γ₀.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
const STIRLING_SHIFT: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaMethod {
    WeierstrassProduct,
    StirlingAsymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaResult {
    /// log Γ(s) on the branch that is real on the positive axis and
    /// continuous off the negative axis.
    #[serde(with = "crate::json::complex")]
    pub log_value: Complex64,
    pub err_estimate: f64,
    pub method: GammaMethod,
}

impl GammaResult {
    pub fn value(&self) -> Complex64 {
        self.log_value.exp()
    }
}

/// Distance from `z` to the nearest non-positive integer, or `None` when
/// Re z > 0.5 and no pole is close.
fn pole_distance(z: Complex64) -> Option<(f64, f64)> {
    if z.re > 0.5 {
        return None;
    }
    let k = z.re.round().min(0.0);
    Some((k, (z - k).norm()))
}

/// log(1 + w) − w, accurate for small w.
fn log1p_minus_x(w: Complex64) -> Complex64 {
    if w.norm() < 0.1 {
        let mut pow = w * w;
        let mut acc = ComplexSum::new();
        let mut j = 2.0;
        loop {
            let term = pow / j;
            if j % 2.0 == 0.0 {
                acc.add(-term);
            } else {
                acc.add(term);
            }
            if term.norm() < 1e-20 * w.norm().max(1e-300) || j > 60.0 {
                break;
            }
            pow *= w;
            j += 1.0;
        }
        acc.value()
    } else {
        (w + 1.0).ln() - w
    }
}

/// Σ_{n>N} n^{−j} for j ≥ 2 by Euler–Maclaurin.
fn zeta_tail(j: i32, n: f64) -> f64 {
    let jf = j as f64;
    let np = n.powi(-j);
    n * np / (jf - 1.0) + 0.5 * np + jf * np / (12.0 * n) - jf * (jf + 1.0) * (jf + 2.0) * np / (720.0 * n * n * n) - np
}

/// Γ(s) from the Weierstrass product.
///
/// The product runs to N ≥ 50|s| factors; the remaining factors are folded in
/// through log(1 + s/n) − s/n = Σ_{j≥2} (−1)^{j+1} s^j / (j n^j) and the
/// Euler–Maclaurin tails of Σ_{n>N} n^{−j}.
pub fn gamma_weierstrass(s: ComplexPoint, policy: &PrecisionPolicy) -> Result<GammaResult> {
    let z = s.as_complex();
    if let Some((_, d)) = pole_distance(z) {
        if d <= policy.pole_guard_radius {
            return Err(Error::pole(z));
        }
    }
    let n_terms = ((50.0 * z.norm()).ceil() as usize)
        .max(1000)
        .min(policy.max_terms.max(1000));
    let nf = n_terms as f64;

    // log(1/Gamma(s)) = log s + gamma0 s + sum_n [log(1+s/n) - s/n]
    let mut acc = ComplexSum::new();
    let mut abs_weight = 0.0;
    for n in (1..=n_terms).rev() {
        let term = log1p_minus_x(z / n as f64);
        abs_weight += term.norm();
        acc.add(term);
    }
    let mut tail_err = 0.0;
    let mut pow = z;
    for j in 2..=40 {
        pow *= z;
        let jf = j as f64;
        let coef = pow / jf * zeta_tail(j, nf);
        let term = if j % 2 == 0 { -coef } else { coef };
        acc.add(term);
        tail_err = term.norm();
        if tail_err < 1e-18 {
            break;
        }
    }
    acc.add(z.ln());
    acc.add(z * EULER_GAMMA);
    let log_recip = acc.value();
    let err = tail_err + EPS * (4.0 * abs_weight + 4.0 * z.norm() + 8.0);
    Ok(GammaResult {
        log_value: -log_recip,
        err_estimate: err,
        method: GammaMethod::WeierstrassProduct,
    })
}

/// log Γ(z) by the Stirling series; see [`log_gamma`].
pub fn log_gamma_complex(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("non-finite argument to log_gamma".into()));
    }
    if let Some((k, d)) = pole_distance(z) {
        if d <= 1e-13 * k.abs().max(1.0) {
            return Err(Error::pole(z));
        }
    }
    let shift = if z.re < STIRLING_SHIFT {
        (STIRLING_SHIFT - z.re).ceil() as usize
    } else {
        0
    };
    let mut correction = ComplexSum::new();
    for j in 0..shift {
        correction.add((z + j as f64).ln());
    }
    let w = z + shift as f64;
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut series = ComplexSum::new();
    let mut p = inv;
    for k in 1..=12 {
        let term = p * stirling_coefficient(k);
        series.add(term);
        if term.norm() < 1e-18 * w.norm() {
            break;
        }
        p *= inv2;
    }
    let mut total = ComplexSum::new();
    total.add((w - 0.5) * w.ln());
    total.add(-w);
    total.add(Complex64::new(HALF_LN_2PI, 0.0));
    total.add(series.value());
    total.add(-correction.value());
    Ok(total.value())
}

/// log Γ(s): real on the positive axis, continuous off (−∞, 0].
pub fn log_gamma(s: ComplexPoint) -> Result<Complex64> {
    log_gamma_complex(s.as_complex())
}

/// Γ(s) through [`log_gamma`], tagged for comparison with the product.
pub fn gamma_stirling(s: ComplexPoint) -> Result<GammaResult> {
    let lv = log_gamma(s)?;
    Ok(GammaResult {
        log_value: lv,
        err_estimate: EPS * (16.0 + 4.0 * lv.norm()),
        method: GammaMethod::StirlingAsymptotic,
    })
}

/// ξ(s) = π^{−s/2} Γ(1 + s/2) (s − 1) ζ(s).
///
/// (s/2)Γ(s/2) is folded into Γ(1 + s/2) and, within 1/2 of s = 1, the
/// product (s − 1)ζ(s) is taken from the Euler–Maclaurin evaluator with the
/// pole already removed, so ξ is finite at s = 0 and s = 1. Within the pole
/// guard of a trivial zero −2, −4, … the value is taken from ξ(1 − s).
pub fn xi(s: ComplexPoint, policy: &PrecisionPolicy) -> Result<Complex64> {
    let z = s.as_complex();
    let half = z / 2.0 + 1.0;
    if let Some((_, d)) = pole_distance(half) {
        if d <= policy.pole_guard_radius / 2.0 {
            return xi(s.reflect(), policy);
        }
    }
    let log_factor = -(z / 2.0) * PI.ln() + log_gamma_complex(half)?;
    let zs1 = if (z - 1.0).norm() < 0.5 {
        zeta_times_s_minus_one(z, policy)?.value
    } else {
        (z - 1.0) * zeta(s, policy)?.value
    };
    let value = log_factor.exp() * zs1;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Overflow(format!("xi({s})")));
    }
    Ok(value)
}

/// Complex-in, complex-out ξ for use as a function handle.
pub fn xi_value(z: Complex64, policy: &PrecisionPolicy) -> Result<Complex64> {
    xi(ComplexPoint::from_complex(z)?, policy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(sigma: f64, t: f64) -> ComplexPoint {
        ComplexPoint::new(sigma, t).unwrap()
    }

    #[test]
    fn weierstrass_known_values() {
        let pol = PrecisionPolicy::default();
        let g1 = gamma_weierstrass(p(1.0, 0.0), &pol).unwrap();
        assert!((g1.value() - 1.0).norm() < 1e-13);
        let gh = gamma_weierstrass(p(0.5, 0.0), &pol).unwrap();
        assert!((gh.value().re - PI.sqrt()).abs() < 1e-12);
        assert!(matches!(gamma_weierstrass(p(-1.0, 0.0), &pol), Err(Error::Pole { .. })));
        assert!(matches!(gamma_weierstrass(p(0.0, 0.0), &pol), Err(Error::Pole { .. })));
    }

    #[test]
    fn stirling_known_values() {
        assert!((log_gamma(p(5.0, 0.0)).unwrap() - Complex64::new(24f64.ln(), 0.0)).norm() < 1e-14);
        assert!(log_gamma(p(2.0, 0.0)).unwrap().norm() < 1e-14);
        assert!(log_gamma(p(1.0, 0.0)).unwrap().norm() < 1e-14);
        assert!(matches!(log_gamma(p(-3.0, 0.0)), Err(Error::Pole { .. })));
        // Gamma(-1/2) = -2 sqrt(pi)
        let v = log_gamma(p(-0.5, 0.0)).unwrap().exp();
        assert!((v.re + 2.0 * PI.sqrt()).abs() < 1e-13 && v.im.abs() < 1e-13);
    }

    #[test]
    fn two_routes_agree() {
        let pol = PrecisionPolicy::default();
        for &(sg, t) in &[(0.5, 10.0), (0.25, -3.0), (-2.5, 1.0), (7.0, 20.0), (-0.3, -15.0)] {
            let a = gamma_weierstrass(p(sg, t), &pol).unwrap().log_value;
            let b = log_gamma(p(sg, t)).unwrap();
            // same branch, not just same value mod 2 pi i
            assert!((a - b).norm() < 1e-9, "s={sg}+{t}i {a} {b}");
        }
    }

    #[test]
    fn log_gamma_branch_is_continuous_in_upper_half_plane() {
        let mut prev = log_gamma(p(-20.0, 0.5)).unwrap();
        let mut x = -20.0;
        while x < 20.0 {
            x += 0.01;
            let cur = log_gamma(p(x, 0.5)).unwrap();
            assert!((cur.im - prev.im).abs() < 0.1, "jump at {x}");
            prev = cur;
        }
    }

    #[test]
    fn xi_special_points() {
        let pol = PrecisionPolicy::default();
        let x0 = xi(p(0.0, 0.0), &pol).unwrap();
        let x1 = xi(p(1.0, 0.0), &pol).unwrap();
        assert!((x0 - Complex64::new(0.5, 0.0)).norm() < 1e-13);
        assert!((x1 - Complex64::new(0.5, 0.0)).norm() < 1e-13);
        let a = xi(p(0.3, 5.0), &pol).unwrap();
        let b = xi(p(0.7, -5.0), &pol).unwrap();
        assert!((a - b).norm() <= 1e-9 * a.norm());
        let c = xi(p(0.5, 14.0), &pol).unwrap();
        assert!(c.im.abs() <= 1e-9 * c.norm());
        // near a trivial zero of zeta, xi stays finite and positive
        let t = xi(p(-2.0, 0.0), &pol).unwrap();
        let r = xi(p(3.0, 0.0), &pol).unwrap();
        assert!((t - r).norm() < 1e-12 * r.norm());
    }
}
