//! Elementary surrogates for ζ and Γ built from quartics of exponentials.
//!
//! With u = B^{−iC(s−1/2)/4}, v = 1/u the pseudo zeta function is
//! A(s) = ((u+v)⁴ + (u−v)⁴)/8, and with a = R^{(s−1/2)/8}, b = 1/a the pseudo
//! Gamma function is ∇(s) = ((a+b)⁴ + (a−b)⁴)/8. Since
//! (1+z)⁴ + (1−z)⁴ = 2(1 + 6z² + z⁴) both collapse to (w + 6 + 1/w)/4 with
//! w = u⁴ or a⁴. Every value is computed both ways and the two must agree.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::zeta;
use crate::gamma_xi::log_gamma_complex;
use crate::geometry::{Disk, Rectangle};
use crate::lemma::CheckReport;
use crate::types::{ComplexPoint, PrecisionPolicy};

/// Largest exponent accepted before exp would leave the double range.
pub const MAX_EXPONENT: f64 = 700.0;

/// Agreement required between the direct and expanded quartic, relative to
/// the size of the two quartic terms.
pub const DUAL_PATH_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PseudoParams {
    #[serde(rename = "B")]
    pub b: f64,
    #[serde(rename = "C")]
    pub c: f64,
    #[serde(rename = "R")]
    pub r: f64,
    #[serde(rename = "Y")]
    pub y: f64,
    pub delta: f64,
}

impl PseudoParams {
    pub fn new(b: f64, c: f64, r: f64, y: f64, delta: f64) -> Result<Self> {
        let ok = b > 1.0 && c > 0.0 && r > 1.0 && y > 0.0 && delta > 0.0;
        let finite = [b, c, r, y, delta].iter().all(|x| x.is_finite());
        if !ok || !finite {
            return Err(Error::Domain(format!(
                "need B > 1, C > 0, R > 1, Y > 0, delta > 0; got B={b} C={c} R={r} Y={y} delta={delta}"
            )));
        }
        Ok(Self { b, c, r, y, delta })
    }

    pub fn with_b(self, b: f64) -> Result<Self> {
        Self::new(b, self.c, self.r, self.y, self.delta)
    }

    pub fn with_r(self, r: f64) -> Result<Self> {
        Self::new(self.b, self.c, r, self.y, self.delta)
    }

    /// C log B, the rate at which |A| grows with t.
    pub fn growth_rate(&self) -> f64 {
        self.c * self.b.ln()
    }

    /// Height t = 2/(C log B) separating the bounded regime from the
    /// exponentially growing one.
    pub fn case_boundary_t(&self) -> f64 {
        2.0 / self.growth_rate()
    }
}

/// B = 9Y/5, C = (5δ log Y + log 9 − log 5)/(9Y), R = Y.
pub fn params_from_height(y: f64, delta: f64) -> Result<PseudoParams> {
    if !(y >= 10.0 && y.is_finite()) {
        return Err(Error::Domain(format!("Y must be at least 10, got {y}")));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::Domain(format!("delta must lie in (0, 1), got {delta}")));
    }
    let c = (5.0 * delta * y.ln() + 9f64.ln() - 5f64.ln()) / (9.0 * y);
    PseudoParams::new(9.0 * y / 5.0, c, y, y, delta)
}

/// Both evaluations of one quartic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DualValue {
    #[serde(with = "crate::json::complex")]
    pub direct: Complex64,
    #[serde(with = "crate::json::complex")]
    pub expanded: Complex64,
    /// (|u+v|⁴ + |u−v|⁴)/8, the size of the terms being combined.
    pub scale: f64,
    pub rel_defect: f64,
}

/// ((u+v)⁴ + (u−v)⁴)/8 and (w + 6 + 1/w)/4 for u = exp(x/4), w = exp(x).
fn quartic_pair(x: Complex64, what: &str) -> Result<DualValue> {
    if x.re.abs() > MAX_EXPONENT {
        return Err(Error::Overflow(format!(
            "{what}: exponent {} beyond {MAX_EXPONENT}",
            x.re
        )));
    }
    let u = (x / 4.0).exp();
    let v = (-x / 4.0).exp();
    let p = (u + v).powi(4);
    let m = (u - v).powi(4);
    let direct = (p + m) / 8.0;
    let w = x.exp();
    let expanded = (w + 6.0 + w.inv()) / 4.0;
    let scale = (p.norm() + m.norm()) / 8.0;
    Ok(DualValue {
        direct,
        expanded,
        scale,
        rel_defect: (direct - expanded).norm() / scale,
    })
}

fn agreed(d: DualValue, what: &str) -> Result<Complex64> {
    if !(d.rel_defect <= DUAL_PATH_TOL) {
        return Err(Error::Numerical(format!(
            "{what}: direct and expanded quartic differ by {:e} relative",
            d.rel_defect
        )));
    }
    Ok(d.direct)
}

pub fn pseudo_zeta_dual(s: ComplexPoint, p: &PseudoParams) -> Result<DualValue> {
    let x = Complex64::new(0.0, -1.0) * (s.as_complex() - 0.5) * p.growth_rate();
    quartic_pair(x, "pseudo zeta")
}

/// A(s); fails if the two evaluation paths disagree.
pub fn pseudo_zeta(s: ComplexPoint, p: &PseudoParams) -> Result<Complex64> {
    agreed(pseudo_zeta_dual(s, p)?, "pseudo zeta")
}

pub fn pseudo_gamma_dual(s: ComplexPoint, p: &PseudoParams) -> Result<DualValue> {
    let x = (s.as_complex() - 0.5) * (p.r.ln() / 2.0);
    quartic_pair(x, "pseudo gamma")
}

/// ∇(s); fails if the two evaluation paths disagree.
pub fn pseudo_gamma(s: ComplexPoint, p: &PseudoParams) -> Result<Complex64> {
    agreed(pseudo_gamma_dual(s, p)?, "pseudo gamma")
}

/// Supremum of a ratio over a sampled region.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub sup: f64,
    pub argmax_sigma: f64,
    pub argmax_t: f64,
    /// Grid spacing; for circle probes the spacing in angle.
    pub grid_step: f64,
    pub params: PseudoParams,
    pub case_boundary_t: f64,
    /// Smallest |A| or |∇| seen on the grid.
    pub min_abs_pseudo: f64,
    /// Smallest |A| among grid points with t below the case boundary.
    pub min_abs_pseudo_case1: Option<f64>,
    pub points: usize,
    /// Points dropped for lying within the pole guard of s = 1.
    pub skipped: usize,
}

/// lo, lo + step, … up to hi, with hi itself always included.
pub fn axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    let mut out: Vec<f64> = (0..=n).map(|i| lo + i as f64 * step).collect();
    if let Some(&last) = out.last() {
        if hi - last > 1e-9 * step {
            out.push(hi);
        }
    }
    out
}

struct Sample {
    s: Complex64,
    ratio: f64,
    pseudo_abs: f64,
}

fn summarize(samples: Vec<Option<Sample>>, p: &PseudoParams, grid_step: f64) -> Result<ProbeReport> {
    let boundary = p.case_boundary_t();
    let skipped = samples.iter().filter(|x| x.is_none()).count();
    let kept: Vec<Sample> = samples.into_iter().flatten().collect();
    let first = kept
        .first()
        .ok_or_else(|| Error::Domain("probe region has no admissible grid points".into()))?;
    let mut best = (first.ratio, first.s);
    let mut min_abs = f64::INFINITY;
    let mut min_case1: Option<f64> = None;
    for x in &kept {
        if x.ratio > best.0 {
            best = (x.ratio, x.s);
        }
        min_abs = min_abs.min(x.pseudo_abs);
        if x.s.im.abs() < boundary {
            min_case1 = Some(min_case1.map_or(x.pseudo_abs, |m| m.min(x.pseudo_abs)));
        }
    }
    Ok(ProbeReport {
        sup: best.0,
        argmax_sigma: best.1.re,
        argmax_t: best.1.im,
        grid_step,
        params: *p,
        case_boundary_t: boundary,
        min_abs_pseudo: min_abs,
        min_abs_pseudo_case1: min_case1,
        points: kept.len(),
        skipped,
    })
}

/// sup |ζ(s)/A(s)| over a grid on `region`, which must lie in σ ≥ 1/2.
/// Grid points within the pole guard of s = 1 are skipped and counted.
pub fn ratio_probe_zeta(
    region: &Rectangle,
    p: &PseudoParams,
    grid_step: f64,
    policy: &PrecisionPolicy,
) -> Result<ProbeReport> {
    if region.sigma_min < 0.5 {
        return Err(Error::Domain(format!(
            "probe region must lie in sigma >= 1/2, got sigma_min={}",
            region.sigma_min
        )));
    }
    if !(grid_step > 0.0 && grid_step.is_finite()) {
        return Err(Error::Domain(format!("grid_step must be positive, got {grid_step}")));
    }
    let sig = axis(region.sigma_min, region.sigma_max, grid_step);
    let ts = axis(region.t_min, region.t_max, grid_step);
    let samples: Vec<Option<Sample>> = (0..sig.len() * ts.len())
        .into_par_iter()
        .map(|idx| {
            let s = Complex64::new(sig[idx % sig.len()], ts[idx / sig.len()]);
            if (s - 1.0).norm() <= policy.pole_guard_radius {
                return Ok(None);
            }
            let pt = ComplexPoint::from_complex(s)?;
            let a = pseudo_zeta(pt, p)?;
            let z = zeta(pt, policy)?.value;
            Ok(Some(Sample {
                s,
                ratio: z.norm() / a.norm(),
                pseudo_abs: a.norm(),
            }))
        })
        .collect::<Result<_>>()?;
    summarize(samples, p, grid_step)
}

/// sup |Γ(s/2)/∇(s)| over `n_samples` points of the circle bounding
/// `circle`. A zero radius probes the center alone.
pub fn ratio_probe_gamma(
    circle: &Disk,
    p: &PseudoParams,
    n_samples: usize,
    policy: &PrecisionPolicy,
) -> Result<ProbeReport> {
    let c = circle.center.as_complex();
    let rad = circle.radius;
    // poles of Γ(s/2) at s = 0, −2, −4, …
    let mut k = 0.0;
    while -2.0 * k >= c.re - rad - policy.pole_guard_radius {
        let pole = Complex64::new(-2.0 * k, 0.0);
        if ((pole - c).norm() - rad).abs() <= policy.pole_guard_radius {
            return Err(Error::pole(pole));
        }
        k += 1.0;
    }
    let n = if rad == 0.0 { 1 } else { n_samples.max(1) };
    let samples: Vec<Option<Sample>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let s = circle.point_at(TAU * j as f64 / n as f64);
            let pt = ComplexPoint::from_complex(s)?;
            let nabla = pseudo_gamma(pt, p)?;
            let lg = log_gamma_complex(s / 2.0)?;
            Ok(Some(Sample {
                s,
                ratio: lg.re.exp() / nabla.norm(),
                pseudo_abs: nabla.norm(),
            }))
        })
        .collect::<Result<_>>()?;
    summarize(samples, p, if rad == 0.0 { 0.0 } else { 2.0 * PI / n as f64 })
}

/// |A(s)| ≥ B^{Ct}/6 over a grid on `region`, meant for heights above the
/// case boundary. Reports the worst point: lhs = B^{Ct}/6, rhs = |A|.
pub fn case2_growth_check(region: &Rectangle, p: &PseudoParams, grid_step: f64) -> Result<CheckReport> {
    if !(grid_step > 0.0 && grid_step.is_finite()) {
        return Err(Error::Domain(format!("grid_step must be positive, got {grid_step}")));
    }
    let sig = axis(region.sigma_min, region.sigma_max, grid_step);
    let ts = axis(region.t_min, region.t_max, grid_step);
    let vals: Vec<(f64, f64, Complex64)> = (0..sig.len() * ts.len())
        .into_par_iter()
        .map(|idx| {
            let s = Complex64::new(sig[idx % sig.len()], ts[idx / sig.len()]);
            let a = pseudo_zeta(ComplexPoint::from_complex(s)?, p)?;
            let bound = (p.growth_rate() * s.im).exp() / 6.0;
            Ok((bound, a.norm(), s))
        })
        .collect::<Result<_>>()?;
    let mut worst = vals[0];
    for v in &vals {
        if v.0 / v.1 > worst.0 / worst.1 {
            worst = *v;
        }
    }
    Ok(CheckReport::new(worst.0, worst.1, ComplexPoint::from_complex(worst.2)?))
}
