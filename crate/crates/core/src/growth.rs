//! Grid measurements of how fast |ζ(σ + it)| grows with t.
//!
//! Every number here is measured on a grid; none is a rigorous supremum.

use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::zeta;
use crate::pseudo::axis;
use crate::types::{ComplexPoint, PrecisionPolicy};

/// Largest height the probes accept.
pub const T_CAP: f64 = 500.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrowthSample {
    pub t: f64,
    pub sigma: f64,
    #[serde(with = "crate::json::complex")]
    pub value: Complex64,
    pub log_abs_zeta: f64,
    /// log|ζ| / log t.
    pub ratio: f64,
}

fn check_range(t_min: f64, t_max: f64, step: f64) -> Result<()> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::Domain(format!("step must be positive, got {step}")));
    }
    if !(t_min <= t_max) {
        return Err(Error::Domain(format!("need t_min <= t_max, got [{t_min}, {t_max}]")));
    }
    if !(t_min >= 3.0 && t_max <= T_CAP) {
        return Err(Error::Domain(format!(
            "t range must lie in [3, {T_CAP}], got [{t_min}, {t_max}]"
        )));
    }
    Ok(())
}

/// Samples of ζ(σ + it) at t = t_min, t_min + step, … and t_max, in
/// ascending t. An empty range gives no samples.
pub fn scan_line(sigma: f64, t_min: f64, t_max: f64, step: f64, policy: &PrecisionPolicy) -> Result<Vec<GrowthSample>> {
    check_range(t_min, t_max, step)?;
    if t_min == t_max {
        return Ok(Vec::new());
    }
    let ts = axis(t_min, t_max, step);
    ts.par_iter()
        .map(|&t| {
            let v = zeta(ComplexPoint::new(sigma, t)?, policy)?.value;
            let log_abs = v.norm().ln();
            Ok(GrowthSample {
                t,
                sigma,
                value: v,
                log_abs_zeta: log_abs,
                ratio: log_abs / t.ln(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MuEstimate {
    pub sigma: f64,
    pub sup_ratio: f64,
    pub argmax_t: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub step: f64,
    /// max |ζ| / t^{(1−σ)/2} over the grid, reported for 0 < σ ≤ 1.
    pub fitted_c: Option<f64>,
    /// Least-squares slope of log|ζ| against log t.
    pub fitted_exponent: Option<f64>,
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len() as f64;
    if xs.len() < 2 {
        return None;
    }
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Grid estimate of μ(σ) as the largest log|ζ|/log t on the scan.
pub fn mu_estimate(sigma: f64, t_min: f64, t_max: f64, step: f64, policy: &PrecisionPolicy) -> Result<MuEstimate> {
    let samples = scan_line(sigma, t_min, t_max, step, policy)?;
    let first = samples
        .first()
        .ok_or_else(|| Error::Domain("mu_estimate needs a non-empty t range".into()))?;
    let mut best = (first.ratio, first.t);
    for s in &samples {
        if s.ratio > best.0 {
            best = (s.ratio, s.t);
        }
    }
    let fitted_c = (sigma > 0.0 && sigma <= 1.0).then(|| {
        samples
            .iter()
            .map(|s| s.log_abs_zeta - 0.5 * (1.0 - sigma) * s.t.ln())
            .fold(f64::NEG_INFINITY, f64::max)
            .exp()
    });
    let xs: Vec<f64> = samples.iter().map(|s| s.t.ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.log_abs_zeta).collect();
    Ok(MuEstimate {
        sigma,
        sup_ratio: best.0,
        argmax_t: best.1,
        t_min,
        t_max,
        step,
        fitted_c,
        fitted_exponent: least_squares_slope(&xs, &ys),
    })
}

/// Smallest constants that make the two growth bounds hold on the grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub delta: f64,
    pub t_max: f64,
    /// max |ζ(σ+it)| / t^{(1−δ)/2} over δ ≤ σ ≤ 1, 3 ≤ t ≤ t_max.
    pub c: f64,
    pub c_witness: ComplexPoint,
    /// max |ζ(σ+it)| / log t over the rows σ > 1.
    pub c_prime: f64,
    pub c_prime_witness: ComplexPoint,
    pub sigma_rows_above_one: Vec<f64>,
    pub sigma_step: f64,
    pub t_step: f64,
    /// Both constants came out finite.
    pub holds: bool,
}

/// Rows σ > 1 used for the log t bound.
pub const ROWS_ABOVE_ONE: [f64; 3] = [1.1, 1.5, 2.0];

fn grid_max<W>(sigmas: &[f64], ts: &[f64], weight: W, policy: &PrecisionPolicy) -> Result<(f64, ComplexPoint)>
where
    W: Fn(f64, f64) -> f64 + Sync,
{
    let vals: Vec<(f64, ComplexPoint)> = (0..sigmas.len() * ts.len())
        .into_par_iter()
        .map(|idx| {
            let s = ComplexPoint::new(sigmas[idx % sigmas.len()], ts[idx / sigmas.len()])?;
            let v = zeta(s, policy)?.value.norm();
            Ok((v / weight(s.sigma(), s.t()), s))
        })
        .collect::<Result<_>>()?;
    let mut best = vals[0];
    for v in &vals {
        if v.0 > best.0 {
            best = *v;
        }
    }
    Ok(best)
}

/// Measures c with |ζ| ≤ c t^{(1−δ)/2} on δ ≤ σ ≤ 1 and c' with
/// |ζ| ≤ c' log t for σ > 1, over 3 ≤ t ≤ t_max.
pub fn bound_check_zetaupd(delta: f64, t_max: f64, policy: &PrecisionPolicy) -> Result<BoundReport> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::Domain(format!("delta must lie in (0, 1), got {delta}")));
    }
    if !(3.0..=T_CAP).contains(&t_max) {
        return Err(Error::Domain(format!("t_max must lie in [3, {T_CAP}], got {t_max}")));
    }
    let sigma_step = 0.05;
    let t_step = 0.1;
    let sigmas = axis(delta, 1.0, sigma_step);
    let ts = axis(3.0, t_max, t_step);
    let expo = 0.5 * (1.0 - delta);
    let (c, c_witness) = grid_max(&sigmas, &ts, |_, t| t.powf(expo), policy)?;
    let (c_prime, c_prime_witness) = grid_max(&ROWS_ABOVE_ONE, &ts, |_, t| t.ln(), policy)?;
    Ok(BoundReport {
        delta,
        t_max,
        c,
        c_witness,
        c_prime,
        c_prime_witness,
        sigma_rows_above_one: ROWS_ABOVE_ONE.to_vec(),
        sigma_step,
        t_step,
        holds: c.is_finite() && c_prime.is_finite(),
    })
}

/// Samples as CSV: t, sigma, re_zeta, im_zeta, log_abs, ratio.
pub fn to_csv(samples: &[GrowthSample]) -> String {
    let mut out = String::from("t,sigma,re_zeta,im_zeta,log_abs,ratio\n");
    for s in samples {
        let _ = writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            s.t, s.sigma, s.value.re, s.value.im, s.log_abs_zeta, s.ratio
        );
    }
    out
}

/// log|ζ| against t as a single SVG polyline.
pub fn to_svg(samples: &[GrowthSample]) -> String {
    let (w, h, pad) = (800.0, 400.0, 20.0);
    let mut out =
        format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n");
    if !samples.is_empty() {
        let t0 = samples[0].t;
        let t1 = samples[samples.len() - 1].t;
        let finite = samples.iter().map(|s| s.log_abs_zeta).filter(|v| v.is_finite());
        let lo = finite.clone().fold(f64::INFINITY, f64::min);
        let hi = finite.fold(f64::NEG_INFINITY, f64::max);
        let tspan = if t1 > t0 { t1 - t0 } else { 1.0 };
        let yspan = if hi > lo { hi - lo } else { 1.0 };
        let mut pts = String::new();
        for s in samples.iter().filter(|s| s.log_abs_zeta.is_finite()) {
            let x = pad + (s.t - t0) / tspan * (w - 2.0 * pad);
            let y = h - pad - (s.log_abs_zeta - lo) / yspan * (h - 2.0 * pad);
            let _ = write!(pts, "{x:.3},{y:.3} ");
        }
        let _ = writeln!(
            out,
            "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"{}\"/>",
            pts.trim_end()
        );
    }
    out.push_str("</svg>\n");
    out
}
