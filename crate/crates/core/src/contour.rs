//! Continuous argument tracking along paths and argument-principle counting.
//!
//! The change of arg f along a path is accumulated from principal-branch
//! differences over sub-steps. A sub-step is accepted only when its own
//! difference and both halves stay within π/2 and the halves add up to the
//! whole; otherwise it is bisected. The π/2 cap leaves a factor two of room
//! below the aliasing threshold π.
//!
//! Segments are tracked in a canonical orientation, so reversing a segment
//! negates the result bit for bit. Pieces of a path are refined in parallel
//! and reduced in index order, so results do not depend on the thread count.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cmath::arg_ratio;
use crate::error::{Error, Result};
use crate::func::{AnalyticFn, Xi};
use crate::geometry::{Disk, Rectangle, Segment};
use crate::lemma::CheckReport;
use crate::types::{ComplexPoint, PrecisionPolicy};

/// Initial number of pieces each path is cut into before adaptive refinement.
pub const DEFAULT_PIECES: usize = 32;

/// Largest allowed residual between the total argument change / 2π and the
/// nearest integer.
pub const WINDING_RESIDUAL_TOL: f64 = 1e-6;

/// Minimum modulus, depth and step count accumulated while tracking.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrackStats {
    pub min_modulus: f64,
    pub max_depth: u32,
    pub steps: usize,
}

impl TrackStats {
    fn empty() -> Self {
        Self {
            min_modulus: f64::INFINITY,
            max_depth: 0,
            steps: 0,
        }
    }

    fn merge(self, other: Self) -> Self {
        Self {
            min_modulus: self.min_modulus.min(other.min_modulus),
            max_depth: self.max_depth.max(other.max_depth),
            steps: self.steps + other.steps,
        }
    }
}

/// Argument change along a path together with tracking diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArgDelta {
    pub delta: f64,
    pub stats: TrackStats,
}

/// A path parametrized over u ∈ [0, 1].
trait Path: Sync {
    fn point(&self, u: f64) -> Complex64;
}

impl Path for Segment {
    fn point(&self, u: f64) -> Complex64 {
        self.point_at(u)
    }
}

struct Arc {
    center: Complex64,
    radius: f64,
}

impl Path for Arc {
    fn point(&self, u: f64) -> Complex64 {
        // both ends map to the same point so the loop closes exactly
        let theta = if u == 1.0 { 0.0 } else { TAU * u };
        self.center + Complex64::from_polar(self.radius, theta)
    }
}

fn checked_eval<F: AnalyticFn + ?Sized>(f: &F, z: Complex64) -> Result<Complex64> {
    let v = f.eval(z)?;
    if !v.re.is_finite() || !v.im.is_finite() || v == Complex64::new(0.0, 0.0) {
        return Err(Error::zero_on_path(z));
    }
    Ok(v)
}

struct Tracker<'a, F: ?Sized, P> {
    f: &'a F,
    path: &'a P,
    abs_tol: f64,
    max_depth: u32,
}

impl<F: AnalyticFn + ?Sized, P: Path> Tracker<'_, F, P> {
    fn refine(&self, ua: f64, fa: Complex64, ub: f64, fb: Complex64, depth: u32, scale: f64) -> Result<ArgDelta> {
        let um = 0.5 * (ua + ub);
        let zm = self.path.point(um);
        let fm = checked_eval(self.f, zm)?;
        let end_max = fa.norm().max(fb.norm());
        if fm.norm() < self.abs_tol * end_max {
            return Err(Error::zero_on_path(zm));
        }
        let d = arg_ratio(fb, fa);
        let d1 = arg_ratio(fm, fa);
        let d2 = arg_ratio(fb, fm);
        let ok = d.abs() <= FRAC_PI_2 && d1.abs() <= FRAC_PI_2 && d2.abs() <= FRAC_PI_2 && (d1 + d2 - d).abs() <= 1e-9;
        if ok {
            return Ok(ArgDelta {
                delta: d1 + d2,
                stats: TrackStats {
                    min_modulus: fa.norm().min(fb.norm()).min(fm.norm()),
                    max_depth: depth,
                    steps: 1,
                },
            });
        }
        if depth >= self.max_depth {
            // fast rotation over a tiny step means a zero sits next to the path
            let low = fa.norm().min(fb.norm()).min(fm.norm());
            if low <= 1e-6 * scale {
                return Err(Error::zero_on_path(zm));
            }
            return Err(Error::DepthExceeded(depth));
        }
        let left = self.refine(ua, fa, um, fm, depth + 1, scale)?;
        let right = self.refine(um, fm, ub, fb, depth + 1, scale)?;
        Ok(ArgDelta {
            delta: left.delta + right.delta,
            stats: left.stats.merge(right.stats),
        })
    }
}

fn track_path<F: AnalyticFn + ?Sized, P: Path>(
    f: &F,
    path: &P,
    pieces: usize,
    policy: &PrecisionPolicy,
) -> Result<ArgDelta> {
    let pieces = pieces.max(1);
    let nodes: Vec<Complex64> = (0..=pieces)
        .into_par_iter()
        .map(|j| {
            let u = j as f64 / pieces as f64;
            checked_eval(f, path.point(u))
        })
        .collect::<Result<_>>()?;
    // the guard is relative so that tiny but regular values (ξ high up the
    // strip) are not mistaken for zeros
    for j in 0..=pieces {
        let left = if j > 0 { nodes[j - 1].norm() } else { 0.0 };
        let right = if j < pieces { nodes[j + 1].norm() } else { 0.0 };
        if nodes[j].norm() < policy.abs_tol * left.max(right) {
            return Err(Error::zero_on_path(path.point(j as f64 / pieces as f64)));
        }
    }
    let tracker = Tracker {
        f,
        path,
        abs_tol: policy.abs_tol,
        max_depth: policy.max_depth,
    };
    let parts: Vec<Result<ArgDelta>> = (0..pieces)
        .into_par_iter()
        .map(|j| {
            let ua = j as f64 / pieces as f64;
            let ub = (j + 1) as f64 / pieces as f64;
            let scale = nodes[j].norm().max(nodes[j + 1].norm());
            tracker.refine(ua, nodes[j], ub, nodes[j + 1], 0, scale)
        })
        .collect();
    let mut delta = 0.0;
    let mut stats = TrackStats::empty();
    for part in parts {
        let p = part?;
        delta += p.delta;
        stats = stats.merge(p.stats);
    }
    Ok(ArgDelta { delta, stats })
}

fn is_canonical(seg: &Segment) -> bool {
    let (a, b) = (seg.start, seg.end);
    (a.sigma(), a.t()) <= (b.sigma(), b.t())
}

/// Change of arg f along `seg`, with diagnostics, starting from
/// `pieces` equal pieces.
pub fn track_segment<F: AnalyticFn + ?Sized>(
    f: &F,
    seg: &Segment,
    pieces: usize,
    policy: &PrecisionPolicy,
) -> Result<ArgDelta> {
    if is_canonical(seg) {
        track_path(f, seg, pieces, policy)
    } else {
        let r = track_path(f, &seg.reversed(), pieces, policy)?;
        Ok(ArgDelta {
            delta: -r.delta,
            stats: r.stats,
        })
    }
}

/// Continuous change of arg f from `seg.start` to `seg.end`, i.e.
/// Im log f(end) − Im log f(start).
pub fn im_log_delta<F: AnalyticFn + ?Sized>(f: &F, seg: &Segment, policy: &PrecisionPolicy) -> Result<f64> {
    Ok(track_segment(f, seg, DEFAULT_PIECES, policy)?.delta)
}

/// Argument change once around the circle, counterclockwise from angle 0.
pub fn track_circle<F: AnalyticFn + ?Sized>(
    f: &F,
    disk: &Disk,
    pieces: usize,
    policy: &PrecisionPolicy,
) -> Result<ArgDelta> {
    let arc = Arc {
        center: disk.center.as_complex(),
        radius: disk.radius,
    };
    track_path(f, &arc, pieces, policy)
}

/// Zero count from a total argument change and diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WindingReport {
    pub winding: i64,
    /// |total / 2π − winding| before rounding.
    pub residual: f64,
    pub total_delta: f64,
    /// Per-edge argument changes, bottom, right, top, left for rectangles.
    pub edge_deltas: Vec<f64>,
    pub min_boundary_modulus: f64,
    pub max_refinement_depth: u32,
    pub segments_evaluated: usize,
}

fn winding_from(deltas: Vec<f64>, stats: TrackStats) -> Result<WindingReport> {
    let total: f64 = deltas.iter().sum();
    let turns = total / TAU;
    let winding = turns.round();
    let residual = (turns - winding).abs();
    if residual > WINDING_RESIDUAL_TOL {
        return Err(Error::NonIntegerWinding(residual));
    }
    Ok(WindingReport {
        winding: winding as i64,
        residual,
        total_delta: total,
        edge_deltas: deltas,
        min_boundary_modulus: stats.min_modulus,
        max_refinement_depth: stats.max_depth,
        segments_evaluated: stats.steps,
    })
}

/// Number of zeros of f inside `rect`, by the argument principle.
pub fn count_zeros_rectangle<F: AnalyticFn + ?Sized>(
    f: &F,
    rect: &Rectangle,
    policy: &PrecisionPolicy,
) -> Result<WindingReport> {
    count_zeros_rectangle_with(f, rect, DEFAULT_PIECES, policy)
}

/// [`count_zeros_rectangle`] with an explicit initial subdivision per edge.
pub fn count_zeros_rectangle_with<F: AnalyticFn + ?Sized>(
    f: &F,
    rect: &Rectangle,
    pieces: usize,
    policy: &PrecisionPolicy,
) -> Result<WindingReport> {
    let mut deltas = Vec::with_capacity(4);
    let mut stats = TrackStats::empty();
    for edge in rect.edges()? {
        let d = track_segment(f, &edge, pieces, policy)?;
        deltas.push(d.delta);
        stats = stats.merge(d.stats);
    }
    winding_from(deltas, stats)
}

/// Number of zeros of f inside the circle bounding `disk`.
pub fn count_zeros_disk<F: AnalyticFn + ?Sized>(f: &F, disk: &Disk, policy: &PrecisionPolicy) -> Result<WindingReport> {
    let d = track_circle(f, disk, 2 * DEFAULT_PIECES, policy)?;
    winding_from(vec![d.delta], d.stats)
}

/// Zeros of ξ in (λ, 1) × (T − E, T + E).
pub fn density_window(lambda: f64, t: f64, e: f64, policy: &PrecisionPolicy) -> Result<WindingReport> {
    if !(lambda > 0.5 && lambda < 1.0) {
        return Err(Error::Domain(format!("lambda must lie in (1/2, 1), got {lambda}")));
    }
    if !(e > 0.0) || !(t - e > 0.0) || !t.is_finite() || !e.is_finite() {
        return Err(Error::Domain(format!("need E > 0 and T - E > 0, got T={t}, E={e}")));
    }
    let rect = Rectangle::new(lambda, 1.0, t - e, t + e)?;
    count_zeros_rectangle(&Xi(*policy), &rect, policy)
}

/// Points where Re f changes sign along `seg`, bracketed on a grid of
/// spacing `grid_step` and bisected to width 10⁻⁹.
pub fn sign_changes<F: AnalyticFn + ?Sized>(f: &F, seg: &Segment, grid_step: f64) -> Result<Vec<ComplexPoint>> {
    if !(grid_step > 0.0 && grid_step.is_finite()) {
        return Err(Error::Domain(format!("grid_step must be positive, got {grid_step}")));
    }
    let len = seg.length();
    let n = ((len / grid_step).ceil() as usize).max(1);
    let re: Vec<f64> = (0..=n)
        .into_par_iter()
        .map(|j| {
            let z = seg.point_at(j as f64 / n as f64);
            checked_eval(f, z).map(|v| v.re)
        })
        .collect::<Result<_>>()?;
    let width = 1e-9 / len;
    let mut out = Vec::new();
    for j in 0..n {
        let (ra, rb) = (re[j], re[j + 1]);
        if (ra < 0.0) == (rb < 0.0) {
            continue;
        }
        let (mut a, mut b) = (j as f64 / n as f64, (j + 1) as f64 / n as f64);
        let neg_a = ra < 0.0;
        while b - a > width {
            let m = 0.5 * (a + b);
            if m <= a || m >= b {
                break;
            }
            let v = checked_eval(f, seg.point_at(m))?.re;
            if (v < 0.0) == neg_a {
                a = m;
            } else {
                b = m;
            }
        }
        out.push(ComplexPoint::from_complex(seg.point_at(0.5 * (a + b)))?);
    }
    Ok(out)
}

/// Number of sign changes of Re f along `seg`.
pub fn sign_change_count<F: AnalyticFn + ?Sized>(f: &F, seg: &Segment, grid_step: f64) -> Result<usize> {
    Ok(sign_changes(f, seg, grid_step)?.len())
}

/// |Δ arg f| ≤ (m + 1)π along a segment where Re f changes sign m times.
pub fn lemma21_check<F: AnalyticFn + ?Sized>(
    f: &F,
    seg: &Segment,
    grid_step: f64,
    policy: &PrecisionPolicy,
) -> Result<CheckReport> {
    let delta = im_log_delta(f, seg, policy)?;
    let m = sign_change_count(f, seg, grid_step)?;
    let mid = ComplexPoint::from_complex(seg.point_at(0.5))?;
    Ok(CheckReport::new(delta.abs(), (m as f64 + 1.0) * PI, mid))
}

/// A zero located by recursive winding subdivision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocatedZero {
    pub point: ComplexPoint,
    pub multiplicity: u32,
}

const SPLIT_FRACTIONS: [f64; 7] = [0.5, 0.45, 0.55, 0.4, 0.6, 0.37, 0.63];

/// Newton iteration with a central-difference derivative.
pub fn newton_refine<F: AnalyticFn + ?Sized>(f: &F, start: Complex64) -> Result<Complex64> {
    let mut z = start;
    for _ in 0..60 {
        let v = f.eval(z)?;
        if v == Complex64::new(0.0, 0.0) {
            return Ok(z);
        }
        let h = 1e-6 * z.norm().max(1.0);
        let dp = f.eval(z + h)?;
        let dm = f.eval(z - h)?;
        let deriv = (dp - dm) / (2.0 * h);
        if deriv.norm() == 0.0 || !deriv.re.is_finite() {
            return Err(Error::Numerical(format!("flat Newton step at {z}")));
        }
        let step = v / deriv;
        z -= step;
        if step.norm() <= 1e-14 * z.norm().max(1.0) {
            return Ok(z);
        }
    }
    Ok(z)
}

/// All zeros of f inside `rect`, located by recursive subdivision with
/// winding counts and finished by Newton iteration. Clusters that stay
/// unresolved below `size_tol` are reported once with their multiplicity.
pub fn locate_zeros<F: AnalyticFn + ?Sized>(
    f: &F,
    rect: &Rectangle,
    size_tol: f64,
    policy: &PrecisionPolicy,
) -> Result<Vec<LocatedZero>> {
    let count = count_zeros_rectangle(f, rect, policy)?.winding;
    let mut out = Vec::new();
    locate_into(f, rect, count, size_tol, policy, &mut out)?;
    Ok(out)
}

fn locate_into<F: AnalyticFn + ?Sized>(
    f: &F,
    rect: &Rectangle,
    count: i64,
    size_tol: f64,
    policy: &PrecisionPolicy,
    out: &mut Vec<LocatedZero>,
) -> Result<()> {
    if count <= 0 {
        return Ok(());
    }
    let side = rect.width().max(rect.height());
    if count == 1 && side <= 0.25 {
        if let Ok(z) = newton_refine(f, rect.center()) {
            if rect.contains(z) {
                out.push(LocatedZero {
                    point: ComplexPoint::from_complex(z)?,
                    multiplicity: 1,
                });
                return Ok(());
            }
        }
    }
    if side <= size_tol {
        out.push(LocatedZero {
            point: ComplexPoint::from_complex(rect.center())?,
            multiplicity: count as u32,
        });
        return Ok(());
    }
    let mut last_err = None;
    for frac in SPLIT_FRACTIONS {
        let halves = if rect.width() >= rect.height() {
            rect.split_at_sigma(rect.sigma_min + frac * rect.width())?
        } else {
            rect.split_at_t(rect.t_min + frac * rect.height())?
        };
        let first = match count_zeros_rectangle(f, &halves.0, policy) {
            Ok(r) => r.winding,
            Err(e @ (Error::ZeroOnPath { .. } | Error::DepthExceeded(_))) => {
                last_err = Some(e);
                continue;
            }
            Err(e) => return Err(e),
        };
        let rest = count - first;
        locate_into(f, &halves.0, first, size_tol, policy, out)?;
        locate_into(f, &halves.1, rest, size_tol, policy, out)?;
        return Ok(());
    }
    Err(last_err.unwrap_or_else(|| Error::Numerical("no clean split".into())))
}
