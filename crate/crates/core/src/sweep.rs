//! Seeded randomized sweeps over the lemma checkers.
//!
//! Instance i of a sweep draws from ChaCha8 stream i under the sweep seed,
//! so instances are independent of scheduling and of each other.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contour::lemma21_check;
use crate::error::{Error, Result};
use crate::func::{AnalyticFn, RootPolynomial, Xi};
use crate::geometry::Segment;
use crate::lemma::{
    borel_caratheodory_check, borel_caratheodory_real_part_check, jensen_growth_check, three_circle_check, CheckReport,
    DEFAULT_SAMPLES,
};
use crate::types::{ComplexPoint, PrecisionPolicy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    BorelCaratheodory,
    BorelCaratheodoryRealPart,
    ThreeCircle,
    Jensen,
    Lemma21,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::BorelCaratheodory,
        Suite::BorelCaratheodoryRealPart,
        Suite::ThreeCircle,
        Suite::Jensen,
        Suite::Lemma21,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::BorelCaratheodory => "borel-caratheodory",
            Suite::BorelCaratheodoryRealPart => "borel-caratheodory-real-part",
            Suite::ThreeCircle => "three-circle",
            Suite::Jensen => "jensen",
            Suite::Lemma21 => "lemma21",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bc" | "borel-caratheodory" => Ok(Suite::BorelCaratheodory),
            "bc-real" | "borel-caratheodory-real-part" => Ok(Suite::BorelCaratheodoryRealPart),
            "three-circle" => Ok(Suite::ThreeCircle),
            "jensen" => Ok(Suite::Jensen),
            "lemma21" | "sign-change" => Ok(Suite::Lemma21),
            _ => Err(Error::Domain(format!("unknown suite '{s}'"))),
        }
    }
}

/// Outcome of one sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub suite: Suite,
    pub seed: u64,
    pub n: usize,
    pub violations: usize,
    pub errors: usize,
    /// Largest lhs/rhs seen; below 1 when every instance holds.
    pub max_ratio: f64,
    pub worst_index: Option<usize>,
    pub worst: Option<CheckReport>,
    pub first_error: Option<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.errors == 0
    }
}

/// The random test functions; all entire.
#[derive(Debug, Clone, PartialEq)]
pub enum TestFn {
    Poly(RootPolynomial),
    /// e^{a s} · p(s)
    ExpPoly(Complex64, RootPolynomial),
    /// e^{a s} − 1
    ExpMinusOne(Complex64),
    /// sin(a s)
    Sin(Complex64),
}

impl AnalyticFn for TestFn {
    fn eval(&self, z: Complex64) -> Result<Complex64> {
        Ok(match self {
            TestFn::Poly(p) => p.eval(z)?,
            TestFn::ExpPoly(a, p) => (a * z).exp() * p.eval(z)?,
            TestFn::ExpMinusOne(a) => crate::cmath::expm1(a * z),
            TestFn::Sin(a) => (a * z).sin(),
        })
    }
}

fn rng_for(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn disk_point<R: Rng>(rng: &mut R, center: Complex64, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    center + Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
}

fn complex_in<R: Rng>(rng: &mut R, half: f64) -> Complex64 {
    Complex64::new(rng.gen_range(-half..half), rng.gen_range(-half..half))
}

fn random_poly<R: Rng>(rng: &mut R, degree: usize, spread: f64) -> RootPolynomial {
    let roots = (0..degree)
        .map(|_| disk_point(rng, Complex64::new(0.0, 0.0), spread))
        .collect();
    let mut p = RootPolynomial::new(roots);
    p.scale = Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..std::f64::consts::TAU));
    p
}

/// f with f(0) = 0 and radii 0 < r₁ < r₀.
fn bc_instance(rng: &mut ChaCha8Rng) -> (TestFn, f64, f64) {
    let f = match rng.gen_range(0..4) {
        0 => {
            let d = rng.gen_range(0..5);
            let mut p = random_poly(rng, d, 3.0);
            p.roots.push(Complex64::new(0.0, 0.0));
            TestFn::Poly(p)
        }
        1 => {
            let d = rng.gen_range(0..3);
            let mut p = random_poly(rng, d, 2.0);
            p.roots.push(Complex64::new(0.0, 0.0));
            TestFn::ExpPoly(complex_in(rng, 2.0), p)
        }
        2 => TestFn::ExpMinusOne(complex_in(rng, 3.0)),
        _ => TestFn::Sin(complex_in(rng, 2.0)),
    };
    let r0 = rng.gen_range(0.3..3.0);
    let r1 = r0 * rng.gen_range(0.05..0.95);
    (f, r0, r1)
}

fn three_circle_instance(rng: &mut ChaCha8Rng) -> (TestFn, f64, f64, f64) {
    let f = match rng.gen_range(0..3) {
        0 => {
            let d = rng.gen_range(1..6);
            TestFn::Poly(random_poly(rng, d, 4.0))
        }
        1 => {
            let a = complex_in(rng, 2.0);
            let d = rng.gen_range(0..4);
            TestFn::ExpPoly(a, random_poly(rng, d, 3.0))
        }
        _ => TestFn::Sin(complex_in(rng, 2.0)),
    };
    let r1 = rng.gen_range(0.1..1.0);
    let r = r1 * rng.gen_range(1.05..3.0);
    let r2 = r * rng.gen_range(1.05..3.0);
    (f, r1, r, r2)
}

/// Roots kept away from z₀ and from the inner circle so the count is clean.
fn jensen_instance(rng: &mut ChaCha8Rng) -> (TestFn, ComplexPoint, f64, f64) {
    let z0 = complex_in(rng, 2.0);
    let r = rng.gen_range(0.3..2.0);
    let big_r = r * rng.gen_range(1.05..3.0);
    let degree = rng.gen_range(1..6);
    let mut roots = Vec::with_capacity(degree);
    while roots.len() < degree {
        let c = disk_point(rng, z0, 2.0 * r);
        let d = (c - z0).norm();
        if d > 0.05 && (d - r).abs() > 0.02 {
            roots.push(c);
        }
    }
    let mut p = RootPolynomial::new(roots);
    p.scale = Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..std::f64::consts::TAU));
    let f = if rng.gen_bool(0.5) {
        TestFn::Poly(p)
    } else {
        TestFn::ExpPoly(complex_in(rng, 1.0), p)
    };
    (f, ComplexPoint::from_complex(z0).expect("finite"), r, big_r)
}

/// A segment inside 3/2 ≤ σ ≤ 3, 0 ≤ t ≤ 40, of length at most 2.
pub fn lemma21_segment(rng: &mut ChaCha8Rng) -> Segment {
    loop {
        let a = Complex64::new(rng.gen_range(1.5..3.0), rng.gen_range(0.0..40.0));
        let b = a + Complex64::from_polar(rng.gen_range(0.01..2.0), rng.gen_range(0.0..std::f64::consts::TAU));
        if b.re >= 1.5 && b.re <= 3.0 && b.im >= 0.0 && b.im <= 40.0 {
            return Segment::from_complex(a, b).expect("distinct endpoints");
        }
    }
}

/// Grid spacing for counting sign changes of Re ξ in the lemma21 sweep.
pub const LEMMA21_GRID: f64 = 1e-2;

fn run_instance(suite: Suite, seed: u64, index: usize, policy: &PrecisionPolicy) -> Result<CheckReport> {
    let mut rng = rng_for(seed, index);
    let n = DEFAULT_SAMPLES;
    match suite {
        Suite::BorelCaratheodory => {
            let (f, r0, r1) = bc_instance(&mut rng);
            borel_caratheodory_check(&f, r0, r1, n, policy)
        }
        Suite::BorelCaratheodoryRealPart => {
            let (f, r0, r1) = bc_instance(&mut rng);
            borel_caratheodory_real_part_check(&f, r0, r1, n, policy)
        }
        Suite::ThreeCircle => {
            let (f, r1, r, r2) = three_circle_instance(&mut rng);
            three_circle_check(&f, r1, r, r2, n)
        }
        Suite::Jensen => {
            let (f, z0, r, big_r) = jensen_instance(&mut rng);
            jensen_growth_check(&f, z0, r, big_r, n, policy)
        }
        Suite::Lemma21 => {
            let seg = lemma21_segment(&mut rng);
            lemma21_check(&Xi(*policy), &seg, LEMMA21_GRID, policy)
        }
    }
}

/// Run `n` seeded instances of `suite`.
pub fn run_sweep(suite: Suite, seed: u64, n: usize, policy: &PrecisionPolicy) -> SweepReport {
    let results: Vec<Result<CheckReport>> = (0..n)
        .into_par_iter()
        .map(|i| run_instance(suite, seed, i, policy))
        .collect();
    let mut rep = SweepReport {
        suite,
        seed,
        n,
        violations: 0,
        errors: 0,
        max_ratio: f64::NEG_INFINITY,
        worst_index: None,
        worst: None,
        first_error: None,
    };
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(c) => {
                if !c.holds {
                    rep.violations += 1;
                }
                let ratio = c.lhs / c.rhs;
                if rep.worst.is_none() || ratio > rep.max_ratio || ratio.is_nan() {
                    rep.max_ratio = ratio;
                    rep.worst_index = Some(i);
                    rep.worst = Some(c);
                }
            }
            Err(e) => {
                rep.errors += 1;
                if rep.first_error.is_none() {
                    rep.first_error = Some(format!("instance {i}: {e}"));
                }
            }
        }
    }
    rep
}
