use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite point s = σ + it of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexPoint {
    sigma: f64,
    t: f64,
}

impl ComplexPoint {
    pub fn new(sigma: f64, t: f64) -> Result<Self> {
        if !sigma.is_finite() || !t.is_finite() {
            return Err(Error::Domain(format!("non-finite complex point ({sigma}, {t})")));
        }
        Ok(Self { sigma, t })
    }

    pub fn real(sigma: f64) -> Result<Self> {
        Self::new(sigma, 0.0)
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.sigma, self.t)
    }

    pub fn conj(&self) -> Self {
        Self {
            sigma: self.sigma,
            t: -self.t,
        }
    }

    /// The reflected point 1 − s.
    pub fn reflect(&self) -> Self {
        Self {
            sigma: 1.0 - self.sigma,
            t: -self.t,
        }
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        p.as_complex()
    }
}

impl fmt::Display for ComplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_sign_negative() {
            write!(f, "{}-{}i", self.sigma, -self.t)
        } else {
            write!(f, "{}+{}i", self.sigma, self.t)
        }
    }
}

/// Parses literals of the form `a+bi`, `a-bi`, `a`, `bi`, with optional
/// whitespace; `a` and `b` are ordinary floats (exponents allowed).
impl FromStr for ComplexPoint {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("cannot parse complex literal {input:?}"));
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let Some(body) = compact.strip_suffix('i') else {
            let re: f64 = compact.parse().map_err(|_| bad())?;
            return Self::new(re, 0.0);
        };
        // the split point is the last sign that is not the leading sign and
        // does not belong to an exponent
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
        let (re, im) = match split {
            Some(i) => {
                let re: f64 = body[..i].parse().map_err(|_| bad())?;
                let im_str = &body[i..];
                let im: f64 = match im_str {
                    "+" => 1.0,
                    "-" => -1.0,
                    s => s.parse().map_err(|_| bad())?,
                };
                (re, im)
            }
            None => {
                let im: f64 = match body {
                    "" | "+" => 1.0,
                    "-" => -1.0,
                    s => s.parse().map_err(|_| bad())?,
                };
                (0.0, im)
            }
        };
        Self::new(re, im)
    }
}

/// Tolerances and budgets shared by every evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrecisionPolicy {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_terms: usize,
    pub pole_guard_radius: f64,
    /// Bisection depth limit for argument tracking.
    pub max_depth: u32,
}

pub const MAX_TERMS_CAP: usize = 10_000_000;

impl Default for PrecisionPolicy {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_terms: 100_000,
            pole_guard_radius: 1e-3,
            max_depth: 40,
        }
    }
}

impl PrecisionPolicy {
    pub fn new(abs_tol: f64, rel_tol: f64, max_terms: usize, pole_guard_radius: f64) -> Result<Self> {
        Self {
            abs_tol,
            rel_tol,
            max_terms,
            pole_guard_radius,
            ..Self::default()
        }
        .validated()
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Result<Self> {
        self.abs_tol = abs_tol;
        self.validated()
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Result<Self> {
        self.max_terms = max_terms;
        self.validated()
    }

    pub fn validated(self) -> Result<Self> {
        let in_unit = |x: f64| x > 0.0 && x < 1.0;
        if !in_unit(self.abs_tol) || !in_unit(self.rel_tol) {
            return Err(Error::Domain("tolerances must lie in (0, 1)".into()));
        }
        if self.max_terms == 0 || self.max_terms > MAX_TERMS_CAP {
            return Err(Error::Domain(format!("max_terms must lie in [1, {MAX_TERMS_CAP}]")));
        }
        if !(self.pole_guard_radius > 0.0 && self.pole_guard_radius.is_finite()) {
            return Err(Error::Domain("pole_guard_radius must be positive".into()));
        }
        if self.max_depth == 0 {
            return Err(Error::Domain("max_depth must be at least 1".into()));
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite() {
        assert!(ComplexPoint::new(f64::NAN, 0.0).is_err());
        assert!(ComplexPoint::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn parses_literals() {
        let cases = [
            ("2+0i", (2.0, 0.0)),
            ("0.5 - 14.1347i", (0.5, -14.1347)),
            ("-2+0i", (-2.0, 0.0)),
            ("1e-3+2e+1i", (1e-3, 20.0)),
            ("-1.5e-2-3E-1i", (-1.5e-2, -0.3)),
            ("3", (3.0, 0.0)),
            ("4i", (0.0, 4.0)),
            ("-i", (0.0, -1.0)),
        ];
        for (lit, (re, im)) in cases {
            let p: ComplexPoint = lit.parse().unwrap();
            assert_eq!((p.sigma(), p.t()), (re, im), "{lit}");
        }
        for bad in ["abc", "", "1+2j", "1++2i", "nan+1i"] {
            assert!(bad.parse::<ComplexPoint>().is_err(), "{bad}");
        }
    }

    #[test]
    fn policy_validation() {
        assert!(PrecisionPolicy::default().validated().is_ok());
        assert!(PrecisionPolicy::new(0.0, 1e-10, 10, 1e-3).is_err());
        assert!(PrecisionPolicy::new(1e-12, 1.0, 10, 1e-3).is_err());
        assert!(PrecisionPolicy::new(1e-12, 1e-10, 0, 1e-3).is_err());
        assert!(PrecisionPolicy::new(1e-12, 1e-10, MAX_TERMS_CAP + 1, 1e-3).is_err());
    }
}
