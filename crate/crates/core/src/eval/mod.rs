//! Riemann zeta evaluation by three independent routes plus a dispatcher.
//!
//! * [`zeta_dirichlet`]: the defining series for σ > 1, with the integral
//!   tail and two endpoint corrections added back in.
//! * [`zeta_global`]: the globally convergent binomial double sum
//!   ζ(s) = (1 − 2^{1−s})^{−1} Σ_n 2^{−(n+1)} Σ_k (−1)^k C(n,k) (k+1)^{−s}.
//! * [`zeta_euler_maclaurin`]: Euler–Maclaurin continuation, used as the
//!   independent oracle for the other two.
//!
//! The prefactor 1 − 2^{1−s} vanishes at s = 1 + 2πik/ln 2 for every integer
//! k, not at s = 1 + 2πmi. [`zeta_global`] refuses points within
//! `pole_guard_radius` of the k ≠ 0 zeros and the dispatcher falls back to
//! Euler–Maclaurin there.

mod dirichlet;
mod euler_maclaurin;
mod global;

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use dirichlet::zeta_dirichlet;
pub use euler_maclaurin::zeta_euler_maclaurin;
pub(crate) use euler_maclaurin::zeta_times_s_minus_one;
pub use global::{prefactor_zero_near, zeta_global};

use crate::cmath::{self, EPS};
use crate::error::{Error, Result};
use crate::gamma_xi::log_gamma_complex;
use crate::types::{ComplexPoint, PrecisionPolicy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Dirichlet,
    GlobalSum,
    EulerMaclaurin,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Dirichlet => "dirichlet",
            Method::GlobalSum => "global_sum",
            Method::EulerMaclaurin => "euler_maclaurin",
        }
    }
}

/// A computed value with its a-posteriori error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    #[serde(with = "crate::json::complex")]
    pub value: Complex64,
    pub err_estimate: f64,
    pub terms_used: usize,
    pub method: Method,
    /// Set when the value came from ζ(1 − s) through the functional equation.
    pub reflected: bool,
}

/// Dispatching evaluator.
///
/// σ ≥ 2 uses the Dirichlet series, |t| ≤ 100 the global double sum and
/// anything else Euler–Maclaurin, which also takes over when the Dirichlet
/// budget runs out or the point sits on a prefactor zero. Points with σ < 0 are first reflected to
/// 1 − s through the functional equation; the direct routes lose every digit
/// there to cancellation between terms of size n^{|σ|}.
pub fn zeta(s: ComplexPoint, policy: &PrecisionPolicy) -> Result<EvalResult> {
    let z = s.as_complex();
    if z == Complex64::new(1.0, 0.0) {
        return Err(Error::pole(z));
    }
    if s.sigma() < 0.0 {
        return zeta_reflected(s, policy);
    }
    zeta_direct(s, policy)
}

fn zeta_direct(s: ComplexPoint, policy: &PrecisionPolicy) -> Result<EvalResult> {
    if s.sigma() >= 2.0 {
        match zeta_dirichlet(s, policy) {
            Err(Error::BudgetExceeded { .. }) => zeta_euler_maclaurin(s, policy),
            other => other,
        }
    } else if s.t().abs() <= 100.0 {
        match zeta_global(s, policy) {
            Err(Error::PrefactorSingular { .. }) => zeta_euler_maclaurin(s, policy),
            other => other,
        }
    } else {
        zeta_euler_maclaurin(s, policy)
    }
}

/// ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s).
fn zeta_reflected(s: ComplexPoint, policy: &PrecisionPolicy) -> Result<EvalResult> {
    let z = s.as_complex();
    let w = Complex64::new(1.0, 0.0) - z;
    let inner = zeta_direct(s.reflect(), policy)?;
    let lg = log_gamma_complex(w)?;
    let mut log_factor = z * LN_2 + (z - 1.0) * PI.ln() + lg;
    let factor = if z.im.abs() < 40.0 {
        log_factor.exp() * cmath::sinpi(z / 2.0)
    } else {
        log_factor += cmath::ln_sinpi(z / 2.0);
        log_factor.exp()
    };
    let value = factor * inner.value;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Overflow(format!("zeta({s}) via reflection")));
    }
    let cond = 8.0 + z.norm() * (LN_2 + PI.ln() + w.norm().ln().max(1.0)) + lg.norm();
    let err = factor.norm() * inner.err_estimate + value.norm() * EPS * cond;
    Ok(EvalResult {
        value,
        err_estimate: err,
        terms_used: inner.terms_used,
        method: inner.method,
        reflected: true,
    })
}

/// Evaluate with an explicitly chosen method.
pub fn zeta_with(method: Method, s: ComplexPoint, policy: &PrecisionPolicy) -> Result<EvalResult> {
    match method {
        Method::Dirichlet => zeta_dirichlet(s, policy),
        Method::GlobalSum => zeta_global(s, policy),
        Method::EulerMaclaurin => zeta_euler_maclaurin(s, policy),
    }
}

/// Complex-in, complex-out convenience over [`zeta`].
pub fn zeta_value(s: Complex64, policy: &PrecisionPolicy) -> Result<Complex64> {
    Ok(zeta(ComplexPoint::from_complex(s)?, policy)?.value)
}
