use num_complex::Complex64;

use super::{EvalResult, Method};
use crate::bernoulli::{b2k_over_factorial, MAX_K};
use crate::cmath::EPS;
use crate::error::{Error, Result};
use crate::sum::ComplexSum;
use crate::types::{ComplexPoint, PrecisionPolicy};

struct EmParts {
    /// Σ_{n<N} n^{−s} + N^{−s}/2 + Bernoulli corrections.
    regular: Complex64,
    /// N^{1−s}, the numerator of the pole term N^{1−s}/(s−1).
    pole_numerator: Complex64,
    truncation: f64,
    rounding: f64,
    n: usize,
}

fn em_parts(z: Complex64, policy: &PrecisionPolicy) -> Result<EmParts> {
    let z_norm = z.norm();
    let mut n = ((z_norm + 30.0) / std::f64::consts::PI).ceil().max(10.0) as usize;
    loop {
        if n > policy.max_terms {
            return Err(Error::BudgetExceeded {
                terms: policy.max_terms,
                last_error: f64::INFINITY,
            });
        }
        if let Some(parts) = try_em(z, n, policy) {
            return Ok(parts);
        }
        n *= 2;
    }
}

/// One Euler–Maclaurin attempt with N terms; `None` when the Bernoulli
/// corrections start to diverge before reaching the tolerance.
fn try_em(z: Complex64, n: usize, policy: &PrecisionPolicy) -> Option<EmParts> {
    let z_norm = z.norm();
    let mut acc = ComplexSum::new();
    let mut abs_weight = 0.0;
    for k in (1..n).rev() {
        let ln_k = (k as f64).ln();
        let term = (-z * ln_k).exp();
        abs_weight += term.norm() * (4.0 + z_norm * ln_k);
        acc.add(term);
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_pow = (-z * ln_n).exp();
    acc.add(0.5 * n_pow);
    let pole_numerator = n_pow * nf;
    abs_weight += pole_numerator.norm() * (4.0 + z_norm * ln_n);

    let partial_scale = acc.value().norm().max((pole_numerator / (z - 1.0)).norm());
    let target = 0.1 * policy.abs_tol * partial_scale.max(1.0);

    // T_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    let inv_n2 = 1.0 / (nf * nf);
    let mut poch = z;
    let mut scale = n_pow / nf;
    let mut prev = f64::INFINITY;
    for k in 1..=MAX_K {
        if k > 1 {
            let a = 2.0 * k as f64 - 3.0;
            poch = poch * (z + a) * (z + a + 1.0);
            scale *= inv_n2;
        }
        let term = poch * scale * b2k_over_factorial(k);
        let mag = term.norm();
        let kk = 2.0 * k as f64 - 1.0;
        // first omitted term bound, valid for sigma > -(2k-1)
        let factor = if z.re + kk > 0.0 {
            (z + kk).norm() / (z.re + kk)
        } else {
            f64::INFINITY
        };
        if mag * factor <= target {
            return Some(EmParts {
                regular: acc.value(),
                pole_numerator,
                truncation: mag * factor,
                rounding: EPS * abs_weight,
                n,
            });
        }
        if mag > prev {
            return None;
        }
        prev = mag;
        acc.add(term);
        abs_weight += mag;
    }
    None
}

/// ζ(s) by Euler–Maclaurin summation, valid for every s ≠ 1.
pub fn zeta_euler_maclaurin(s: ComplexPoint, policy: &PrecisionPolicy) -> Result<EvalResult> {
    let z = s.as_complex();
    if z == Complex64::new(1.0, 0.0) {
        return Err(Error::pole(z));
    }
    let parts = em_parts(z, policy)?;
    let value = parts.regular + parts.pole_numerator / (z - 1.0);
    Ok(EvalResult {
        value,
        err_estimate: parts.truncation + parts.rounding / (z - 1.0).norm().min(1.0),
        terms_used: parts.n,
        method: Method::EulerMaclaurin,
        reflected: false,
    })
}

/// (s − 1)ζ(s) with the pole removed analytically; finite at s = 1 where
/// it equals 1.
pub(crate) fn zeta_times_s_minus_one(z: Complex64, policy: &PrecisionPolicy) -> Result<EvalResult> {
    let parts = em_parts(z, policy)?;
    let d = z - 1.0;
    let value = d * parts.regular + parts.pole_numerator;
    Ok(EvalResult {
        value,
        err_estimate: (parts.truncation + parts.rounding) * d.norm().max(1.0),
        terms_used: parts.n,
        method: Method::EulerMaclaurin,
        reflected: false,
    })
}
