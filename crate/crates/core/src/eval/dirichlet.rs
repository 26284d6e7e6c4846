use num_complex::Complex64;

use super::{EvalResult, Method};
use crate::cmath::EPS;
use crate::error::{Error, Result};
use crate::sum::ComplexSum;
use crate::types::{ComplexPoint, PrecisionPolicy};

/// max |B̃₃(x)| / 3! over one period.
const B3_PERIODIC_MAX: f64 = 0.048_112_522_432_468_816 / 6.0;

/// Bound on the error of completing Σ_{n≤N} n^{−s} with
/// ∫_N^∞ x^{−s} dx − N^{−s}/2 + s N^{−s−1}/12: the periodic-Bernoulli
/// remainder ∫ |B̃₃/3!| |f‴| for f(x) = x^{−s}.
fn tail_bound(s: Complex64, n: f64) -> f64 {
    let sigma = s.re;
    let d3 = (s * (s + 1.0) * (s + 2.0)).norm();
    B3_PERIODIC_MAX * d3 * n.powf(-sigma - 2.0) / (sigma + 2.0)
}

/// ζ(s) = Σ n^{−s} for σ > 1.
///
/// The partial sum to N is completed with the integral tail N^{1−s}/(s−1)
/// and the two endpoint corrections; `err_estimate` is the remainder bound
/// for that completion plus accumulated rounding.
pub fn zeta_dirichlet(s: ComplexPoint, policy: &PrecisionPolicy) -> Result<EvalResult> {
    if s.sigma() <= 1.0 {
        return Err(Error::Domain(format!("Dirichlet series needs sigma > 1, got s={s}")));
    }
    let z = s.as_complex();
    let tol = 0.5 * policy.abs_tol;

    // smallest N meeting the tail bound, found from the leading-order estimate
    let d3 = (z * (z + 1.0) * (z + 2.0)).norm();
    let guess = (B3_PERIODIC_MAX * d3 / ((z.re + 2.0) * tol)).powf(1.0 / (z.re + 2.0));
    let mut n = guess.clamp(2.0, 1e12).ceil();
    while tail_bound(z, n) > tol {
        n = (n * 1.1).ceil();
        if n > policy.max_terms as f64 {
            break;
        }
    }
    while n > 2.0 && tail_bound(z, n - 1.0) <= tol {
        n -= 1.0;
    }
    if n > policy.max_terms as f64 {
        return Err(Error::BudgetExceeded {
            terms: policy.max_terms,
            last_error: tail_bound(z, policy.max_terms as f64),
        });
    }
    let n_terms = n as usize;

    let mut acc = ComplexSum::new();
    let mut abs_weight = 0.0;
    for k in (1..=n_terms).rev() {
        let ln_k = (k as f64).ln();
        let term = (-z * ln_k).exp();
        abs_weight += term.norm() * (4.0 + z.norm() * ln_k);
        acc.add(term);
    }
    let ln_n = n.ln();
    let end = (-z * ln_n).exp();
    let integral = end * n / (z - 1.0);
    acc.add(integral);
    acc.add(-0.5 * end);
    acc.add(z * end / (12.0 * n));
    abs_weight += integral.norm() * (4.0 + z.norm() * ln_n);

    Ok(EvalResult {
        value: acc.value(),
        err_estimate: tail_bound(z, n) + EPS * abs_weight,
        terms_used: n_terms,
        method: Method::Dirichlet,
        reflected: false,
    })
}
