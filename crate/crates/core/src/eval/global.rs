use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::{EvalResult, Method};
use crate::cmath::{expm1, EPS};
use crate::error::{Error, Result};
use crate::sum::ComplexSum;
use crate::types::{ComplexPoint, PrecisionPolicy};

/// Number of consecutive small rows required before truncating.
const STABLE_ROWS: usize = 5;

/// Spacing of the zeros 1 + 2πik/ln 2 of 1 − 2^{1−s}.
const PREFACTOR_ZERO_SPACING: f64 = 2.0 * PI / LN_2;

/// The zero of 1 − 2^{1−s} nearest to `s`, returned as (k, zero).
pub fn prefactor_zero_near(s: Complex64) -> (i64, Complex64) {
    let k = (s.im / PREFACTOR_ZERO_SPACING).round();
    (k as i64, Complex64::new(1.0, k * PREFACTOR_ZERO_SPACING))
}

/// The globally convergent double sum.
///
/// Binomial weights C(n,k)/2^{n+1} are advanced row to row with the halved
/// Pascal recurrence, which never forms a factorial and keeps the central
/// weights away from underflow. Row sums and the outer sum are
/// Neumaier-compensated.
pub fn zeta_global(s: ComplexPoint, policy: &PrecisionPolicy) -> Result<EvalResult> {
    let z = s.as_complex();
    let (k, zero) = prefactor_zero_near(z);
    if k == 0 && z == zero {
        return Err(Error::pole(z));
    }
    if k != 0 && (z - zero).norm() <= policy.pole_guard_radius {
        return Err(Error::PrefactorSingular { re: z.re, im: z.im });
    }
    // 1 - 2^{1-s} = -(e^{(1-s) ln 2} - 1)
    let denom = -expm1((Complex64::new(1.0, 0.0) - z) * LN_2);
    let z_norm = z.norm();

    let mut powers: Vec<Complex64> = Vec::new();
    let mut power_cond: Vec<f64> = Vec::new();
    let mut weights: Vec<f64> = vec![0.5];
    let mut total = ComplexSum::new();
    let mut noise = 0.0;
    let mut small_run = 0usize;
    let mut recent: [f64; STABLE_ROWS] = [0.0; STABLE_ROWS];
    let mut rows = 0usize;

    let recent_max = loop {
        let n = rows;
        if n >= policy.max_terms {
            return Err(Error::BudgetExceeded {
                terms: rows,
                last_error: recent.iter().cloned().fold(0.0, f64::max),
            });
        }
        // (n+1)^{-s}
        let ln_k = ((n + 1) as f64).ln();
        powers.push((-z * ln_k).exp());
        power_cond.push(4.0 + z_norm * ln_k);
        if n > 0 {
            let mut prev = 0.0;
            for w in weights.iter_mut() {
                let cur = *w;
                *w = 0.5 * (cur + prev);
                prev = cur;
            }
            weights.push(0.5 * prev);
        }
        let mut row = ComplexSum::new();
        let mut row_abs = 0.0;
        for (j, ((&w, &p), &c)) in weights.iter().zip(&powers).zip(&power_cond).enumerate() {
            if w == 0.0 {
                continue;
            }
            let term = p * w;
            row_abs += term.norm() * c;
            if j % 2 == 0 {
                row.add(term);
            } else {
                row.add(-term);
            }
        }
        let row_value = row.value();
        let row_noise = EPS * row_abs;
        noise += row_noise;
        total.add(row_value);
        rows += 1;

        let mag = row_value.norm();
        recent[n % STABLE_ROWS] = mag;
        let threshold = policy.abs_tol.max(4.0 * row_noise);
        if mag < threshold {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run >= STABLE_ROWS {
            break recent.iter().cloned().fold(0.0, f64::max);
        }
    };

    let eta = total.value();
    let value = eta / denom;
    let inv = 1.0 / denom.norm();
    // relative error of the computed denominator grows as 2^{1-s} approaches 1
    let denom_rel = EPS * (4.0 + z_norm * LN_2) * (denom.norm() + 1.0) / denom.norm();
    let err = inv * (2.0 * recent_max + noise) + value.norm() * denom_rel;

    Ok(EvalResult {
        value,
        err_estimate: err,
        terms_used: rows,
        method: Method::GlobalSum,
        reflected: false,
    })
}
