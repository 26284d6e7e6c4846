//! Even-index Bernoulli coefficients, built once and shared read-only.

use std::f64::consts::PI;
use std::sync::OnceLock;

/// Highest k for which B_{2k}/(2k)! is tabulated.
pub const MAX_K: usize = 80;

// B_2 .. B_20 as exact rationals.
const SMALL: [(f64, f64); 10] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
];

struct Tables {
    /// b2k_over_fact[k] = B_{2k} / (2k)!, index 0 unused.
    over_factorial: [f64; MAX_K + 1],
    /// stirling[k] = B_{2k} / (2k (2k-1)), index 0 unused.
    stirling: [f64; MAX_K + 1],
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut over_factorial = [0.0; MAX_K + 1];
        let mut stirling = [0.0; MAX_K + 1];
        let mut fact = 1.0_f64;
        for k in 1..=MAX_K {
            let n = 2 * k;
            fact *= ((n - 1) * n) as f64;
            let b = if k <= SMALL.len() {
                let (num, den) = SMALL[k - 1];
                num / den
            } else {
                // B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}; zeta(2k) - 1 < 2^{-21} here
                let zeta2k: f64 = (1..=40).rev().map(|j| (j as f64).powi(-(n as i32))).sum();
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                sign * 2.0 * fact * zeta2k / (2.0 * PI).powi(n as i32)
            };
            over_factorial[k] = b / fact;
            stirling[k] = b / ((n * (n - 1)) as f64);
        }
        Tables {
            over_factorial,
            stirling,
        }
    })
}

/// B_{2k} / (2k)!
pub fn b2k_over_factorial(k: usize) -> f64 {
    tables().over_factorial[k]
}

/// B_{2k} / (2k (2k-1)), the Stirling-series coefficients.
pub fn stirling_coefficient(k: usize) -> f64 {
    tables().stirling[k]
}
