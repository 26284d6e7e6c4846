//! Small complex helpers that num-complex does not provide.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

pub const EPS: f64 = f64::EPSILON;

/// e^z − 1 without cancellation for small |z|.
pub fn expm1(z: Complex64) -> Complex64 {
    let (sy, cy) = z.im.sin_cos();
    let half = (0.5 * z.im).sin();
    Complex64::new(z.re.exp_m1() * cy - 2.0 * half * half, z.re.exp() * sy)
}

/// sin(πx) for real x, exact at integers and half-integers.
pub fn sinpi_real(x: f64) -> f64 {
    let r = x - 2.0 * (0.5 * x).floor(); // r in [0, 2)
    let (r, sign) = if r >= 1.0 { (r - 1.0, -1.0) } else { (r, 1.0) };
    let v = if r == 0.0 {
        0.0
    } else if r == 0.5 {
        1.0
    } else if r < 0.25 {
        (PI * r).sin()
    } else if r < 0.75 {
        (PI * (0.5 - r)).cos()
    } else {
        (PI * (1.0 - r)).sin()
    };
    sign * v
}

pub fn cospi_real(x: f64) -> f64 {
    sinpi_real(x + 0.5)
}

/// sin(πz) with exact real-axis zeros.
pub fn sinpi(z: Complex64) -> Complex64 {
    let y = PI * z.im;
    Complex64::new(sinpi_real(z.re) * y.cosh(), cospi_real(z.re) * y.sinh())
}

/// A logarithm of sin(πz) (branch unspecified) that stays finite where
/// sin(πz) itself would overflow.
pub fn ln_sinpi(z: Complex64) -> Complex64 {
    if z.im.abs() < 20.0 {
        return sinpi(z).ln();
    }
    let i = Complex64::i();
    if z.im > 0.0 {
        // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z})
        Complex64::new(-LN_2, PI / 2.0) - i * PI * z + (Complex64::new(1.0, 0.0) - (2.0 * PI * i * z).exp()).ln()
    } else {
        Complex64::new(-LN_2, -PI / 2.0) + i * PI * z + (Complex64::new(1.0, 0.0) - (-2.0 * PI * i * z).exp()).ln()
    }
}

/// Principal argument of b/a, computed without forming the quotient's modulus.
#[inline]
pub fn arg_ratio(b: Complex64, a: Complex64) -> f64 {
    (b * a.conj()).arg()
}
