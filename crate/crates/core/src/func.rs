//! Function handles for the contour and lemma machinery.

use num_complex::Complex64;

use crate::error::Result;
use crate::eval::zeta_value;
use crate::gamma_xi::xi_value;
use crate::types::PrecisionPolicy;

/// An analytic function that can be shared across worker threads.
///
/// Any `Fn(Complex64) -> Result<Complex64> + Sync` closure qualifies.
pub trait AnalyticFn: Sync {
    fn eval(&self, z: Complex64) -> Result<Complex64>;
}

impl<F> AnalyticFn for F
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    fn eval(&self, z: Complex64) -> Result<Complex64> {
        self(z)
    }
}

/// ζ through the dispatcher.
#[derive(Debug, Clone, Copy)]
pub struct Zeta(pub PrecisionPolicy);

impl AnalyticFn for Zeta {
    fn eval(&self, z: Complex64) -> Result<Complex64> {
        zeta_value(z, &self.0)
    }
}

/// The completed function ξ.
#[derive(Debug, Clone, Copy)]
pub struct Xi(pub PrecisionPolicy);

impl AnalyticFn for Xi {
    fn eval(&self, z: Complex64) -> Result<Complex64> {
        xi_value(z, &self.0)
    }
}

/// A monic polynomial given by its roots.
#[derive(Debug, Clone, PartialEq)]
pub struct RootPolynomial {
    pub roots: Vec<Complex64>,
    pub scale: Complex64,
}

impl RootPolynomial {
    pub fn new(roots: Vec<Complex64>) -> Self {
        Self {
            roots,
            scale: Complex64::new(1.0, 0.0),
        }
    }
}

impl AnalyticFn for RootPolynomial {
    fn eval(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.roots.iter().fold(self.scale, |acc, r| acc * (z - r)))
    }
}
