use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure taxonomy shared by every evaluator and checker.
///
/// The CLI maps these onto exit codes through [`Error::exit_code`]:
/// domain-type failures exit with 2, numerical failures with 3.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole at s={re}{im:+}i")]
    Pole { re: f64, im: f64 },
    #[error("prefactor 1-2^(1-s) singular near s={re}{im:+}i")]
    PrefactorSingular { re: f64, im: f64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("infeasible geometry: {0}")]
    InfeasibleGeometry(String),
    #[error("term budget exceeded after {terms} terms (last error {last_error:e})")]
    BudgetExceeded { terms: usize, last_error: f64 },
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("zero on or too near the path at s={re}{im:+}i")]
    ZeroOnPath { re: f64, im: f64 },
    #[error("refinement depth {0} exceeded")]
    DepthExceeded(u32),
    #[error("non-integer winding: residual {0:e}")]
    NonIntegerWinding(f64),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    pub(crate) fn pole(s: Complex64) -> Self {
        Error::Pole { re: s.re, im: s.im }
    }

    pub(crate) fn zero_on_path(s: Complex64) -> Self {
        Error::ZeroOnPath { re: s.re, im: s.im }
    }

    /// True for failures caused by the caller's inputs rather than by the numerics.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::Pole { .. }
                | Error::PrefactorSingular { .. }
                | Error::Precondition(_)
                | Error::InfeasibleGeometry(_)
        )
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_domain() {
            2
        } else {
            3
        }
    }
}
