//! Fourier expansion coefficients.
//!
//! `a_n = (2√π/τ) · exp(-n²π²/τ²)` for `n = 0..=N`, with the expansion period
//! parameter `τ` (12 by default) and truncation order `N` (23 by default).

use std::f64::consts::PI;

use crate::error::EvalError;

pub const DEFAULT_TAU: f64 = 12.0;
pub const DEFAULT_TERMS: usize = 23;

/// Low word of π as a double-double (`PI + PI_LO` ≈ π to ~32 digits).
const PI_LO: f64 = 1.224_646_799_147_353_2e-16;

/// Immutable coefficient table shared by all evaluators.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    tau: f64,
    a: Vec<f64>,
    // n·π as an unevaluated sum hi + lo, index 0 unused.
    npi: Vec<(f64, f64)>,
}

impl CoefficientTable {
    pub fn new(tau: f64, n_terms: usize) -> Result<Self, EvalError> {
        if tau <= 0.0 || !tau.is_finite() {
            return Err(EvalError::InvalidParameter(format!(
                "tau_m must be positive and finite, got {tau}"
            )));
        }
        if n_terms < 1 {
            return Err(EvalError::InvalidParameter(format!(
                "n_terms must be at least 1, got {n_terms}"
            )));
        }

        let scale = 2.0 * PI.sqrt() / tau;
        let a: Vec<f64> = (0..=n_terms)
            .map(|n| {
                let r = n as f64 * PI / tau;
                scale * (-r * r).exp()
            })
            .collect();
        if a[n_terms] <= 0.0 {
            return Err(EvalError::InvalidParameter(format!(
                "a_{n_terms} underflows for tau_m = {tau}; reduce n_terms"
            )));
        }

        let npi = (0..=n_terms)
            .map(|n| {
                let n = n as f64;
                let hi = n * PI;
                let lo = n.mul_add(PI, -hi) + n * PI_LO;
                let s = hi + lo;
                (s, lo - (s - hi))
            })
            .collect();

        Ok(Self { tau, a, npi })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// Truncation order `N`; the table holds `N + 1` coefficients.
    pub fn n_terms(&self) -> usize {
        self.a.len() - 1
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.a
    }

    pub fn a(&self, n: usize) -> f64 {
        self.a[n]
    }

    /// `n·π` split as `(hi, lo)` with `hi = fl(n·π)`.
    pub(crate) fn n_pi(&self, n: usize) -> (f64, f64) {
        self.npi[n]
    }
}

impl Default for CoefficientTable {
    fn default() -> Self {
        Self::new(DEFAULT_TAU, DEFAULT_TERMS).expect("default parameters are valid")
    }
}

pub fn build_coefficients(tau_m: f64, n_terms: usize) -> Result<CoefficientTable, EvalError> {
    CoefficientTable::new(tau_m, n_terms)
}
