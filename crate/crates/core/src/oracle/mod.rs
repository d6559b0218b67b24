//! Arbitrary-precision reference values of `w(z)`.
//!
//! Two independent methods are used, neither sharing code with the
//! double-precision evaluators:
//!
//! - the Maclaurin series `w(z) = Σ_k (iz)^k / Γ(k/2 + 1)` ([`w_ref_series`]),
//!   exact for any `z` given enough guard digits, used for `|z| ≤ 12`;
//! - the Laplace continued fraction
//!   `w(z) = (i/√π) / (z - (1/2)/(z - 1/(z - (3/2)/(z - …))))`
//!   ([`w_ref_cf`]), used for large `|z|`.
//!
//! [`w_ref`] dispatches on `|z|` and cross-checks both methods in the annulus
//! `6 < |z| < 8` wherever the continued fraction can converge.

mod bignum;
mod cf;
mod erfc;
mod series;

use num_complex::Complex64;

pub use self::bignum::{to_f64, BigComplex};
pub use self::cf::{cf_feasible, w_ref_cf, MAX_CF_DEPTH};
pub use self::erfc::{erfc_cf, exp_ref};
pub use self::series::{w_ref_series, SERIES_RADIUS};

use crate::error::OracleError;

pub use astro_float::BigFloat;

/// Reference precision used by every verification run.
pub const DEFAULT_DIGITS: u32 = 30;

/// Smallest accepted reference precision.
pub const MIN_DIGITS: u32 = 20;

/// Below this modulus only the series is used.
pub const ANNULUS_INNER: f64 = 6.0;
/// At and above this modulus the continued fraction is preferred.
pub const ANNULUS_OUTER: f64 = 8.0;

/// How a reference value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    MaclaurinSeries,
    ContinuedFraction,
    /// Both methods ran and agreed to `digits - 2` decimal digits.
    CrossChecked,
}

/// An extended-precision value of `w(z)`.
#[derive(Debug, Clone)]
pub struct ReferenceValue {
    value: BigComplex,
    digits: u32,
    method: Method,
}

impl ReferenceValue {
    pub(crate) fn new(value: BigComplex, digits: u32, method: Method) -> Self {
        Self {
            value,
            digits,
            method,
        }
    }

    pub fn value(&self) -> &BigComplex {
        &self.value
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// The value correctly rounded to double, component by component.
    pub fn to_c64(&self) -> Complex64 {
        self.value.to_c64()
    }

    /// `|self - other| / |other|`, computed at the larger of the two precisions.
    pub fn rel_diff(&self, other: &ReferenceValue) -> f64 {
        let p = bignum::bits_for_digits(self.digits.max(other.digits) + 10);
        self.value.rel_diff(&other.value, p)
    }
}

pub(crate) fn check_digits(digits: u32) -> Result<(), OracleError> {
    if digits < MIN_DIGITS {
        Err(OracleError::InvalidDigits(digits))
    } else {
        Ok(())
    }
}

pub(crate) fn check_input(z: Complex64) -> Result<(), OracleError> {
    if !z.re.is_finite() || !z.im.is_finite() || z.re < 0.0 || z.im < 0.0 {
        Err(OracleError::Domain { re: z.re, im: z.im })
    } else {
        Ok(())
    }
}

/// Reference `w(z)` for `z` in the closed first quadrant.
///
/// - `|z| ≤ 6`: series.
/// - `6 < |z| < 8`: series, cross-checked against the continued fraction when
///   the latter can converge at this `Im z`; a disagreement beyond
///   `digits - 2` digits is reported as [`OracleError::Inconsistent`].
/// - `8 ≤ |z| ≤ 12`: continued fraction when it can converge, otherwise the
///   series (the fraction converges too slowly next to the real axis).
/// - `|z| > 12`: continued fraction.
pub fn w_ref(z: Complex64, digits: u32) -> Result<ReferenceValue, OracleError> {
    check_digits(digits)?;
    check_input(z)?;
    let r = z.norm();

    if r <= ANNULUS_INNER {
        return w_ref_series(z, digits);
    }
    if r < ANNULUS_OUTER {
        let series = w_ref_series(z, digits)?;
        if !cf_feasible(z, digits) {
            return Ok(series);
        }
        let cf = match w_ref_cf(z, digits) {
            Ok(v) => v,
            Err(OracleError::NoConvergence { .. }) => return Ok(series),
            Err(e) => return Err(e),
        };
        let rel_diff = cf.rel_diff(&series);
        if rel_diff > 10f64.powi(-(digits as i32 - 2)) {
            return Err(OracleError::Inconsistent {
                re: z.re,
                im: z.im,
                rel_diff,
            });
        }
        return Ok(ReferenceValue::new(
            series.value,
            digits,
            Method::CrossChecked,
        ));
    }
    if r <= SERIES_RADIUS && !cf_feasible(z, digits) {
        return w_ref_series(z, digits);
    }
    match w_ref_cf(z, digits) {
        Err(OracleError::NoConvergence { .. }) if r <= SERIES_RADIUS => w_ref_series(z, digits),
        other => other,
    }
}
