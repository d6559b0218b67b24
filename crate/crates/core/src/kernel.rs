//! Term kernels for the Fourier expansion.
//!
//! Both expansions contain removable singularities: `(1 - e^{iτz})/(τz)` at
//! `z = 0`, and each summand `((-1)^n e^{iτz} - 1)/(n²π² - τ²z²)` at
//! `τz = nπ`. Near a pole the summand is rewritten in the shifted variable
//! `u = τz - nπ`:
//!
//! ```text
//! (-1)^n e^{iτz} - 1 = e^{iu} - 1        n²π² - τ²z² = -u (2nπ + u)
//! (-1)^n cos(τz) - 1 = cos(u) - 1 = -2 sin²(u/2)
//! ```
//!
//! with `u` formed from a double-double `nπ`, so the summand keeps full
//! relative accuracy in the input. Far from every pole the direct form is used
//! with a single `e^{iτz}` (or `cos τz`) shared by all `n`; the oscillating
//! parts of the summands cancel against each other at large `|z|`, and that
//! cancellation only works if every summand sees the same rounded phase.

use num_complex::Complex64;

use crate::coefficients::CoefficientTable;
use crate::error::EvalError;

/// Below this `|u|` the shifted kernels switch to their Taylor series.
pub const POLE_GUARD: f64 = 1e-4;

/// Below this `|u|` a summand uses the shifted form instead of the direct one.
pub const NEAR_POLE: f64 = 1.0;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Which summand family to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesMode {
    /// `((-1)^n e^{iτz} - 1) / (n²π² - τ²z²)`, used by the plain expansion.
    Exp,
    /// `((-1)^n cos(τz) - 1) / (n²π² - τ²z²)`, used by the small-`Im z` form.
    Cos,
}

/// `e^{iw} - 1` without cancellation for `Im w ≥ 0`.
fn expm1_i(w: Complex64) -> Complex64 {
    // iw = a + ib with a = -Im w ≤ 0, b = Re w; both real-part terms are ≤ 0.
    let a = -w.im;
    let b = w.re;
    let h = (0.5 * b).sin();
    Complex64::new(a.exp_m1() * b.cos() - 2.0 * h * h, a.exp() * b.sin())
}

/// `(e^{iw} - 1) / w`, finite at `w = 0` where it equals `i`.
pub(crate) fn expm1_i_over(w: Complex64) -> Complex64 {
    if w.norm() < POLE_GUARD {
        // i - w/2 - i w²/6 + w³/24 + i w⁴/120; the next term is below 2^-53.
        let w2 = w * w;
        let even = Complex64::new(0.0, 1.0) * (1.0 - w2 / 6.0 + w2 * w2 / 120.0);
        let odd = -w * 0.5 * (1.0 - w2 / 12.0);
        even + odd
    } else {
        expm1_i(w) / w
    }
}

/// `(cos w - 1) / w`, finite at `w = 0` where it vanishes.
pub(crate) fn cosm1_over(w: Complex64) -> Complex64 {
    if w.norm() < POLE_GUARD {
        // -w/2 + w³/24 - w⁵/720
        let w2 = w * w;
        -w * 0.5 * (1.0 - w2 / 12.0 + w2 * w2 / 360.0)
    } else {
        let s = (w * 0.5).sin();
        -2.0 * s * s / w
    }
}

/// `i (1 - e^{iτz}) / (τz)`, the leading term of the plain expansion.
///
/// Equals 1 at `z = 0`.
pub fn leading_term_eq2(z: Complex64, tau_m: f64) -> Complex64 {
    -I * expm1_i_over(z * tau_m)
}

/// `-i (cos(τz) - 1) / (τz)`, the middle term of the small-`Im z` form.
///
/// Vanishes at `z = 0`.
pub fn leading_term_eq4(z: Complex64, tau_m: f64) -> Complex64 {
    -I * cosm1_over(z * tau_m)
}

/// The oscillating factor a summand family shares: `e^{iτz}` or `cos(τz)`.
pub(crate) fn oscillator(z: Complex64, tau: f64, mode: SeriesMode) -> Complex64 {
    let w = z * tau;
    match mode {
        SeriesMode::Exp => (I * w).exp(),
        SeriesMode::Cos => w.cos(),
    }
}

/// Summand `n` given the family's precomputed oscillating factor.
#[inline]
pub(crate) fn summand(
    n: usize,
    z: Complex64,
    table: &CoefficientTable,
    mode: SeriesMode,
    osc: Complex64,
) -> Complex64 {
    let tau = table.tau();
    let (npi_hi, npi_lo) = table.n_pi(n);
    let u = Complex64::new(tau.mul_add(z.re, -npi_hi) - npi_lo, tau * z.im);
    let a = table.a(n);

    if u.norm() < NEAR_POLE {
        let g = match mode {
            SeriesMode::Exp => expm1_i_over(u),
            SeriesMode::Cos => cosm1_over(u),
        };
        -a * g / (u + 2.0 * npi_hi)
    } else {
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        let den = -u * (z * tau + npi_hi);
        a * (osc * sign - 1.0) / den
    }
}

/// The `n`-th summand of either expansion, including its coefficient `a_n`.
pub fn series_term(
    n: usize,
    z: Complex64,
    table: &CoefficientTable,
    mode: SeriesMode,
) -> Result<Complex64, EvalError> {
    if n < 1 || n > table.n_terms() {
        return Err(EvalError::IndexOutOfRange {
            n,
            n_terms: table.n_terms(),
        });
    }
    let osc = oscillator(z, table.tau(), mode);
    Ok(summand(n, z, table, mode, osc))
}
