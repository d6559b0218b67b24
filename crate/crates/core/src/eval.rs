//! Evaluation of `w(z)` in double precision.
//!
//! Two algebraically identical truncations of the Fourier expansion are
//! provided. [`w_eq2`] is accurate for `Im z ≳ 1e-6`, [`w_eq4`] replaces the
//! oscillating exponential by `cos(τz)` plus an explicit `exp(-z²)` and stays
//! accurate down to `Im z = 0` for `Re z ≤ 10`. [`w_upper_right`] switches
//! between them at [`Y_SWITCH`]; [`w_any`] extends to the whole plane.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::coefficients::CoefficientTable;
use crate::error::EvalError;
use crate::kernel::{leading_term_eq2, leading_term_eq4, oscillator, summand, SeriesMode};

/// Imaginary part below which the dispatcher uses the small-`Im z` form.
pub const Y_SWITCH: f64 = 0.05;

const I: Complex64 = Complex64::new(0.0, 1.0);
const NAN: Complex64 = Complex64::new(f64::NAN, f64::NAN);

/// Largest `Re(-z²)` for which `exp(-z²)` is finite.
const EXP_LIMIT: f64 = 709.782_712_893_384;

/// Which approximation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    /// Plain Fourier expansion.
    Eq2,
    /// Rearranged expansion for small `Im z`.
    Eq4,
    /// [`Eq4`](Variant::Eq4) below [`Y_SWITCH`], [`Eq2`](Variant::Eq2) above.
    #[default]
    Auto,
}

impl Variant {
    /// Evaluate this variant in the closed first quadrant.
    pub fn eval_upper_right(
        self,
        z: Complex64,
        table: &CoefficientTable,
    ) -> Result<Complex64, EvalError> {
        match self {
            Variant::Eq2 => w_eq2(z, table),
            Variant::Eq4 => w_eq4(z, table),
            Variant::Auto => w_upper_right(z, table),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Eq2 => "eq2",
            Variant::Eq4 => "eq4",
            Variant::Auto => "auto",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "eq2" => Ok(Variant::Eq2),
            "eq4" => Ok(Variant::Eq4),
            "auto" => Ok(Variant::Auto),
            other => Err(format!(
                "unknown variant '{other}' (expected eq2, eq4 or auto)"
            )),
        }
    }
}

fn has_nan(z: Complex64) -> bool {
    z.re.is_nan() || z.im.is_nan()
}

fn check_quadrant(z: Complex64) -> Result<(), EvalError> {
    if z.re < 0.0 || z.im < 0.0 {
        Err(EvalError::Domain { re: z.re, im: z.im })
    } else {
        Ok(())
    }
}

/// `i τ² z / √π · Σ_{n=1}^{N} summand_n`, summed in ascending `n`.
fn weighted_sum(z: Complex64, table: &CoefficientTable, mode: SeriesMode) -> Complex64 {
    let tau = table.tau();
    let osc = oscillator(z, tau, mode);
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 1..=table.n_terms() {
        sum += summand(n, z, table, mode, osc);
    }
    I * z * (tau * tau / PI.sqrt()) * sum
}

/// Plain Fourier expansion:
///
/// ```text
/// w(z) ≈ i(1 - e^{iτz})/(τz) + iτ²z/√π Σ a_n ((-1)^n e^{iτz} - 1)/(n²π² - τ²z²)
/// ```
///
/// Defined for `Re z ≥ 0`, `Im z ≥ 0`.
pub fn w_eq2(z: Complex64, table: &CoefficientTable) -> Result<Complex64, EvalError> {
    if has_nan(z) {
        return Ok(NAN);
    }
    check_quadrant(z)?;
    Ok(leading_term_eq2(z, table.tau()) + weighted_sum(z, table, SeriesMode::Exp))
}

/// Small-`Im z` form:
///
/// ```text
/// w(z) ≈ e^{-z²} - i(cos(τz) - 1)/(τz) + iτ²z/√π Σ a_n ((-1)^n cos(τz) - 1)/(n²π² - τ²z²)
/// ```
///
/// Defined for `Re z ≥ 0`, `Im z ≥ 0`; accurate for `Im z ≲ 0.1`. `cos(τz)`
/// overflows once `τ Im z` exceeds ~710, far outside that band.
pub fn w_eq4(z: Complex64, table: &CoefficientTable) -> Result<Complex64, EvalError> {
    if has_nan(z) {
        return Ok(NAN);
    }
    check_quadrant(z)?;
    let gauss = (-(z * z)).exp();
    Ok(gauss + leading_term_eq4(z, table.tau()) + weighted_sum(z, table, SeriesMode::Cos))
}

/// The branch [`w_upper_right`] takes for `z`.
pub fn route(z: Complex64) -> Variant {
    if z.im < Y_SWITCH {
        Variant::Eq4
    } else {
        Variant::Eq2
    }
}

/// Combined first-quadrant evaluator.
pub fn w_upper_right(z: Complex64, table: &CoefficientTable) -> Result<Complex64, EvalError> {
    match route(z) {
        Variant::Eq4 => w_eq4(z, table),
        _ => w_eq2(z, table),
    }
}

/// `w(z)` anywhere in the complex plane.
///
/// The left half of the upper plane uses `w(-z̄) = conj(w(z))`; the lower
/// half-plane uses `w(z) = 2e^{-z²} - w(-z)`, which loses relative accuracy as
/// the two terms cancel and fails with [`EvalError::Overflow`] once `e^{-z²}`
/// leaves the double range.
pub fn w_any(z: Complex64, table: &CoefficientTable) -> Result<Complex64, EvalError> {
    w_any_with(z, table, Variant::Auto)
}

/// [`w_any`] with the first-quadrant evaluation done by `variant`.
pub fn w_any_with(
    z: Complex64,
    table: &CoefficientTable,
    variant: Variant,
) -> Result<Complex64, EvalError> {
    if has_nan(z) {
        return Ok(NAN);
    }
    if z.im >= 0.0 {
        if z.re >= 0.0 {
            variant.eval_upper_right(z, table)
        } else {
            Ok(variant.eval_upper_right(-z.conj(), table)?.conj())
        }
    } else {
        let overflow = EvalError::Overflow { re: z.re, im: z.im };
        if z.im * z.im - z.re * z.re > EXP_LIMIT {
            return Err(overflow);
        }
        let gauss = (-(z * z)).exp();
        let w = gauss * 2.0 - w_any_with(-z, table, variant)?;
        if w.re.is_finite() && w.im.is_finite() {
            Ok(w)
        } else {
            Err(overflow)
        }
    }
}

/// Voigt function `Re w(x + iy)` for `y ≥ 0`, even in `x`.
pub fn voigt(x: f64, y: f64, table: &CoefficientTable) -> Result<f64, EvalError> {
    if x.is_nan() || y.is_nan() {
        return Ok(f64::NAN);
    }
    if y < 0.0 {
        return Err(EvalError::Domain { re: x, im: y });
    }
    Ok(w_upper_right(Complex64::new(x.abs(), y), table)?.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    // 30-digit reference values.
    const W_1_1: Complex64 = Complex64::new(0.304_744_205_256_912_6, 0.208_218_938_202_831_6);

    #[test]
    fn origin_is_one() {
        let t = CoefficientTable::default();
        for f in [w_eq2, w_eq4, w_upper_right, w_any] {
            let w = f(c(0.0, 0.0), &t).unwrap();
            assert!((w - c(1.0, 0.0)).norm() <= 1e-15, "{w}");
        }
    }

    #[test]
    fn eq2_at_one_plus_i() {
        let t = CoefficientTable::default();
        let w = w_eq2(c(1.0, 1.0), &t).unwrap();
        assert!((w.re - W_1_1.re).abs() <= 1e-12 * W_1_1.re);
        assert!((w.im - W_1_1.im).abs() <= 1e-12 * W_1_1.im);
    }

    #[test]
    fn eq4_real_axis_is_gaussian() {
        let t = CoefficientTable::default();
        let w = w_eq4(c(2.0, 0.0), &t).unwrap();
        let want = 0.018_315_638_888_734_18;
        assert!((w.re - want).abs() <= 1e-13 * want);
    }

    #[test]
    fn quadrant_errors() {
        let t = CoefficientTable::default();
        assert_eq!(
            w_eq2(c(-1.0, 1.0), &t),
            Err(EvalError::Domain { re: -1.0, im: 1.0 })
        );
        assert!(w_eq4(c(1.0, -1.0), &t).is_err());
        assert!(voigt(1.0, -0.5, &t).is_err());
    }

    #[test]
    fn nan_propagates() {
        let t = CoefficientTable::default();
        for f in [w_eq2, w_eq4, w_upper_right, w_any] {
            let w = f(c(f64::NAN, 1.0), &t).unwrap();
            assert!(w.re.is_nan() && w.im.is_nan());
            let w = f(c(-1.0, f64::NAN), &t).unwrap();
            assert!(w.re.is_nan() && w.im.is_nan());
        }
        assert!(voigt(f64::NAN, 0.0, &t).unwrap().is_nan());
    }

    #[test]
    fn dispatch_is_bit_exact() {
        let t = CoefficientTable::default();
        let z = c(3.0, 1e-8);
        assert_eq!(route(z), Variant::Eq4);
        assert_eq!(w_upper_right(z, &t), w_eq4(z, &t));
        let z = c(3.0, 10.0);
        assert_eq!(route(z), Variant::Eq2);
        assert_eq!(w_upper_right(z, &t), w_eq2(z, &t));
        assert_eq!(route(c(3.0, Y_SWITCH)), Variant::Eq2);
    }

    #[test]
    fn seam_is_continuous() {
        let t = CoefficientTable::default();
        let above = w_upper_right(c(3.0, 0.05), &t).unwrap();
        let below = w_upper_right(c(3.0, 0.05 - 1e-12), &t).unwrap();
        assert!(rel(below, above) <= 1e-11);
    }

    #[test]
    fn left_half_plane_by_reflection() {
        let t = CoefficientTable::default();
        let w = w_any(c(-1.0, 1.0), &t).unwrap();
        assert!(rel(w, W_1_1.conj()) <= 1e-12);
        assert_eq!(w, w_any(c(1.0, 1.0), &t).unwrap().conj());
    }

    #[test]
    fn lower_half_plane() {
        let t = CoefficientTable::default();
        // 30-digit w(1 - 0.5i).
        let want = c(0.155_541_142_454_331_1, 1.137_837_215_781_686_4);
        let w = w_any(c(1.0, -0.5), &t).unwrap();
        assert!(rel(w, want) <= 1e-10, "{w}");
    }

    #[test]
    fn lower_half_plane_overflow() {
        let t = CoefficientTable::default();
        assert_eq!(
            w_any(c(0.0, -30.0), &t),
            Err(EvalError::Overflow { re: 0.0, im: -30.0 })
        );
        // e^{y²-x²} = e^{100} still fits.
        assert!(w_any(c(0.0, -10.0), &t).is_ok());
    }

    #[test]
    fn voigt_values() {
        let t = CoefficientTable::default();
        assert!((voigt(0.0, 0.0, &t).unwrap() - 1.0).abs() <= 1e-15);
        let g = (-4.0f64).exp();
        assert!((voigt(2.0, 0.0, &t).unwrap() - g).abs() <= 1e-13 * g);
        assert!((voigt(1.0, 1.0, &t).unwrap() - W_1_1.re).abs() <= 1e-12 * W_1_1.re);
        assert_eq!(voigt(-1.5, 0.3, &t), voigt(1.5, 0.3, &t));
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("EQ4".parse::<Variant>(), Ok(Variant::Eq4));
        assert_eq!("auto".parse::<Variant>(), Ok(Variant::Auto));
        assert!("eq3".parse::<Variant>().is_err());
        assert_eq!(Variant::default(), Variant::Auto);
    }
}
