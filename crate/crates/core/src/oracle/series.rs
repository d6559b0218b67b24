use astro_float::BigFloat;
use num_complex::Complex64;

use super::bignum::{bits_for_digits, BigComplex, Ctx};
use super::{check_digits, check_input, Method, ReferenceValue};
use crate::error::OracleError;

/// Largest `|z|` accepted by the series.
pub const SERIES_RADIUS: f64 = 12.0;

/// Working precision in decimal digits for the series at `z`.
///
/// The terms peak near `e^{|z|²}` while the smallest component of `w` can be
/// as small as `e^{-|z|²}` (for example `Re w(x) = e^{-x²}`), so the
/// cancellation costs up to `2|z|² log₁₀e` digits.
pub(crate) fn working_digits(z: Complex64, digits: u32) -> u32 {
    let growth = 2.0 * z.norm_sqr() * std::f64::consts::LOG10_E;
    digits + growth.ceil() as u32 + 10
}

/// Maclaurin series `w(z) = Σ_k (iz)^k / Γ(k/2 + 1)`.
///
/// Split into even terms `(-z²)^m / m!` and odd terms
/// `iz (-z²)^m / Γ(m + 3/2)`, each advanced by its own recurrence.
pub fn w_ref_series(z: Complex64, digits: u32) -> Result<ReferenceValue, OracleError> {
    check_digits(digits)?;
    check_input(z)?;
    let modulus = z.norm();
    if modulus > SERIES_RADIUS {
        return Err(OracleError::OutOfRange {
            modulus,
            range: "|z| <= 12",
        });
    }

    let out_p = bits_for_digits(digits);
    if z.re == 0.0 && z.im == 0.0 {
        let one = BigComplex::new(
            BigFloat::from_f64(1.0, out_p),
            BigFloat::from_f64(0.0, out_p),
        );
        return Ok(ReferenceValue::new(one, digits, Method::MaclaurinSeries));
    }

    let p = bits_for_digits(working_digits(z, digits));
    let mut ctx = Ctx::new(p)?;
    let zb = BigComplex::from_c64(z, p);
    let q = zb.mul(&zb, p);
    let q = BigComplex::new(q.re.neg(), q.im.neg());

    let two = ctx.int(2);
    let mut even = BigComplex::new(ctx.int(1), ctx.int(0));
    // iz / Γ(3/2) = 2iz/√π
    let mut odd = zb.mul_i().scale(&two, p).div_real(&ctx.sqrt_pi(), p);
    let mut sum = even.add(&odd, p);

    // Terms stop growing once m exceeds |z|²; stop after that when both fall
    // below 2^-p, which is far below the smallest term-scale error budget.
    let peak = z.norm_sqr().ceil() as u64 + 1;
    let threshold = -(p as i64);
    let mut m: u64 = 0;
    loop {
        m += 1;
        even = even.mul(&q, p).div_real(&ctx.int(m), p);
        // Γ(m + 3/2) = Γ(m + 1/2)(m + 1/2)
        odd = odd
            .mul(&q, p)
            .scale(&two, p)
            .div_real(&ctx.int(2 * m + 1), p);
        sum = sum.add(&even, p).add(&odd, p);

        if m > peak {
            let small = |t: &BigComplex| t.log2_bound().is_none_or(|e| e < threshold);
            if small(&even) && small(&odd) {
                break;
            }
        }
    }

    sum.round_to(out_p);
    Ok(ReferenceValue::new(sum, digits, Method::MaclaurinSeries))
}
