use num_complex::Complex64;

use super::bignum::{bits_for_digits, BigComplex, Ctx, RM};
use super::{check_digits, check_input, Method, ReferenceValue, ANNULUS_INNER, SERIES_RADIUS};
use crate::error::OracleError;

/// Deepest continued-fraction truncation tried before giving up.
pub const MAX_CF_DEPTH: usize = 10_000;

const START_DEPTH: usize = 8;

/// Whether the continued fraction is expected to reach `digits + 2` digits
/// within [`MAX_CF_DEPTH`] levels.
///
/// Beyond the series radius the truncation error is dominated by the
/// asymptotic regime and a few dozen levels suffice. Closer in, the error of
/// the depth-`n` convergent behaves like `exp(-2√(2n)·Im z)`, which decides
/// convergence near the real axis.
pub fn cf_feasible(z: Complex64, digits: u32) -> bool {
    if z.norm() > SERIES_RADIUS {
        return true;
    }
    let target = (digits + 2) as f64 * std::f64::consts::LN_10;
    let needed = 0.5 * (target / (2.0 * z.im)).powi(2);
    needed <= MAX_CF_DEPTH as f64
}

/// Evaluate the depth-`depth` convergent bottom-up.
fn convergent(z: &BigComplex, depth: usize, ctx: &mut Ctx) -> BigComplex {
    let p = ctx.p;
    let half = ctx.real(0.5);
    let mut r = z.clone();
    for k in (1..=depth).rev() {
        let num = ctx.int(k as u64).mul(&half, p, RM);
        r = z.sub(&r.recip_scaled(&num, p), p);
    }
    // (i/√π) / r
    let inv_sqrt_pi = ctx.int(1).div(&ctx.sqrt_pi(), p, RM);
    r.recip_scaled(&inv_sqrt_pi, p).mul_i()
}

/// Laplace continued fraction
/// `w(z) = (i/√π) / (z - (1/2)/(z - 1/(z - (3/2)/(z - …))))`.
///
/// The depth doubles from 8 until two successive convergents agree to
/// `digits + 2` decimal digits. Requires `|z| ≥ 6`.
pub fn w_ref_cf(z: Complex64, digits: u32) -> Result<ReferenceValue, OracleError> {
    check_digits(digits)?;
    check_input(z)?;
    let modulus = z.norm();
    if modulus < ANNULUS_INNER {
        return Err(OracleError::OutOfRange {
            modulus,
            range: "|z| >= 6",
        });
    }

    let p = bits_for_digits(digits + 20);
    let mut ctx = Ctx::new(p)?;
    let zb = BigComplex::from_c64(z, p);
    let tol = 10f64.powi(-(digits as i32 + 2));

    let mut depth = START_DEPTH;
    let mut prev = convergent(&zb, depth, &mut ctx);
    loop {
        if depth >= MAX_CF_DEPTH {
            return Err(OracleError::NoConvergence {
                depth: MAX_CF_DEPTH,
            });
        }
        depth = (2 * depth).min(MAX_CF_DEPTH);
        let cur = convergent(&zb, depth, &mut ctx);
        if cur.is_finite() && !cur.is_zero() && prev.rel_diff(&cur, p) <= tol {
            let mut value = cur;
            if z.im == 0.0 {
                // Every convergent is purely imaginary on the real axis; the
                // real part is the Gaussian exactly.
                let x2 = zb.re.mul(&zb.re, p, RM);
                value.re = ctx.exp(&x2.neg());
            }
            value.round_to(bits_for_digits(digits));
            return Ok(ReferenceValue::new(
                value,
                digits,
                Method::ContinuedFraction,
            ));
        }
        prev = cur;
    }
}
