//! Real-argument helpers used to certify the complex oracle.

use astro_float::BigFloat;

use super::bignum::{bits_for_digits, Ctx, RM};
use super::{check_digits, MAX_CF_DEPTH};
use crate::error::OracleError;

/// `e^x` to `digits` decimal digits.
pub fn exp_ref(x: f64, digits: u32) -> Result<BigFloat, OracleError> {
    let mut ctx = Ctx::new(bits_for_digits(digits + 5))?;
    let v = ctx.real(x);
    let mut r = ctx.exp(&v);
    let _ = r.set_precision(bits_for_digits(digits), RM);
    Ok(r)
}

/// `erfc(x)` for `x > 0` from the real continued fraction
///
/// ```text
/// erfc(x) = e^{-x²}/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + …))))
/// ```
///
/// evaluated in real arithmetic with its own depth-doubling loop.
pub fn erfc_cf(x: f64, digits: u32) -> Result<BigFloat, OracleError> {
    check_digits(digits)?;
    if x <= 0.0 || !x.is_finite() {
        return Err(OracleError::Domain { re: x, im: 0.0 });
    }
    let p = bits_for_digits(digits + 20);
    let mut ctx = Ctx::new(p)?;
    let xb = ctx.real(x);

    let tail = |depth: usize, ctx: &Ctx| -> BigFloat {
        let mut r = xb.clone();
        for k in (1..=depth).rev() {
            let num = ctx.int(k as u64).div(&ctx.int(2), p, RM);
            r = xb.add(&num.div(&r, p, RM), p, RM);
        }
        ctx.int(1).div(&r, p, RM)
    };

    let tol = 10f64.powi(-(digits as i32 + 2));
    let mut depth = 8;
    let mut prev = tail(depth, &ctx);
    let k = loop {
        if depth >= MAX_CF_DEPTH {
            return Err(OracleError::NoConvergence {
                depth: MAX_CF_DEPTH,
            });
        }
        depth = (2 * depth).min(MAX_CF_DEPTH);
        let cur = tail(depth, &ctx);
        let diff = super::bignum::to_f64(&cur.sub(&prev, p, RM)).abs();
        if diff <= tol * super::bignum::to_f64(&cur) {
            break cur;
        }
        prev = cur;
    };

    let g = ctx.exp(&xb.mul(&xb, p, RM).neg());
    let mut r = g.mul(&k, p, RM).div(&ctx.sqrt_pi(), p, RM);
    let _ = r.set_precision(bits_for_digits(digits), RM);
    Ok(r)
}
