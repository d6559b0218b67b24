//! Thin complex layer over `astro_float::BigFloat`.

use astro_float::{BigFloat, Consts, RoundingMode};
use num_complex::Complex64;

use crate::error::OracleError;

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

/// Binary precision carrying `digits` decimal digits plus a few spare bits.
pub(crate) fn bits_for_digits(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 8
}

/// Per-call arithmetic context: working precision and the constant cache.
pub(crate) struct Ctx {
    pub p: usize,
    pub cc: Consts,
}

impl Ctx {
    pub fn new(p: usize) -> Result<Self, OracleError> {
        let cc = Consts::new().map_err(|e| OracleError::Arithmetic(format!("{e:?}")))?;
        Ok(Self { p, cc })
    }

    pub fn real(&self, v: f64) -> BigFloat {
        BigFloat::from_f64(v, self.p)
    }

    pub fn int(&self, v: u64) -> BigFloat {
        BigFloat::from_u64(v, self.p)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM)
    }

    pub fn sqrt_pi(&mut self) -> BigFloat {
        self.pi().sqrt(self.p, RM)
    }

    pub fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(self.p, RM, &mut self.cc)
    }
}

/// Correctly rounded conversion to `f64`.
///
/// Subnormal results are rounded twice (to 53 bits, then to the subnormal
/// grid) and may be off by one unit in the last place.
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    if x.is_zero() {
        return 0.0;
    }
    let mut r = x.clone();
    if r.set_precision(53, RM).is_err() {
        return f64::NAN;
    }
    let Some((words, _, sign, exp, _)) = r.as_raw_parts() else {
        return f64::NAN;
    };
    // Mantissa is normalised to [0.5, 1) with the top bit of the last word set.
    let top = *words.last().expect("non-zero value has mantissa words");
    let m = (top >> 11) as f64;
    let v = ldexp(m, exp as i64 - 53);
    if sign.is_negative() {
        -v
    } else {
        v
    }
}

fn ldexp(m: f64, e: i64) -> f64 {
    let mut v = m;
    let mut e = e;
    while e > 1000 {
        v *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        v *= 2f64.powi(-1000);
        e += 1000;
    }
    v * 2f64.powi(e as i32)
}

/// Upper bound on `log2 |x|`, or `None` for zero.
pub(crate) fn log2_bound(x: &BigFloat) -> Option<i64> {
    if x.is_zero() {
        None
    } else {
        x.exponent().map(|e| e as i64)
    }
}

#[derive(Debug, Clone)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub(crate) fn new(re: BigFloat, im: BigFloat) -> Self {
        Self { re, im }
    }

    pub(crate) fn from_c64(z: Complex64, p: usize) -> Self {
        Self::new(BigFloat::from_f64(z.re, p), BigFloat::from_f64(z.im, p))
    }

    /// Component-wise correct rounding to double.
    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }

    pub(crate) fn add(&self, o: &Self, p: usize) -> Self {
        Self::new(self.re.add(&o.re, p, RM), self.im.add(&o.im, p, RM))
    }

    pub(crate) fn sub(&self, o: &Self, p: usize) -> Self {
        Self::new(self.re.sub(&o.re, p, RM), self.im.sub(&o.im, p, RM))
    }

    pub(crate) fn mul(&self, o: &Self, p: usize) -> Self {
        let re = self
            .re
            .mul(&o.re, p, RM)
            .sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self
            .re
            .mul(&o.im, p, RM)
            .add(&self.im.mul(&o.re, p, RM), p, RM);
        Self::new(re, im)
    }

    pub(crate) fn scale(&self, k: &BigFloat, p: usize) -> Self {
        Self::new(self.re.mul(k, p, RM), self.im.mul(k, p, RM))
    }

    pub(crate) fn div_real(&self, k: &BigFloat, p: usize) -> Self {
        Self::new(self.re.div(k, p, RM), self.im.div(k, p, RM))
    }

    pub(crate) fn norm_sqr(&self, p: usize) -> BigFloat {
        self.re
            .mul(&self.re, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    /// `k / self` for real `k`.
    pub(crate) fn recip_scaled(&self, k: &BigFloat, p: usize) -> Self {
        let d = self.norm_sqr(p);
        let f = k.div(&d, p, RM);
        Self::new(self.re.mul(&f, p, RM), self.im.mul(&f, p, RM).neg())
    }

    /// Multiply by `i`.
    pub(crate) fn mul_i(&self) -> Self {
        Self::new(self.im.neg(), self.re.clone())
    }

    pub(crate) fn is_finite(&self) -> bool {
        let ok = |x: &BigFloat| !x.is_nan() && !x.is_inf();
        ok(&self.re) && ok(&self.im)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub(crate) fn round_to(&mut self, p: usize) {
        // Precision reduction cannot fail for finite values.
        let _ = self.re.set_precision(p, RM);
        let _ = self.im.set_precision(p, RM);
    }

    /// Upper bound on `log2 max(|re|, |im|)`, or `None` when zero.
    pub(crate) fn log2_bound(&self) -> Option<i64> {
        match (log2_bound(&self.re), log2_bound(&self.im)) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }

    /// `|self - other| / |other|`, evaluated in double after the subtraction.
    pub(crate) fn rel_diff(&self, other: &Self, p: usize) -> f64 {
        let d = self.sub(other, p).to_c64();
        let r = other.to_c64();
        let den = r.norm();
        if !self.is_finite() || !other.is_finite() {
            f64::INFINITY
        } else if den == 0.0 {
            if d.norm() == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            d.norm() / den
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_to_double_is_exact_for_doubles() {
        for v in [
            1.0,
            -0.75,
            std::f64::consts::PI,
            1e-300,
            3.5e300,
            0.1,
            -123456.789e-20,
        ] {
            assert_eq!(to_f64(&BigFloat::from_f64(v, 256)), v);
        }
        assert_eq!(to_f64(&BigFloat::from_f64(0.0, 256)), 0.0);
    }

    #[test]
    fn round_to_double_of_pi() {
        let mut ctx = Ctx::new(512).unwrap();
        assert_eq!(to_f64(&ctx.pi()), std::f64::consts::PI);
        let e = ctx.exp(&ctx.real(1.0));
        assert_eq!(to_f64(&e), std::f64::consts::E);
        let third = ctx.int(1).div(&ctx.int(3), 512, RM);
        assert_eq!(to_f64(&third), 1.0 / 3.0);
    }

    #[test]
    fn complex_arithmetic() {
        let p = 200;
        let a = BigComplex::from_c64(Complex64::new(1.5, -2.0), p);
        let b = BigComplex::from_c64(Complex64::new(0.25, 4.0), p);
        assert_eq!(
            a.mul(&b, p).to_c64(),
            Complex64::new(1.5, -2.0) * Complex64::new(0.25, 4.0)
        );
        let one = BigFloat::from_f64(1.0, p);
        let r = b.recip_scaled(&one, p).to_c64();
        let want = Complex64::new(1.0, 0.0) / Complex64::new(0.25, 4.0);
        assert!((r - want).norm() < 1e-16);
        assert_eq!(a.mul_i().to_c64(), Complex64::new(2.0, 1.5));
    }

    #[test]
    fn digit_to_bit_conversion() {
        assert_eq!(bits_for_digits(30), 108);
        assert!(bits_for_digits(20) as f64 >= 20.0 * std::f64::consts::LOG2_10);
    }
}
