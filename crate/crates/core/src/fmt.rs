//! Shortest round-trip rendering of doubles.
//!
//! Rust's `Display` and `LowerExp` both print the shortest digit string that
//! parses back to the same bits; this picks positional notation for moderate
//! exponents and scientific notation otherwise, and spells non-finite values
//! as `nan`, `inf` and `-inf`.

pub fn shortest(v: f64) -> String {
    if v.is_nan() {
        return "nan".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if v == 0.0 {
        return if v.is_sign_negative() { "-0" } else { "0" }.to_string();
    }
    let exp = v.abs().log10().floor();
    if (-5.0..16.0).contains(&exp) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

#[cfg(test)]
mod tests {
    use super::shortest;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(shortest(1.0), "1");
        assert_eq!(shortest(0.0), "0");
        assert_eq!(shortest(0.3047442052569126), "0.3047442052569126");
        assert_eq!(shortest(1e-14), "1e-14");
        assert_eq!(shortest(2.5e20), "2.5e20");
        assert_eq!(shortest(40000.0), "40000");
        assert_eq!(shortest(f64::NAN), "nan");
        assert_eq!(shortest(f64::NEG_INFINITY), "-inf");
    }

    proptest! {
        #[test]
        fn round_trips(bits in any::<u64>()) {
            let v = f64::from_bits(bits);
            prop_assume!(v.is_finite());
            let back: f64 = shortest(v).parse().unwrap();
            prop_assert_eq!(back.to_bits(), v.to_bits());
        }
    }
}
