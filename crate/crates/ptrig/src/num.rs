//! Small numeric helpers shared across modules.

/// `1 - x^p` for x in [0, 1], stable for x near 1.
#[inline]
pub(crate) fn one_minus_xp(x: f64, p: f64) -> f64 {
    if x == 0.0 {
        return 1.0;
    }
    -f64::exp_m1(p * x.ln())
}

/// `1 - (1-x)^e`, stable for small x.
#[inline]
pub(crate) fn one_minus_pow_1m(x: f64, e: f64) -> f64 {
    -f64::exp_m1(e * f64::ln_1p(-x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_one_minus_xp() {
        assert_eq!(one_minus_xp(0.0, 3.0), 1.0);
        assert!((one_minus_xp(0.5, 2.0) - 0.75).abs() < 1e-16);
        // near x = 1 the naive form loses digits; p * (1-x) is the leading term
        let x = 1.0 - 1e-12;
        let d = 1.0 - x; // exact
        let v = one_minus_xp(x, 3.0);
        assert!(((v - 3.0 * d) / v).abs() < 1e-11, "{v}");
    }

    #[test]
    fn stable_one_minus_pow() {
        assert!((one_minus_pow_1m(1e-14, 0.5) - 0.5e-14).abs() < 1e-22);
        assert!((one_minus_pow_1m(0.75, 0.5) - 0.5).abs() < 1e-15);
    }
}
