//! Float math shim so the crate builds without `std`.
//!
//! `core` provides `abs`, `max` and `min` for `f64`; everything
//! transcendental is routed through `libm`.

// In test builds std's inherent methods shadow these, leaving some unused.
#[allow(dead_code)]
pub(crate) trait FloatExt {
    fn sqrt(self) -> Self;
    fn cbrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn atan2(self, x: Self) -> Self;
    fn hypot(self, other: Self) -> Self;
    fn powi(self, n: i32) -> Self;
}

impl FloatExt for f64 {
    #[inline]
    fn sqrt(self) -> f64 {
        libm::sqrt(self)
    }

    #[inline]
    fn cbrt(self) -> f64 {
        libm::cbrt(self)
    }

    #[inline]
    fn sin(self) -> f64 {
        libm::sin(self)
    }

    #[inline]
    fn cos(self) -> f64 {
        libm::cos(self)
    }

    #[inline]
    fn atan2(self, x: f64) -> f64 {
        libm::atan2(self, x)
    }

    #[inline]
    fn hypot(self, other: f64) -> f64 {
        libm::hypot(self, other)
    }

    fn powi(self, n: i32) -> f64 {
        // Exponentiation by squaring; exponents here are small and fixed.
        let mut base = if n < 0 { 1.0 / self } else { self };
        let mut exp = n.unsigned_abs();
        let mut acc = 1.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            base *= base;
            exp >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::FloatExt;

    // Fully qualified calls: the std inherent methods would otherwise
    // shadow the shim in test builds.
    #[test]
    fn powi_matches_repeated_multiplication() {
        assert_eq!(FloatExt::powi(2.0f64, 10), 1024.0);
        assert_eq!(FloatExt::powi(3.0f64, 0), 1.0);
        assert_eq!(FloatExt::powi(2.0f64, -2), 0.25);
        let x = 1.7f64;
        assert!((FloatExt::powi(x, 4) - x * x * x * x).abs() < 1e-15);
    }

    #[test]
    fn libm_roundtrips() {
        let root = FloatExt::sqrt(2.0f64);
        assert!((root * root - 2.0).abs() < 1e-15);
        assert!((FloatExt::cbrt(8.0f64) - 2.0).abs() < 1e-15);
        assert!(FloatExt::sin(core::f64::consts::PI).abs() < 1e-15);
    }
}
