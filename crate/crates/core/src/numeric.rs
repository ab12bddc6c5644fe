//! Binary64 range helpers and closed intervals over the extended reals.

use crate::error::{Error, Result};

/// Largest binary exponent magnitude of an IEEE 754 double; values outside
/// `[2^-1024, 2^1024]` in absolute value are not representable.
pub const MAX_BINARY_EXPONENT: f64 = 1024.0;

/// Closed interval `[lo, hi]` whose endpoints may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedInterval {
    lo: f64,
    hi: f64,
}

impl ExtendedInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(Error::InvalidInterval(lo, hi));
        }
        Ok(Self { lo, hi })
    }

    /// `(-inf, +inf)`.
    pub const fn real_line() -> Self {
        Self {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        }
    }

    /// Degenerate interval `[x, x]`.
    pub fn point(x: f64) -> Result<Self> {
        Self::new(x, x)
    }

    /// Symmetric interval `[-r, r]`; `r` must be non-negative.
    pub fn symmetric(radius: f64) -> Result<Self> {
        Self::new(-radius, radius)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// `hi - lo`, infinite when either endpoint is.
    pub fn length(&self) -> f64 {
        if self.lo == self.hi {
            0.0
        } else {
            self.hi - self.lo
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        Self::new(lo, hi).ok()
    }
}

/// Length of an interval under extended-real semantics.
pub fn interval_length(interval: &ExtendedInterval) -> f64 {
    interval.length()
}

/// `base^alpha`, rejecting results that are zero, subnormal, infinite or NaN.
pub fn checked_pow(base: f64, alpha: f64) -> Result<f64> {
    ensure_normal(libm::pow(base, alpha), base, alpha)
}

/// Passes `value` through if it is a normal binary64 number, otherwise
/// reports a computability failure attributed to `base^alpha`.
pub fn ensure_normal(value: f64, base: f64, alpha: f64) -> Result<f64> {
    if value.is_normal() {
        Ok(value)
    } else {
        Err(Error::Computability { base, alpha })
    }
}

pub fn log2(x: f64) -> f64 {
    libm::log2(x)
}

/// Range of exponents `alpha` for which every `b^alpha`, `b` in `bases`,
/// stays within `[2^-1024, 2^1024]`.
///
/// With `b = max(1 / min B, max B)` this is `[log_b 2^-1024, log_b 2^1024]`.
/// When every base is exactly one the interval is the whole real line.
pub fn safe_exponent_interval<I>(bases: I) -> Result<ExtendedInterval>
where
    I: IntoIterator<Item = f64>,
{
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for b in bases {
        if !(b > 0.0) || !b.is_finite() {
            return Err(Error::InvalidWeight(b));
        }
        min = min.min(b);
        max = max.max(b);
    }
    if min > max {
        return Err(Error::EmptyGraph);
    }
    let b = (1.0 / min).max(max);
    if b <= 1.0 {
        return Ok(ExtendedInterval::real_line());
    }
    ExtendedInterval::symmetric(MAX_BINARY_EXPONENT / log2(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths() {
        assert_eq!(ExtendedInterval::point(0.0).unwrap().length(), 0.0);
        assert_eq!(ExtendedInterval::real_line().length(), f64::INFINITY);
        let i = ExtendedInterval::new(-152.2, 152.2).unwrap();
        assert!((interval_length(&i) - 304.4).abs() < 1e-12);
        let half = ExtendedInterval::new(3.0, f64::INFINITY).unwrap();
        assert_eq!(half.length(), f64::INFINITY);
    }

    #[test]
    fn rejects_reversed() {
        assert!(ExtendedInterval::new(1.0, 0.0).is_err());
        assert!(ExtendedInterval::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn pow_range() {
        assert_eq!(checked_pow(4.0, 0.5).unwrap(), 2.0);
        assert!(checked_pow(2.0, 1024.0).is_err());
        assert!(checked_pow(2.0, -1023.0).is_err());
        assert!(checked_pow(2.0, -1022.0).is_ok());
    }

    #[test]
    fn all_ones_is_unbounded() {
        let s = safe_exponent_interval([1.0, 1.0]).unwrap();
        assert_eq!(s, ExtendedInterval::real_line());
    }

    #[test]
    fn small_bases_use_reciprocal() {
        let s = safe_exponent_interval([0.25, 2.0]).unwrap();
        assert_eq!(s.hi(), 512.0);
        assert_eq!(s.lo(), -512.0);
    }
}
