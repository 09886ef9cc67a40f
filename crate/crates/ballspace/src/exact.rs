//! Exact rational arithmetic helpers.
//!
//! Graph-side geometry is computed over arbitrary-precision rationals so that
//! equalities (equal balls, tubular composition, zero Hausdorff deviation) are
//! decided exactly rather than within a floating-point tolerance. Every `f64`
//! is itself a rational number, so converting inputs once at the boundary
//! loses nothing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact length/offset type used throughout the graph kernels.
pub type Rat = BigRational;

/// Exact conversion of a finite `f64` into a rational.
///
/// Panics on NaN/infinite input; lengths and offsets are validated before
/// they reach this point.
pub fn rat(x: f64) -> Rat {
    BigRational::from_float(x).expect("finite float required")
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Rounds a rational back to `f64`. Used only for reporting; exact
/// comparisons never round-trip through floats.
pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_abs(x: &Rat) -> Rat {
    x.abs()
}

pub fn rat_min(a: Rat, b: Rat) -> Rat {
    if a <= b {
        a
    } else {
        b
    }
}

pub fn rat_max(a: Rat, b: Rat) -> Rat {
    if a >= b {
        a
    } else {
        b
    }
}

pub fn rat_half(x: &Rat) -> Rat {
    x / rat_int(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_round_trip_is_exact() {
        for &x in &[
            0.0,
            1.0,
            -2.5,
            std::f64::consts::SQRT_2,
            2.0 * std::f64::consts::PI,
            0.1,
        ] {
            assert_eq!(to_f64(&rat(x)), x);
        }
    }

    #[test]
    fn doubling_sqrt2_matches_float_doubling() {
        let s = rat(std::f64::consts::SQRT_2);
        assert_eq!(to_f64(&(&s + &s)), 2.0 * std::f64::consts::SQRT_2);
    }
}
