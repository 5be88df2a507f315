//! Scalar types used for real-valued outputs (ASPL, bounds, gaps).
//!
//! Every such quantity is a ratio of exact integers, so a [`Scalar`] only has
//! to be constructible from an integer ratio and support field arithmetic.
//! `f32`/`f64` give fast approximate values; [`Ratio<i64>`] and
//! [`Ratio<i128>`] give exact comparisons.

use num_rational::Ratio;
use num_traits::{Num, ToPrimitive};
use std::fmt::Debug;

pub trait Scalar: Num + PartialOrd + Clone + Debug {
    /// `numer / denom`; `denom` must be non-zero.
    fn from_ratio(numer: i128, denom: i128) -> Self;

    fn as_f64(&self) -> f64;

    fn from_int(value: i128) -> Self {
        Self::from_ratio(value, 1)
    }
}

impl Scalar for f64 {
    fn from_ratio(numer: i128, denom: i128) -> Self {
        numer as f64 / denom as f64
    }

    fn as_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_ratio(numer: i128, denom: i128) -> Self {
        (numer as f64 / denom as f64) as f32
    }

    fn as_f64(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for Ratio<i128> {
    fn from_ratio(numer: i128, denom: i128) -> Self {
        Ratio::new(numer, denom)
    }

    fn as_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for Ratio<i64> {
    fn from_ratio(numer: i128, denom: i128) -> Self {
        let r = Ratio::new(numer, denom);
        let n = i64::try_from(*r.numer()).expect("numerator exceeds i64");
        let d = i64::try_from(*r.denom()).expect("denominator exceeds i64");
        Ratio::new_raw(n, d)
    }

    fn as_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_is_reduced() {
        let r = <Ratio<i128>>::from_ratio(6, 4);
        assert_eq!(*r.numer(), 3);
        assert_eq!(*r.denom(), 2);
        let r = <Ratio<i64>>::from_ratio(-6, 4);
        assert_eq!(r, Ratio::new(-3, 2));
    }

    #[test]
    fn floats_agree() {
        assert_eq!(f64::from_ratio(1, 4), 0.25);
        assert_eq!(f32::from_ratio(3, 4), 0.75);
        assert_eq!(<Ratio<i128>>::from_ratio(7, 2).as_f64(), 3.5);
    }
}
