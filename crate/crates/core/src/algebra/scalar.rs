//! Scalar abstraction shared by the polynomial and linear-algebra code.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// A field the chain machinery can compute over.
///
/// [`BigRational`] is the exact instance every verification path uses;
/// `f64` is supported for sampling and quick numeric sanity checks.
pub trait Field: Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + Send + Sync + 'static {
    /// Multiplicative inverse, `None` for zero.
    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    /// Integer power with a possibly negative exponent.
    fn checked_powi(&self, exp: i32) -> Option<Self> {
        let base = if exp < 0 { self.checked_inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc * base.clone();
        }
        Some(acc)
    }

    fn from_i64(value: i64) -> Self;

    fn to_f64_lossy(&self) -> f64;

    /// Whether the value is `>= 0`.
    fn is_nonnegative(&self) -> bool;
}

impl Field for BigRational {
    fn checked_powi(&self, exp: i32) -> Option<Self> {
        if exp < 0 && self.is_zero() {
            return None;
        }
        Some(num_traits::pow::Pow::pow(self, exp))
    }

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn is_nonnegative(&self) -> bool {
        !self.is_negative()
    }
}

impl Field for f64 {
    fn from_i64(value: i64) -> Self {
        value as f64
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }

    fn is_nonnegative(&self) -> bool {
        *self >= 0.0
    }
}

/// `numer / denom` as an exact rational. Panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rational_one() -> BigRational {
    BigRational::one()
}

pub fn rational_zero() -> BigRational {
    BigRational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_powers_of_zero_are_rejected() {
        assert_eq!(rational_zero().checked_powi(-1), None);
        assert_eq!(rational_zero().checked_powi(0), Some(rational_one()));
        assert_eq!(0.0f64.checked_powi(-2), None);
    }

    #[test]
    fn rational_powers() {
        assert_eq!(ratio(2, 3).checked_powi(-2), Some(ratio(9, 4)));
        assert_eq!(ratio(2, 3).checked_powi(3), Some(ratio(8, 27)));
        assert_eq!(2.0f64.checked_powi(-2), Some(0.25));
    }
}
