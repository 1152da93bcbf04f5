//! Scalar abstraction for the numeric core.
//!
//! Everything probability-valued in this crate is generic over [`Real`], so
//! the same code runs in `f32` or `f64`. The crate root exports `f64` aliases
//! for the common types; `f64` is the precision the documented tolerances
//! assume.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum<Self>
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Absolute tolerance for probability-mass accounting checks
    /// (normalization, partition of unity).
    fn mass_tol() -> Self;

    #[inline]
    fn from_f64_lossy(v: f64) -> Self {
        Self::from_f64(v).expect("representable f64")
    }

    #[inline]
    fn from_usize_lossy(v: usize) -> Self {
        Self::from_usize(v).expect("representable usize")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("finite scalar")
    }
}

impl Real for f64 {
    #[inline]
    fn mass_tol() -> f64 {
        1e-12
    }
}

impl Real for f32 {
    #[inline]
    fn mass_tol() -> f32 {
        1e-5
    }
}

/// Compensated (Neumaier) summation accumulator.
///
/// Keeps the running error of the plain sum in a separate compensation term,
/// so accumulating millions of small probabilities does not lose digits.
#[derive(Clone, Copy, Debug)]
pub struct CompensatedSum<R: Real> {
    sum: R,
    compensation: R,
}

impl<R: Real> CompensatedSum<R> {
    #[inline]
    pub fn new() -> Self {
        Self {
            sum: R::zero(),
            compensation: R::zero(),
        }
    }

    #[inline]
    pub fn add(&mut self, value: R) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> R {
        self.sum + self.compensation
    }
}

impl<R: Real> Default for CompensatedSum<R> {
    fn default() -> Self {
        Self::new()
    }
}

/// Sum an iterator with compensation.
pub fn compensated_sum<R: Real, I: IntoIterator<Item = R>>(values: I) -> R {
    let mut acc = CompensatedSum::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensation_recovers_lost_digits() {
        // 1 + 1e-16 repeated: naive f64 summation stays at 1.0.
        let mut acc = CompensatedSum::new();
        acc.add(1.0f64);
        for _ in 0..1_000_000 {
            acc.add(1e-16);
        }
        let exact = 1.0 + 1e-10;
        assert!((acc.value() - exact).abs() < 1e-15);
    }

    #[test]
    fn matches_plain_sum_on_benign_input() {
        let xs: Vec<f64> = (1..=100).map(|i| i as f64).collect();
        assert_eq!(compensated_sum(xs.iter().copied()), 5050.0);
    }
}
