use super::ExactRational;
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

/// Exact field arithmetic shared by rationals and formal rational functions.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(r: &ExactRational) -> Self;
    fn inv(&self) -> Option<Self>;
    /// The value as a rational if it does not depend on a formal symbol.
    fn to_rational(&self) -> Option<ExactRational>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&ExactRational::from_integer(n.into()))
    }

    fn addi(&self, n: i64) -> Self {
        self.clone() + Self::from_int(n)
    }

    fn muli(&self, n: i64) -> Self {
        self.clone() * Self::from_int(n)
    }

    fn mulr(&self, r: &ExactRational) -> Self {
        self.clone() * Self::from_rational(r)
    }

    fn div_checked(&self, d: &Self, ctx: &'static str) -> Result<Self> {
        let inv = d.inv().ok_or(Error::VanishingDenominator(ctx))?;
        Ok(self.clone() * inv)
    }
}

impl Field for ExactRational {
    fn from_rational(r: &ExactRational) -> Self {
        r.clone()
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn to_rational(&self) -> Option<ExactRational> {
        Some(self.clone())
    }
}
