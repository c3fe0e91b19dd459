//! Exact coefficient arithmetic.

mod field;
mod rational;
mod upoly;

pub use field::{ext_invert, ext_normalize, ExtensionField, FieldElement};
pub use rational::{parse_rational, render_rational};
pub use upoly::UPoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible: gcd with the minimal polynomial is {0}")]
    NonInvertible(String),
    #[error("minimal polynomial {0} is not irreducible over Q")]
    Reducible(String),
    #[error("minimal polynomial must be monic of degree at least 1")]
    BadModulus,
    #[error("elements belong to different fields")]
    FieldMismatch,
}

/// Exact scalars the polynomial layer is generic over.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn try_inv(&self) -> Result<Self, ArithError>;
    fn from_i64(n: i64) -> Self;
    fn from_rational(q: &BigRational) -> Self;
    /// Some(q) when the value lies in the prime field.
    fn as_rational(&self) -> Option<BigRational>;

    fn inv(&self) -> Self {
        self.try_inv().expect("inverse of a nonzero scalar")
    }

    fn div_exact(&self, other: &Self) -> Self {
        self.clone() * other.inv()
    }
}

impl Scalar for BigRational {
    fn try_inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            Err(ArithError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn as_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn q_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
