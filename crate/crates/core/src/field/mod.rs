//! Exact coefficient fields: Q via [`BigRational`] and Q(κ) via [`RatFunc`].

mod intpoly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

pub use intpoly::IntPoly;
pub use num_rational::BigRational;
pub use ratfunc::RatFunc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

/// A field of exact coefficients for vector-valued polynomials.
///
/// Implemented by Q (values specialized at some `κ₀`) and by Q(κ) (generic `κ`).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
{
    fn from_rational(q: &BigRational) -> Self;

    fn inverse(&self) -> Result<Self, Error>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }
}

impl Scalar for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

impl Scalar for RatFunc {
    fn from_rational(q: &BigRational) -> Self {
        RatFunc::from_rational(q)
    }

    fn inverse(&self) -> Result<Self, Error> {
        RatFunc::inverse(self)
    }
}

/// `n/d` as a rational.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"` into an exact rational. Floats are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}; expected p/q"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let valid = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(n) || !valid(d) || d.starts_with('-') {
        return Err(bad());
    }
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

/// Formats a rational as `"p/q"` (or `"p"` when integral).
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
