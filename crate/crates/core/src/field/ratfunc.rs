//! The field Q(κ) of rational functions in one indeterminate.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use crate::error::Error;

/// A reduced fraction `num / den` of integer polynomials in `κ`.
///
/// Canonical form: `den ≠ 0` with positive leading coefficient, `num` and
/// `den` coprime over Q, and the integer contents of `num` and `den` coprime.
/// Zero is `0 / 1`. Two values are equal iff their canonical forms coincide.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    /// Builds `num / den` in canonical form.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn kappa() -> Self {
        RatFunc { num: IntPoly::kappa(), den: IntPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc { num: IntPoly::constant(BigInt::from(n)), den: IntPoly::one() }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        RatFunc {
            num: IntPoly::constant(q.numer().clone()),
            den: IntPoly::constant(q.denom().clone()),
        }
    }

    /// `a + bκ` for rationals `a`, `b`.
    pub fn linear(a: &BigRational, b: &BigRational) -> Self {
        let l = a.denom().lcm(b.denom());
        let an = a.numer() * (&l / a.denom());
        let bn = b.numer() * (&l / b.denom());
        Self::reduce(IntPoly::linear(an, bn), IntPoly::constant(l))
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The rational value when `self` does not depend on `κ`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        Some(BigRational::new(self.num.constant_term(), self.den.constant_term()))
    }

    pub(crate) fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (mut num, mut den) = if den.is_constant() {
            let d = den.constant_term();
            let g = num.content().gcd(&d);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact_int(&g), den.div_exact_int(&g))
            }
        } else if num.is_constant() {
            let g = den.content().gcd(&num.constant_term());
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact_int(&g), den.div_exact_int(&g))
            }
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    /// Builds `num / den` when the caller knows the two are coprime over Q;
    /// only integer contents and signs are normalized.
    pub(crate) fn from_coprime(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let mut g = num.content().gcd(&den.content());
        if den.leading().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        if g.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: num.div_exact_int(&g), den: den.div_exact_int(&g) }
        }
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self * &other.inverse()?)
    }

    /// Exact value at `κ = κ₀`; a vanishing denominator is a pole, since the
    /// canonical form has no removable singularities.
    pub fn evaluate_at(&self, kappa0: &BigRational) -> Result<BigRational, Error> {
        let d = self.den.eval(kappa0);
        if d.is_zero() {
            return Err(Error::PoleAtKappa { kappa: kappa0.clone(), exponents: Vec::new() });
        }
        Ok(self.num.eval(kappa0) / d)
    }

    /// Whether the denominator vanishes at `κ₀`.
    pub fn has_pole_at(&self, kappa0: &BigRational) -> bool {
        self.den.eval(kappa0).is_zero()
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den: IntPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc { num: IntPoly::one(), den: IntPoly::one() }
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn add(self, o: &'a RatFunc) -> RatFunc {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: self.num.add(&o.num), den: IntPoly::one() };
        }
        if self.den == o.den {
            return RatFunc::reduce(self.num.add(&o.num), self.den.clone());
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        RatFunc::reduce(num, self.den.mul(&o.den))
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn mul(self, o: &'a RatFunc) -> RatFunc {
        if self.num.is_zero() || o.num.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() && (self.num.is_constant() || o.num.is_constant()) {
            return RatFunc { num: self.num.mul(&o.num), den: IntPoly::one() };
        }
        RatFunc::reduce(self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn sub(self, o: &'a RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Add for RatFunc {
    type Output = RatFunc;

    fn add(self, o: RatFunc) -> RatFunc {
        &self + &o
    }
}

impl<'a> Add<&'a RatFunc> for RatFunc {
    type Output = RatFunc;

    fn add(self, o: &'a RatFunc) -> RatFunc {
        &self + o
    }
}

impl<'a> Sub<&'a RatFunc> for RatFunc {
    type Output = RatFunc;

    fn sub(self, o: &'a RatFunc) -> RatFunc {
        &self - o
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;

    fn sub(self, o: RatFunc) -> RatFunc {
        &self - &o
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;

    fn mul(self, o: RatFunc) -> RatFunc {
        &self * &o
    }
}

impl<'a> Mul<&'a RatFunc> for RatFunc {
    type Output = RatFunc;

    fn mul(self, o: &'a RatFunc) -> RatFunc {
        &self * o
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] for a fallible form.
impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn div(self, o: &'a RatFunc) -> RatFunc {
        self.checked_div(o).expect("division by zero in Q(k)")
    }
}

impl<'a> AddAssign<&'a RatFunc> for RatFunc {
    fn add_assign(&mut self, o: &'a RatFunc) {
        *self = &*self + o;
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &IntPoly| {
            if p.is_constant() {
                p.to_string()
            } else {
                format!("({p})")
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
