//! The field Q(q) of rational functions in q.
//!
//! Every value is kept in a canonical reduced form: numerator and
//! denominator share no factor (integer content included), the denominator
//! has a positive leading coefficient, and zero is `0/1`. Equality of values
//! is therefore plain structural equality, which is what makes the identity
//! checks in this crate decidable.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::intpoly::IntPoly;
use super::FieldError;

/// Element of Q(q) in canonical reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    /// Builds `num/den` in canonical form. Fails on a zero denominator.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    /// Canonicalizes a fraction with a known-nonzero denominator.
    fn reduced(num: IntPoly, den: IntPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        if den.leading().is_negative() {
            num = -&num;
            den = -&den;
        }
        RationalFunction { num, den }
    }

    /// Wraps a fraction already known to be in canonical form.
    fn canonical(num: IntPoly, den: IntPoly) -> Self {
        debug_assert!(num.gcd(&den).is_one() || num.is_zero());
        debug_assert!(!den.leading().is_negative());
        if num.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        RationalFunction {
            num: IntPoly::q(),
            den: IntPoly::one(),
        }
    }

    /// q^k for any integer k; negative powers land in the denominator.
    pub fn q_power(k: i64) -> Self {
        if k >= 0 {
            RationalFunction::from_poly(IntPoly::monomial(BigInt::from(1), k as usize))
        } else {
            RationalFunction {
                num: IntPoly::one(),
                den: IntPoly::monomial(BigInt::from(1), (-k) as usize),
            }
        }
    }

    pub fn integer(v: i64) -> Self {
        RationalFunction::from_poly(IntPoly::from(v))
    }

    /// Exact rational constant `n/d`. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        RationalFunction::new(IntPoly::from(n), IntPoly::from(d)).expect("nonzero denominator")
    }

    pub fn from_poly(num: IntPoly) -> Self {
        RationalFunction {
            num,
            den: IntPoly::one(),
        }
    }

    pub fn from_big_rational(v: &BigRational) -> Self {
        Self::reduced(
            IntPoly::constant(v.numer().clone()),
            IntPoly::constant(v.denom().clone()),
        )
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Multiplicative inverse; fails on zero.
    pub fn try_inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let mut num = self.den.clone();
        let mut den = self.num.clone();
        if den.leading().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalFunction::canonical(num, den))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * &rhs.try_inv()?)
    }

    /// Integer power, including negative exponents of nonzero values.
    pub fn pow(&self, k: i64) -> Result<Self, FieldError> {
        if k < 0 && self.is_zero() {
            return Err(FieldError::ZeroToNegativePower);
        }
        let base = if k < 0 { self.try_inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = RationalFunction::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Exact evaluation at q = q0.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational, FieldError> {
        let den = self.den.eval_rational(q0);
        if den.is_zero() {
            return Err(FieldError::PoleAtPoint);
        }
        Ok(self.num.eval_rational(q0) / den)
    }

    /// Value at q = 1 of the reduced form; removable singularities are
    /// already cancelled by canonicalization.
    pub fn limit_q1(&self) -> Result<BigRational, FieldError> {
        let den = self.den.eval_at_one();
        if den.is_zero() {
            return Err(FieldError::PoleAtOne);
        }
        Ok(BigRational::new(self.num.eval_at_one(), den))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Knuth's reduced addition: with both operands canonical, only the
        // denominator cofactors can carry a common divisor.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return RationalFunction::canonical(num, den);
        }
        let db = self.den.div_exact(&g).unwrap();
        let dd = rhs.den.div_exact(&g).unwrap();
        let t = &(&self.num * &dd) + &(&rhs.num * &db);
        if t.is_zero() {
            return RationalFunction::zero();
        }
        let h = t.gcd(&g);
        let num = t.div_exact(&h).unwrap();
        let den = &db * &rhs.den.div_exact(&h).unwrap();
        RationalFunction::canonical(num, den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // Cross-cancel before multiplying so the product is born reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.div_exact(&g1).unwrap() * &rhs.num.div_exact(&g2).unwrap();
        let den = &self.den.div_exact(&g2).unwrap() * &rhs.den.div_exact(&g1).unwrap();
        RationalFunction::canonical(num, den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_div(rhs).expect("division by zero rational function")
    }
}

impl From<i64> for RationalFunction {
    fn from(v: i64) -> Self {
        RationalFunction::integer(v)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num_plain = self.num.degree() == Some(0) || self.num.is_zero();
        let den_plain = self.den.degree() == Some(0);
        match (num_plain, den_plain) {
            (true, true) => write!(f, "{}/{}", self.num, self.den),
            (true, false) => write!(f, "{}/({})", self.num, self.den),
            (false, true) => write!(f, "({})/{}", self.num, self.den),
            (false, false) => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RationalFunctionJson {
    num: IntPoly,
    den: IntPoly,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RationalFunctionJson {
            num: self.num.clone(),
            den: self.den.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RationalFunctionJson::deserialize(deserializer)?;
        RationalFunction::new(raw.num, raw.den)
            .map_err(|e| D::Error::custom(format!("invalid rational function: {e}")))
    }
}
