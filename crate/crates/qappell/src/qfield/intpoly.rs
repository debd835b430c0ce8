//! Polynomials in the indeterminate `q` with arbitrary-precision integer
//! coefficients.
//!
//! This is the base ring for everything else: elements of Q(q) are reduced
//! ratios of two `IntPoly` values. Coefficients are stored ascending by power
//! of q; the canonical zero is the empty coefficient vector, and nonzero
//! polynomials never carry trailing zero coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Integer-coefficient polynomial in q, ascending powers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial `c * q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of q^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading (highest-power) coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest absolute value among the coefficients.
    fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content. The zero polynomial stays zero.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c)
            .expect("content divides every coefficient")
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact scalar division; `None` if any coefficient is not divisible.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<IntPoly> {
        if c.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (quot, rem) = a.div_rem(c);
            if !rem.is_zero() {
                return None;
            }
            out.push(quot);
        }
        Some(IntPoly { coeffs: out })
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at q = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact polynomial division over the integers; `None` unless the
    /// divisor divides `self` with an integer-coefficient quotient.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let (da, dd) = (self.degree().unwrap(), d.degree().unwrap());
        if da < dd {
            return None;
        }
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - dd + 1];
        for i in (0..=da - dd).rev() {
            let top = std::mem::take(&mut rem[i + dd]);
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[i + j] -= &qc * dc;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// Greatest common divisor, normalized to a positive leading coefficient.
    ///
    /// Integer contents are split off first, and the primitive parts go
    /// through a heuristic gcd (evaluate at a point larger than any root,
    /// take the integer gcd, lift it back through balanced base-xi digits,
    /// verify by trial division). The heuristic almost always lands on the
    /// first try; if it keeps missing we fall back to a primitive
    /// pseudo-remainder sequence, which is slower but unconditional.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let ca = self.content();
        let cb = other.content();
        let c = ca.gcd(&cb);
        let pa = self.div_scalar_exact(&ca).unwrap().normalize_sign();
        let pb = other.div_scalar_exact(&cb).unwrap().normalize_sign();
        let g = gcd_heuristic(&pa, &pb).unwrap_or_else(|| gcd_prs(&pa, &pb));
        g.scale(&c)
    }

    /// Flips the sign so the leading coefficient is positive.
    pub fn normalize_sign(&self) -> IntPoly {
        if self.leading().is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

/// Heuristic univariate gcd over Z[q]. Returns a primitive, sign-normalized
/// divisor of both inputs, or `None` if the candidate failed verification
/// at every evaluation point tried.
fn gcd_heuristic(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    // Any xi > 1 + height bounds the roots of both polynomials, so the
    // evaluations below are nonzero and the digit lift is faithful.
    let mut xi: BigInt = (a.height().min(b.height()) + 1) * 2 + 2;
    for _ in 0..6 {
        let alpha = a.eval_int(&xi);
        let beta = b.eval_int(&xi);
        let gamma = alpha.gcd(&beta);
        let g = lift_from_point(&gamma, &xi).primitive_part().normalize_sign();
        if !g.is_zero() && a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
            return Some(g);
        }
        xi = xi * 2 + 29;
    }
    None
}

/// Reconstructs a polynomial from its value at xi using balanced digits in
/// (-xi/2, xi/2].
fn lift_from_point(value: &BigInt, xi: &BigInt) -> IntPoly {
    let mut coeffs = Vec::new();
    let mut rest = value.clone();
    let half = xi / 2;
    while !rest.is_zero() {
        let mut digit = rest.mod_floor(xi);
        if digit > half {
            digit -= xi;
        }
        rest = (rest - &digit) / xi;
        coeffs.push(digit);
    }
    IntPoly::new(coeffs)
}

/// Primitive pseudo-remainder sequence gcd for primitive inputs.
fn gcd_prs(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut r0, mut r1) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    while !r1.is_zero() {
        let rem = pseudo_rem(&r0, &r1).primitive_part();
        r0 = r1;
        r1 = rem;
    }
    r0.normalize_sign()
}

/// Pseudo-remainder of `a` by `b`: lc(b)^(deg a - deg b + 1) * a mod b.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("pseudo_rem by zero");
    let lead = b.leading();
    let mut r = a.clone();
    let mut scale_left = a.degree().map_or(0, |da| da.saturating_sub(db)) as i64 + 1;
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let shift = IntPoly::monomial(r.leading(), dr - db);
        r = &r.scale(&lead) - &(&shift * b);
        scale_left -= 1;
    }
    for _ in 0..scale_left {
        r = r.scale(&lead);
    }
    r
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        IntPoly::new(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl From<i64> for IntPoly {
    fn from(v: i64) -> Self {
        IntPoly::constant(BigInt::from(v))
    }
}

impl From<&[i64]> for IntPoly {
    fn from(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

// JSON form: ascending coefficients as decimal strings, so consumers
// without bignum support can at least round-trip the data.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.is_zero() {
            return vec!["0".to_string()].serialize(serializer);
        }
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            let v: BigInt = s
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid integer coefficient {s:?}")))?;
            coeffs.push(v);
        }
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from(coeffs)
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 1]); // 1 + q
        let b = p(&[-1, 1]); // -1 + q
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(a.pow(2), p(&[1, 2, 1]));
    }

    #[test]
    fn exact_division() {
        // (1 - q^3) = (1 - q)(1 + q + q^2)
        let n = p(&[1, 0, 0, -1]);
        let d = p(&[1, -1]);
        assert_eq!(n.div_exact(&d), Some(p(&[1, 1, 1])));
        assert_eq!(d.div_exact(&n), None);
        assert_eq!(p(&[1, 1]).div_exact(&p(&[2])), None);
        assert_eq!(p(&[2, 2]).div_exact(&p(&[2])), Some(p(&[1, 1])));
    }

    #[test]
    fn content_and_primitive_part() {
        let a = p(&[4, -6, 2]);
        assert_eq!(a.content(), BigInt::from(2));
        assert_eq!(a.primitive_part(), p(&[2, -3, 1]));
        assert_eq!(IntPoly::zero().content(), BigInt::zero());
    }

    #[test]
    fn gcd_finds_common_factor() {
        let a = &p(&[1, -1]) * &p(&[1, 1, 1]); // (1-q)(1+q+q^2)
        let b = &p(&[1, -1]) * &p(&[3, 7]); // (1-q)(3+7q)
        // gcd is q - 1 after sign normalization
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        // coprime pair
        assert_eq!(p(&[1, 1]).gcd(&p(&[-1, 1])), IntPoly::one());
        // contents participate
        assert_eq!(p(&[6]).gcd(&p(&[4, 8])), p(&[2]));
        assert_eq!(IntPoly::zero().gcd(&p(&[0, -3])), p(&[0, 3]));
    }

    #[test]
    fn gcd_matches_prs_on_structured_inputs() {
        // products of cyclotomic-like factors, the common case in this crate
        let f1 = &p(&[1, -1]) * &p(&[1, 0, -1]);
        let f2 = &p(&[1, 0, -1]) * &p(&[1, 0, 0, 1]);
        let g = f1.gcd(&f2);
        let prs = gcd_prs(&f1.primitive_part(), &f2.primitive_part());
        assert_eq!(g, prs);
        assert!(f1.div_exact(&g).is_some());
        assert!(f2.div_exact(&g).is_some());
    }

    #[test]
    fn evaluation() {
        let a = p(&[1, 1, 1]);
        assert_eq!(a.eval_int(&BigInt::from(2)), BigInt::from(7));
        assert_eq!(a.eval_at_one(), BigInt::from(3));
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(
            a.eval_rational(&half),
            BigRational::new(BigInt::from(7), BigInt::from(4))
        );
    }

    #[test]
    fn display_rendering() {
        assert_eq!(p(&[-1, 0, 2]).to_string(), "-1 + 2*q^2");
        assert_eq!(p(&[0, 1]).to_string(), "q");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let a = p(&[0, -3, 5]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"["0","-3","5"]"#);
        let back: IntPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(a, back);
        let z: IntPoly = serde_json::from_str(r#"["0"]"#).unwrap();
        assert!(z.is_zero());
    }
}
