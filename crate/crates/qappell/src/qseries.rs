//! Truncated formal power series in the divided-power basis: a series is
//! stored as the coefficients c_n of sum c_n t^n / [n]_q!.
//!
//! In this basis multiplication is a Gaussian-binomial convolution,
//! (a b)_n = sum_k [n k]_q a_k b_{n-k}, which is exactly how every
//! generating function used by the number families is written. Coefficients
//! are generic over a commutative ring so the same engine drives both
//! scalar series over Q(q) and series whose coefficients are polynomials
//! in x and y.
//!
//! Truncation order is fixed at construction and binary operations demand
//! equal orders; nothing ever truncates silently.

use std::fmt;

use crate::qcombinatorics::{half_pochhammer_minus_one, q_binomial, q_int};
use crate::qfield::RationalFunction;

/// Errors from series construction and division.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesError {
    /// Reciprocal of a series whose constant term is not invertible.
    NonInvertibleConstantTerm,
    /// Division by t of a series with a nonzero constant term.
    NonzeroConstantTerm,
    /// Coefficient index past the truncation order.
    IndexBeyondOrder,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NonInvertibleConstantTerm => {
                write!(f, "constant term is not invertible")
            }
            SeriesError::NonzeroConstantTerm => write!(f, "constant term is nonzero"),
            SeriesError::IndexBeyondOrder => write!(f, "coefficient index beyond order"),
        }
    }
}

impl std::error::Error for SeriesError {}

/// Commutative coefficient ring with exact equality, as needed by the
/// series engine: Q(q) itself, or polynomial rings over it.
pub trait SeriesCoeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Embeds a Q(q) scalar into the ring.
    fn from_rational(r: &RationalFunction) -> Self;
    /// Multiplicative inverse, when one exists in the ring.
    fn try_invert(&self) -> Option<Self>;
}

impl SeriesCoeff for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_rational(r: &RationalFunction) -> Self {
        r.clone()
    }
    fn try_invert(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

/// Truncated series sum_{n<=N} c_n t^n/[n]_q! with coefficients in R.
#[derive(Clone, Debug, PartialEq)]
pub struct DividedPowerSeries<R> {
    coeffs: Vec<R>,
}

impl<R: SeriesCoeff> DividedPowerSeries<R> {
    /// Builds a series from its divided-power coefficients c_0..c_N.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        DividedPowerSeries { coeffs }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> R) -> Self {
        DividedPowerSeries {
            coeffs: (0..=order).map(|n| f(n)).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| R::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { R::one() } else { R::zero() })
    }

    /// Truncation order N (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient c_n. Panics past the truncation order; use
    /// [`try_coeff`](Self::try_coeff) for a checked lookup.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn try_coeff(&self, n: usize) -> Result<&R, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::IndexBeyondOrder)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.order(),
            other.order(),
            "series orders differ; nothing truncates implicitly"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        Self::from_fn(self.order(), |n| self.coeffs[n].add(&other.coeffs[n]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        Self::from_fn(self.order(), |n| self.coeffs[n].add(&other.coeffs[n].neg()))
    }

    pub fn negate(&self) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n].neg())
    }

    pub fn scalar_mul(&self, c: &R) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n].mul(c))
    }

    /// Product in the divided-power basis:
    /// (a b)_n = sum_k [n k]_q a_k b_{n-k}.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        Self::from_fn(self.order(), |n| {
            let mut acc = R::zero();
            for k in 0..=n {
                if self.coeffs[k].is_zero() || other.coeffs[n - k].is_zero() {
                    continue;
                }
                let w = R::from_rational(&q_binomial(n as i64, k as i64));
                acc = acc.add(&w.mul(&self.coeffs[k]).mul(&other.coeffs[n - k]));
            }
            acc
        })
    }

    /// Multiplicative inverse up to the truncation order, by triangular
    /// back-substitution: b_n = -a_0^{-1} sum_{k<n} [n k]_q b_k a_{n-k}.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0]
            .try_invert()
            .ok_or(SeriesError::NonInvertibleConstantTerm)?;
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = R::zero();
            for k in 0..n {
                if out[k].is_zero() || self.coeffs[n - k].is_zero() {
                    continue;
                }
                let w = R::from_rational(&q_binomial(n as i64, k as i64));
                acc = acc.add(&w.mul(&out[k]).mul(&self.coeffs[n - k]));
            }
            out.push(inv0.mul(&acc).neg());
        }
        Ok(DividedPowerSeries { coeffs: out })
    }

    /// Argument scaling t -> lambda t, i.e. c_n -> lambda^n c_n.
    pub fn scale_arg(&self, lambda: &R) -> Self {
        let mut power = R::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    power = power.mul(lambda);
                }
                c.mul(&power)
            })
            .collect();
        DividedPowerSeries { coeffs }
    }

    /// Divides by t in the divided-power basis. The constant term must be
    /// zero; the order drops by one and d_n = c_{n+1}/[n+1]_q.
    pub fn divide_by_t(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        assert!(self.order() >= 1, "cannot drop the order below zero");
        let coeffs = (1..=self.order())
            .map(|n| {
                let inv = q_int(n as i64).try_inv().expect("[n]_q is nonzero for n >= 1");
                self.coeffs[n].mul(&R::from_rational(&inv))
            })
            .collect();
        Ok(DividedPowerSeries { coeffs })
    }
}

/// The three q-exponential kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QExpKind {
    /// e_q: all divided-power coefficients 1.
    SmallE,
    /// E_q: coefficients q^{n(n-1)/2}.
    BigE,
    /// The improved exponential e_q(z/2) E_q(z/2): coefficients
    /// (-1;q)_n / 2^n. Its reciprocal is its argument negation, which is
    /// what forces the parity laws of the number families.
    Improved,
}

/// The chosen q-exponential as a divided-power series.
pub fn q_exponential(kind: QExpKind, order: usize) -> DividedPowerSeries<RationalFunction> {
    DividedPowerSeries::from_fn(order, |n| match kind {
        QExpKind::SmallE => RationalFunction::one(),
        QExpKind::BigE => RationalFunction::q_power((n as i64) * (n as i64 - 1) / 2),
        QExpKind::Improved => half_pochhammer_minus_one(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::IntPoly;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(IntPoly::from(num), IntPoly::from(den)).unwrap()
    }

    #[test]
    fn exponential_kernels() {
        let e = q_exponential(QExpKind::SmallE, 4);
        assert!(e.coeffs().iter().all(|c| c.is_one()));
        let big = q_exponential(QExpKind::BigE, 4);
        assert_eq!(big.coeff(3), &rf(&[0, 0, 0, 1], &[1]));
        let imp = q_exponential(QExpKind::Improved, 4);
        assert_eq!(imp.coeff(0), &RationalFunction::one());
        assert_eq!(imp.coeff(1), &RationalFunction::one());
        assert_eq!(imp.coeff(2), &rf(&[1, 1], &[2]));
    }

    #[test]
    fn mul_unit_and_commutativity() {
        let imp = q_exponential(QExpKind::Improved, 8);
        let one = DividedPowerSeries::one(8);
        assert_eq!(one.mul(&imp), imp);
        let big = q_exponential(QExpKind::BigE, 8);
        assert_eq!(imp.mul(&big), big.mul(&imp));
    }

    #[test]
    fn reciprocal_of_improved_is_argument_negation() {
        let n = 12;
        let imp = q_exponential(QExpKind::Improved, n);
        let recip = imp.reciprocal().unwrap();
        let negated = imp.scale_arg(&RationalFunction::integer(-1));
        assert_eq!(recip, negated);
        assert_eq!(
            DividedPowerSeries::<RationalFunction>::one(4)
                .reciprocal()
                .unwrap(),
            DividedPowerSeries::one(4)
        );
        let not_invertible = DividedPowerSeries::from_coeffs(vec![
            RationalFunction::zero(),
            RationalFunction::one(),
        ]);
        assert_eq!(
            not_invertible.reciprocal(),
            Err(SeriesError::NonInvertibleConstantTerm)
        );
    }

    #[test]
    fn improved_exponential_inverse_identity() {
        // E(t) E(-t) = 1 up to order 24
        let n = 24;
        let imp = q_exponential(QExpKind::Improved, n);
        let neg = imp.scale_arg(&RationalFunction::integer(-1));
        assert_eq!(imp.mul(&neg), DividedPowerSeries::one(n));
    }

    #[test]
    fn scale_arg_rules() {
        let imp = q_exponential(QExpKind::Improved, 6);
        assert_eq!(imp.scale_arg(&RationalFunction::one()), imp);
        let zeroed = imp.scale_arg(&RationalFunction::zero());
        assert_eq!(zeroed.coeff(0), &RationalFunction::one());
        assert!(zeroed.coeffs()[1..].iter().all(|c| c.is_zero()));
        let a = rf(&[1, 2], &[3]);
        let b = rf(&[0, 5], &[1, 1]);
        let ab = &a * &b;
        assert_eq!(imp.scale_arg(&a).scale_arg(&b), imp.scale_arg(&ab));
        // scaling by 1/m matches coefficientwise division by m^n
        let third = rf(&[1], &[3]);
        let scaled = imp.scale_arg(&third);
        for n in 0..=6 {
            let expect = imp.coeff(n) * &third.pow(n as i64).unwrap();
            assert_eq!(scaled.coeff(n), &expect);
        }
    }

    #[test]
    fn divide_by_t_reindexes() {
        // the series t itself becomes 1
        let t = DividedPowerSeries::from_coeffs(vec![
            RationalFunction::zero(),
            RationalFunction::one(),
            RationalFunction::zero(),
        ]);
        let one = t.divide_by_t().unwrap();
        assert_eq!(one, DividedPowerSeries::one(1));

        let imp = q_exponential(QExpKind::Improved, 6);
        let shifted = imp.sub(&DividedPowerSeries::one(6)).divide_by_t().unwrap();
        assert_eq!(shifted.coeff(0), &RationalFunction::one());
        assert_eq!(shifted.coeff(1), &rf(&[1], &[2]));

        assert_eq!(
            imp.divide_by_t(),
            Err(SeriesError::NonzeroConstantTerm)
        );
    }

    #[test]
    fn add_scalar_and_coeff_access() {
        let imp = q_exponential(QExpKind::Improved, 5);
        let cancelled = imp.add(&imp.scalar_mul(&RationalFunction::integer(-1)));
        assert_eq!(cancelled, DividedPowerSeries::zero(5));
        let doubled = imp.scalar_mul(&RationalFunction::integer(2));
        assert_eq!(doubled.coeff(2), &rf(&[1, 1], &[1]));
        assert_eq!(imp.try_coeff(9), Err(SeriesError::IndexBeyondOrder));
        assert!(imp.try_coeff(5).is_ok());
    }

    #[test]
    #[should_panic(expected = "series orders differ")]
    fn mixed_orders_panic() {
        let a = q_exponential(QExpKind::SmallE, 3);
        let b = q_exponential(QExpKind::SmallE, 4);
        let _ = a.mul(&b);
    }
}
