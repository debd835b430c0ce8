//! Polynomials in x and y over Q(q), and the q-Bernoulli, q-Euler and
//! q-Genocchi polynomial families built on them.
//!
//! A univariate family polynomial is the curly-binomial sum
//! `P_n(x) = sum_k {n k}_q v_k x^{n-k}` over the family's number table; the
//! two-variable version comes either from the q-addition form
//! `sum_k [n k]_q v_k (x (+)_q y)^{n-k}` or from appending y-powers to the
//! univariate polynomials. The verification suite checks that the two
//! constructions agree.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::qcombinatorics::{curly_binomial, oplus_expand, q_binomial, q_int};
use crate::qfield::{FieldError, RationalFunction};
use crate::qnumbers::{classical_numbers, NumberFamily, NumberTable};
use crate::qseries::SeriesCoeff;

/// Polynomial in x and y with Q(q) coefficients. Zero coefficients are
/// never stored, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct QPoly {
    terms: BTreeMap<(u32, u32), RationalFunction>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(RationalFunction::one())
    }

    pub fn constant(c: RationalFunction) -> Self {
        QPoly::monomial(0, 0, c)
    }

    /// The monomial `coeff * x^i * y^j`.
    pub fn monomial(i: u32, j: u32, coeff: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((i, j), coeff);
        }
        QPoly { terms }
    }

    pub fn var_x() -> Self {
        QPoly::monomial(1, 0, RationalFunction::one())
    }

    pub fn var_y() -> Self {
        QPoly::monomial(0, 1, RationalFunction::one())
    }

    pub fn x_power(n: u32) -> Self {
        QPoly::monomial(n, 0, RationalFunction::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> RationalFunction {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    fn insert_add(&mut self, key: (u32, u32), value: RationalFunction) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &value;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (key, value) in &other.terms {
            out.insert_add(*key, value.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        QPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QPoly::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                out.insert_add((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes x -> xs * x and y -> ys * y.
    pub fn substitute_scale(&self, xs: &RationalFunction, ys: &RationalFunction) -> Self {
        let mut out = QPoly::zero();
        for ((i, j), c) in &self.terms {
            let factor = &xs.pow(*i as i64).unwrap() * &ys.pow(*j as i64).unwrap();
            out.insert_add((*i, *j), c * &factor);
        }
        out
    }

    /// Substitutes a scalar for y, leaving a polynomial in x alone.
    pub fn substitute_y(&self, y0: &RationalFunction) -> Self {
        let mut out = QPoly::zero();
        for ((i, j), c) in &self.terms {
            out.insert_add((*i, 0), c * &y0.pow(*j as i64).unwrap());
        }
        out
    }

    /// Exchanges the two variables.
    pub fn swap_vars(&self) -> Self {
        QPoly {
            terms: self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect(),
        }
    }

    /// Jackson q-derivative in x: x^i -> [i]_q x^(i-1), y untouched.
    pub fn jackson_derivative_x(&self) -> Self {
        let mut out = QPoly::zero();
        for ((i, j), c) in &self.terms {
            if *i == 0 {
                continue;
            }
            out.insert_add((*i - 1, *j), c * &q_int(*i as i64));
        }
        out
    }

    pub fn eval(&self, x0: &RationalFunction, y0: &RationalFunction) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for ((i, j), c) in &self.terms {
            let term = &(&x0.pow(*i as i64).unwrap() * &y0.pow(*j as i64).unwrap()) * c;
            acc = &acc + &term;
        }
        acc
    }

    /// Coefficientwise q -> 1 limit. Fails if any reduced coefficient has a
    /// pole at 1.
    pub fn limit_q1(&self) -> Result<RatPoly, FieldError> {
        let mut out = RatPoly::zero();
        for ((i, j), c) in &self.terms {
            out.insert_add((*i, *j), c.limit_q1()?);
        }
        Ok(out)
    }
}

impl SeriesCoeff for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        QPoly::add(self, other)
    }
    fn neg(&self) -> Self {
        self.negate()
    }
    fn mul(&self, other: &Self) -> Self {
        QPoly::mul(self, other)
    }
    fn from_rational(r: &RationalFunction) -> Self {
        QPoly::constant(r.clone())
    }
    fn try_invert(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let c = self.terms.get(&(0, 0))?;
        Some(QPoly::constant(c.try_inv().ok()?))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let mut s = String::new();
                    if *i > 0 {
                        s.push('x');
                        if *i > 1 {
                            s.push_str(&format!("^{i}"));
                        }
                    }
                    if *j > 0 {
                        if !s.is_empty() {
                            s.push('*');
                        }
                        s.push('y');
                        if *j > 1 {
                            s.push_str(&format!("^{j}"));
                        }
                    }
                    s
                }
            };
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "({c})*{vars}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    i: u32,
    j: u32,
    coeff: RationalFunction,
}

#[derive(Serialize, Deserialize)]
struct QPolyJson {
    monomials: Vec<MonomialJson>,
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let monomials = self
            .terms
            .iter()
            .map(|((i, j), coeff)| MonomialJson {
                i: *i,
                j: *j,
                coeff: coeff.clone(),
            })
            .collect();
        QPolyJson { monomials }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = QPolyJson::deserialize(deserializer)?;
        let mut out = QPoly::zero();
        for m in raw.monomials {
            if out.terms.contains_key(&(m.i, m.j)) {
                return Err(D::Error::custom(format!(
                    "duplicate monomial x^{} y^{}",
                    m.i, m.j
                )));
            }
            out.insert_add((m.i, m.j), m.coeff);
        }
        Ok(out)
    }
}

/// Polynomial in x and y with exact rational coefficients: the classical
/// (q = 1) side of the limit checks.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct RatPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly::default()
    }

    pub fn insert_add(&mut self, key: (u32, u32), value: BigRational) {
        if value.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigRational::zero);
        *slot += value;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|((i, j), c)| match (i, j) {
                (0, 0) => format!("{c}"),
                (i, 0) if *i == 1 => format!("({c})*x"),
                (i, 0) => format!("({c})*x^{i}"),
                (0, j) if *j == 1 => format!("({c})*y"),
                (0, j) => format!("({c})*y^{j}"),
                (i, j) => format!("({c})*x^{i}*y^{j}"),
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// Which construction to use for a two-variable family polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BivariateConstruction {
    /// sum_k [n k]_q v_k (x (+)_q y)^{n-k}
    QAdditionForm,
    /// sum_k {n k}_q P_k(x) y^{n-k}
    UnivariatePlusY,
}

/// (x (+)_q y)^n as a polynomial.
pub fn oplus_poly(n: usize) -> QPoly {
    let expansion = oplus_expand(n);
    let mut out = QPoly::zero();
    for (k, c) in expansion.coeffs().iter().enumerate() {
        out.insert_add((k as u32, (n - k) as u32), c.clone());
    }
    out
}

/// Univariate family polynomial P_n(x) built from a number table.
/// The table must belong to a polynomial family and reach index n.
pub fn family_poly_univariate_from(table: &NumberTable, n: usize) -> QPoly {
    assert!(table.family() != NumberFamily::Tangent, "tangent has no polynomials");
    let mut out = QPoly::zero();
    for k in 0..=n {
        let w = &curly_binomial(n as i64, k as i64) * table.value(k);
        out.insert_add(((n - k) as u32, 0), w);
    }
    out
}

/// Univariate family polynomial, computing the number table on the fly.
pub fn family_poly_univariate(family: NumberFamily, n: usize) -> QPoly {
    let table = crate::qnumbers::number_table(family, crate::qnumbers::Provenance::Recurrence, n);
    family_poly_univariate_from(&table, n)
}

/// Two-variable family polynomial built from a number table.
pub fn family_poly_bivariate_from(
    table: &NumberTable,
    n: usize,
    construction: BivariateConstruction,
) -> QPoly {
    match construction {
        BivariateConstruction::QAdditionForm => {
            let mut out = QPoly::zero();
            for k in 0..=n {
                let w = &q_binomial(n as i64, k as i64) * table.value(k);
                out = out.add(&oplus_poly(n - k).scalar_mul(&w));
            }
            out
        }
        BivariateConstruction::UnivariatePlusY => {
            let mut out = QPoly::zero();
            for k in 0..=n {
                let weight = curly_binomial(n as i64, k as i64);
                let p = family_poly_univariate_from(table, k);
                let shifted = p.mul(&QPoly::monomial(0, (n - k) as u32, weight));
                out = out.add(&shifted);
            }
            out
        }
    }
}

/// Two-variable family polynomial, computing the number table on the fly.
pub fn family_poly_bivariate(
    family: NumberFamily,
    n: usize,
    construction: BivariateConstruction,
) -> QPoly {
    let table = crate::qnumbers::number_table(family, crate::qnumbers::Provenance::Recurrence, n);
    family_poly_bivariate_from(&table, n, construction)
}

/// The inversion sum that should reproduce the monomial x^n, fully
/// expanded from the family polynomials.
///
/// Bernoulli: (2^n / ((-1;q)_n [n+1]_q)) sum_{k=0}^{n} {n+1 k}_q P_k(x).
/// Euler: (2^{n-1} / (-1;q)_n) (sum_{k=0}^{n} {n k}_q P_k(x) + P_n(x)).
/// Genocchi: (2^{n-1} / ((-1;q)_n [n+1]_q))
///           (sum_{k=0}^{n+1} {n+1 k}_q P_k(x) + P_{n+1}(x)).
pub fn monomial_expansion_from(table: &NumberTable, n: usize) -> QPoly {
    let eps_inv = curly_binomial(n as i64, 0)
        .try_inv()
        .expect("(-1;q)_n / 2^n is nonzero");
    let half = RationalFunction::ratio(1, 2);
    match table.family() {
        NumberFamily::Bernoulli => {
            let mut sum = QPoly::zero();
            for k in 0..=n {
                let p = family_poly_univariate_from(table, k);
                sum = sum.add(&p.scalar_mul(&curly_binomial(n as i64 + 1, k as i64)));
            }
            let factor = &eps_inv / &q_int(n as i64 + 1);
            sum.scalar_mul(&factor)
        }
        NumberFamily::Euler => {
            let mut sum = family_poly_univariate_from(table, n);
            for k in 0..=n {
                let p = family_poly_univariate_from(table, k);
                sum = sum.add(&p.scalar_mul(&curly_binomial(n as i64, k as i64)));
            }
            sum.scalar_mul(&(&eps_inv * &half))
        }
        NumberFamily::Genocchi => {
            let mut sum = family_poly_univariate_from(table, n + 1);
            for k in 0..=n + 1 {
                let p = family_poly_univariate_from(table, k);
                sum = sum.add(&p.scalar_mul(&curly_binomial(n as i64 + 1, k as i64)));
            }
            let factor = &(&eps_inv * &half) / &q_int(n as i64 + 1);
            sum.scalar_mul(&factor)
        }
        NumberFamily::Tangent => panic!("tangent has no polynomials"),
    }
}

/// Monomial expansion, computing the number table on the fly.
pub fn monomial_expansion(family: NumberFamily, n: usize) -> QPoly {
    let table =
        crate::qnumbers::number_table(family, crate::qnumbers::Provenance::Recurrence, n + 1);
    monomial_expansion_from(&table, n)
}

/// Classical two-variable polynomial B_n(x+y) (or Euler/Genocchi) from the
/// classical number oracle, expanded exactly.
pub fn classical_family_poly_xy(family: NumberFamily, n: usize) -> RatPoly {
    let numbers = classical_numbers(family, n);
    let mut out = RatPoly::zero();
    for (k, value) in numbers.iter().enumerate().take(n + 1) {
        if value.is_zero() {
            continue;
        }
        let p = n - k;
        // (x + y)^p expanded with ordinary binomials
        for i in 0..=p {
            let c = BigRational::from_integer(crate::qnumbers::binomial(n, k))
                * BigRational::from_integer(crate::qnumbers::binomial(p, i))
                * value;
            out.insert_add((i as u32, (p - i) as u32), c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::IntPoly;
    use crate::qnumbers::{bernoulli_numbers_recurrence, genocchi_numbers_recurrence};
    use num_bigint::BigInt;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(IntPoly::from(num), IntPoly::from(den)).unwrap()
    }

    fn x_plus_y_minus_half() -> QPoly {
        QPoly::var_x()
            .add(&QPoly::var_y())
            .add(&QPoly::constant(rf(&[-1], &[2])))
    }

    #[test]
    fn univariate_low_orders() {
        let b1 = family_poly_univariate(NumberFamily::Bernoulli, 1);
        assert_eq!(b1, QPoly::var_x().add(&QPoly::constant(rf(&[-1], &[2]))));

        let b2 = family_poly_univariate(NumberFamily::Bernoulli, 2);
        let expect = QPoly::monomial(2, 0, rf(&[1, 1], &[2]))
            .add(&QPoly::monomial(1, 0, rf(&[-1, -1], &[2])))
            .add(&QPoly::constant(rf(&[0, 1, 1], &[4, 4, 4])));
        assert_eq!(b2, expect);

        let g2 = family_poly_univariate(NumberFamily::Genocchi, 2);
        let expect = QPoly::monomial(1, 0, rf(&[1, 1], &[1]))
            .add(&QPoly::constant(rf(&[-1, -1], &[2])));
        assert_eq!(g2, expect);
    }

    #[test]
    fn bivariate_constructions_agree_low_orders() {
        for family in NumberFamily::POLYNOMIAL {
            for n in 0..=6 {
                let a = family_poly_bivariate(family, n, BivariateConstruction::QAdditionForm);
                let b = family_poly_bivariate(family, n, BivariateConstruction::UnivariatePlusY);
                assert_eq!(a, b, "family {family} n={n}");
            }
        }
        let b1 = family_poly_bivariate(NumberFamily::Bernoulli, 1, BivariateConstruction::QAdditionForm);
        assert_eq!(b1, x_plus_y_minus_half());
        let e0 = family_poly_bivariate(NumberFamily::Euler, 0, BivariateConstruction::QAdditionForm);
        assert_eq!(e0, QPoly::one());
    }

    #[test]
    fn bivariate_specializes_to_univariate_at_y_zero() {
        let table = bernoulli_numbers_recurrence(6);
        for n in 0..=6 {
            let xy = family_poly_bivariate_from(&table, n, BivariateConstruction::UnivariatePlusY);
            let x = family_poly_univariate_from(&table, n);
            assert_eq!(xy.substitute_y(&RationalFunction::zero()), x, "n={n}");
        }
    }

    #[test]
    fn jackson_derivative() {
        let x3 = QPoly::x_power(3);
        assert_eq!(
            x3.jackson_derivative_x(),
            QPoly::monomial(2, 0, rf(&[1, 1, 1], &[1]))
        );
        assert_eq!(
            QPoly::constant(rf(&[7], &[3])).jackson_derivative_x(),
            QPoly::zero()
        );
        // D_q B_2(x) = [2]_q (B_1(x) + B_1(qx)) / 2
        let b2 = family_poly_univariate(NumberFamily::Bernoulli, 2);
        let b1 = family_poly_univariate(NumberFamily::Bernoulli, 1);
        let b1_qx = b1.substitute_scale(&RationalFunction::q(), &RationalFunction::one());
        let rhs = b1
            .add(&b1_qx)
            .scalar_mul(&(&q_int(2) * &rf(&[1], &[2])));
        assert_eq!(b2.jackson_derivative_x(), rhs);
    }

    #[test]
    fn scaling_and_substitution() {
        let b1 = family_poly_univariate(NumberFamily::Bernoulli, 1);
        let scaled = b1.substitute_scale(&RationalFunction::q(), &RationalFunction::one());
        let expect = QPoly::monomial(1, 0, RationalFunction::q())
            .add(&QPoly::constant(rf(&[-1], &[2])));
        assert_eq!(scaled, expect);
        assert_eq!(
            b1.substitute_scale(&RationalFunction::one(), &RationalFunction::one()),
            b1
        );
        // B_1(x, 1/2) = x
        let b1_xy = family_poly_bivariate(NumberFamily::Bernoulli, 1, BivariateConstruction::QAdditionForm);
        assert_eq!(b1_xy.substitute_y(&rf(&[1], &[2])), QPoly::var_x());
    }

    #[test]
    fn monomial_expansion_reproduces_powers() {
        for family in NumberFamily::POLYNOMIAL {
            for n in 0..=6 {
                let e = monomial_expansion(family, n);
                assert_eq!(e, QPoly::x_power(n as u32), "family {family} n={n}");
            }
        }
    }

    #[test]
    fn evaluation_and_limits() {
        let b1_xy = family_poly_bivariate(NumberFamily::Bernoulli, 1, BivariateConstruction::QAdditionForm);
        assert_eq!(
            b1_xy.eval(&rf(&[1], &[2]), &RationalFunction::zero()),
            RationalFunction::zero()
        );
        // q -> 1 of B_2(x) is x^2 - x + 1/6
        let b2 = family_poly_univariate(NumberFamily::Bernoulli, 2);
        let limit = b2.limit_q1().unwrap();
        let mut expect = RatPoly::zero();
        expect.insert_add((2, 0), BigRational::from_integer(BigInt::from(1)));
        expect.insert_add((1, 0), BigRational::from_integer(BigInt::from(-1)));
        expect.insert_add((0, 0), BigRational::new(BigInt::from(1), BigInt::from(6)));
        assert_eq!(limit, expect);
        // q -> 1 of E_1(x) is x - 1/2
        let e1 = family_poly_univariate(NumberFamily::Euler, 1);
        let limit = e1.limit_q1().unwrap();
        let mut expect = RatPoly::zero();
        expect.insert_add((1, 0), BigRational::from_integer(BigInt::from(1)));
        expect.insert_add((0, 0), BigRational::new(BigInt::from(-1), BigInt::from(2)));
        assert_eq!(limit, expect);
    }

    #[test]
    fn classical_poly_oracle() {
        // B_2(x+y) = (x+y)^2 - (x+y) + 1/6
        let p = classical_family_poly_xy(NumberFamily::Bernoulli, 2);
        assert_eq!(p.coeff(2, 0), BigRational::from_integer(BigInt::from(1)));
        assert_eq!(p.coeff(1, 1), BigRational::from_integer(BigInt::from(2)));
        assert_eq!(p.coeff(1, 0), BigRational::from_integer(BigInt::from(-1)));
        assert_eq!(p.coeff(0, 0), BigRational::new(BigInt::from(1), BigInt::from(6)));
        // bivariate q -> 1 limit matches it
        let b2 = family_poly_bivariate(NumberFamily::Bernoulli, 2, BivariateConstruction::QAdditionForm);
        assert_eq!(b2.limit_q1().unwrap(), p);
    }

    #[test]
    fn genocchi_degree_drops_by_one() {
        let table = genocchi_numbers_recurrence(5);
        assert!(family_poly_univariate_from(&table, 0).is_zero());
        for n in 1..=5 {
            let p = family_poly_univariate_from(&table, n);
            assert_eq!(p.total_degree(), Some(n as u32 - 1), "n={n}");
        }
    }

    #[test]
    fn symmetry_in_x_and_y() {
        for family in NumberFamily::POLYNOMIAL {
            for n in 0..=6 {
                let p = family_poly_bivariate(family, n, BivariateConstruction::QAdditionForm);
                assert_eq!(p, p.swap_vars(), "family {family} n={n}");
            }
        }
    }

    #[test]
    fn qpoly_json_round_trip() {
        let g2 = family_poly_univariate(NumberFamily::Genocchi, 2);
        let s = serde_json::to_string(&g2).unwrap();
        let back: QPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(g2, back);
        assert!(s.starts_with(r#"{"monomials":[{"i":0,"j":0,"#));
        let dup = r#"{"monomials":[{"i":1,"j":0,"coeff":{"num":["1"],"den":["1"]}},
                      {"i":1,"j":0,"coeff":{"num":["1"],"den":["1"]}}]}"#;
        assert!(serde_json::from_str::<QPoly>(dup).is_err());
    }

    #[test]
    fn display_rendering() {
        let b1 = family_poly_univariate(NumberFamily::Bernoulli, 1);
        assert_eq!(b1.to_string(), "-1/2 + x");
        assert_eq!(QPoly::zero().to_string(), "0");
        let g2 = family_poly_univariate(NumberFamily::Genocchi, 2);
        assert_eq!(g2.to_string(), "(-1 - q)/2 + (1 + q)*x");
    }
}
