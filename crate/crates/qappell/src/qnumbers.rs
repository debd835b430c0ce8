//! The q-Bernoulli, q-Euler, q-Genocchi and q-tangent number families.
//!
//! Each family is computed along two independent routes: a triangular
//! recurrence driven by the curly-brace binomial, and coefficient
//! extraction from the defining generating series. The two routes are
//! compared entry by entry in the verification suite. A classical
//! (q = 1) oracle computed from the ordinary binomial recursions backs the
//! limit checks.
//!
//! Recurrences solved here:
//!
//! * Bernoulli: sum_k {n k}_q b_k - b_n = [n = 1]. At level n the b_n
//!   terms cancel, so level n is solved for b_{n-1}, whose coefficient is
//!   {n n-1}_q = [n]_q.
//! * Euler: sum_k {m k}_q e_k + e_m = 2 [m = 0]; level m solves e_m with
//!   total coefficient 2.
//! * Genocchi: sum_k {m k}_q g_k + g_m = 2 [m = 1]; same shape.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::qcombinatorics::{curly_binomial, q_int};
use crate::qfield::{IntPoly, RationalFunction};
use crate::qseries::{q_exponential, DividedPowerSeries, QExpKind};

/// The four number families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NumberFamily {
    Bernoulli,
    Euler,
    Genocchi,
    Tangent,
}

impl NumberFamily {
    pub const ALL: [NumberFamily; 4] = [
        NumberFamily::Bernoulli,
        NumberFamily::Euler,
        NumberFamily::Genocchi,
        NumberFamily::Tangent,
    ];

    /// The three families that also have polynomial versions.
    pub const POLYNOMIAL: [NumberFamily; 3] = [
        NumberFamily::Bernoulli,
        NumberFamily::Euler,
        NumberFamily::Genocchi,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            NumberFamily::Bernoulli => "bernoulli",
            NumberFamily::Euler => "euler",
            NumberFamily::Genocchi => "genocchi",
            NumberFamily::Tangent => "tangent",
        }
    }
}

impl fmt::Display for NumberFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NumberFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bernoulli" => Ok(NumberFamily::Bernoulli),
            "euler" => Ok(NumberFamily::Euler),
            "genocchi" => Ok(NumberFamily::Genocchi),
            "tangent" => Ok(NumberFamily::Tangent),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

/// How a table was constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Recurrence,
    Series,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Recurrence => f.write_str("recurrence"),
            Provenance::Series => f.write_str("series"),
        }
    }
}

/// A family's numbers indexed 0..=max_n, tagged with how they were built.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumberTable {
    family: NumberFamily,
    provenance: Provenance,
    max_n: usize,
    values: Vec<RationalFunction>,
}

impl NumberTable {
    fn new(family: NumberFamily, provenance: Provenance, values: Vec<RationalFunction>) -> Self {
        assert!(!values.is_empty());
        NumberTable {
            family,
            provenance,
            max_n: values.len() - 1,
            values,
        }
    }

    pub fn family(&self) -> NumberFamily {
        self.family
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn value(&self, n: usize) -> &RationalFunction {
        &self.values[n]
    }

    pub fn values(&self) -> &[RationalFunction] {
        &self.values
    }

    /// Copy of the table with entry `n` shifted by `delta`. Used by the
    /// suite's fault-injection mode to demonstrate check sensitivity.
    pub fn with_entry_perturbed(&self, n: usize, delta: &RationalFunction) -> NumberTable {
        let mut values = self.values.clone();
        values[n] = &values[n] + delta;
        NumberTable {
            family: self.family,
            provenance: self.provenance,
            max_n: self.max_n,
            values,
        }
    }
}

#[derive(Deserialize)]
struct NumberTableJson {
    family: NumberFamily,
    provenance: Provenance,
    max_n: usize,
    values: Vec<RationalFunction>,
}

impl<'de> Deserialize<'de> for NumberTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = NumberTableJson::deserialize(deserializer)?;
        if raw.values.len() != raw.max_n + 1 {
            return Err(serde::de::Error::custom(
                "value count does not match max_n",
            ));
        }
        Ok(NumberTable {
            family: raw.family,
            provenance: raw.provenance,
            max_n: raw.max_n,
            values: raw.values,
        })
    }
}

/// q-Bernoulli numbers by the curly-binomial recurrence.
pub fn bernoulli_numbers_recurrence(max_n: usize) -> NumberTable {
    let mut values: Vec<RationalFunction> = Vec::with_capacity(max_n + 1);
    for level in 1..=(max_n as i64 + 1) {
        // level n determines b_{n-1} with coefficient {n n-1}_q = [n]_q
        let mut acc = if level == 1 {
            RationalFunction::one()
        } else {
            RationalFunction::zero()
        };
        for (k, b) in values.iter().enumerate().take(level as usize - 1) {
            acc = &acc - &(&curly_binomial(level, k as i64) * b);
        }
        values.push(&acc / &q_int(level));
    }
    NumberTable::new(NumberFamily::Bernoulli, Provenance::Recurrence, values)
}

/// q-Euler numbers by the curly-binomial recurrence.
pub fn euler_numbers_recurrence(max_n: usize) -> NumberTable {
    let values = appell_recurrence(max_n, 0);
    NumberTable::new(NumberFamily::Euler, Provenance::Recurrence, values)
}

/// q-Genocchi numbers by the curly-binomial recurrence.
pub fn genocchi_numbers_recurrence(max_n: usize) -> NumberTable {
    let values = appell_recurrence(max_n, 1);
    NumberTable::new(NumberFamily::Genocchi, Provenance::Recurrence, values)
}

/// Solves sum_k {m k}_q v_k + v_m = 2 [m = source_level] for v_m.
fn appell_recurrence(max_n: usize, source_level: usize) -> Vec<RationalFunction> {
    let half = RationalFunction::ratio(1, 2);
    let mut values: Vec<RationalFunction> = Vec::with_capacity(max_n + 1);
    for m in 0..=max_n {
        let mut acc = if m == source_level {
            RationalFunction::integer(2)
        } else {
            RationalFunction::zero()
        };
        for (k, v) in values.iter().enumerate() {
            acc = &acc - &(&curly_binomial(m as i64, k as i64) * v);
        }
        values.push(&acc * &half);
    }
    values
}

/// Number table extracted from the family's generating series.
///
/// Bernoulli: t/(E(t)-1) via divide-by-t then reciprocal. Euler:
/// 2/(E(t)+1). Genocchi: 2t/(E(t)+1), realized by reindexing the Euler
/// kernel (multiplying by t in the divided basis: g_{n+1} = [n+1]_q e_n).
pub fn numbers_via_series(family: NumberFamily, max_n: usize) -> NumberTable {
    let values = match family {
        NumberFamily::Bernoulli => {
            let improved = q_exponential(QExpKind::Improved, max_n + 1);
            let shifted = improved.sub(&DividedPowerSeries::one(max_n + 1));
            let kernel = shifted
                .divide_by_t()
                .expect("E(t) - 1 has zero constant term");
            kernel
                .reciprocal()
                .expect("kernel constant term is 1")
                .coeffs()
                .to_vec()
        }
        NumberFamily::Euler => euler_series_kernel(max_n).coeffs().to_vec(),
        NumberFamily::Genocchi => {
            let mut values = vec![RationalFunction::zero()];
            if max_n >= 1 {
                let euler = euler_series_kernel(max_n - 1);
                for n in 0..max_n {
                    values.push(&q_int(n as i64 + 1) * euler.coeff(n));
                }
            }
            values
        }
        NumberFamily::Tangent => return tangent_numbers(max_n.max(1)),
    };
    NumberTable::new(family, Provenance::Series, values)
}

/// 2/(E(t)+1) as a divided-power series.
fn euler_series_kernel(order: usize) -> DividedPowerSeries<RationalFunction> {
    let improved = q_exponential(QExpKind::Improved, order);
    let plus_one = improved.add(&DividedPowerSeries::one(order));
    plus_one
        .reciprocal()
        .expect("E(t) + 1 has constant term 2")
        .scalar_mul(&RationalFunction::integer(2))
}

/// The q-hyperbolic tangent (E(2t)-1)/(E(2t)+1) as a divided-power series.
pub fn tanh_series(order: usize) -> DividedPowerSeries<RationalFunction> {
    let doubled = q_exponential(QExpKind::Improved, order).scale_arg(&RationalFunction::integer(2));
    let one = DividedPowerSeries::one(order);
    let num = doubled.sub(&one);
    let den = doubled.add(&one);
    num.mul(&den.reciprocal().expect("constant term 2"))
}

/// q-tangent numbers from the tanh series, stored under the sign
/// convention T_{2n+1} = (-1)^n c_{2n+1}. Even coefficients of tanh vanish
/// identically and are stored as zeros.
pub fn tangent_numbers(max_odd: usize) -> NumberTable {
    assert!(max_odd >= 1);
    let series = tanh_series(max_odd);
    let values = tangent_values_from_raw(max_odd, |k| series.coeff(k).clone());
    NumberTable::new(NumberFamily::Tangent, Provenance::Series, values)
}

/// q-tangent numbers computed through the Genocchi relation instead of the
/// tanh series; the suite compares the two.
pub fn tangent_numbers_from_genocchi(max_odd: usize) -> NumberTable {
    assert!(max_odd >= 1);
    let genocchi = genocchi_numbers_recurrence(max_odd + 1);
    let values = tangent_values_from_raw(max_odd, |k| {
        if k % 2 == 0 {
            RationalFunction::zero()
        } else {
            tangent_raw_coefficient(&genocchi, (k - 1) / 2)
        }
    });
    NumberTable::new(NumberFamily::Tangent, Provenance::Recurrence, values)
}

fn tangent_values_from_raw(
    max_odd: usize,
    mut raw: impl FnMut(usize) -> RationalFunction,
) -> Vec<RationalFunction> {
    (0..=max_odd)
        .map(|k| {
            let c = raw(k);
            if k % 2 == 0 {
                debug_assert!(c.is_zero(), "tanh even coefficient {k} must vanish");
                RationalFunction::zero()
            } else if ((k - 1) / 2) % 2 == 1 {
                -&c
            } else {
                c
            }
        })
        .collect()
}

/// The convention-free tanh coefficient c_{2n+1} expressed through the
/// q-Genocchi numbers: c_{2n+1} = -g_{2n+2} 2^{2n+1} / [2n+2]_q.
pub fn tangent_from_genocchi(n: usize) -> RationalFunction {
    let genocchi = genocchi_numbers_recurrence(2 * n + 2);
    tangent_raw_coefficient(&genocchi, n)
}

fn tangent_raw_coefficient(genocchi: &NumberTable, n: usize) -> RationalFunction {
    let power = RationalFunction::from_poly(IntPoly::constant(BigInt::one() << (2 * n + 1)));
    let g = genocchi.value(2 * n + 2);
    -&(&(g * &power) / &q_int(2 * n as i64 + 2))
}

/// Number table for any family and either provenance.
pub fn number_table(family: NumberFamily, provenance: Provenance, max_n: usize) -> NumberTable {
    match (family, provenance) {
        (NumberFamily::Bernoulli, Provenance::Recurrence) => bernoulli_numbers_recurrence(max_n),
        (NumberFamily::Euler, Provenance::Recurrence) => euler_numbers_recurrence(max_n),
        (NumberFamily::Genocchi, Provenance::Recurrence) => genocchi_numbers_recurrence(max_n),
        (NumberFamily::Tangent, Provenance::Recurrence) => {
            tangent_numbers_from_genocchi(max_n.max(1))
        }
        (_, Provenance::Series) => numbers_via_series(family, max_n),
    }
}

/// Classical number sequences via the ordinary binomial recursions: the
/// independent q = 1 oracle. Tangent entries follow the same
/// (-1)^n c_{2n+1} convention as [`tangent_numbers`].
pub fn classical_numbers(family: NumberFamily, max_n: usize) -> Vec<BigRational> {
    let two = BigRational::from_integer(BigInt::from(2));
    match family {
        NumberFamily::Bernoulli => {
            let mut values: Vec<BigRational> = Vec::with_capacity(max_n + 1);
            for level in 1..=max_n + 1 {
                let mut acc = if level == 1 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                for (k, b) in values.iter().enumerate().take(level.saturating_sub(1)) {
                    acc -= BigRational::from_integer(binomial(level, k)) * b;
                }
                values.push(acc / BigRational::from_integer(BigInt::from(level)));
            }
            values
        }
        NumberFamily::Euler | NumberFamily::Genocchi => {
            let source = if family == NumberFamily::Euler { 0 } else { 1 };
            let mut values: Vec<BigRational> = Vec::with_capacity(max_n + 1);
            for m in 0..=max_n {
                let mut acc = if m == source {
                    two.clone()
                } else {
                    BigRational::zero()
                };
                for (k, v) in values.iter().enumerate() {
                    acc -= BigRational::from_integer(binomial(m, k)) * v;
                }
                values.push(acc / &two);
            }
            values
        }
        NumberFamily::Tangent => {
            let genocchi = classical_numbers(NumberFamily::Genocchi, max_n + 1);
            (0..=max_n)
                .map(|k| {
                    if k % 2 == 0 {
                        return BigRational::zero();
                    }
                    let n = (k - 1) / 2;
                    let c = -&genocchi[k + 1] * BigRational::from_integer(BigInt::one() << k)
                        / BigRational::from_integer(BigInt::from(k + 1));
                    if n % 2 == 1 {
                        -c
                    } else {
                        c
                    }
                })
                .collect()
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(IntPoly::from(num), IntPoly::from(den)).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bernoulli_table_matches_closed_forms() {
        let t = bernoulli_numbers_recurrence(3);
        assert_eq!(t.value(0), &RationalFunction::one());
        assert_eq!(t.value(1), &rf(&[-1], &[2]));
        // q [2]_q / (4 [3]_q)
        assert_eq!(t.value(2), &rf(&[0, 1, 1], &[4, 4, 4]));
        assert_eq!(t.value(3), &RationalFunction::zero());
    }

    #[test]
    fn euler_table_matches_closed_forms() {
        let t = euler_numbers_recurrence(3);
        assert_eq!(t.value(0), &RationalFunction::one());
        assert_eq!(t.value(1), &rf(&[-1], &[2]));
        assert_eq!(t.value(2), &RationalFunction::zero());
        // q(1+q)/8
        assert_eq!(t.value(3), &rf(&[0, 1, 1], &[8]));
    }

    #[test]
    fn genocchi_table_matches_closed_forms() {
        let t = genocchi_numbers_recurrence(3);
        assert_eq!(t.value(0), &RationalFunction::zero());
        assert_eq!(t.value(1), &RationalFunction::one());
        assert_eq!(t.value(2), &rf(&[-1, -1], &[2]));
        assert_eq!(t.value(3), &RationalFunction::zero());
    }

    #[test]
    fn series_route_agrees_with_recurrence() {
        for family in NumberFamily::POLYNOMIAL {
            let rec = number_table(family, Provenance::Recurrence, 10);
            let ser = numbers_via_series(family, 10);
            assert_eq!(rec.values(), ser.values(), "family {family}");
            assert_eq!(ser.provenance(), Provenance::Series);
        }
    }

    #[test]
    fn parity_laws() {
        let b = bernoulli_numbers_recurrence(12);
        let e = euler_numbers_recurrence(12);
        let g = genocchi_numbers_recurrence(12);
        for r in 1..=5 {
            assert!(b.value(2 * r + 1).is_zero(), "b_{}", 2 * r + 1);
            assert!(e.value(2 * r).is_zero(), "e_{}", 2 * r);
            assert!(g.value(2 * r + 1).is_zero(), "g_{}", 2 * r + 1);
        }
    }

    #[test]
    fn tanh_series_lowest_coefficients() {
        let c = tanh_series(5);
        assert_eq!(c.coeff(0), &RationalFunction::zero());
        assert_eq!(c.coeff(1), &RationalFunction::one());
        assert_eq!(c.coeff(2), &RationalFunction::zero());
        assert_eq!(
            c.coeff(3).limit_q1().unwrap(),
            BigRational::from_integer(BigInt::from(-2))
        );
        assert_eq!(c.coeff(4), &RationalFunction::zero());
    }

    #[test]
    fn tangent_routes_agree() {
        let a = tangent_numbers(9);
        let b = tangent_numbers_from_genocchi(9);
        assert_eq!(a.values(), b.values());
        assert_eq!(a.value(1), &RationalFunction::one());
        // the stored values carry the (-1)^n sign on c_{2n+1}
        let c3 = tangent_from_genocchi(1);
        assert_eq!(a.value(3), &(-&c3));
    }

    #[test]
    fn tangent_relation_at_classical_point() {
        // c_1 = -g_2 * 2 / [2] = 1 and c_3 -> -2 at q = 1
        assert_eq!(tangent_from_genocchi(0), RationalFunction::one());
        assert_eq!(
            tangent_from_genocchi(1).limit_q1().unwrap(),
            BigRational::from_integer(BigInt::from(-2))
        );
    }

    #[test]
    fn classical_oracles() {
        let b = classical_numbers(NumberFamily::Bernoulli, 12);
        assert_eq!(b[0], rat(1, 1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat(0, 1));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[12], rat(-691, 2730));
        let e = classical_numbers(NumberFamily::Euler, 3);
        assert_eq!(&e[..2], &[rat(1, 1), rat(-1, 2)]);
        let g = classical_numbers(NumberFamily::Genocchi, 6);
        assert_eq!(g[1], rat(1, 1));
        assert_eq!(g[2], rat(-1, 1));
        assert_eq!(g[4], rat(1, 1));
        assert_eq!(g[6], rat(-3, 1));
        let t = classical_numbers(NumberFamily::Tangent, 7);
        assert_eq!(t[1], rat(1, 1));
        assert_eq!(t[3], rat(2, 1));
        assert_eq!(t[5], rat(16, 1));
        assert_eq!(t[7], rat(272, 1));
    }

    #[test]
    fn classical_limits_of_q_numbers() {
        for family in NumberFamily::ALL {
            let table = number_table(family, Provenance::Recurrence, 10);
            let classical = classical_numbers(family, 10);
            for n in 0..=10 {
                assert_eq!(
                    table.value(n).limit_q1().unwrap(),
                    classical[n],
                    "family {family} n={n}"
                );
            }
        }
    }

    #[test]
    fn perturbed_table_differs_in_one_slot() {
        let t = bernoulli_numbers_recurrence(4);
        let p = t.with_entry_perturbed(2, &RationalFunction::one());
        assert_ne!(t.value(2), p.value(2));
        assert_eq!(t.value(3), p.value(3));
    }

    #[test]
    fn table_json_round_trip() {
        let t = genocchi_numbers_recurrence(4);
        let s = serde_json::to_string(&t).unwrap();
        let back: NumberTable = serde_json::from_str(&s).unwrap();
        assert_eq!(t, back);
        assert!(s.contains(r#""family":"genocchi""#));
        assert!(s.contains(r#""provenance":"recurrence""#));
    }
}
