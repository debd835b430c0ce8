//! q-combinatorial building blocks: q-integers, q-factorials, Gaussian
//! binomial coefficients, q-shifted factorials (Pochhammer products), the
//! curly-brace binomial, and the expansion of q-addition powers.
//!
//! The curly-brace binomial is defined as
//! `{n k}_q = [n k]_q * (-1;q)_{n-k} / 2^{n-k}`; it is the weight that turns
//! up in every recurrence and addition formula of the number families here,
//! and it degenerates to the ordinary binomial coefficient at q = 1.

use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::One;

use crate::qfield::{IntPoly, RationalFunction};

/// The q-integer [a]_q = (1 - q^a)/(1 - q). For a >= 0 this is the
/// polynomial 1 + q + ... + q^(a-1); negative a gives a rational function.
pub fn q_int(a: i64) -> RationalFunction {
    if a >= 0 {
        RationalFunction::from_poly(q_int_poly(a as usize))
    } else {
        let one = RationalFunction::one();
        let num = &one - &RationalFunction::q_power(a);
        let den = &one - &RationalFunction::q();
        &num / &den
    }
}

/// [n]_q as a polynomial, for n >= 0.
pub fn q_int_poly(n: usize) -> IntPoly {
    IntPoly::new(vec![BigInt::one(); n])
}

/// The q-factorial [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
pub fn q_factorial(n: usize) -> RationalFunction {
    RationalFunction::from_poly(q_factorial_poly(n))
}

static FACTORIALS: LazyLock<Mutex<Vec<IntPoly>>> =
    LazyLock::new(|| Mutex::new(vec![IntPoly::one()]));

fn q_factorial_poly(n: usize) -> IntPoly {
    let mut table = FACTORIALS.lock().unwrap();
    while table.len() <= n {
        let next = &table[table.len() - 1] * &q_int_poly(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Gaussian binomial coefficient [n k]_q. Out-of-range indices (k < 0,
/// k > n, or n < 0) give 0 so convolution sums can run unrestricted.
pub fn q_binomial(n: i64, k: i64) -> RationalFunction {
    if n < 0 || k < 0 || k > n {
        return RationalFunction::zero();
    }
    RationalFunction::from_poly(q_binomial_poly(n as usize, k as usize))
}

static BINOMIAL_ROWS: LazyLock<Mutex<Vec<Vec<IntPoly>>>> =
    LazyLock::new(|| Mutex::new(vec![vec![IntPoly::one()]]));

/// [n k]_q as a polynomial via the q-Pascal rule
/// [n k] = [n-1 k-1] + q^k [n-1 k].
fn q_binomial_poly(n: usize, k: usize) -> IntPoly {
    let mut rows = BINOMIAL_ROWS.lock().unwrap();
    while rows.len() <= n {
        let m = rows.len();
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        row.push(IntPoly::one());
        for j in 1..m {
            let shifted = &IntPoly::monomial(BigInt::one(), j) * &prev[j];
            row.push(&prev[j - 1] + &shifted);
        }
        row.push(IntPoly::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

/// The q-shifted factorial (a;q)_n = prod_{j=0}^{n-1} (1 - q^j a).
pub fn pochhammer(a: &RationalFunction, n: usize) -> RationalFunction {
    let one = RationalFunction::one();
    let mut acc = RationalFunction::one();
    for j in 0..n {
        let factor = &one - &(&RationalFunction::q_power(j as i64) * a);
        acc = &acc * &factor;
    }
    acc
}

static MINUS_ONE_POCH: LazyLock<Mutex<Vec<IntPoly>>> =
    LazyLock::new(|| Mutex::new(vec![IntPoly::one()]));

/// (-1;q)_n = prod_{j=0}^{n-1} (1 + q^j) as a polynomial.
pub fn pochhammer_minus_one_poly(n: usize) -> IntPoly {
    let mut table = MINUS_ONE_POCH.lock().unwrap();
    while table.len() <= n {
        let j = table.len() - 1;
        let factor = &IntPoly::one() + &IntPoly::monomial(BigInt::one(), j);
        let next = &table[j] * &factor;
        table.push(next);
    }
    table[n].clone()
}

/// The curly-brace binomial {n k}_q = [n k]_q (-1;q)_{n-k} / 2^{n-k},
/// zero outside 0 <= k <= n.
pub fn curly_binomial(n: i64, k: i64) -> RationalFunction {
    if n < 0 || k < 0 || k > n {
        return RationalFunction::zero();
    }
    let d = (n - k) as usize;
    let num = &q_binomial_poly(n as usize, k as usize) * &pochhammer_minus_one_poly(d);
    let den = IntPoly::constant(BigInt::one() << d);
    RationalFunction::new(num, den).expect("power of two denominator")
}

/// (-1;q)_n / 2^n, the coefficient kernel of the improved q-exponential.
pub fn half_pochhammer_minus_one(n: usize) -> RationalFunction {
    curly_binomial(n as i64, 0)
}

/// Coefficients of the q-addition power (x (+)_q y)^n: entry k is the
/// coefficient of x^k y^(n-k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OplusExpansion {
    n: usize,
    coeffs: Vec<RationalFunction>,
}

impl OplusExpansion {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    /// Evaluates the expansion at scalar arguments.
    pub fn eval(&self, x: &RationalFunction, y: &RationalFunction) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let term = &(&x.pow(k as i64).unwrap() * &y.pow((self.n - k) as i64).unwrap()) * c;
            acc = &acc + &term;
        }
        acc
    }
}

/// Expansion of (x (+)_q y)^n: coefficient k is
/// [n k]_q (-1;q)_k (-1;q)_{n-k} / 2^n.
pub fn oplus_expand(n: usize) -> OplusExpansion {
    let den = RationalFunction::from_poly(IntPoly::constant(BigInt::one() << n));
    let coeffs = (0..=n)
        .map(|k| {
            let num = &(&q_binomial_poly(n, k) * &pochhammer_minus_one_poly(k))
                * &pochhammer_minus_one_poly(n - k);
            &RationalFunction::from_poly(num) / &den
        })
        .collect();
    OplusExpansion { n, coeffs }
}

/// Expansion of (x (-)_q y)^n: the oplus coefficients with a (-1)^(n-k)
/// sign on entry k.
pub fn ominus_expand(n: usize) -> OplusExpansion {
    let mut exp = oplus_expand(n);
    for (k, c) in exp.coeffs.iter_mut().enumerate() {
        if (n - k) % 2 == 1 {
            *c = -&*c;
        }
    }
    exp
}
