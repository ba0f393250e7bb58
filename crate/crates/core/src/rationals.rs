//! Exact rational scalars, factorials, binomial coefficients and Bernoulli
//! numbers.
//!
//! The scalar type is [`num_rational::BigRational`], which keeps every value
//! in lowest terms with a positive denominator after each operation.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};

/// Exact fraction of arbitrary-precision integers.
pub type Rational = num_rational::BigRational;

/// `numer / denom` as a [`Rational`]. Panics if `denom == 0`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(-1)^e` as a [`Rational`].
pub fn sign_pow(e: u64) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `2^e` for a possibly negative exponent.
pub fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// `n!`
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`; `k > n` is a domain error.
pub fn binomial(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return domain(format!("binomial({n}, {k}) requires k <= n"));
    }
    Ok(binom(n, k))
}

/// Binomial coefficient for `k <= n` (zero otherwise).
pub(crate) fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Factorial of a signed argument; negative input is a domain error.
pub fn factorial_checked(n: i64) -> Result<BigInt> {
    if n < 0 {
        return domain(format!("factorial of negative integer {n}"));
    }
    Ok(factorial(n as u64))
}

/// Bernoulli numbers `B_0, B_1, ..., B_capacity` with `B_1 = -1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// Builds the table up to and including index `capacity`.
    pub fn new(capacity: usize) -> Self {
        let mut table = BernoulliTable { values: Vec::new() };
        table.extend_to(capacity);
        table
    }

    pub fn capacity(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.values.get(i)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Extends with `sum_{j=0}^{n} C(n+1, j) B_j = 0` for `n >= 1`.
    fn extend_to(&mut self, capacity: usize) {
        while self.values.len() <= capacity {
            let n = self.values.len();
            let next = if n == 0 {
                Rational::one()
            } else if n >= 3 && n % 2 == 1 {
                Rational::zero()
            } else {
                let n1 = n as u64 + 1;
                let sum = self
                    .values
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| !b.is_zero())
                    .fold(Rational::zero(), |acc, (j, b)| {
                        acc + b * Rational::from_integer(binom(n1, j as u64))
                    });
                -sum / Rational::from_integer(BigInt::from(n1))
            };
            self.values.push(next);
        }
    }
}

static BERNOULLI_CACHE: LazyLock<RwLock<BernoulliTable>> =
    LazyLock::new(|| RwLock::new(BernoulliTable::new(32)));

/// `B_i`, memoized in a process-wide table that grows on demand.
pub fn bernoulli(i: usize) -> Rational {
    {
        let table = BERNOULLI_CACHE.read().unwrap_or_else(|e| e.into_inner());
        if let Some(b) = table.get(i) {
            return b.clone();
        }
    }
    let mut table = BERNOULLI_CACHE.write().unwrap_or_else(|e| e.into_inner());
    table.extend_to(i);
    table.values[i].clone()
}

/// `B_{2i} / (2i)!`
pub fn bernoulli_over_factorial(i: usize) -> Rational {
    bernoulli(2 * i) / Rational::from_integer(factorial(2 * i as u64))
}

/// Renders a rational as `p/q` (always with an explicit denominator).
pub fn to_fraction_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_fraction(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || crate::error::Error::Domain(format!("malformed rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// True when `q` is an integer.
pub fn is_integral(q: &Rational) -> bool {
    q.denom().is_one()
}

/// True when `q > 0`.
pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}
