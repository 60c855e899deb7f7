//! Exact rational helpers shared by every module.
//!
//! All quantities in this crate are exact; [`Rational`] is an arbitrary
//! precision fraction kept in lowest terms with a positive denominator.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `p/q`, reduced. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Generalized binomial coefficient `x (x-1) ... (x-m+1) / m!`.
///
/// Defined for any rational `x`, in particular for negative integers, where
/// `binom(-c, m) = (-1)^m binom(c + m - 1, m)`.
pub fn binomial(x: &Rational, m: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..m {
        acc *= x - Rational::from_integer(BigInt::from(i));
        acc /= Rational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// Integer binomial `binom(n, m)` with the falling-factorial convention, so
/// negative `n` is allowed and `binom(n, m) = 0` for `0 <= n < m`.
pub fn binomial_int(n: &BigInt, m: u64) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..m {
        num *= n - BigInt::from(i);
    }
    num / BigInt::from(factorial(m))
}

/// Ordinary `binom(n, m)` for naturals.
pub fn choose(n: u64, m: u64) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    binomial_int(&BigInt::from(n), m)
}

/// Formats a rational as `p/q`, or `p` when it is an integer.
pub fn to_exact_string(r: &Rational) -> String {
    r.to_string()
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_exact(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(Rational::new(p, q))
    } else {
        s.parse::<BigInt>().ok().map(Rational::from_integer)
    }
}

/// Returns the integer value when `r` has denominator one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}
