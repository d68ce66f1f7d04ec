use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization by trial division, factors in increasing order.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    factor_u128(n as u128)
        .into_iter()
        .map(|(q, e)| (q as u64, e))
        .collect()
}

/// Prime factorization of a 128-bit integer by trial division.
///
/// Cost is governed by the square root of the second-largest prime factor,
/// which is small for the Mersenne-like numbers `p^f - 1` handled here.
pub fn factor_u128(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for q in [2u128, 3] {
        let mut e = 0;
        while n % q == 0 {
            n /= q;
            e += 1;
        }
        if e > 0 {
            out.push((q, e));
        }
    }
    let mut d = 5u128;
    let mut step = 2u128;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += step;
        step = 6 - step;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc = 1u128 % m128;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `p` modulo the prime `r`: the least `g >= 1` with `r | p^g - 1`.
pub fn multiplicative_order_mod(p: u64, r: u64) -> Result<u64> {
    if !is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    if p % r == 0 {
        return Err(Error::Ramified { r });
    }
    let mut order = r - 1;
    for (q, _) in factor_u64(r - 1) {
        while order % q == 0 && pow_mod(p, order / q, r) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

/// A residue modulo a prime, held as its canonical representative in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeFieldElement {
    p: u64,
    value: u64,
}

impl PrimeFieldElement {
    /// Reduces a signed integer into `F_p`; fails unless `p` is prime.
    pub fn new(p: u64, value: i64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::reduce(p, value))
    }

    pub(crate) fn from_canonical(p: u64, value: u64) -> Self {
        debug_assert!(value < p);
        PrimeFieldElement { p, value }
    }

    pub(crate) fn reduce(p: u64, value: i64) -> Self {
        let v = (value as i128).rem_euclid(p as i128) as u64;
        PrimeFieldElement { p, value: v }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(self, other: Self) -> Self {
        assert_eq!(self.p, other.p, "characteristic mismatch");
        Self::from_canonical(self.p, ((self.value as u128 + other.value as u128) % self.p as u128) as u64)
    }

    pub fn sub(self, other: Self) -> Self {
        assert_eq!(self.p, other.p, "characteristic mismatch");
        Self::from_canonical(self.p, ((self.value as u128 + (self.p - other.value) as u128) % self.p as u128) as u64)
    }

    pub fn mul(self, other: Self) -> Self {
        assert_eq!(self.p, other.p, "characteristic mismatch");
        Self::from_canonical(self.p, ((self.value as u128 * other.value as u128) % self.p as u128) as u64)
    }

    pub fn neg(self) -> Self {
        Self::from_canonical(self.p, (self.p - self.value) % self.p)
    }

    pub fn pow(self, exp: u64) -> Self {
        Self::from_canonical(self.p, pow_mod(self.value, exp, self.p))
    }

    pub fn inv(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero { p: self.p, degree: 1 });
        }
        Ok(self.pow(self.p - 2))
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
