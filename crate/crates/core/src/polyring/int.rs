use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::FieldPolynomial;
use crate::error::{Error, Result};
use crate::ffield::ExtensionField;

/// A univariate polynomial with integer coefficients, lowest degree first, optionally
/// scaled by a positive common denominator (for `p`-integral rational coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
    denominator: Option<BigUint>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut out = IntPolynomial { coeffs, denominator: None };
        out.trim();
        out
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `coeffs / denominator`; a unit denominator is dropped.
    pub fn with_denominator(coeffs: Vec<BigInt>, denominator: BigUint) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::NonIntegral);
        }
        let mut out = Self::new(coeffs);
        if !denominator.is_one() {
            out.denominator = Some(denominator);
        }
        Ok(out)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::new(coeffs)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn denominator(&self) -> Option<&BigUint> {
        self.denominator.as_ref()
    }

    pub fn is_integral(&self) -> bool {
        self.denominator.is_none()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.is_integral() && self.leading_coefficient().is_some_and(|c| c.is_one())
    }

    /// Coefficients as `i64`, if they fit and the polynomial is integral.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        if !self.is_integral() {
            return None;
        }
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::new(self.coeffs.iter().map(|a| a * c).collect());
        out.denominator = self.denominator.clone();
        out
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at an integer point (integral polynomials only).
    pub fn evaluate(&self, x: &BigInt) -> Result<BigInt> {
        if !self.is_integral() {
            return Err(Error::NonIntegral);
        }
        Ok(self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c))
    }

    /// `g(h(X))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc.denominator = self.denominator.clone();
        acc
    }

    /// `X^m * self(X + 1/X)` as a polynomial, for `m >= deg self`.
    ///
    /// With `m = (r - 1)/2` this turns the minimal polynomial of `ζ + ζ^{-1}` back into the
    /// cyclotomic polynomial; with `m = deg h` it is the lift `g(X) = X^{deg h} h(X + 1/X)`.
    pub fn x_plus_inverse_lift(&self, m: usize) -> Self {
        let n = self.degree().unwrap_or(0);
        assert!(m >= n, "shift {m} below degree {n}");
        let x2p1 = Self::from_i64s(&[1, 0, 1]);
        let mut acc = Self::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let term = &x2p1.pow(i as u32) * &Self::monomial(c.clone(), m - i);
            acc = &acc + &term;
        }
        acc.denominator = self.denominator.clone();
        acc
    }

    /// Content (gcd of the coefficients, non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, normalised to a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return self.clone();
        }
        let c = if self.leading_coefficient().is_some_and(|l| l.is_negative()) { -c } else { c };
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_remainder(&self, divisor: &Self) -> Result<Self> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.leading_coefficient().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return Ok(Self::zero());
        };
        if n < dd {
            return Ok(self.clone());
        }
        let mut steps = n - dd + 1;
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let top = rem[k].clone();
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] -= &top * d;
            }
            debug_assert!(rem[k].is_zero());
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            steps -= 1;
        }
        let scale = num_traits::pow(lc, steps);
        Ok(Self::new(rem.into_iter().map(|c| c * &scale).collect()))
    }

    /// Exact division of every coefficient by `d`.
    pub(crate) fn div_exact_scalar(&self, d: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Greatest common divisor in `Z[X]` by the primitive remainder sequence
    /// (primitive, positive leading coefficient).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if !self.is_integral() || !other.is_integral() {
            return Err(Error::NonIntegral);
        }
        if self.is_zero() {
            return Ok(other.primitive_part());
        }
        if other.is_zero() {
            return Ok(self.primitive_part());
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b)?;
            a = b;
            b = r.primitive_part();
        }
        Ok(a.primitive_part())
    }

    /// Coefficientwise reduction into `F_p` (the denominator, if any, is inverted mod `p`).
    pub fn reduce_mod_p(&self, field: &ExtensionField) -> Result<FieldPolynomial> {
        let p = field.p();
        let prime = field.prime_field();
        let pb = BigInt::from(p);
        let inv = match &self.denominator {
            None => 1u64,
            Some(d) => {
                let dm = (BigInt::from_biguint(Sign::Plus, d.clone()) % &pb).to_u64().unwrap();
                if dm == 0 {
                    return Err(Error::NotPIntegral { p });
                }
                prime.element(dm).inv()?.index()
            }
        };
        let raw = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c.mod_floor(&pb).to_u64().unwrap();
                v * inv % p
            })
            .collect();
        Ok(FieldPolynomial::from_raw(prime, raw))
    }
}

// JSON form: `{"coefficients": [..], "denominator": n}`, lowest degree first. Coefficients that
// fit in an i64 are plain numbers, larger ones decimal strings.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct Wire {
    coefficients: Vec<Coefficient>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    denominator: Option<Coefficient>,
}

fn to_wire(c: &BigInt) -> Coefficient {
    c.to_i64().map(Coefficient::Small).unwrap_or_else(|| Coefficient::Big(c.to_string()))
}

fn from_wire<E: serde::de::Error>(c: Coefficient) -> std::result::Result<BigInt, E> {
    match c {
        Coefficient::Small(v) => Ok(BigInt::from(v)),
        Coefficient::Big(s) => s.parse().map_err(E::custom),
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            coefficients: self.coeffs.iter().map(to_wire).collect(),
            denominator: self.denominator.as_ref().map(|d| to_wire(&BigInt::from(d.clone()))),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = Wire::deserialize(deserializer)?;
        let coeffs = wire.coefficients.into_iter().map(from_wire).collect::<std::result::Result<_, _>>()?;
        match wire.denominator {
            None => Ok(Self::new(coeffs)),
            Some(d) => {
                let d = from_wire::<D::Error>(d)?
                    .to_biguint()
                    .ok_or_else(|| D::Error::custom("denominator must be positive"))?;
                Self::with_denominator(coeffs, d).map_err(D::Error::custom)
            }
        }
    }
}

/// Reduction of an integer (or `p`-integral) polynomial modulo a prime.
pub fn reduce_mod_p(f: &IntPolynomial, p: u64) -> Result<FieldPolynomial> {
    let field = ExtensionField::prime(p)?;
    f.reduce_mod_p(&field)
}

fn combine(a: &IntPolynomial, b: &IntPolynomial, sub: bool) -> IntPolynomial {
    // Bring both sides to the common denominator da * db.
    let (sa, sb, den) = match (&a.denominator, &b.denominator) {
        (None, None) => (BigInt::one(), BigInt::one(), None),
        (Some(d), None) => (BigInt::one(), BigInt::from(d.clone()), Some(d.clone())),
        (None, Some(d)) => (BigInt::from(d.clone()), BigInt::one(), Some(d.clone())),
        (Some(x), Some(y)) if x == y => (BigInt::one(), BigInt::one(), Some(x.clone())),
        (Some(x), Some(y)) => (BigInt::from(y.clone()), BigInt::from(x.clone()), Some(x * y)),
    };
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..n)
        .map(|i| {
            let x = a.coefficient(i) * &sa;
            let y = b.coefficient(i) * &sb;
            if sub {
                x - y
            } else {
                x + y
            }
        })
        .collect();
    let mut out = IntPolynomial::new(coeffs);
    out.denominator = den;
    out
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        combine(self, rhs, false)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        combine(self, rhs, true)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        let mut out = IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect());
        out.denominator = self.denominator.clone();
        out
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut res = IntPolynomial::new(out);
        res.denominator = match (&self.denominator, &rhs.denominator) {
            (None, None) => None,
            (Some(d), None) | (None, Some(d)) => Some(d.clone()),
            (Some(x), Some(y)) => Some(x * y),
        };
        res
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending order, e.g. `X^3 + X^2 - 2X - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            };
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}{mono}")?;
            } else {
                write!(f, "{mono}")?;
            }
        }
        if let Some(d) = &self.denominator {
            write!(f, " (over {d})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        let f = IntPolynomial::from_i64s(&[6, -3, 1]);
        assert_eq!(reduce_mod_p(&f, 3).unwrap().raw_coefficients(), &[0, 0, 1]);
        let half_x = IntPolynomial::with_denominator(vec![0.into(), 1.into()], 2u32.into()).unwrap();
        assert_eq!(reduce_mod_p(&half_x, 3).unwrap().raw_coefficients(), &[0, 2]);
        let third_x = IntPolynomial::with_denominator(vec![0.into(), 1.into()], 3u32.into()).unwrap();
        assert_eq!(reduce_mod_p(&third_x, 3).unwrap_err(), Error::NotPIntegral { p: 3 });
    }

    #[test]
    fn arithmetic_and_display() {
        let a = IntPolynomial::from_i64s(&[-1, -2, 1, 1]);
        assert_eq!(a.to_string(), "X^3 + X^2 - 2X - 1");
        let b = IntPolynomial::from_i64s(&[1, 1]);
        assert_eq!((&a * &b).degree(), Some(4));
        assert!((&a - &a).is_zero());
        assert_eq!(a.evaluate(&BigInt::from(2)).unwrap(), BigInt::from(7));
        assert_eq!(b.pow(3), IntPolynomial::from_i64s(&[1, 3, 3, 1]));
        assert_eq!(b.compose(&b), IntPolynomial::from_i64s(&[2, 1]));
    }

    #[test]
    fn denominators_combine() {
        let half = IntPolynomial::with_denominator(vec![1.into()], 2u32.into()).unwrap();
        let third = IntPolynomial::with_denominator(vec![1.into()], 3u32.into()).unwrap();
        let sum = &half + &third;
        assert_eq!(sum.coefficients(), &[BigInt::from(5)]);
        assert_eq!(sum.denominator(), Some(&BigUint::from(6u32)));
        assert_eq!(reduce_mod_p(&sum, 7).unwrap().raw_coefficients(), &[5 * 6 % 7]);
    }

    #[test]
    fn x_plus_inverse_lift() {
        // X^2 (Y^2 - 2) at Y = X + 1/X is X^4 + 1.
        let y2m2 = IntPolynomial::from_i64s(&[-2, 0, 1]);
        assert_eq!(y2m2.x_plus_inverse_lift(2), IntPolynomial::from_i64s(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn integer_gcd() {
        let a = IntPolynomial::from_i64s(&[-1, 0, 1]);
        let b = IntPolynomial::from_i64s(&[2, 1, -1]);
        // (X - 1)(X + 1) and -(X - 2)(X + 1)
        assert_eq!(a.gcd(&b).unwrap(), IntPolynomial::from_i64s(&[1, 1]));
        let c = IntPolynomial::from_i64s(&[1, 0, 1]);
        assert_eq!(a.gcd(&c).unwrap().degree(), Some(0));
        assert_eq!(a.scale(&BigInt::from(6)).content(), BigInt::from(6));
    }

    #[test]
    fn json_round_trip() {
        let f = IntPolynomial::from_i64s(&[4, 8, -5, -6, 1, 1]);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"coefficients":[4,8,-5,-6,1,1]}"#);
        assert_eq!(serde_json::from_str::<IntPolynomial>(&text).unwrap(), f);
        let big = IntPolynomial::new(vec![BigInt::from(3).pow(50), BigInt::from(-1)]);
        let half = IntPolynomial::with_denominator(big.coefficients().to_vec(), 2u32.into()).unwrap();
        for g in [big, half] {
            let text = serde_json::to_string(&g).unwrap();
            assert_eq!(serde_json::from_str::<IntPolynomial>(&text).unwrap(), g);
        }
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = IntPolynomial::from_i64s(&[3, 0, 5, 2]);
        let b = IntPolynomial::from_i64s(&[1, 3]);
        // 3^3 * a(-1/3) = 27*3 + 5*3 - 2 = 94
        assert_eq!(a.pseudo_remainder(&b).unwrap(), IntPolynomial::from_i64s(&[94]));
    }
}
