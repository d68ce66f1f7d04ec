use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ffield::{ExtensionField, ExtensionFieldElement};

/// A univariate polynomial over a finite field, coefficients lowest degree first.
///
/// Coefficients are stored as packed field indices (see [`ExtensionField`]); trailing
/// zeros are always stripped, so the zero polynomial has an empty coefficient vector.
#[derive(Clone)]
pub struct FieldPolynomial {
    field: ExtensionField,
    coeffs: Vec<u64>,
}

impl FieldPolynomial {
    pub fn new(field: &ExtensionField, coeffs: &[ExtensionFieldElement]) -> Result<Self> {
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            raw.push(c.lift_into(field)?.index());
        }
        Ok(Self::from_raw(field.clone(), raw))
    }

    pub(crate) fn from_raw(field: ExtensionField, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FieldPolynomial { field, coeffs }
    }

    /// Polynomial with integer coefficients reduced into the prime subfield of `field`.
    pub fn from_ints(field: &ExtensionField, coeffs: &[i64]) -> Self {
        let raw = coeffs.iter().map(|&c| field.from_int(c).index()).collect();
        Self::from_raw(field.clone(), raw)
    }

    pub fn zero(field: &ExtensionField) -> Self {
        Self::from_raw(field.clone(), Vec::new())
    }

    pub fn one(field: &ExtensionField) -> Self {
        Self::from_raw(field.clone(), vec![1])
    }

    /// The indeterminate `X`.
    pub fn x(field: &ExtensionField) -> Self {
        Self::from_raw(field.clone(), vec![0, 1])
    }

    pub fn constant(c: &ExtensionFieldElement) -> Self {
        Self::from_raw(c.field().clone(), vec![c.index()])
    }

    pub fn field(&self) -> &ExtensionField {
        &self.field
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Packed coefficient indices, lowest degree first.
    pub fn raw_coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> ExtensionFieldElement {
        self.field.element(self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn coefficients(&self) -> Vec<ExtensionFieldElement> {
        self.coeffs.iter().map(|&c| self.field.element(c)).collect()
    }

    pub fn leading_coefficient(&self) -> Option<ExtensionFieldElement> {
        self.coeffs.last().map(|&c| self.field.element(c))
    }

    /// Whether every coefficient lies in the prime subfield.
    pub fn has_prime_coefficients(&self) -> bool {
        let p = self.field.p();
        self.coeffs.iter().all(|&c| c < p)
    }

    /// Reinterprets prime-subfield coefficients over `target` (the inclusion `F_p ⊆ F_{p^f}`),
    /// or over `F_p` itself when `target` is a prime field.
    pub fn lift(&self, target: &ExtensionField) -> Result<Self> {
        if self.field.same_field(target) {
            return Ok(self.clone());
        }
        if self.field.p() != target.p() {
            return Err(Error::CharacteristicMismatch { expected: target.p(), actual: self.field.p() });
        }
        if !self.has_prime_coefficients() {
            return Err(Error::FieldMismatch(format!(
                "coefficients of a polynomial over {} do not lie in F_{}",
                self.field,
                self.field.p()
            )));
        }
        Ok(Self::from_raw(target.clone(), self.coeffs.clone()))
    }

    fn check_same(&self, other: &Self) {
        assert!(
            self.field.same_field(&other.field),
            "polynomials over different fields: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn scale(&self, c: &ExtensionFieldElement) -> Self {
        let c = c.lift_into(&self.field).expect("scalar outside the coefficient field").index();
        let f = &self.field;
        Self::from_raw(f.clone(), self.coeffs.iter().map(|&a| f.mul_raw(a, c)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&1) => self.clone(),
            Some(&lc) => {
                let inv = self.field.inv_raw(lc).expect("leading coefficient is nonzero");
                let f = &self.field;
                Self::from_raw(f.clone(), self.coeffs.iter().map(|&a| f.mul_raw(a, inv)).collect())
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let p = f.p();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.scale_raw(c, (i as u64) % p))
            .collect();
        Self::from_raw(f.clone(), coeffs)
    }

    /// Quotient and remainder; fails on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_same(divisor);
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let inv_lc = f.inv_raw(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        if f.is_prime_field() {
            // Subtract q*d as an addition of (p - q)*d and reduce lazily.
            let p = f.p();
            let bound = u64::MAX - (p - 1) * (p - 1);
            for k in (dd..rem.len()).rev() {
                let c = rem[k] % p;
                if c == 0 {
                    continue;
                }
                let q = c * inv_lc % p;
                quot[k - dd] = q;
                let neg = p - q;
                for (slot, &d) in rem[k - dd..k].iter_mut().zip(&divisor.coeffs[..dd]) {
                    if *slot > bound {
                        *slot %= p;
                    }
                    *slot += neg * d;
                }
            }
            rem.truncate(dd);
            for c in rem.iter_mut() {
                *c %= p;
            }
            return Ok((Self::from_raw(f.clone(), quot), Self::from_raw(f.clone(), rem)));
        }
        for k in (dd..rem.len()).rev() {
            let c = rem[k];
            if c == 0 {
                continue;
            }
            let q = f.mul_raw(c, inv_lc);
            quot[k - dd] = q;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                if d != 0 {
                    rem[k - dd + i] = f.sub_raw(rem[k - dd + i], f.mul_raw(q, d));
                }
            }
        }
        rem.truncate(dd);
        Ok((Self::from_raw(f.clone(), quot), Self::from_raw(f.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact division; fails if `divisor` does not divide `self`.
    pub(crate) fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::one(&self.field);
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

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, exp: &BigUint, modulus: &Self) -> Result<Self> {
        let mut acc = Self::one(&self.field).rem(modulus)?;
        let base = self.rem(modulus)?;
        for i in (0..exp.bits()).rev() {
            acc = (&acc * &acc).rem(modulus)?;
            if exp.bit(i) {
                acc = (&acc * &base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// `self^(p^k) mod modulus` by repeated `p`-th powering.
    pub(crate) fn frobenius_mod(&self, k: usize, q: u64, modulus: &Self) -> Result<Self> {
        let e = BigUint::from(q);
        let mut acc = self.rem(modulus)?;
        for _ in 0..k {
            acc = acc.pow_mod(&e, modulus)?;
        }
        Ok(acc)
    }

    /// Horner evaluation at `x`, which must live in the coefficient field or in an extension
    /// reached by the inclusion `F_p ⊆ F_{p^f}` (prime-field coefficients only).
    pub fn evaluate(&self, x: &ExtensionFieldElement) -> Result<ExtensionFieldElement> {
        let target = x.field();
        if !self.field.same_field(target) {
            if self.field.p() != target.p() {
                return Err(Error::CharacteristicMismatch { expected: self.field.p(), actual: target.p() });
            }
            if !self.has_prime_coefficients() {
                return Err(Error::FieldMismatch(format!(
                    "cannot evaluate a polynomial over {} at an element of {}",
                    self.field, target
                )));
            }
        }
        let xv = x.index();
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = target.add_raw(target.mul_raw(acc, xv), c);
        }
        Ok(target.element(acc))
    }

    /// Canonical ordering: by degree, then lexicographically by `(c_0, c_1, ...)` packed indices.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// Ascending-order rendering, e.g. `2+X+X^2+X^3`.
    pub fn to_ascending_string(&self) -> String {
        self.render(false)
    }

    fn render(&self, descending: bool) -> String {
        let mut terms = Vec::new();
        let mut order: Vec<usize> = (0..self.coeffs.len()).collect();
        if descending {
            order.reverse();
        }
        for i in order {
            let c = self.coeffs[i];
            if c == 0 {
                continue;
            }
            let coef = self.field.element(c).to_string();
            let coef = if self.field.is_prime_field() || !coef.contains('+') {
                coef
            } else {
                format!("({coef})")
            };
            let mono = match i {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => coef,
                (1, _) => mono,
                _ => format!("{coef}{mono}"),
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

impl PartialEq for FieldPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_field(&other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for FieldPolynomial {}

impl fmt::Display for FieldPolynomial {
    /// Descending-order rendering, e.g. `X^2+10X`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(true))
    }
}

impl fmt::Debug for FieldPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}

impl Add for &FieldPolynomial {
    type Output = FieldPolynomial;
    fn add(self, rhs: &FieldPolynomial) -> FieldPolynomial {
        self.check_same(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                f.add_raw(a, b)
            })
            .collect();
        FieldPolynomial::from_raw(f.clone(), coeffs)
    }
}

impl Neg for &FieldPolynomial {
    type Output = FieldPolynomial;
    fn neg(self) -> FieldPolynomial {
        let f = &self.field;
        FieldPolynomial::from_raw(f.clone(), self.coeffs.iter().map(|&c| f.neg_raw(c)).collect())
    }
}

impl Sub for &FieldPolynomial {
    type Output = FieldPolynomial;
    fn sub(self, rhs: &FieldPolynomial) -> FieldPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &FieldPolynomial {
    type Output = FieldPolynomial;
    fn mul(self, rhs: &FieldPolynomial) -> FieldPolynomial {
        self.check_same(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return FieldPolynomial::zero(f);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        if f.is_prime_field() {
            // Accumulate unreduced while the running sum cannot overflow.
            let p = f.p();
            let bound = u64::MAX - (p - 1) * (p - 1);
            for (i, &a) in self.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in rhs.coeffs.iter().enumerate() {
                    let slot = &mut out[i + j];
                    if *slot > bound {
                        *slot %= p;
                    }
                    *slot += a * b;
                }
            }
            for c in out.iter_mut() {
                *c %= p;
            }
        } else {
            for (i, &a) in self.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in rhs.coeffs.iter().enumerate() {
                    out[i + j] = f.add_raw(out[i + j], f.mul_raw(a, b));
                }
            }
        }
        FieldPolynomial::from_raw(f.clone(), out)
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for FieldPolynomial {
            type Output = FieldPolynomial;
            fn $method(self, rhs: FieldPolynomial) -> FieldPolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

/// Horner evaluation of a polynomial at an element of its field or of an extension of `F_p`.
pub fn evaluate(f: &FieldPolynomial, x: &ExtensionFieldElement) -> Result<ExtensionFieldElement> {
    f.evaluate(x)
}
