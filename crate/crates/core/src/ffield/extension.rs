use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;

use super::prime::{factor_u64, is_prime, PrimeFieldElement};
use crate::error::{Error, Result};
use crate::polyring::FieldPolynomial;

/// Largest supported extension degree; `p^f` must also fit in 64 bits.
pub const MAX_DEGREE: usize = 63;

/// Characteristics are kept below 2^31 so that products of two residues fit in a `u64`.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// The finite field `F_p[t]/(m(t))` for a monic irreducible `m` of degree `f`.
///
/// Elements are packed into a single `u64`: the coefficient vector
/// `(c_0, ..., c_{f-1})` of the quotient basis is stored as `sum c_i p^i`.
/// Prime-field residues therefore keep their own value under the inclusion
/// `F_p ⊆ F_{p^f}`, which is what lets polynomials over `F_p` be evaluated
/// at extension elements without any conversion.
///
/// The handle is cheap to clone and may be shared across threads.
#[derive(Clone)]
pub struct ExtensionField {
    inner: Arc<FieldInner>,
}

struct FieldInner {
    p: u64,
    degree: usize,
    /// Monic modulus, lowest degree first, length `degree + 1`.
    modulus: Vec<u64>,
    order: u64,
    /// `true` when `2 * degree * p^2` fits in a `u64`, so products can be accumulated unreduced.
    lazy: bool,
    group_order_factors: Vec<(u64, u32)>,
    generator: OnceLock<u64>,
    quadratic: OnceLock<Vec<i8>>,
}

/// Builds `F_{p^f}` with the lexicographically least monic irreducible modulus.
///
/// Candidates `t^f + c_{f-1} t^{f-1} + ... + c_0` are ordered lexicographically
/// by `(c_0, c_1, ..., c_{f-1})`; for `f = 1` this yields the modulus `t`.
pub fn field_create(p: u64, f: usize) -> Result<ExtensionField> {
    ExtensionField::new(p, f)
}

impl ExtensionField {
    pub fn new(p: u64, degree: usize) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidDegree(degree));
        }
        Self::check_parameters(p, degree)?;
        let prime = Self::prime(p)?;
        if degree == 1 {
            return Ok(prime);
        }
        let count = prime.order().pow(degree as u32);
        // Counters below p^(degree-1) have c_0 = 0 and are reducible by X.
        for n in count / p..count {
            // c_0 is the most significant digit of the enumeration counter.
            let mut coeffs = vec![0u64; degree + 1];
            let mut rest = n;
            for i in (0..degree).rev() {
                coeffs[i] = rest % p;
                rest /= p;
            }
            coeffs[degree] = 1;
            let candidate = FieldPolynomial::from_raw(prime.clone(), coeffs.clone());
            if candidate.is_irreducible()? {
                return Ok(Self::from_parts(p, degree, coeffs));
            }
        }
        unreachable!("irreducible polynomials of every degree exist over F_{p}")
    }

    /// The prime field `F_p`, with modulus `t` (so that `t` itself is the zero class).
    pub fn prime(p: u64) -> Result<Self> {
        Self::check_parameters(p, 1)?;
        Ok(Self::from_parts(p, 1, vec![0, 1]))
    }

    /// `F_p[t]/(modulus)` for a caller-supplied monic irreducible polynomial over `F_p`.
    pub fn with_modulus(modulus: &FieldPolynomial) -> Result<Self> {
        let base = modulus.field();
        if !base.is_prime_field() {
            return Err(Error::FieldMismatch("modulus must have prime-field coefficients".into()));
        }
        let p = base.p();
        let degree = modulus.degree().ok_or(Error::ZeroPolynomial)?;
        if degree < 1 {
            return Err(Error::InvalidDegree(degree));
        }
        Self::check_parameters(p, degree)?;
        if !modulus.is_monic() || !modulus.is_irreducible()? {
            return Err(Error::ReducibleModulus { p, degree });
        }
        Ok(Self::from_parts(p, degree, modulus.raw_coefficients().to_vec()))
    }

    fn check_parameters(p: u64, degree: usize) -> Result<()> {
        if !is_prime(p) || p >= MAX_CHARACTERISTIC {
            return Err(Error::NotPrime(p));
        }
        if degree > MAX_DEGREE || p.checked_pow(degree as u32).is_none() {
            return Err(Error::FieldTooLarge { p, degree });
        }
        Ok(())
    }

    fn from_parts(p: u64, degree: usize, modulus: Vec<u64>) -> Self {
        let order = p.pow(degree as u32);
        let lazy = (p as u128) * (p as u128) * (2 * degree as u128) < u64::MAX as u128;
        ExtensionField {
            inner: Arc::new(FieldInner {
                p,
                degree,
                modulus,
                order,
                lazy,
                group_order_factors: factor_u64(order - 1),
                generator: OnceLock::new(),
                quadratic: OnceLock::new(),
            }),
        }
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    /// Number of elements, `p^f`.
    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.degree == 1
    }

    /// Modulus coefficients, lowest degree first (monic, length `degree + 1`).
    pub fn modulus_coefficients(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn modulus(&self) -> FieldPolynomial {
        let prime = ExtensionField::prime(self.p()).expect("characteristic already validated");
        FieldPolynomial::from_raw(prime, self.inner.modulus.clone())
    }

    /// `F_p` with the same characteristic.
    pub fn prime_field(&self) -> ExtensionField {
        if self.is_prime_field() {
            return self.clone();
        }
        ExtensionField::prime(self.p()).expect("characteristic already validated")
    }

    pub fn zero(&self) -> ExtensionFieldElement {
        self.element(0)
    }

    pub fn one(&self) -> ExtensionFieldElement {
        self.element(1)
    }

    /// The class of `t` in `F_p[t]/(m)`, a root of the modulus.
    pub fn generator_root(&self) -> ExtensionFieldElement {
        if self.is_prime_field() {
            let m0 = self.inner.modulus[0];
            self.element((self.p() - m0) % self.p())
        } else {
            self.element(self.p())
        }
    }

    /// Element with the given packed index (`sum c_i p^i`).
    ///
    /// # Panics
    /// If `index >= order()`.
    pub fn element(&self, index: u64) -> ExtensionFieldElement {
        assert!(index < self.order(), "index {index} outside field of order {}", self.order());
        ExtensionFieldElement { field: self.clone(), value: index }
    }

    pub fn from_int(&self, value: i64) -> ExtensionFieldElement {
        self.element(PrimeFieldElement::reduce(self.p(), value).value())
    }

    /// Element with coefficients `coeffs` in the quotient basis (reduced mod p, extra entries folded in).
    pub fn from_coefficients(&self, coeffs: &[i64]) -> ExtensionFieldElement {
        let t = self.generator_root();
        let mut acc = self.zero();
        let mut power = self.one();
        for &c in coeffs {
            acc = &acc + &(&power * &self.from_int(c));
            power = &power * &t;
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = ExtensionFieldElement> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    pub fn same_field(&self, other: &ExtensionField) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }

    /// Prime factorization of the multiplicative group order `p^f - 1`.
    pub fn group_order_factors(&self) -> &[(u64, u32)] {
        &self.inner.group_order_factors
    }

    /// The first generator of the multiplicative group in packed-index order.
    pub fn generator(&self) -> ExtensionFieldElement {
        let g = *self.inner.generator.get_or_init(|| {
            let n = self.order() - 1;
            (1..self.order())
                .find(|&x| self.order_raw(x) == n)
                .expect("the multiplicative group of a finite field is cyclic")
        });
        self.element(g)
    }

    /// An element of multiplicative order exactly `r`, namely `g^((q-1)/r)` for the first generator `g`.
    pub fn element_of_order(&self, r: u64) -> Result<ExtensionFieldElement> {
        let n = self.order() - 1;
        if r == 0 || n % r != 0 {
            return Err(Error::NoRootsOfUnity { r, order: self.order() });
        }
        Ok(self.generator().pow(n / r))
    }

    // ---- raw arithmetic on packed indices ----

    pub(crate) fn add_raw(&self, a: u64, b: u64) -> u64 {
        let p = self.inner.p;
        if self.inner.degree == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        let (mut x, mut y, mut out, mut pw) = (a, b, 0u64, 1u64);
        for _ in 0..self.inner.degree {
            let mut s = x % p + y % p;
            if s >= p {
                s -= p;
            }
            out += s * pw;
            pw = pw.wrapping_mul(p);
            x /= p;
            y /= p;
        }
        out
    }

    pub(crate) fn neg_raw(&self, a: u64) -> u64 {
        let p = self.inner.p;
        if self.inner.degree == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let (mut x, mut out, mut pw) = (a, 0u64, 1u64);
        for _ in 0..self.inner.degree {
            let d = x % p;
            if d != 0 {
                out += (p - d) * pw;
            }
            pw = pw.wrapping_mul(p);
            x /= p;
        }
        out
    }

    pub(crate) fn sub_raw(&self, a: u64, b: u64) -> u64 {
        self.add_raw(a, self.neg_raw(b))
    }

    /// Multiplies by a prime-field scalar `c < p`.
    pub(crate) fn scale_raw(&self, a: u64, c: u64) -> u64 {
        let p = self.inner.p;
        if self.inner.degree == 1 {
            return a * c % p;
        }
        let (mut x, mut out, mut pw) = (a, 0u64, 1u64);
        for _ in 0..self.inner.degree {
            out += (x % p) * c % p * pw;
            pw = pw.wrapping_mul(p);
            x /= p;
        }
        out
    }

    pub(crate) fn mul_raw(&self, a: u64, b: u64) -> u64 {
        let n = self.inner.degree;
        if n == 1 {
            return a * b % self.inner.p;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        if n <= 8 {
            self.mul_digits::<8, 16>(a, b)
        } else if n <= 16 {
            self.mul_digits::<16, 32>(a, b)
        } else {
            self.mul_digits::<64, 128>(a, b)
        }
    }

    fn mul_digits<const N: usize, const M: usize>(&self, a: u64, b: u64) -> u64 {
        let inner = &*self.inner;
        let (p, n) = (inner.p, inner.degree);
        let mut da = [0u64; N];
        let mut db = [0u64; N];
        decode_into(a, p, &mut da[..n]);
        decode_into(b, p, &mut db[..n]);
        let mut prod = [0u64; M];
        if inner.lazy {
            for i in 0..n {
                if da[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    prod[i + j] += da[i] * db[j];
                }
            }
            for k in (n..2 * n - 1).rev() {
                let c = prod[k] % p;
                if c != 0 {
                    let neg = p - c;
                    for i in 0..n {
                        prod[k - n + i] += neg * inner.modulus[i];
                    }
                }
            }
        } else {
            for i in 0..n {
                for j in 0..n {
                    prod[i + j] = (prod[i + j] + da[i] * db[j] % p) % p;
                }
            }
            for k in (n..2 * n - 1).rev() {
                let c = prod[k] % p;
                if c != 0 {
                    let neg = p - c;
                    for i in 0..n {
                        prod[k - n + i] = (prod[k - n + i] + neg * inner.modulus[i] % p) % p;
                    }
                }
            }
        }
        let mut out = 0u64;
        for i in (0..n).rev() {
            out = out * p + prod[i] % p;
        }
        out
    }

    pub(crate) fn pow_raw(&self, a: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul_raw(base, base);
            }
        }
        acc
    }

    pub(crate) fn inv_raw(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero { p: self.p(), degree: self.degree() });
        }
        Ok(self.pow_raw(a, self.order() - 2))
    }

    pub(crate) fn order_raw(&self, a: u64) -> u64 {
        let mut ord = self.order() - 1;
        for &(q, _) in &self.inner.group_order_factors {
            while ord % q == 0 && self.pow_raw(a, ord / q) == 1 {
                ord /= q;
            }
        }
        ord
    }

    /// Digits of a packed element in the quotient basis, lowest first.
    pub(crate) fn digits(&self, a: u64) -> Vec<u64> {
        let mut out = vec![0; self.degree()];
        decode_into(a, self.p(), &mut out);
        out
    }

    /// Quadratic-character table (odd `p`) or absolute-trace table (`p = 2`), indexed by packed value.
    ///
    /// For odd `p` the entry is `0` at zero, `1` on nonzero squares and `-1` elsewhere;
    /// for `p = 2` it is `Tr_{F_q/F_2}(v)` as `0` or `1`. Built once per field on first use.
    pub(crate) fn quadratic_table(&self) -> &[i8] {
        self.inner.quadratic.get_or_init(|| {
            let q = self.order() as usize;
            if self.p() == 2 {
                let n = self.degree();
                let basis_traces: Vec<u64> = (0..n)
                    .map(|i| {
                        let b = 1u64 << i;
                        let mut acc = 0u64;
                        let mut cur = b;
                        for _ in 0..n {
                            acc = self.add_raw(acc, cur);
                            cur = self.mul_raw(cur, cur);
                        }
                        debug_assert!(acc < 2);
                        acc
                    })
                    .collect();
                (0..q as u64)
                    .map(|v| {
                        let t = (0..n).filter(|&i| (v >> i) & 1 == 1).map(|i| basis_traces[i]).sum::<u64>();
                        (t & 1) as i8
                    })
                    .collect()
            } else {
                let mut table = vec![-1i8; q];
                table[0] = 0;
                for y in 1..q as u64 {
                    table[self.mul_raw(y, y) as usize] = 1;
                }
                table
            }
        })
    }
}

fn decode_into(mut a: u64, p: u64, out: &mut [u64]) {
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
}

impl PartialEq for ExtensionField {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl Eq for ExtensionField {}

impl fmt::Debug for ExtensionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} (modulus {})", self.p(), self.degree(), self.modulus())
    }
}

impl fmt::Display for ExtensionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_prime_field() {
            write!(f, "F_{}", self.p())
        } else {
            write!(f, "F_{}^{}", self.p(), self.degree())
        }
    }
}

/// An element of an [`ExtensionField`].
#[derive(Clone)]
pub struct ExtensionFieldElement {
    field: ExtensionField,
    value: u64,
}

impl ExtensionFieldElement {
    pub fn field(&self) -> &ExtensionField {
        &self.field
    }

    /// Packed index `sum c_i p^i`; also the canonical ordering key.
    pub fn index(&self) -> u64 {
        self.value
    }

    /// Coefficients in the quotient basis `1, t, ..., t^{f-1}`.
    pub fn coefficients(&self) -> Vec<PrimeFieldElement> {
        let p = self.field.p();
        self.field
            .digits(self.value)
            .into_iter()
            .map(|d| PrimeFieldElement::from_canonical(p, d))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    /// Whether the element lies in the prime subfield.
    pub fn in_prime_field(&self) -> bool {
        self.value < self.field.p()
    }

    fn with(&self, value: u64) -> Self {
        ExtensionFieldElement { field: self.field.clone(), value }
    }

    fn check_same(&self, other: &Self) {
        assert!(
            self.field.same_field(&other.field),
            "field mismatch: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn square(&self) -> Self {
        self.with(self.field.mul_raw(self.value, self.value))
    }

    pub fn pow(&self, exp: u64) -> Self {
        self.with(self.field.pow_raw(self.value, exp))
    }

    pub fn pow_big(&self, exp: &BigUint) -> Self {
        let mut acc = 1u64;
        for i in (0..exp.bits()).rev() {
            acc = self.field.mul_raw(acc, acc);
            if exp.bit(i) {
                acc = self.field.mul_raw(acc, self.value);
            }
        }
        self.with(acc)
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv_raw(self.value)?))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_same(other);
        Ok(self.with(self.field.mul_raw(self.value, self.field.inv_raw(other.value)?)))
    }

    /// `x -> x^p`.
    pub fn frobenius(&self) -> Self {
        self.pow(self.field.p())
    }

    /// Least `n >= 1` with `x^n = 1`.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.field.order_raw(self.value))
    }

    /// Maps a prime-field element into `target` along `F_p ⊆ F_{p^f}`.
    pub fn lift_into(&self, target: &ExtensionField) -> Result<Self> {
        if self.field.same_field(target) {
            return Ok(self.clone());
        }
        if self.field.p() != target.p() {
            return Err(Error::CharacteristicMismatch { expected: target.p(), actual: self.field.p() });
        }
        if !self.field.is_prime_field() {
            return Err(Error::FieldMismatch(format!("cannot map {} into {}", self.field, target)));
        }
        Ok(target.element(self.value))
    }

    /// Quadratic character `x^((q-1)/2)` as `-1`, `0` or `1` (odd characteristic only).
    pub fn quadratic_character(&self) -> i8 {
        assert!(self.field.p() != 2, "quadratic character needs odd characteristic");
        if self.is_zero() {
            return 0;
        }
        if self.field.pow_raw(self.value, (self.field.order() - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }
}

/// Least `n >= 1` with `x^n = 1`.
pub fn element_order(x: &ExtensionFieldElement) -> Result<u64> {
    x.order()
}

/// An element of order exactly `r` in `field`.
pub fn element_of_order(field: &ExtensionField, r: u64) -> Result<ExtensionFieldElement> {
    field.element_of_order(r)
}

impl PartialEq for ExtensionFieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field.same_field(&other.field)
    }
}

impl Eq for ExtensionFieldElement {}

impl Hash for ExtensionFieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.p().hash(state);
        self.field.degree().hash(state);
        self.value.hash(state);
    }
}

impl PartialOrd for ExtensionFieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical element ordering: by packed index (fields compared by characteristic and degree first).
impl Ord for ExtensionFieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.p(), self.field.degree(), self.value).cmp(&(
            other.field.p(),
            other.field.degree(),
            other.value,
        ))
    }
}

impl fmt::Debug for ExtensionFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}

impl fmt::Display for ExtensionFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            return write!(f, "{}", self.value);
        }
        let digits = self.field.digits(self.value);
        let mut terms = Vec::new();
        for (i, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $raw:ident) => {
        impl $trait<&ExtensionFieldElement> for &ExtensionFieldElement {
            type Output = ExtensionFieldElement;
            fn $method(self, rhs: &ExtensionFieldElement) -> ExtensionFieldElement {
                self.check_same(rhs);
                self.with(self.field.$raw(self.value, rhs.value))
            }
        }
        impl $trait<ExtensionFieldElement> for ExtensionFieldElement {
            type Output = ExtensionFieldElement;
            fn $method(self, rhs: ExtensionFieldElement) -> ExtensionFieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add_raw);
binop!(Sub, sub, sub_raw);
binop!(Mul, mul, mul_raw);

impl Div<&ExtensionFieldElement> for &ExtensionFieldElement {
    type Output = ExtensionFieldElement;

    /// # Panics
    /// On division by zero; use [`ExtensionFieldElement::checked_div`] to handle it.
    fn div(self, rhs: &ExtensionFieldElement) -> ExtensionFieldElement {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &ExtensionFieldElement {
    type Output = ExtensionFieldElement;
    fn neg(self) -> ExtensionFieldElement {
        self.with(self.field.neg_raw(self.value))
    }
}

impl Neg for ExtensionFieldElement {
    type Output = ExtensionFieldElement;
    fn neg(self) -> ExtensionFieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_modulus_t() {
        let f = field_create(3, 1).unwrap();
        assert_eq!(f.order(), 3);
        assert_eq!(f.modulus_coefficients(), &[0, 1]);
        assert!(f.generator_root().is_zero());
    }

    #[test]
    fn creation_errors() {
        assert_eq!(field_create(4, 2).unwrap_err(), Error::NotPrime(4));
        assert_eq!(field_create(3, 0).unwrap_err(), Error::InvalidDegree(0));
        assert!(matches!(field_create(3, 41), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn cubic_modulus_has_no_roots() {
        let f = field_create(3, 3).unwrap();
        assert_eq!(f.order(), 27);
        let m = f.modulus_coefficients();
        for x in 0..3u64 {
            let v = m.iter().rev().fold(0, |acc, &c| (acc * x + c) % 3);
            assert_ne!(v, 0, "modulus has root {x}");
        }
    }

    #[test]
    fn quadratic_modulus_is_lexicographically_least() {
        // t^2 + 1 is the first irreducible when c_0 leads the order: c_0 = 0 is reducible.
        assert_eq!(field_create(3, 2).unwrap().modulus_coefficients(), &[1, 0, 1]);
        assert_eq!(field_create(2, 2).unwrap().modulus_coefficients(), &[1, 1, 1]);
    }

    #[test]
    fn group_order_of_f243() {
        let f = field_create(3, 5).unwrap();
        assert_eq!(f.order(), 243);
        assert_eq!(f.group_order_factors(), &[(2, 1), (11, 2)]);
    }

    #[test]
    fn element_orders() {
        let f5 = field_create(5, 1).unwrap();
        assert_eq!(f5.element(2).order().unwrap(), 4);
        assert_eq!(f5.one().order().unwrap(), 1);
        assert_eq!(f5.zero().order(), Err(Error::ZeroElement));
        let f27 = field_create(3, 3).unwrap();
        assert_eq!(f27.generator().order().unwrap(), 26);
        for x in f27.elements().skip(1) {
            assert_eq!(26 % x.order().unwrap(), 0);
        }
    }

    #[test]
    fn roots_of_unity() {
        let f = field_create(3, 6).unwrap();
        let z = f.element_of_order(7).unwrap();
        assert_eq!(z.order().unwrap(), 7);
        assert!(z.pow(7).is_one());
        assert!(!z.is_one());
        let f3 = field_create(3, 1).unwrap();
        assert_eq!(f3.element_of_order(2).unwrap().index(), 2);
        let f27 = field_create(3, 3).unwrap();
        assert_eq!(
            f27.element_of_order(5).unwrap_err(),
            Error::NoRootsOfUnity { r: 5, order: 27 }
        );
    }

    #[test]
    fn field_axioms_small() {
        for (p, n) in [(2u64, 4usize), (3, 3), (5, 2), (7, 1)] {
            let f = field_create(p, n).unwrap();
            for a in f.elements() {
                assert_eq!(&(&a + &(-&a)), &f.zero());
                if !a.is_zero() {
                    assert!((&a * &a.inv().unwrap()).is_one());
                }
                for b in f.elements().step_by(3) {
                    assert_eq!(&a * &b, &b * &a);
                    assert_eq!(&(&a - &b) + &b, a.clone());
                }
            }
            // Frobenius is additive.
            let x = f.element(f.order() - 1);
            let y = f.element(f.order() / 2);
            assert_eq!((&x + &y).frobenius(), &x.frobenius() + &y.frobenius());
        }
    }

    #[test]
    fn lazy_and_strict_reduction_agree() {
        let p = 40_009u64;
        let f = field_create(p, 2).unwrap();
        let a = f.from_coefficients(&[12345, 40000]);
        let b = f.from_coefficients(&[39999, 7]);
        // (a0 + a1 t)(b0 + b1 t) with t^2 = -m1 t - m0
        let m = f.modulus_coefficients();
        let (a0, a1, b0, b1) = (12345u128, 40000u128, 39999u128, 7u128);
        let pp = p as u128;
        let c2 = a1 * b1 % pp;
        let c1 = (a0 * b1 + a1 * b0) % pp;
        let c0 = a0 * b0 % pp;
        let r1 = (c1 + (pp - c2) * m[1] as u128) % pp;
        let r0 = (c0 + (pp - c2) * m[0] as u128) % pp;
        assert_eq!((&a * &b).index(), (r0 + r1 * pp) as u64);
    }

    #[test]
    fn quadratic_tables() {
        let f = field_create(3, 2).unwrap();
        let table = f.quadratic_table();
        for x in f.elements() {
            assert_eq!(table[x.index() as usize], x.quadratic_character());
        }
        let f16 = field_create(2, 4).unwrap();
        let table = f16.quadratic_table();
        for x in f16.elements() {
            let mut tr = f16.zero();
            let mut cur = x.clone();
            for _ in 0..4 {
                tr = &tr + &cur;
                cur = cur.square();
            }
            assert_eq!(table[x.index() as usize] as u64, tr.index());
        }
    }
}
