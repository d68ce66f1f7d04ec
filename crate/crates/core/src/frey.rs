//! Frey curves `y^2 = x(x - A)(x + B)` over `Q(ξ_r)` attached to a signature `k = (k1, k2, k3)`:
//!
//! ```text
//! A = (ξ_{k3} - ξ_{k2}) (a^2 + ξ_{k1} ab + b^2)
//! B = (ξ_{k1} - ξ_{k3}) (a^2 + ξ_{k2} ab + b^2)
//! C = -A - B
//! ```
//!
//! Every quantity is written in the power basis of `ξ_1`, so it is an integer polynomial
//! evaluated at `ξ_1` and independent of `r`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{xi_in_power_basis, ResiduePlace, TowerKind};
use crate::error::{Error, Result};
use crate::ffield::ExtensionField;
use crate::polyring::{FieldPolynomial, IntPolynomial};
use crate::supersingular::WeierstrassCurve;

/// The only characteristic for which good reduction of the family is known.
pub const GOOD_REDUCTION_PRIME: u64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Signature {
    k: [u32; 3],
}

impl Signature {
    pub fn new(k1: u32, k2: u32, k3: u32) -> Result<Self> {
        let k = [k1, k2, k3];
        if k.contains(&0) || k1 == k2 || k2 == k3 || k1 == k3 {
            return Err(Error::InvalidSignature(k.to_vec()));
        }
        Ok(Signature { k })
    }

    pub fn k(&self) -> [u32; 3] {
        self.k
    }

    fn xi(&self, i: usize) -> IntPolynomial {
        xi_in_power_basis(self.k[i] as usize)
    }
}

impl TryFrom<Vec<u32>> for Signature {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        match v[..] {
            [a, b, c] => Signature::new(a, b, c),
            _ => Err(Error::InvalidSignature(v)),
        }
    }
}

impl From<Signature> for Vec<u32> {
    fn from(s: Signature) -> Self {
        s.k.to_vec()
    }
}

impl FromStr for Signature {
    type Err = Error;
    /// `"1,2,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        parts.map_err(|_| Error::InvalidSignature(Vec::new()))?.try_into()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k[0], self.k[1], self.k[2])
    }
}

/// One of the three canonical parameter classes `(1,0)`, `(1,1)`, `(1,2)` mod 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParameterClass {
    b: u8,
}

impl ParameterClass {
    pub const ALL: [ParameterClass; 3] = [ParameterClass { b: 0 }, ParameterClass { b: 1 }, ParameterClass { b: 2 }];

    /// Representative of `(a, b) mod 3`.
    ///
    /// `A` and `B` only see `a^2`, `ab` and `b^2`, so swapping `a` and `b` or negating both
    /// leaves them unchanged; these two moves reach every nonzero pair from one of the three
    /// representatives.
    pub fn of(a: i64, b: i64) -> Result<Self> {
        let (mut x, mut y) = (a.rem_euclid(3), b.rem_euclid(3));
        if x == 0 && y == 0 {
            return Err(Error::InvalidClass { a, b });
        }
        if x == 0 {
            std::mem::swap(&mut x, &mut y);
        }
        if x == 2 {
            y = (3 - y) % 3;
        }
        Ok(ParameterClass { b: y as u8 })
    }

    /// `(a, b)` with `a = 1`.
    pub fn pair(&self) -> (i64, i64) {
        (1, self.b as i64)
    }
}

impl fmt::Display for ParameterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1,{})", self.b)
    }
}

impl FromStr for ParameterClass {
    type Err = Error;
    /// `"1,1"` or `"(1,1)"`; any pair not divisible by 3 is mapped to its representative.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let bad = || Error::InvalidClass { a: 0, b: 0 };
        let (a, b) = t.split_once(',').ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        ParameterClass::of(a, b)
    }
}

impl Serialize for ParameterClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ParameterClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `A`, `B`, `C` for integer parameters `(a, b)`.
pub fn abc_for_pair(k: Signature, a: i64, b: i64) -> (IntPolynomial, IntPolynomial, IntPolynomial) {
    let quad = |xi: &IntPolynomial| {
        let ab = IntPolynomial::constant(BigInt::from(a) * b);
        &IntPolynomial::constant(a * a + b * b) + &(xi * &ab)
    };
    let (x1, x2, x3) = (k.xi(0), k.xi(1), k.xi(2));
    let big_a = &(&x3 - &x2) * &quad(&x1);
    let big_b = &(&x1 - &x3) * &quad(&x2);
    let big_c = -&(&big_a + &big_b);
    (big_a, big_b, big_c)
}

pub fn abc_polynomials(k: Signature, cls: ParameterClass) -> (IntPolynomial, IntPolynomial, IntPolynomial) {
    let (a, b) = cls.pair();
    abc_for_pair(k, a, b)
}

/// `c4 = 16(A^2 + AB + B^2)` and `Δ = 16(ABC)^2` from `A`, `B`, `C`.
pub fn c4_delta_from_abc(
    big_a: &IntPolynomial,
    big_b: &IntPolynomial,
    big_c: &IntPolynomial,
) -> (IntPolynomial, IntPolynomial) {
    let sixteen = BigInt::from(16);
    let c4 = (&(&(big_a * big_a) + &(big_a * big_b)) + &(big_b * big_b)).scale(&sixteen);
    let abc = &(big_a * big_b) * big_c;
    let delta = (&abc * &abc).scale(&sixteen);
    (c4, delta)
}

pub fn c4_delta_polynomials(k: Signature, cls: ParameterClass) -> (IntPolynomial, IntPolynomial) {
    let (a, b, c) = abc_polynomials(k, cls);
    c4_delta_from_abc(&a, &b, &c)
}

/// `u, v, w` with `A = v - w`, `B = w - u`, `C = u - v` for the class representative.
///
/// For `(1,0)` this is `(-ξ_{k1}, -ξ_{k2}, -ξ_{k3})`: the unsigned triple gives `v - w = -A`.
pub fn uvw_decomposition(k: Signature, cls: ParameterClass) -> (IntPolynomial, IntPolynomial, IntPolynomial) {
    let (x1, x2, x3) = (k.xi(0), k.xi(1), k.xi(2));
    let (s, t) = match cls.b {
        0 => return (-x1, -x2, -x3),
        1 => (1, 2),
        _ => (2, 5),
    };
    // u = s ξ_{k2} ξ_{k3} - t ξ_{k1}, and cyclically.
    let term = |p: &IntPolynomial, q: &IntPolynomial, r: &IntPolynomial| {
        &(p * q).scale(&BigInt::from(s)) - &r.scale(&BigInt::from(t))
    };
    (term(&x2, &x3, &x1), term(&x1, &x3, &x2), term(&x1, &x2, &x3))
}

/// `h` with `h(ξ_1) = u + v + w`.
pub fn h_polynomial(k: Signature, cls: ParameterClass) -> IntPolynomial {
    let (u, v, w) = uvw_decomposition(k, cls);
    &(&u + &v) + &w
}

/// `g(X) = X^{deg h} h(X + 1/X)`, so that `g(ζ_r) = ζ_r^{deg h} h(ξ_r)`.
pub fn g_polynomial(h: &IntPolynomial) -> IntPolynomial {
    h.x_plus_inverse_lift(h.degree().unwrap_or(0))
}

/// Every polynomial attached to one signature and class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreyData {
    pub k: Signature,
    pub class: ParameterClass,
    #[serde(rename = "A")]
    pub big_a: IntPolynomial,
    #[serde(rename = "B")]
    pub big_b: IntPolynomial,
    #[serde(rename = "C")]
    pub big_c: IntPolynomial,
    pub c4: IntPolynomial,
    pub delta: IntPolynomial,
    pub u: IntPolynomial,
    pub v: IntPolynomial,
    pub w: IntPolynomial,
    pub h: IntPolynomial,
    pub g: IntPolynomial,
}

impl FreyData {
    pub fn new(k: Signature, class: ParameterClass) -> Self {
        let (big_a, big_b, big_c) = abc_polynomials(k, class);
        let (c4, delta) = c4_delta_from_abc(&big_a, &big_b, &big_c);
        let (u, v, w) = uvw_decomposition(k, class);
        let h = &(&u + &v) + &w;
        let g = g_polynomial(&h);
        FreyData { k, class, big_a, big_b, big_c, c4, delta, u, v, w, h, g }
    }
}

/// The reduced Frey curve `y^2 = x(x - Ā)(x + B̄)` at a place above 3.
pub fn frey_curve_at_place(k: Signature, cls: ParameterClass, place: &ResiduePlace) -> Result<WeierstrassCurve> {
    if place.p != GOOD_REDUCTION_PRIME {
        return Err(Error::NoGoodReductionGuarantee { p: place.p });
    }
    if place.tower != TowerKind::RealCyclotomic {
        return Err(Error::InvalidDescriptor("Frey curves live over the real cyclotomic tower".into()));
    }
    let prime = ExtensionField::prime(place.p)?;
    let (big_a, big_b, _) = abc_polynomials(k, cls);
    let at = |f: &IntPolynomial| f.reduce_mod_p(&prime)?.evaluate(&place.xi_image);
    let (a, b) = (at(&big_a)?, at(&big_b)?);
    let z = place.field.zero();
    let curve = WeierstrassCurve::degenerate(&z, &(&b - &a), &z, &(-&(&a * &b)), &z)?;
    if curve.is_singular() {
        return Err(Error::Inconsistency(format!(
            "Frey curve for k = {k}, class {cls} is singular at the place {} above r = {}",
            place.factor, place.r
        )));
    }
    Ok(curve)
}

/// Checks that all eight nonzero pairs in `F_3^2` reduce `c4` and `Δ` to the same polynomials
/// over `F_3` as their representative.
pub fn verify_class_reduction(k: Signature) -> Result<bool> {
    let f3 = ExtensionField::prime(3)?;
    let reduce = |(a, b, c): (IntPolynomial, IntPolynomial, IntPolynomial)| -> Result<(FieldPolynomial, FieldPolynomial)> {
        let (c4, delta) = c4_delta_from_abc(&a, &b, &c);
        Ok((c4.reduce_mod_p(&f3)?, delta.reduce_mod_p(&f3)?))
    };
    for a in 0..3 {
        for b in 0..3 {
            if a == 0 && b == 0 {
                continue;
            }
            let cls = ParameterClass::of(a, b)?;
            if reduce(abc_for_pair(k, a, b))? != reduce(abc_polynomials(k, cls))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
