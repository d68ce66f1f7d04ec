//! Cyclotomic fields `Q(ζ_r)`, their real subfields `Q(ξ_r)` with `ξ_r = ζ_r + ζ_r^{-1}`,
//! and the places above a fixed prime `p`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::{factor_u128, is_prime, multiplicative_order_mod, ExtensionField, ExtensionFieldElement};
use crate::polyring::{resultant, FieldPolynomial, IntPolynomial};

/// Largest degree bound accepted by [`exceptional_primes`].
pub const MAX_EXCEPTIONAL_DEGREE: usize = 24;

/// `1 + X + ... + X^{r-1}`.
pub fn cyclotomic_polynomial(r: u64) -> Result<IntPolynomial> {
    if !is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    Ok(IntPolynomial::from_i64s(&vec![1; r as usize]))
}

/// `P_k` with `P_k(ξ_1) = ξ_k`: `P_0 = 2`, `P_1 = X`, `P_k = X P_{k-1} - P_{k-2}`.
pub fn xi_in_power_basis(k: usize) -> IntPolynomial {
    let x = IntPolynomial::x();
    let (mut prev, mut cur) = (IntPolynomial::constant(2), x.clone());
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Monic minimal polynomial `ψ_r` of `ξ_r`, of degree `(r-1)/2`.
///
/// `Φ_r(y) / y^m = 1 + Σ_{i=1}^{m} (y^i + y^{-i})` with `m = (r-1)/2`, so `ψ_r = 1 + Σ P_i`.
pub fn real_minimal_polynomial(r: u64) -> Result<IntPolynomial> {
    check_odd_prime(r)?;
    let m = ((r - 1) / 2) as usize;
    let x = IntPolynomial::x();
    let (mut prev, mut cur) = (IntPolynomial::constant(2), x.clone());
    let mut acc = &IntPolynomial::one() + &cur;
    for _ in 1..m {
        let next = &(&x * &cur) - &prev;
        acc = &acc + &next;
        prev = cur;
        cur = next;
    }
    Ok(acc)
}

fn check_odd_prime(r: u64) -> Result<()> {
    if r == 2 || !is_prime(r) {
        return Err(Error::InvalidIndex(r));
    }
    Ok(())
}

/// `Q(ξ_r)` together with its defining polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealCyclotomicField {
    r: u64,
    psi: IntPolynomial,
}

impl RealCyclotomicField {
    pub fn new(r: u64) -> Result<Self> {
        Ok(RealCyclotomicField { r, psi: real_minimal_polynomial(r)? })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn psi(&self) -> &IntPolynomial {
        &self.psi
    }

    pub fn degree(&self) -> usize {
        ((self.r - 1) / 2) as usize
    }
}

/// Which field each family member lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TowerKind {
    /// `Q(ξ_r)`, generated by `ξ_r`.
    RealCyclotomic,
    /// `Q(ζ_r)`, generated by `ζ_r`.
    FullCyclotomic,
}

impl TowerKind {
    /// Minimal polynomial of the tower's generator at level `r`.
    pub fn defining_polynomial(self, r: u64) -> Result<IntPolynomial> {
        check_odd_prime(r)?;
        match self {
            TowerKind::RealCyclotomic => real_minimal_polynomial(r),
            TowerKind::FullCyclotomic => cyclotomic_polynomial(r),
        }
    }

    pub fn places(self, r: u64, p: u64) -> Result<Vec<ResiduePlace>> {
        places_of(self, r, p)
    }
}

impl fmt::Display for TowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TowerKind::RealCyclotomic => "real-cyclotomic",
            TowerKind::FullCyclotomic => "full-cyclotomic",
        })
    }
}

/// A place above `p`: one irreducible factor of the reduced defining polynomial, its residue
/// field, and the image of the generator (`ξ̄_r`, or `ζ̄_r` for the full tower) in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePlace {
    pub r: u64,
    pub p: u64,
    pub tower: TowerKind,
    pub index: usize,
    pub factor: FieldPolynomial,
    pub field: ExtensionField,
    pub xi_image: ExtensionFieldElement,
}

impl ResiduePlace {
    /// Residue degree over `F_p`.
    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    /// Checks `xi_image` against roots of unity built independently.
    ///
    /// When `ord_r(p)` equals the place degree, some `z` of order `r` in the residue field must
    /// map to `xi_image`. Otherwise (real tower, `ord_r(p)` twice the place degree) the check runs
    /// in `F[z]/(z^2 - ξ̄ z + 1)`, the degree-`ord_r(p)` extension, where `z + z^{-1} = ξ̄` by
    /// construction and `z` must have order exactly `r`.
    pub fn embedding_consistent(&self) -> Result<bool> {
        let g = multiplicative_order_mod(self.p, self.r)? as usize;
        if g == self.degree() {
            let z = self.field.element_of_order(self.r)?;
            let image = |z: &ExtensionFieldElement| match self.tower {
                TowerKind::RealCyclotomic => z + &z.inv().expect("root of unity"),
                TowerKind::FullCyclotomic => z.clone(),
            };
            Ok((1..self.r).any(|a| image(&z.pow(a)) == self.xi_image))
        } else if self.tower == TowerKind::RealCyclotomic && g == 2 * self.degree() {
            let f = &self.field;
            let xi = &self.xi_image;
            // (a + b z)(c + d z) with z^2 = ξ̄ z - 1
            let mul = |(a, b): &(ExtensionFieldElement, ExtensionFieldElement),
                       (c, d): &(ExtensionFieldElement, ExtensionFieldElement)| {
                let bd = b * d;
                (&(a * c) - &bd, &(&(a * d) + &(b * c)) + &(&bd * xi))
            };
            let mut acc = (f.one(), f.zero());
            let mut base = (f.zero(), f.one());
            let mut e = self.r;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul(&acc, &base);
                }
                base = mul(&base, &base);
                e >>= 1;
            }
            // z != 1 because ξ̄ = 2 would make z^2 - 2z + 1 a square, contradicting g = 2f.
            Ok(acc.0.is_one() && acc.1.is_zero() && !(xi - &f.from_int(2)).is_zero())
        } else {
            Ok(false)
        }
    }
}

/// The places of `Q(ξ_r)` above `p`.
pub fn residue_places(r: u64, p: u64) -> Result<Vec<ResiduePlace>> {
    places_of(TowerKind::RealCyclotomic, r, p)
}

fn places_of(tower: TowerKind, r: u64, p: u64) -> Result<Vec<ResiduePlace>> {
    check_odd_prime(r)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == r {
        return Err(Error::Ramified { r });
    }
    let prime = ExtensionField::prime(p)?;
    let reduced = tower.defining_polynomial(r)?.reduce_mod_p(&prime)?;
    let factors = reduced.factor()?.factors;
    let f = factors[0].0.degree().unwrap();
    if factors.iter().any(|(phi, e)| *e != 1 || phi.degree() != Some(f)) {
        return Err(Error::Inconsistency(format!(
            "reduction of the level-{r} defining polynomial mod {p} is not a product of distinct factors of one degree"
        )));
    }
    factors
        .into_iter()
        .enumerate()
        .map(|(index, (factor, _))| {
            let (field, xi_image) = if f == 1 {
                let root = (p - factor.raw_coefficients()[0]) % p;
                (prime.clone(), prime.element(root))
            } else {
                let field = ExtensionField::with_modulus(&factor)?;
                let xi = field.generator_root();
                (field, xi)
            };
            debug_assert!(factor.evaluate(&xi_image)?.is_zero());
            Ok(ResiduePlace { r, p, tower, index, factor, field, xi_image })
        })
        .collect()
}

/// Primes `r >= r_min`, `r != p`, with `ord_r(p) <= d`, from the factorizations of `p^f - 1`, `f <= d`.
pub fn exceptional_primes(p: u64, d: usize, r_min: u64) -> Result<Vec<u64>> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    if d > MAX_EXCEPTIONAL_DEGREE {
        return Err(Error::DegreeBoundTooLarge { d, limit: MAX_EXCEPTIONAL_DEGREE });
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if (p as u128).checked_pow(d as u32).is_none() {
        return Err(Error::FieldTooLarge { p, degree: d });
    }
    let mut out: Vec<u64> = Vec::new();
    for f in 1..=d as u32 {
        for (r, _) in factor_u128((p as u128).pow(f) - 1) {
            if r >= r_min as u128 && r != p as u128 {
                out.push(u64::try_from(r).map_err(|_| Error::FieldTooLarge { p, degree: f as usize })?);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// A norm computed as a resultant, with its sign kept separately from the magnitude.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Norm {
    pub r: u64,
    pub value: BigInt,
}

impl Norm {
    pub fn magnitude(&self) -> BigInt {
        self.value.abs()
    }

    pub fn sign(&self) -> i8 {
        if self.value.is_zero() {
            0
        } else if self.value.is_negative() {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign() {
            -1 => "-1",
            0 => "0",
            _ => "+1",
        };
        write!(f, "norm={} sign={s}", self.magnitude())
    }
}

/// `Res(ψ_r, h)`; its absolute value is the norm of `h(ξ_r)` from `Q(ξ_r)` down to `Q`.
pub fn norm(r: u64, h: &IntPolynomial) -> Result<Norm> {
    let psi = real_minimal_polynomial(r)?;
    Ok(Norm { r, value: resultant(&psi, h)? })
}

/// Norm of `h(ζ_r + ζ_r^{-1})` from `Q(ζ_r)` down to `Q`, as `Res(Φ_r, X^{deg h} h(X + 1/X))`.
/// Every real conjugate occurs twice, so this is the square of [`norm`].
pub fn cyclotomic_norm(r: u64, h: &IntPolynomial) -> Result<Norm> {
    let phi = cyclotomic_polynomial(r)?;
    let g = h.x_plus_inverse_lift(h.degree().unwrap_or(0));
    Ok(Norm { r, value: resultant(&phi, &g)? })
}
