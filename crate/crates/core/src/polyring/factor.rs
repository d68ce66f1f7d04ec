//! Factorization over finite fields: squarefree decomposition, distinct-degree
//! splitting, then equal-degree splitting driven by a deterministic candidate sweep.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::FieldPolynomial;
use crate::error::{Error, Result};
use crate::ffield::ExtensionFieldElement;

/// `unit * prod factor^multiplicity` with monic irreducible factors in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: ExtensionFieldElement,
    pub factors: Vec<(FieldPolynomial, usize)>,
}

impl Factorization {
    pub fn product(&self) -> FieldPolynomial {
        let mut acc = FieldPolynomial::constant(&self.unit);
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m as u32);
        }
        acc
    }

    /// Degrees of the irreducible factors, repeated by multiplicity.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (f, m) in &self.factors {
            out.extend(std::iter::repeat(f.degree().unwrap_or(0)).take(*m));
        }
        out
    }
}

impl fmt::Display for Factorization {
    /// Renders as `(1+X)(2+X)(2+X+X^2+X^3)`, with the unit prepended only when it is not one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.unit.is_one() || self.factors.is_empty() {
            write!(f, "{}", self.unit)?;
        }
        for (g, m) in &self.factors {
            write!(f, "({})", g.to_ascending_string())?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

impl FieldPolynomial {
    /// `self = g(X)^p` for some `g`; returns `g`. Requires all exponents to be multiples of `p`.
    fn pth_root(&self) -> Self {
        let field = self.field();
        let p = field.p() as usize;
        let root_exp = field.order() / field.p();
        let coeffs = self
            .raw_coefficients()
            .iter()
            .step_by(p)
            .map(|&c| field.pow_raw(c, root_exp))
            .collect();
        debug_assert!(self
            .raw_coefficients()
            .iter()
            .enumerate()
            .all(|(i, &c)| i % p == 0 || c == 0));
        FieldPolynomial::from_raw(field.clone(), coeffs)
    }

    /// Monic squarefree parts with their multiplicities (empty for constants).
    pub fn squarefree_decomposition(&self) -> Result<Vec<(FieldPolynomial, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        squarefree_into(&self.monic(), 1, &mut out);
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.canonical_cmp(&b.0)));
        Ok(out)
    }

    /// For a monic squarefree input: pairs `(g_d, d)` where `g_d` is the product of all
    /// irreducible factors of degree `d`.
    pub fn distinct_degree_factorization(&self) -> Result<Vec<(FieldPolynomial, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let field = self.field().clone();
        let q = field.order();
        let x = FieldPolynomial::x(&field);
        let mut rest = self.monic();
        let mut h = x.rem(&rest)?;
        let mut out = Vec::new();
        let mut d = 1;
        while rest.degree().unwrap_or(0) >= 2 * d {
            h = h.frobenius_mod(1, q, &rest)?;
            let g = rest.gcd(&(&h - &x));
            if !g.is_one() {
                rest = rest.exact_div(&g);
                h = h.rem(&rest)?;
                out.push((g, d));
            }
            d += 1;
        }
        if let Some(n) = rest.degree() {
            if n > 0 {
                out.push((rest, n));
            }
        }
        Ok(out)
    }

    /// Splits a monic squarefree product of irreducibles of common degree `d`.
    pub fn equal_degree_factorization(&self, d: usize) -> Result<Vec<FieldPolynomial>> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 || n % d != 0 {
            return Err(Error::InvalidDegree(d));
        }
        let mut out = Vec::new();
        equal_degree_split(&self.monic(), d, &mut out)?;
        out.sort_by(|a, b| a.canonical_cmp(b));
        Ok(out)
    }

    /// Full factorization into monic irreducibles, ordered by degree then lexicographically.
    pub fn factor(&self) -> Result<Factorization> {
        let unit = self.leading_coefficient().ok_or(Error::ZeroPolynomial)?;
        let mut factors = Vec::new();
        for (part, mult) in self.squarefree_decomposition()? {
            for (group, d) in part.distinct_degree_factorization()? {
                for g in group.equal_degree_factorization(d)? {
                    factors.push((g, mult));
                }
            }
        }
        factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        Ok(Factorization { unit, factors })
    }

    /// `(degree, multiplicity)` for every irreducible factor, without splitting equal-degree groups.
    pub fn irreducible_degrees(&self) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for (part, mult) in self.squarefree_decomposition()? {
            for (group, d) in part.distinct_degree_factorization()? {
                let count = group.degree().unwrap_or(0) / d;
                out.extend(std::iter::repeat((d, mult)).take(count));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Largest degree of an irreducible factor; `0` for nonzero constants.
    pub fn max_irreducible_degree(&self) -> Result<usize> {
        Ok(self.irreducible_degrees()?.iter().map(|&(d, _)| d).max().unwrap_or(0))
    }

    /// Rabin's test: `X^(q^n) = X mod f` and `gcd(X^(q^(n/l)) - X, f) = 1` for primes `l | n`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        if n == 0 {
            return Ok(false);
        }
        if n == 1 {
            return Ok(true);
        }
        let field = self.field().clone();
        let q = field.order();
        let f = self.monic();
        let x = FieldPolynomial::x(&field);
        for (l, _) in crate::ffield::factor_u64(n as u64) {
            let h = x.frobenius_mod(n / l as usize, q, &f)?;
            if !f.gcd(&(&h - &x)).is_one() {
                return Ok(false);
            }
        }
        Ok(x.frobenius_mod(n, q, &f)? == x.rem(&f)?)
    }
}

fn squarefree_into(f: &FieldPolynomial, scale: usize, out: &mut Vec<(FieldPolynomial, usize)>) {
    if f.is_constant() {
        return;
    }
    let p = f.field().p() as usize;
    let df = f.derivative();
    if df.is_zero() {
        squarefree_into(&f.pth_root(), scale * p, out);
        return;
    }
    let mut c = f.gcd(&df);
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if !fac.is_one() {
            out.push((fac, i * scale));
        }
        c = c.exact_div(&y);
        w = y;
        i += 1;
    }
    if !c.is_one() {
        squarefree_into(&c.pth_root(), scale * p, out);
    }
}

/// Candidate splitting polynomials: the counter's base-`q` digits are the coefficients,
/// starting from `X` so that constants are never tried.
fn candidate(f: &FieldPolynomial, counter: u128) -> FieldPolynomial {
    let field = f.field();
    let q = field.order() as u128;
    let n = f.degree().unwrap_or(0);
    let mut coeffs = Vec::new();
    let mut rest = counter;
    while rest > 0 && coeffs.len() < n {
        coeffs.push((rest % q) as u64);
        rest /= q;
    }
    FieldPolynomial::from_raw(field.clone(), coeffs)
}

fn equal_degree_split(f: &FieldPolynomial, d: usize, out: &mut Vec<FieldPolynomial>) -> Result<()> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == d {
        out.push(f.clone());
        return Ok(());
    }
    let field = f.field().clone();
    let q = field.order();
    let odd = field.p() != 2;
    let exponent = (BigUint::from(q).pow(d as u32) - BigUint::one()) >> 1;
    let one = FieldPolynomial::one(&field);
    let mut counter = q as u128;
    loop {
        let t = candidate(f, counter);
        counter += 1;
        if t.is_constant() {
            continue;
        }
        let s = if odd {
            &t.pow_mod(&exponent, f)? - &one
        } else {
            // Absolute trace map T + T^2 + ... + T^(2^(kd - 1)) with q = 2^k.
            let steps = field.degree() * d;
            let mut acc = t.rem(f)?;
            let mut cur = acc.clone();
            for _ in 1..steps {
                cur = (&cur * &cur).rem(f)?;
                acc = &acc + &cur;
            }
            acc
        };
        let g = f.gcd(&s);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let h = f.exact_div(&g);
            equal_degree_split(&g, d, out)?;
            equal_degree_split(&h, d, out)?;
            return Ok(());
        }
    }
}

/// Full factorization of a nonzero polynomial over a finite field.
pub fn factor(f: &FieldPolynomial) -> Result<Factorization> {
    f.factor()
}

/// Largest degree of an irreducible factor of `f`.
pub fn max_irreducible_degree(f: &FieldPolynomial) -> Result<usize> {
    f.max_irreducible_degree()
}
