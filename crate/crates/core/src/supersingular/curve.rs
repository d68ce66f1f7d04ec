use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{ExtensionField, ExtensionFieldElement};
use crate::parallel::Execution;

/// Default ceiling on the field order accepted by exhaustive point counting.
pub const DEFAULT_POINT_COUNT_CAP: u64 = 531_441; // 3^12

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct WeierstrassCurve {
    field: ExtensionField,
    a: [ExtensionFieldElement; 5],
}

/// The standard `b`/`c` invariants, the discriminant and (for nonsingular models) `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveInvariants {
    pub b2: ExtensionFieldElement,
    pub b4: ExtensionFieldElement,
    pub b6: ExtensionFieldElement,
    pub b8: ExtensionFieldElement,
    pub c4: ExtensionFieldElement,
    pub c6: ExtensionFieldElement,
    pub discriminant: ExtensionFieldElement,
    pub j: Option<ExtensionFieldElement>,
}

impl WeierstrassCurve {
    /// A nonsingular model; fails with [`Error::SingularCurve`] when `Δ = 0`.
    pub fn new(
        a1: &ExtensionFieldElement,
        a2: &ExtensionFieldElement,
        a3: &ExtensionFieldElement,
        a4: &ExtensionFieldElement,
        a6: &ExtensionFieldElement,
    ) -> Result<Self> {
        let curve = Self::degenerate(a1, a2, a3, a4, a6)?;
        if curve.is_singular() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    /// Same as [`WeierstrassCurve::new`] without the discriminant check, for studying reductions.
    pub fn degenerate(
        a1: &ExtensionFieldElement,
        a2: &ExtensionFieldElement,
        a3: &ExtensionFieldElement,
        a4: &ExtensionFieldElement,
        a6: &ExtensionFieldElement,
    ) -> Result<Self> {
        let field = a1.field().clone();
        let mut a = [a1.clone(), a2.clone(), a3.clone(), a4.clone(), a6.clone()];
        for x in a.iter_mut() {
            *x = x.lift_into(&field)?;
        }
        Ok(WeierstrassCurve { field, a })
    }

    /// `y^2 = x^3 + a4 x + a6`.
    pub fn short(a4: &ExtensionFieldElement, a6: &ExtensionFieldElement) -> Result<Self> {
        let z = a4.field().zero();
        Self::new(&z, &z, &z, a4, a6)
    }

    pub fn field(&self) -> &ExtensionField {
        &self.field
    }

    /// `[a1, a2, a3, a4, a6]`.
    pub fn coefficients(&self) -> &[ExtensionFieldElement; 5] {
        &self.a
    }

    pub fn invariants(&self) -> CurveInvariants {
        let [a1, a2, a3, a4, a6] = &self.a;
        let k = |c: i64| self.field.from_int(c);
        let b2 = &(a1 * a1) + &(&k(4) * a2);
        let b4 = &(&k(2) * a4) + &(a1 * a3);
        let b6 = &(a3 * a3) + &(&k(4) * a6);
        let b8 = &(&(&(&(&(a1 * a1) * a6) + &(&(&k(4) * a2) * a6)) - &(&(a1 * a3) * a4)) + &(&(a2 * a3) * a3))
            - &(a4 * a4);
        let c4 = &(&b2 * &b2) - &(&k(24) * &b4);
        let c6 = &(&(&k(36) * &(&b2 * &b4)) - &(&(&b2 * &b2) * &b2)) - &(&k(216) * &b6);
        let discriminant = &(&(&(-&(&(&b2 * &b2) * &b8)) - &(&k(8) * &(&(&b4 * &b4) * &b4)))
            - &(&k(27) * &(&b6 * &b6)))
            + &(&k(9) * &(&(&b2 * &b4) * &b6));
        let j = if discriminant.is_zero() {
            None
        } else {
            Some(&(&(&c4 * &c4) * &c4) / &discriminant)
        };
        CurveInvariants { b2, b4, b6, b8, c4, c6, discriminant, j }
    }

    pub fn discriminant(&self) -> ExtensionFieldElement {
        self.invariants().discriminant
    }

    pub fn is_singular(&self) -> bool {
        self.discriminant().is_zero()
    }

    pub fn j_invariant(&self) -> Result<ExtensionFieldElement> {
        self.invariants().j.ok_or(Error::SingularCurve)
    }

    /// Projective point count by a full scan over `x`.
    pub fn point_count(&self, cap: u64) -> Result<u64> {
        self.point_count_with(cap, Execution::default())
    }

    pub fn point_count_with(&self, cap: u64, exec: Execution) -> Result<u64> {
        let q = self.field.order();
        if q > cap {
            return Err(Error::CapExceeded { what: "exhaustive point count", size: q, cap });
        }
        let f = &self.field;
        let table = f.quadratic_table();
        let [a1, a2, a3, a4, a6] = self.a.each_ref().map(|c| c.index());
        // Affine solutions over one x: y^2 + s y = t with s = a1 x + a3, t = x^3 + a2 x^2 + a4 x + a6.
        let affine = if f.p() == 2 {
            exec.sum_range(q, |x| {
                let s = f.add_raw(f.mul_raw(a1, x), a3);
                let t = cubic(f, x, a2, a4, a6);
                if s == 0 {
                    1
                } else {
                    // y = s z turns this into z^2 + z = t / s^2, solvable iff the trace vanishes.
                    let s2 = f.mul_raw(s, s);
                    let c = f.mul_raw(t, f.inv_raw(s2).expect("s is nonzero"));
                    2 - 2 * table[c as usize] as i64
                }
            })
        } else {
            let four = 4 % f.p();
            exec.sum_range(q, |x| {
                let s = f.add_raw(f.mul_raw(a1, x), a3);
                let t = cubic(f, x, a2, a4, a6);
                let disc = f.add_raw(f.mul_raw(s, s), f.scale_raw(t, four));
                1 + table[disc as usize] as i64
            })
        };
        Ok(1 + affine as u64)
    }

    /// `a = q + 1 - #E(F_q)`, with the Hasse bound `a^2 <= 4q` asserted.
    pub fn trace_of_frobenius(&self, cap: u64) -> Result<i64> {
        self.trace_of_frobenius_with(cap, Execution::default())
    }

    pub fn trace_of_frobenius_with(&self, cap: u64, exec: Execution) -> Result<i64> {
        if self.is_singular() {
            return Err(Error::SingularCurve);
        }
        let q = self.field.order() as i64;
        let a = q + 1 - self.point_count_with(cap, exec)? as i64;
        assert!(
            (a as i128) * (a as i128) <= 4 * q as i128,
            "Hasse bound violated: a = {a} over a field of order {q}"
        );
        Ok(a)
    }

    /// Ordinary iff `p` does not divide the trace of Frobenius.
    pub fn is_ordinary(&self, cap: u64) -> Result<bool> {
        let a = self.trace_of_frobenius(cap)?;
        Ok(a.rem_euclid(self.field.p() as i64) != 0)
    }
}

fn cubic(f: &ExtensionField, x: u64, a2: u64, a4: u64, a6: u64) -> u64 {
    let mut acc = f.add_raw(x, a2);
    acc = f.add_raw(f.mul_raw(acc, x), a4);
    f.add_raw(f.mul_raw(acc, x), a6)
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a6] = &self.a;
        write!(f, "[{a1}, {a2}, {a3}, {a4}, {a6}] over {}", self.field)
    }
}

impl fmt::Debug for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeierstrassCurve{self}")
    }
}

/// Free-function forms of the curve methods.
pub fn invariants(curve: &WeierstrassCurve) -> CurveInvariants {
    curve.invariants()
}

pub fn point_count(curve: &WeierstrassCurve) -> Result<u64> {
    curve.point_count(DEFAULT_POINT_COUNT_CAP)
}

pub fn trace_of_frobenius(curve: &WeierstrassCurve) -> Result<i64> {
    curve.trace_of_frobenius(DEFAULT_POINT_COUNT_CAP)
}

/// Fails with a characteristic mismatch when `p` is not the characteristic of the curve's field.
pub fn is_ordinary(curve: &WeierstrassCurve, p: u64) -> Result<bool> {
    if curve.field().p() != p {
        return Err(Error::CharacteristicMismatch { expected: p, actual: curve.field().p() });
    }
    curve.is_ordinary(DEFAULT_POINT_COUNT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn short(p: u64, a4: i64, a6: i64) -> WeierstrassCurve {
        let f = ExtensionField::prime(p).unwrap();
        WeierstrassCurve::short(&f.from_int(a4), &f.from_int(a6)).unwrap()
    }

    fn long(f: &ExtensionField, a: [i64; 5]) -> Result<WeierstrassCurve> {
        let e = a.map(|c| f.from_int(c));
        WeierstrassCurve::new(&e[0], &e[1], &e[2], &e[3], &e[4])
    }

    /// Affine points by testing every (x, y).
    fn naive_count(c: &WeierstrassCurve) -> u64 {
        let f = c.field();
        let [a1, a2, a3, a4, a6] = c.coefficients().clone();
        let mut n = 1;
        for x in f.elements() {
            for y in f.elements() {
                let lhs = &(&(&y * &y) + &(&(&a1 * &x) * &y)) + &(&a3 * &y);
                let rhs = &(&(&(&(&x * &x) * &x) + &(&(&a2 * &x) * &x)) + &(&a4 * &x)) + &a6;
                if lhs == rhs {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn small_counts() {
        let e = short(5, 0, 1);
        assert_eq!(e.point_count(100).unwrap(), 6);
        assert_eq!(e.trace_of_frobenius(100).unwrap(), 0);
        assert!(!is_ordinary(&e, 5).unwrap());

        let f3 = ExtensionField::prime(3).unwrap();
        let e = long(&f3, [0, 1, 0, 0, 2]).unwrap();
        assert_eq!(e.point_count(100).unwrap(), 3);
        assert_eq!(e.trace_of_frobenius(100).unwrap(), 1);
        assert!(is_ordinary(&e, 3).unwrap());
        let inv = e.invariants();
        assert!(inv.c4.is_one() && inv.discriminant.is_one());
        assert!(inv.j.unwrap().is_one());

        let e = short(3, 1, 0);
        assert_eq!(e.point_count(100).unwrap(), 4);
        assert!(!e.is_ordinary(100).unwrap());
        assert!(is_ordinary(&e, 5).is_err());
    }

    #[test]
    fn singular_models() {
        let f = ExtensionField::prime(7).unwrap();
        assert_eq!(long(&f, [0, 0, 0, 0, 0]).unwrap_err(), Error::SingularCurve);
        let z = f.zero();
        let cusp = WeierstrassCurve::degenerate(&z, &z, &z, &z, &z).unwrap();
        assert!(cusp.invariants().j.is_none());
        assert_eq!(cusp.trace_of_frobenius(100).unwrap_err(), Error::SingularCurve);
    }

    #[test]
    fn scan_matches_naive_count() {
        for (p, f) in [(2, 1), (2, 3), (3, 2), (5, 1), (7, 1)] {
            let field = ExtensionField::new(p, f).unwrap();
            for coeffs in [[1, 0, 0, 0, 1], [0, 0, 1, 1, 0], [1, 1, 1, 1, 1], [0, 1, 0, 2, 3], [1, 0, 1, 0, 1]] {
                let g = field.generator_root();
                let e: Vec<_> = coeffs.iter().map(|&c| &field.from_int(c) * &g).collect();
                let Ok(c) = WeierstrassCurve::new(&e[0], &e[1], &e[2], &e[3], &e[4]) else {
                    continue;
                };
                assert_eq!(c.point_count(1000).unwrap(), naive_count(&c), "{c}");
            }
        }
    }

    #[test]
    fn frey_model_invariants() {
        // y^2 = x(x - A)(x + B): a2 = B - A, a4 = -AB.
        let f = ExtensionField::prime(101).unwrap();
        let (a, b) = (f.from_int(5), f.from_int(17));
        let c = -&(&a + &b);
        let z = f.zero();
        let e = WeierstrassCurve::new(&z, &(&b - &a), &z, &(-&(&a * &b)), &z).unwrap();
        let inv = e.invariants();
        let abc = &(&a * &b) * &c;
        assert_eq!(inv.discriminant, &f.from_int(16) * &(&abc * &abc));
        let sq = &(&(&a * &a) + &(&a * &b)) + &(&b * &b);
        assert_eq!(inv.c4, &f.from_int(16) * &sq);
        let sym = &(&(&a * &b) + &(&b * &c)) + &(&a * &c);
        assert_eq!(inv.c4, -&(&f.from_int(16) * &sym));
        let lhs = &(&(&inv.c4 * &inv.c4) * &inv.c4) - &(&inv.c6 * &inv.c6);
        assert_eq!(lhs, &f.from_int(1728) * &inv.discriminant);
    }

    #[test]
    fn cap_is_enforced() {
        let f = ExtensionField::new(3, 6).unwrap();
        let e = WeierstrassCurve::short(&f.one(), &f.generator_root()).unwrap();
        assert!(matches!(e.point_count(100), Err(Error::CapExceeded { .. })));
        assert!(e.point_count(729).is_ok());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let f = ExtensionField::new(5, 3).unwrap();
        let g = f.generator_root();
        let e = WeierstrassCurve::short(&g, &(&g * &g)).unwrap();
        let seq = e.point_count_with(1000, Execution::Sequential).unwrap();
        assert_eq!(seq, e.point_count_with(1000, Execution::default()).unwrap());
    }
}
