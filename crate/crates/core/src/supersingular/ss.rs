use crate::error::{Error, Result};
use crate::ffield::{ExtensionField, ExtensionFieldElement};
use crate::parallel::Execution;
use crate::polyring::FieldPolynomial;

use super::curve::WeierstrassCurve;

/// Default ceiling on `p` for the exhaustive supersingular scan (cost grows like `p^4`).
pub const DEFAULT_SUPERSINGULAR_CAP: u64 = 97;

/// The supersingular `j`-invariants in characteristic `p`, held as the monic
/// polynomial over `F_p` whose roots (all in `F_{p^2}`, all simple) are exactly them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupersingularSet {
    p: u64,
    poly: FieldPolynomial,
    roots: Vec<ExtensionFieldElement>,
}

impl SupersingularSet {
    /// Rebuilds a set from its polynomial, re-checking that it is monic over `F_p` and splits
    /// into distinct linear factors over `F_{p^2}`.
    pub fn from_polynomial(poly: FieldPolynomial) -> Result<Self> {
        let field = poly.field();
        if !field.is_prime_field() {
            return Err(Error::InvalidSupersingularData("polynomial must be defined over F_p".into()));
        }
        if !poly.is_monic() {
            return Err(Error::InvalidSupersingularData("polynomial must be monic".into()));
        }
        let p = field.p();
        let quad = ExtensionField::new(p, 2)?;
        let roots: Vec<_> = quad
            .elements()
            .filter(|j| poly.evaluate(j).map(|v| v.is_zero()).unwrap_or(false))
            .collect();
        if Some(roots.len()) != poly.degree() {
            return Err(Error::InvalidSupersingularData(format!(
                "degree {} but {} distinct roots in F_{p}^2",
                poly.degree().unwrap_or(0),
                roots.len()
            )));
        }
        Ok(SupersingularSet { p, poly, roots })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn polynomial(&self) -> &FieldPolynomial {
        &self.poly
    }

    pub fn count(&self) -> usize {
        self.roots.len()
    }

    /// The supersingular `j` as elements of `F_{p^2}`, in packed-index order.
    pub fn roots(&self) -> &[ExtensionFieldElement] {
        &self.roots
    }

    /// Whether every supersingular `j` already lies in `F_p`.
    pub fn roots_in_prime_field(&self) -> bool {
        self.roots.iter().all(|j| j.in_prime_field())
    }

    /// Membership by evaluating the polynomial at `j`; no embedding of `F_{p^2}` is needed.
    pub fn contains(&self, j: &ExtensionFieldElement) -> Result<bool> {
        if j.field().p() != self.p {
            return Err(Error::CharacteristicMismatch { expected: self.p, actual: j.field().p() });
        }
        Ok(self.poly.evaluate(j)?.is_zero())
    }
}

pub fn is_supersingular_j(j: &ExtensionFieldElement, ss: &SupersingularSet) -> Result<bool> {
    ss.contains(j)
}

/// A curve with invariant `j` over the field of `j`.
pub fn curve_from_j(j: &ExtensionFieldElement) -> WeierstrassCurve {
    let f = j.field();
    let p = f.p();
    let z = f.zero();
    let one = f.one();
    let curve = match p {
        2 if j.is_zero() => WeierstrassCurve::new(&z, &z, &one, &z, &z),
        2 => WeierstrassCurve::new(&one, &z, &z, &z, &j.inv().unwrap()),
        3 if j.is_zero() => WeierstrassCurve::short(&one, &z),
        3 => WeierstrassCurve::new(&z, &one, &z, &z, &(-&j.inv().unwrap())),
        _ => {
            let k1728 = f.from_int(1728);
            if j.is_zero() {
                WeierstrassCurve::short(&z, &one)
            } else if *j == k1728 {
                WeierstrassCurve::short(&one, &z)
            } else {
                let a = &(&f.from_int(27) * j) / &(&f.from_int(4) * &(&k1728 - j));
                WeierstrassCurve::short(&a, &a)
            }
        }
    };
    curve.expect("representative curves are nonsingular")
}

/// `B_p` with the default cap and execution strategy.
pub fn supersingular_set(p: u64) -> Result<SupersingularSet> {
    supersingular_set_with(p, DEFAULT_SUPERSINGULAR_CAP, Execution::default())
}

/// Scans every `j` in `F_{p^2}`, deciding supersingularity by `p | q + 1 - #E(F_q)`.
pub fn supersingular_set_with(p: u64, cap: u64, exec: Execution) -> Result<SupersingularSet> {
    if p > cap {
        return Err(Error::CapExceeded { what: "supersingular scan", size: p, cap });
    }
    let quad = ExtensionField::new(p, 2)?;
    let q = quad.order();
    let hits = exec.filter_range(q, |idx| {
        let e = curve_from_j(&quad.element(idx));
        let a = e
            .trace_of_frobenius_with(q, Execution::Sequential)
            .expect("field order is within its own cap");
        a.rem_euclid(p as i64) == 0
    });
    let roots: Vec<_> = hits.into_iter().map(|i| quad.element(i)).collect();
    let mut poly = FieldPolynomial::one(&quad);
    for j in &roots {
        poly = &poly * &FieldPolynomial::new(&quad, &[-j, quad.one()])?;
    }
    if !poly.has_prime_coefficients() {
        return Err(Error::InvalidSupersingularData(format!(
            "product over the supersingular j has coefficients outside F_{p}"
        )));
    }
    let poly = poly.lift(&ExtensionField::prime(p)?)?;
    Ok(SupersingularSet { p, poly, roots })
}
