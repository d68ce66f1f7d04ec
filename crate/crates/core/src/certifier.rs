//! Certification of good ordinary reduction above `p` along a cyclotomic tower.
//!
//! At a place above `p` with generator image `ξ̄`, a member of the family is ordinary as soon
//! as `j̄ = C̄(ξ̄)^3 / D̄(ξ̄)` is not a supersingular invariant. A failure forces `ξ̄` to be a
//! root of `C̄^3 - b D̄` for some supersingular `b`, which bounds the residue degree, and
//! hence `ord_r(p)`, by a constant `d`. Only the finitely many `r` with `ord_r(p) <= d`
//! (the exceptional primes) need a direct check; the certificate records those checks.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{exceptional_primes, ResiduePlace, TowerKind};
use crate::error::{Error, Result};
use crate::ffield::{is_prime, ExtensionField, ExtensionFieldElement};
use crate::frey::{self, FreyData, ParameterClass, Signature, GOOD_REDUCTION_PRIME};
use crate::parallel::Execution;
use crate::polyring::{FieldPolynomial, IntPolynomial};
use crate::supersingular::{supersingular_set, SupersingularSet, WeierstrassCurve};

/// Actual curve models at a place, for cross-validation by point counting.
pub trait CurveModel: Send + Sync {
    fn curve_at(&self, class: &str, place: &ResiduePlace) -> Result<WeierstrassCurve>;
}

struct FreyModel {
    k: Signature,
}

impl CurveModel for FreyModel {
    fn curve_at(&self, class: &str, place: &ResiduePlace) -> Result<WeierstrassCurve> {
        frey::frey_curve_at_place(self.k, class.parse()?, place)
    }
}

/// Reduced data for one parameter class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    pub label: String,
    /// `C̄` with `C̄(ξ̄) = c̄4`.
    pub c: FieldPolynomial,
    /// `D̄` with `D̄(ξ̄) = Δ̄`.
    pub d: FieldPolynomial,
    /// Optional `h̄` whose nonvanishing at `ξ̄` already forces ordinarity.
    pub h: Option<FieldPolynomial>,
}

#[derive(Clone)]
pub struct FamilyDescriptor {
    pub p: u64,
    pub family: String,
    pub k: Option<Signature>,
    pub classes: Vec<ClassData>,
    pub tower: TowerKind,
    pub good_reduction_guaranteed: bool,
    /// Smallest level at which the family is defined.
    pub min_level: u64,
    pub model: Option<Arc<dyn CurveModel>>,
}

impl fmt::Debug for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FamilyDescriptor")
            .field("p", &self.p)
            .field("family", &self.family)
            .field("k", &self.k)
            .field("classes", &self.classes)
            .field("tower", &self.tower)
            .field("good_reduction_guaranteed", &self.good_reduction_guaranteed)
            .field("min_level", &self.min_level)
            .field("model", &self.model.is_some())
            .finish()
    }
}

impl FamilyDescriptor {
    /// Generic family from integer (or `p`-integral) polynomials `(label, C, D, h)`.
    pub fn from_polynomials(
        p: u64,
        family: &str,
        tower: TowerKind,
        good_reduction_guaranteed: bool,
        classes: Vec<(String, IntPolynomial, IntPolynomial, Option<IntPolynomial>)>,
    ) -> Result<Self> {
        let fp = ExtensionField::prime(p)?;
        let classes = classes
            .into_iter()
            .map(|(label, c, d, h)| {
                Ok(ClassData {
                    label,
                    c: c.reduce_mod_p(&fp)?,
                    d: d.reduce_mod_p(&fp)?,
                    h: h.map(|h| h.reduce_mod_p(&fp)).transpose()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let desc = FamilyDescriptor {
            p,
            family: family.to_string(),
            k: None,
            classes,
            tower,
            good_reduction_guaranteed,
            min_level: 3,
            model: None,
        };
        desc.validate()?;
        Ok(desc)
    }

    /// The Frey family for signature `k` over the real cyclotomic tower; only `p = 3` carries a
    /// good-reduction guarantee.
    pub fn frey(k: Signature, p: u64) -> Result<Self> {
        if p != GOOD_REDUCTION_PRIME {
            return Err(Error::NoGoodReductionGuarantee { p });
        }
        let classes = ParameterClass::ALL
            .iter()
            .map(|&cls| {
                let data = FreyData::new(k, cls);
                (cls.to_string(), data.c4, data.delta, Some(data.h))
            })
            .collect();
        let mut desc = Self::from_polynomials(p, "frey", TowerKind::RealCyclotomic, true, classes)?;
        desc.k = Some(k);
        desc.min_level = frey_min_level(k);
        desc.model = Some(Arc::new(FreyModel { k }));
        Ok(desc)
    }

    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.p) {
            return Err(Error::NotPrime(self.p));
        }
        if self.classes.is_empty() {
            return Err(Error::InvalidDescriptor("no parameter classes".into()));
        }
        for cls in &self.classes {
            for (name, poly) in [("C", Some(&cls.c)), ("D", Some(&cls.d)), ("h", cls.h.as_ref())] {
                let Some(poly) = poly else { continue };
                if poly.is_zero() {
                    return Err(Error::InvalidDescriptor(format!("{name} vanishes mod p for class {}", cls.label)));
                }
                if !poly.field().is_prime_field() || poly.field().p() != self.p {
                    return Err(Error::InvalidDescriptor(format!("{name} for class {} is not over F_{}", cls.label, self.p)));
                }
            }
        }
        Ok(())
    }

    fn has_refinement(&self) -> bool {
        self.classes.iter().all(|c| c.h.is_some())
    }
}

/// The Frey curve degenerates identically at `r` when `r` divides some `k_i` or `k_i ± k_j`
/// (two of the `ξ_{k_i}` coincide or one equals 2); the first prime past all of those.
fn frey_min_level(k: Signature) -> u64 {
    let k = k.k().map(u64::from);
    let mut vals = k.to_vec();
    for i in 0..3 {
        for j in i + 1..3 {
            vals.push(k[i] + k[j]);
            vals.push(k[i].abs_diff(k[j]));
        }
    }
    let worst = vals
        .iter()
        .flat_map(|&v| (2..=v).filter(move |&q| is_prime(q) && v % q == 0))
        .max()
        .unwrap_or(2);
    (worst + 1..).find(|&r| is_prime(r)).unwrap()
}

/// Largest level `check_at_prime` accepts; `ψ_r` has degree `(r - 1)/2`.
pub const MAX_CHECK_LEVEL: u64 = 20_000;

fn check_level(desc: &FamilyDescriptor, r: u64) -> Result<()> {
    if r > MAX_CHECK_LEVEL {
        return Err(Error::CapExceeded { what: "direct check level", size: r, cap: MAX_CHECK_LEVEL });
    }
    if r < desc.min_level {
        return Err(Error::InvalidDescriptor(format!(
            "family `{}` is defined only for r >= {}, got {r}",
            desc.family, desc.min_level
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// Total degrees.
    Eq2,
    /// Degrees of irreducible factors.
    Refined,
}

impl std::str::FromStr for BoundKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eq2" => Ok(BoundKind::Eq2),
            "refined" => Ok(BoundKind::Refined),
            _ => Err(Error::InvalidDescriptor(format!("unknown bound kind `{s}`"))),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Eq2 => "eq2",
            BoundKind::Refined => "refined",
        })
    }
}

/// The bound `d` and the bound on `ord_r(p)` it implies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeBound {
    pub kind: BoundKind,
    pub d: usize,
    /// Every `r` with a possible failure has `ord_r(p) <= order_bound`.
    pub order_bound: usize,
    /// Whether `d` came from `h̄` rather than from `C̄^3 - b D̄`.
    pub from_refinement: bool,
}

/// Degree bound for `desc`.
///
/// With `h̄` on every class, a failure needs `h̄(ξ̄) = 0`, so `ζ̄` is a root of
/// `X^{deg h} h̄(X + 1/X)` and `ord_r(p) <= 2 deg h̄` (`Eq2`) or `2 * max irreducible degree` (`Refined`).
/// Otherwise `d` is the maximum over classes and `b in B_p` of `deg(C̄^3 - b D̄)` or of its
/// largest irreducible factor, measured over `F_p` when `b in F_p` and over `F_{p^2}` otherwise.
/// It bounds the place degree; the order bound doubles it for the real tower and again when
/// some `b` lies outside `F_p`.
pub fn degree_bound(desc: &FamilyDescriptor, ss: &SupersingularSet, kind: BoundKind) -> Result<DegreeBound> {
    if ss.p() != desc.p {
        return Err(Error::CharacteristicMismatch { expected: desc.p, actual: ss.p() });
    }
    desc.validate()?;
    if desc.has_refinement() {
        let mut d = 0;
        for cls in &desc.classes {
            let h = cls.h.as_ref().expect("refinement present");
            let e = match kind {
                BoundKind::Eq2 => h.degree().unwrap_or(0),
                BoundKind::Refined => h.max_irreducible_degree()?,
            };
            d = d.max(2 * e);
        }
        return Ok(DegreeBound { kind, d, order_bound: d, from_refinement: true });
    }
    let quad = ExtensionField::new(desc.p, 2)?;
    let mut d = 0;
    let mut outside = false;
    for cls in &desc.classes {
        let c3 = cls.c.pow(3);
        for b in ss.roots() {
            let poly = if b.in_prime_field() {
                let b = b.lift_into(&ExtensionField::prime(desc.p)?).unwrap_or_else(|_| cls.c.field().element(b.index()));
                &c3 - &cls.d.scale(&b)
            } else {
                outside = true;
                &c3.lift(&quad)? - &cls.d.lift(&quad)?.scale(b)
            };
            if poly.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            let e = match kind {
                BoundKind::Eq2 => poly.degree().unwrap(),
                BoundKind::Refined => poly.max_irreducible_degree()?,
            };
            d = d.max(e);
        }
    }
    let mut order_bound = d;
    if outside {
        order_bound *= 2;
    }
    if desc.tower == TowerKind::RealCyclotomic {
        order_bound *= 2;
    }
    Ok(DegreeBound { kind, d, order_bound, from_refinement: false })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// `j̄` is not supersingular.
    Ordinary,
    /// `j̄` is supersingular: the sufficient condition fails at this place.
    Fails,
    /// `D̄(ξ̄) = 0` without a good-reduction guarantee.
    Indeterminate,
    /// `D̄(ξ̄) = 0` although good reduction is guaranteed.
    Inconsistency,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Ordinary => "ordinary",
            Status::Fails => "fails",
            Status::Indeterminate => "indeterminate",
            Status::Inconsistency => "inconsistency",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassStatus {
    pub class: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceReport {
    pub degree: usize,
    pub class_statuses: Vec<ClassStatus>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeReport {
    pub r: u64,
    pub places: Vec<PlaceReport>,
}

impl PrimeReport {
    pub fn all_ordinary(&self) -> bool {
        self.statuses().all(|s| s == Status::Ordinary)
    }

    pub fn statuses(&self) -> impl Iterator<Item = Status> + '_ {
        self.places.iter().flat_map(|pl| pl.class_statuses.iter().map(|c| c.status))
    }
}

/// Status of one class at one place, by the `j̄` route and the division-free route
/// `D̄^n ss(C̄^3 / D̄) = Σ s_i (C̄^3)^i D̄^{n-i}`, which must agree.
pub fn status_at_place(
    desc: &FamilyDescriptor,
    cls: &ClassData,
    place: &ResiduePlace,
    ss: &SupersingularSet,
) -> Result<Status> {
    let c = cls.c.evaluate(&place.xi_image)?;
    let d = cls.d.evaluate(&place.xi_image)?;
    if d.is_zero() {
        return Ok(if desc.good_reduction_guaranteed { Status::Inconsistency } else { Status::Indeterminate });
    }
    let c3 = &(&c * &c) * &c;
    let j = &c3 / &d;
    let by_j = ss.contains(&j)?;
    let by_product = homogenized(ss, &c3, &d).is_zero();
    if by_j != by_product {
        return Err(Error::Inconsistency(format!(
            "j-route and division-free route disagree for class {} at r = {}",
            cls.label, place.r
        )));
    }
    Ok(if by_j { Status::Fails } else { Status::Ordinary })
}

fn homogenized(ss: &SupersingularSet, num: &ExtensionFieldElement, den: &ExtensionFieldElement) -> ExtensionFieldElement {
    let coeffs = ss.polynomial().coefficients();
    let n = coeffs.len() - 1;
    let field = num.field();
    let mut acc = field.zero();
    for (i, s) in coeffs.iter().enumerate() {
        let s = s.lift_into(field).expect("prime-field coefficient");
        acc = &acc + &(&(&s * &num.pow(i as u64)) * &den.pow((n - i) as u64));
    }
    acc
}

/// Direct check of every class at every place above `p` of the level-`r` field.
pub fn check_at_prime(desc: &FamilyDescriptor, r: u64, ss: &SupersingularSet) -> Result<PrimeReport> {
    if ss.p() != desc.p {
        return Err(Error::CharacteristicMismatch { expected: desc.p, actual: ss.p() });
    }
    check_level(desc, r)?;
    let places = desc.tower.places(r, desc.p)?;
    let places = places
        .iter()
        .map(|place| {
            let class_statuses = desc
                .classes
                .iter()
                .map(|cls| Ok(ClassStatus { class: cls.label.clone(), status: status_at_place(desc, cls, place, ss)? }))
                .collect::<Result<Vec<_>>>()?;
            Ok(PlaceReport { degree: place.degree(), class_statuses })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PrimeReport { r, places })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub p: u64,
    pub family: String,
    pub k: Option<Signature>,
    pub bound_kind: BoundKind,
    pub d: usize,
    pub r_min: u64,
    pub exceptional: Vec<PrimeReport>,
    /// Every member over a level `r > threshold`, `r >= r_min`, is ordinary at all places above `p`.
    pub threshold: u64,
    pub version: String,
}

impl Certificate {
    pub fn exceptional_primes(&self) -> Vec<u64> {
        self.exceptional.iter().map(|e| e.r).collect()
    }

    pub fn report(&self, r: u64) -> Option<&PrimeReport> {
        self.exceptional.iter().find(|e| e.r == r)
    }
}

pub const VERSION: &str = concat!("ordcert ", env!("CARGO_PKG_VERSION"));

pub fn certify(desc: &FamilyDescriptor, r_min: u64, kind: BoundKind) -> Result<Certificate> {
    let ss = supersingular_set(desc.p)?;
    certify_with(desc, r_min, kind, &ss, Execution::default())
}

pub fn certify_with(
    desc: &FamilyDescriptor,
    r_min: u64,
    kind: BoundKind,
    ss: &SupersingularSet,
    exec: Execution,
) -> Result<Certificate> {
    if r_min < 3 {
        return Err(Error::InvalidDescriptor(format!("r_min must be at least 3, got {r_min}")));
    }
    check_level(desc, r_min)?;
    let bound = degree_bound(desc, ss, kind)?;
    let primes = if bound.order_bound == 0 { Vec::new() } else { exceptional_primes(desc.p, bound.order_bound, r_min)? };
    let reports = exec
        .map(&primes, |&r| check_at_prime(desc, r, ss))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    for rep in &reports {
        if rep.statuses().any(|s| s == Status::Inconsistency) {
            return Err(Error::Inconsistency(format!(
                "discriminant vanishes at a place above {} for r = {} although good reduction is guaranteed",
                desc.p, rep.r
            )));
        }
    }
    let threshold = reports
        .iter()
        .filter(|rep| !rep.all_ordinary())
        .map(|rep| rep.r)
        .max()
        .unwrap_or(r_min - 1);
    Ok(Certificate {
        p: desc.p,
        family: desc.family.clone(),
        k: desc.k,
        bound_kind: kind,
        d: bound.d,
        r_min,
        exceptional: reports,
        threshold,
        version: VERSION.to_string(),
    })
}

/// Compares, at every class and place above `p` of level `r`, the trace-of-Frobenius test on
/// the family's actual curve with the `j̄`-based status.
pub fn cross_validate(desc: &FamilyDescriptor, r: u64, cap: u64) -> Result<bool> {
    let ss = supersingular_set(desc.p)?;
    cross_validate_with(desc, r, cap, &ss)
}

pub fn cross_validate_with(desc: &FamilyDescriptor, r: u64, cap: u64, ss: &SupersingularSet) -> Result<bool> {
    let model = desc
        .model
        .as_ref()
        .ok_or_else(|| Error::InvalidDescriptor(format!("family `{}` has no curve model", desc.family)))?;
    for place in desc.tower.places(r, desc.p)? {
        if place.field.order() > cap {
            return Err(Error::CapExceeded { what: "exhaustive point count", size: place.field.order(), cap });
        }
        for cls in &desc.classes {
            let curve = model.curve_at(&cls.label, &place)?;
            let by_trace = curve.is_ordinary(cap)?;
            let by_j = match status_at_place(desc, cls, &place, ss)? {
                Status::Ordinary => true,
                Status::Fails => false,
                Status::Indeterminate | Status::Inconsistency => return Ok(false),
            };
            if by_trace != by_j {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
