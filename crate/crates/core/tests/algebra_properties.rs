use num_bigint::BigInt;
use proptest::prelude::*;

use ordcert::ffield::ExtensionField;
use ordcert::parallel::Execution;
use ordcert::polyring::{resultant, FieldPolynomial, IntPolynomial};
use ordcert::supersingular::{parse_record, serialize_record, supersingular_set, WeierstrassCurve};

const FIELDS: [(u64, usize); 8] = [(2, 1), (2, 4), (3, 1), (3, 3), (5, 2), (7, 1), (11, 2), (31, 1)];

fn field_strategy() -> impl Strategy<Value = ExtensionField> {
    (0..FIELDS.len()).prop_map(|i| ExtensionField::new(FIELDS[i].0, FIELDS[i].1).unwrap())
}

fn poly(f: &ExtensionField, raw: &[u64]) -> FieldPolynomial {
    let coeffs: Vec<_> = raw.iter().map(|&c| f.element(c % f.order())).collect();
    FieldPolynomial::new(f, &coeffs).unwrap()
}

fn ip(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(f in field_strategy(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (a, b, c) = (f.element(a % f.order()), f.element(b % f.order()), f.element(c % f.order()));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert!(a.pow(f.order() - 1).is_one());
        }
        prop_assert_eq!(a.frobenius(), a.pow(f.p()));
    }

    #[test]
    fn division_with_remainder(f in field_strategy(), a in prop::collection::vec(any::<u64>(), 0..12), b in prop::collection::vec(any::<u64>(), 1..8)) {
        let a = poly(&f, &a);
        let b = poly(&f, &b);
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(f in field_strategy(), a in prop::collection::vec(any::<u64>(), 1..10), b in prop::collection::vec(any::<u64>(), 1..10), c in prop::collection::vec(any::<u64>(), 1..4)) {
        let c = poly(&f, &c);
        let a = &poly(&f, &a) * &c;
        let b = &poly(&f, &b) * &c;
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(a.rem(&g).unwrap().is_zero());
        prop_assert!(b.rem(&g).unwrap().is_zero());
        prop_assert!(c.is_zero() || g.rem(&c.monic()).unwrap().is_zero());
    }

    #[test]
    fn factorization_round_trip(f in field_strategy(), a in prop::collection::vec(any::<u64>(), 2..14)) {
        let a = poly(&f, &a);
        prop_assume!(!a.is_zero());
        let fac = a.factor().unwrap();
        let mut prod = FieldPolynomial::constant(&fac.unit);
        for (g, m) in &fac.factors {
            prop_assert!(g.is_monic());
            prop_assert!(g.is_irreducible().unwrap());
            prod = &prod * &g.pow(*m as u32);
        }
        prop_assert_eq!(prod, a);
        let sorted = fac.factors.windows(2).all(|w| w[0].0.canonical_cmp(&w[1].0).is_le());
        prop_assert!(sorted);
    }

    #[test]
    fn resultant_identities(a in prop::collection::vec(-9i64..=9, 2..6), b in prop::collection::vec(-9i64..=9, 2..6), c in prop::collection::vec(-9i64..=9, 1..4)) {
        let (f, g, h) = (ip(&a), ip(&b), ip(&c));
        prop_assume!(f.degree().unwrap_or(0) > 0 && g.degree().unwrap_or(0) > 0 && h.degree().is_some());
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let fg = resultant(&f, &g).unwrap();
        let gf = resultant(&g, &f).unwrap();
        let sign = if (m * n) % 2 == 1 { BigInt::from(-1) } else { BigInt::from(1) };
        prop_assert_eq!(&fg, &(&gf * &sign));
        let gh = &g * &h;
        prop_assert_eq!(resultant(&f, &gh).unwrap(), &fg * &resultant(&f, &h).unwrap());
    }

    #[test]
    fn hasse_and_execution_agree(f in field_strategy(), a in prop::collection::vec(any::<u64>(), 5)) {
        let a: Vec<_> = a.iter().map(|&x| f.element(x % f.order())).collect();
        let Ok(e) = WeierstrassCurve::new(&a[0], &a[1], &a[2], &a[3], &a[4]) else { return Ok(()) };
        let q = f.order() as i64;
        let t = e.trace_of_frobenius(f.order()).unwrap();
        prop_assert!(t * t <= 4 * q);
        prop_assert_eq!(t, e.trace_of_frobenius_with(f.order(), Execution::Sequential).unwrap());
    }
}

#[test]
fn cache_records_round_trip_and_reject_tampering() {
    for p in [2, 3, 5, 7, 11, 13, 37] {
        let ss = supersingular_set(p).unwrap();
        let text = serialize_record(&ss);
        let back = parse_record(&text).unwrap();
        assert_eq!(back.polynomial(), ss.polynomial());
        assert_eq!(back.count(), ss.count());
        let tampered = text.replacen(&format!("p={p}"), &format!("p={}", p + 2), 1);
        assert!(parse_record(&tampered).is_err());
        assert!(parse_record(&text[..text.len() - 5]).is_err());
    }
}

#[test]
fn supersingular_counts() {
    // Number of supersingular j: floor(p/12) plus 0, 1, 1, 2 for p = 1, 5, 7, 11 mod 12.
    for p in [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
        let extra = [0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2][(p % 12) as usize];
        assert_eq!(supersingular_set(p).unwrap().count() as u64, p / 12 + extra, "p={p}");
    }
}
