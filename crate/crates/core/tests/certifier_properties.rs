use proptest::prelude::*;

use ordcert::certifier::{
    certify, certify_with, check_at_prime, degree_bound, BoundKind, FamilyDescriptor, Status,
};
use ordcert::cyclotomic::{exceptional_primes, residue_places, TowerKind};
use ordcert::ffield::is_prime;
use ordcert::frey::Signature;
use ordcert::parallel::Execution;
use ordcert::polyring::IntPolynomial;
use ordcert::supersingular::supersingular_set;

fn frey(k: [u32; 3]) -> FamilyDescriptor {
    FamilyDescriptor::frey(Signature::new(k[0], k[1], k[2]).unwrap(), 3).unwrap()
}

fn toy(p: u64, tower: TowerKind, c: &[i64], d: i64) -> FamilyDescriptor {
    FamilyDescriptor::from_polynomials(
        p,
        "toy",
        tower,
        false,
        vec![("c".into(), IntPolynomial::from_i64s(c), IntPolynomial::from_i64s(&[d]), None)],
    )
    .unwrap()
}

#[test]
fn eq2_and_refined_agree_on_frey() {
    let desc = frey([1, 2, 3]);
    let eq2 = certify(&desc, 7, BoundKind::Eq2).unwrap();
    let refined = certify(&desc, 7, BoundKind::Refined).unwrap();
    assert_eq!(eq2.d, 10);
    assert_eq!(eq2.exceptional_primes(), vec![7, 11, 13, 41, 61, 757, 1093]);
    assert_eq!(eq2.threshold, refined.threshold);
    for r in refined.exceptional_primes() {
        assert_eq!(eq2.report(r), refined.report(r));
    }
}

#[test]
fn certificates_are_deterministic() {
    let desc = frey([1, 2, 4]);
    let ss = supersingular_set(3).unwrap();
    let a = certify_with(&desc, 7, BoundKind::Refined, &ss, Execution::Sequential).unwrap();
    let b = certify_with(&desc, 7, BoundKind::Refined, &ss, Execution::default()).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn raising_r_min_only_drops_primes() {
    let desc = frey([1, 2, 3]);
    let base = certify(&desc, 7, BoundKind::Refined).unwrap();
    assert!(certify(&desc, 5, BoundKind::Refined).is_err());
    for r_min in [7, 8, 11, 12, 13, 14] {
        let cert = certify(&desc, r_min, BoundKind::Refined).unwrap();
        for rep in &cert.exceptional {
            assert!(rep.r >= r_min);
            assert_eq!(base.report(rep.r), Some(rep));
        }
        assert!(cert.threshold >= r_min - 1);
    }
}

#[test]
fn h_nonvanishing_forces_ordinary() {
    let desc = frey([1, 2, 3]);
    let ss = supersingular_set(3).unwrap();
    for r in (7..=120).filter(|&r| is_prime(r)) {
        // Residue fields past 64-bit packing cannot be checked directly.
        let Ok(places) = residue_places(r, 3) else { continue };
        let rep = check_at_prime(&desc, r, &ss).unwrap();
        for (place, pr) in places.iter().zip(&rep.places) {
            for (cls, st) in desc.classes.iter().zip(&pr.class_statuses) {
                let h = cls.h.as_ref().unwrap().evaluate(&place.xi_image).unwrap();
                assert!(st.status != Status::Inconsistency);
                if !h.is_zero() {
                    assert_eq!(st.status, Status::Ordinary, "r={r} class {}", cls.label);
                }
            }
        }
    }
}

#[test]
fn huge_levels_hit_the_cap() {
    let desc = frey([1, 2, 3]);
    let ss = supersingular_set(3).unwrap();
    assert!(matches!(check_at_prime(&desc, 1_000_003, &ss), Err(ordcert::Error::CapExceeded { .. })));
}

#[test]
fn frey_needs_good_reduction_prime() {
    assert!(FamilyDescriptor::frey(Signature::new(1, 2, 3).unwrap(), 5).is_err());
    assert!(Signature::new(1, 1, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    /// Past the exceptional primes every place is ordinary, and refined never checks more than eq2.
    #[test]
    fn bound_is_sound(
        p in prop::sample::select(vec![3u64, 5, 7, 11, 13]),
        full in any::<bool>(),
        c in prop::collection::vec(-4i64..=4, 1..4),
        d in 1i64..=4,
    ) {
        let tower = if full { TowerKind::FullCyclotomic } else { TowerKind::RealCyclotomic };
        prop_assume!(d % p as i64 != 0);
        let c_mod_p_nonzero = c.iter().any(|x| x.rem_euclid(p as i64) != 0);
        prop_assume!(c_mod_p_nonzero);
        let desc = toy(p, tower, &c, d);
        let ss = supersingular_set(p).unwrap();
        let Ok(eq2) = degree_bound(&desc, &ss, BoundKind::Eq2) else { return Ok(()) };
        let refined = degree_bound(&desc, &ss, BoundKind::Refined).unwrap();
        prop_assert!(refined.d <= eq2.d);
        prop_assert!(refined.order_bound <= eq2.order_bound);
        if refined.order_bound == 0 {
            return Ok(());
        }
        let narrow = exceptional_primes(p, refined.order_bound, 3).unwrap();
        if let Ok(wide) = exceptional_primes(p, eq2.order_bound, 3) {
            prop_assert!(narrow.iter().all(|r| wide.contains(r)));
        }
        // Keep the direct checks cheap.
        if narrow.iter().any(|&r| r > 2000) {
            return Ok(());
        }
        let cert = certify_with(&desc, 3, BoundKind::Refined, &ss, Execution::Sequential).unwrap();
        for r in (3..=90).filter(|&r| is_prime(r) && r != p) {
            if cert.report(r).is_some() {
                continue;
            }
            // Residue fields past 64-bit packing cannot be checked directly.
            let Ok(rep) = check_at_prime(&desc, r, &ss) else { continue };
            prop_assert!(rep.all_ordinary(), "p={} r={} tower={}", p, r, tower);
        }
    }
}
