mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use seifert::census::enumerate_nonorientable_closed;
use seifert::cf::gcd;
use seifert::normalize::normal_form_violations;
use seifert::{
    boundary_profile, equivalent, is_closed, is_orientable, normalize, reverse_orientation, s_cf,
    upper_bound, validate, zero_complexity_corollary_check, CaseTag, Epsilon, SeifertParams,
};

fn arb_params() -> impl Strategy<Value = SeifertParams> {
    any::<u64>().prop_map(|seed| common::random_params(&mut ChaCha8Rng::seed_from_u64(seed)))
}

fn arb_moved() -> impl Strategy<Value = (SeifertParams, SeifertParams)> {
    any::<u64>().prop_map(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = common::random_params(&mut rng);
        let (y, _) = common::random_word(&mut rng, &x, 20);
        (x, y)
    })
}

fn arb_coprime() -> impl Strategy<Value = (i64, i64)> {
    (2i64..5000).prop_flat_map(|p| (Just(p), 1..p)).prop_filter("coprime", |&(p, q)| gcd(p, q) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn s_is_at_least_two((p, q) in arb_coprime()) {
        prop_assert!(s_cf(p, q).unwrap() >= 2);
    }

    #[test]
    fn s_of_unit_numerator_is_p(p in 2i64..1_000_000) {
        prop_assert_eq!(s_cf(p, 1).unwrap(), p as u64);
    }

    #[test]
    fn s_bounds_log_p((p, q) in arb_coprime()) {
        let s = s_cf(p, q).unwrap() as u32;
        prop_assert!(1u64.checked_shl(s).is_none_or(|m| m >= p as u64));
    }

    #[test]
    fn orientable_spaces_have_no_klein_boundary(x in arb_params()) {
        if is_orientable(&x) {
            let b = boundary_profile(&x);
            prop_assert_eq!((b.klein_regular, b.klein_with_exceptional), (0, 0));
        }
    }

    #[test]
    fn normalize_is_idempotent_and_sound(x in arb_params()) {
        let n = normalize(&x).unwrap();
        prop_assert_eq!(normal_form_violations(&n), Vec::<String>::new());
        prop_assert_eq!(normalize(&n).unwrap(), n.clone());
        prop_assert!(validate(&n).is_empty());
        prop_assert_eq!(is_closed(&n), is_closed(&x));
        prop_assert_eq!(is_orientable(&n), is_orientable(&x));
    }

    #[test]
    fn moves_preserve_normal_form((x, y) in arb_moved()) {
        prop_assert_eq!(normalize(&x).unwrap(), normalize(&y).unwrap());
        prop_assert!(equivalent(&x, &y).unwrap());
        prop_assert!(equivalent(&y, &x).unwrap());
    }

    #[test]
    fn equivalence_is_transitive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_params(&mut rng);
        let (b, _) = common::random_word(&mut rng, &a, 10);
        let (c, _) = common::random_word(&mut rng, &b, 10);
        prop_assert!(equivalent(&a, &a).unwrap());
        prop_assert!(equivalent(&a, &b).unwrap() && equivalent(&b, &c).unwrap());
        prop_assert!(equivalent(&a, &c).unwrap());
    }

    #[test]
    fn equivalence_is_symmetric(x in arb_params(), y in arb_params()) {
        prop_assert_eq!(equivalent(&x, &y).unwrap(), equivalent(&y, &x).unwrap());
    }

    #[test]
    fn reverse_is_an_involution(x in arb_params()) {
        if x.epsilon.complement_orientable() {
            let once = reverse_orientation(&x).unwrap();
            let twice = reverse_orientation(&once).unwrap();
            prop_assert_eq!(twice, normalize(&x).unwrap());
            prop_assert_eq!(upper_bound(&once).unwrap(), upper_bound(&x).unwrap());
        } else {
            prop_assert!(reverse_orientation(&x).is_err());
        }
    }

    #[test]
    fn bound_is_move_invariant((x, y) in arb_moved()) {
        prop_assert_eq!(upper_bound(&x).unwrap(), upper_bound(&y).unwrap());
    }

    #[test]
    fn zero_check_implies_zero_bound(x in arb_params()) {
        if !is_closed(&x) && zero_complexity_corollary_check(&x).unwrap() {
            prop_assert_eq!(upper_bound(&x).unwrap().value, 0);
        }
    }
}

#[test]
fn lens_case_identity() {
    for p in 3..=60i64 {
        for q in (2..p).filter(|&q| gcd(p, q) == 1) {
            let direct = (s_cf(q, p % q).unwrap() as i64 - 3).max(0) as u64;
            let bound = upper_bound(&SeifertParams::closed(0, Epsilon::O1, 0, 0, 0, &[(p, q)])).unwrap();
            assert_eq!(bound.case_tag, CaseTag::LensQp, "({p},{q})");
            assert_eq!(bound.value, direct, "({p},{q})");
        }
    }
}

#[test]
fn census_is_deterministic_and_duplicate_free() {
    let a = enumerate_nonorientable_closed(7);
    let b = enumerate_nonorientable_closed(7);
    assert_eq!(a, b);
    for (i, x) in a.iter().enumerate() {
        for y in &a[i + 1..] {
            assert!(!equivalent(&x.params, &y.params).unwrap(), "{} ~ {}", x.params, y.params);
        }
    }
}

#[test]
fn validation_reports_every_violation() {
    let x: SeifertParams = "{0;(n4,1,(1,3));(|);((4,2),(0,1))}".parse().unwrap();
    let found = validate(&x);
    assert!(found.len() >= 4, "{found:?}");
}
