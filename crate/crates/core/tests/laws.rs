//! Property tests for the filter algebra and scalar quotients.

use proptest::prelude::*;

use rpa_core::scalars::ratio;
use rpa_core::{FilterSpec, Germ, IndexSet, PuiseuxPoly, RpaReal};

fn arb_index_set() -> impl Strategy<Value = IndexSet> {
    (
        1u64..=6,
        proptest::collection::btree_set(0u64..6, 0..4),
        proptest::collection::btree_set(0u64..20, 0..3),
        proptest::collection::btree_set(0u64..20, 0..3),
    )
        .prop_map(|(m, residues, added, removed)| {
            IndexSet::new(m, residues.into_iter().map(|r| r % m), added, removed)
        })
}

fn arb_filter() -> impl Strategy<Value = FilterSpec> {
    prop_oneof![
        2 => Just(FilterSpec::Frechet),
        2 => (0u64..10).prop_map(FilterSpec::PrincipalAt),
        1 => arb_index_set().prop_filter_map("need an infinite base", |s| {
            FilterSpec::superset_of(s).ok()
        }),
    ]
}

fn arb_poly() -> impl Strategy<Value = PuiseuxPoly> {
    proptest::collection::vec(
        (
            -2i64..=2,
            (-9i64..=9).prop_filter("nonzero coefficient", |c| *c != 0),
            1i64..=3,
        ),
        0..3,
    )
    .prop_map(|terms| {
        PuiseuxPoly::from_terms(
            terms
                .into_iter()
                .map(|(e, p, q)| (ratio::int(e), ratio::ratio(p, q))),
        )
    })
}

fn arb_germ() -> impl Strategy<Value = Germ> {
    (1u64..=3).prop_flat_map(|m| {
        proptest::collection::vec(arb_poly(), m as usize..=m as usize)
            .prop_map(move |polys| Germ::new(m, polys))
    })
}

fn arb_real() -> impl Strategy<Value = (FilterSpec, RpaReal)> {
    (arb_filter(), arb_germ()).prop_map(|(f, g)| {
        let x = RpaReal::new(f.clone(), g).expect("integer exponents");
        (f, x)
    })
}

fn arb_real_pair() -> impl Strategy<Value = (RpaReal, RpaReal)> {
    (arb_filter(), arb_germ(), arb_germ()).prop_map(|(f, g1, g2)| {
        (
            RpaReal::new(f.clone(), g1).expect("integer exponents"),
            RpaReal::new(f, g2).expect("integer exponents"),
        )
    })
}

proptest! {
    #[test]
    fn filter_membership_is_monotone((f, s, t) in (arb_filter(), arb_index_set(), arb_index_set())) {
        if f.is_member(&s) {
            prop_assert!(f.is_member(&s.union(&t)));
        }
    }

    #[test]
    fn filter_membership_respects_intersections((f, s, t) in (arb_filter(), arb_index_set(), arb_index_set())) {
        prop_assert_eq!(
            f.is_member(&s.intersection(&t)),
            f.is_member(&s) && f.is_member(&t)
        );
    }

    #[test]
    fn no_filter_contains_the_empty_set(f in arb_filter()) {
        prop_assert!(!f.is_member(&IndexSet::empty()));
    }

    #[test]
    fn complement_is_an_involution(s in arb_index_set()) {
        prop_assert_eq!(s.complement().complement(), s);
    }

    #[test]
    fn de_morgan(s in arb_index_set(), t in arb_index_set()) {
        prop_assert_eq!(
            s.union(&t).complement(),
            s.complement().intersection(&t.complement())
        );
    }

    #[test]
    fn embedding_is_a_homomorphism((f, p, q, r, s) in (arb_filter(), -20i64..=20, 1i64..=6, -20i64..=20, 1i64..=6)) {
        let x = ratio::ratio(p, q);
        let y = ratio::ratio(r, s);
        let ex = RpaReal::embed(x.clone(), f.clone());
        let ey = RpaReal::embed(y.clone(), f.clone());
        prop_assert_eq!(&ex + &ey, RpaReal::embed(&x + &y, f.clone()));
        prop_assert_eq!(&ex * &ey, RpaReal::embed(&x * &y, f.clone()));
        // injectivity on a pair
        if x != y {
            prop_assert!(!ex.eq_elem(&ey).unwrap());
        }
    }

    #[test]
    fn subtraction_witnesses_equality((a, b) in arb_real_pair()) {
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.eq_elem(&b).unwrap(), (&a - &b).is_zero());
    }

    #[test]
    fn order_antisymmetry((a, b) in arb_real_pair()) {
        if a.leq(&b).unwrap() && b.leq(&a).unwrap() {
            prop_assert!(a.eq_elem(&b).unwrap());
        }
    }

    #[test]
    fn abs_is_idempotent_and_square_preserving((_f, a) in arb_real()) {
        let abs = a.real_abs();
        prop_assert!(abs.is_nonneg());
        prop_assert_eq!(abs.real_abs(), abs.clone());
        prop_assert_eq!(&abs * &abs, &a * &a);
        // nonnegative elements are fixed, witnessing surjectivity onto the cone
        if a.is_nonneg() {
            prop_assert_eq!(abs, a);
        }
    }

    #[test]
    fn classwise_max_is_an_upper_bound((a, b) in arb_real_pair()) {
        let m = a.classwise_max(&b).unwrap();
        prop_assert!(a.leq(&m).unwrap());
        prop_assert!(b.leq(&m).unwrap());
    }

    #[test]
    fn inverses_multiply_to_one((_f, a) in arb_real()) {
        if let Ok(inv) = a.try_invert() {
            prop_assert_eq!(&a * &inv, RpaReal::one(a.filter().clone()));
        }
    }

    #[test]
    fn eval_agrees_with_pointwise_product((a, b) in arb_real_pair()) {
        let prod = &a * &b;
        for n in [10u64, 13, 24] {
            // normal forms may zero classes the filter cannot see, so compare
            // products of the *normalized* representatives
            let m = a.germ().modulus().max(b.germ().modulus()).max(prod.germ().modulus());
            let idx = n * m;
            prop_assert_eq!(
                prod.eval_at(idx).unwrap(),
                a.eval_at(idx).unwrap() * b.eval_at(idx).unwrap()
            );
        }
    }
}
