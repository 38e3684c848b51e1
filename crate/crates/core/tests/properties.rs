use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use syspres::cycles::{check_six_large, check_six_large_with_cap, classify_diagonal_free_4cycle};
use syspres::free::{FreeWord, Letter};
use syspres::link::build_link;
use syspres::order::DivisibilityOrder;
use syspres::sample::random_valid_table;
use syspres::table::{Elem, Side};
use syspres::{check_conditions_via_orders, check_systolic_conditions, ProductTable};

fn word() -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((prop::sample::select(vec!['a', 'b', 'c']), any::<bool>()), 0..24).prop_map(|v| {
        FreeWord(
            v.into_iter()
                .map(|(sym, inverse)| Letter { sym, inverse })
                .collect(),
        )
    })
}

fn table() -> impl Strategy<Value = ProductTable> {
    any::<u64>().prop_map(|seed| random_valid_table(&mut ChaCha8Rng::seed_from_u64(seed), 10))
}

proptest! {
    #[test]
    fn reduce_is_idempotent(w in word()) {
        let r = w.reduce();
        prop_assert!(r.is_reduced());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.reduce(), r);
    }

    #[test]
    fn reduce_is_a_congruence(u in word(), v in word()) {
        prop_assert_eq!(u.reduce().concat(&v.reduce()).reduce(), u.concat(&v).reduce());
        prop_assert!(u.mul(&u.inverse()).is_empty());
    }

    #[test]
    fn checkers_agree(t in table()) {
        let direct = check_systolic_conditions(&t);
        let link = build_link(&t);
        prop_assert_eq!(direct.overall(), check_six_large(&link).passed());
        prop_assert_eq!(direct.overall(), check_conditions_via_orders(&t).unwrap().overall());
    }

    #[test]
    fn witnesses_satisfy_hypotheses(t in table()) {
        for o in check_systolic_conditions(&t).outcomes {
            for w in &o.witnesses {
                prop_assert!(syspres::conditions::hypothesis_holds(&t, o.condition, w));
            }
        }
    }

    #[test]
    fn link_invariants(t in table()) {
        let link = build_link(&t);
        prop_assert_eq!(link.edges().len(), 3 * t.num_products());
        prop_assert_eq!(link.positive_to_negative_edges(), 0);
        let rep = check_six_large_with_cap(&link, usize::MAX);
        for c in &rep.diagonal_free {
            prop_assert_eq!(c.len(), 4);
            prop_assert!(classify_diagonal_free_4cycle(&link, c).is_ok());
        }
    }

    #[test]
    fn divisibility_orders_are_partial_orders(t in table()) {
        for side in [Side::Left, Side::Right] {
            let ord = DivisibilityOrder::new(&t, side);
            prop_assert!(ord.violations().is_empty());
            let elems: Vec<Elem> = ord.elements().collect();
            for &a in &elems {
                prop_assert!(ord.leq(a, a));
                prop_assert!(ord.leq(Elem::Identity, a));
            }
        }
    }

    #[test]
    fn file_round_trip(t in table()) {
        let back = ProductTable::parse(&t.to_text()).unwrap();
        prop_assert!(back.same_structure(&t));
        prop_assert_eq!(back.to_text(), t.to_text());
    }
}
