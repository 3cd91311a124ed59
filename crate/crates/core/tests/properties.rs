use std::cmp::Ordering;

use ackgoodstein::base_change::{base_change, bc_via_tree};
use ackgoodstein::normal_form::{eval_tree, to_tree, tree_cmp};
use ackgoodstein::ordinal::OrdinalGen;
use ackgoodstein::ordinal_map::psi;
use ackgoodstein::{BoundedValue, Mode, Nat, Ordinal};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Unnested), Just(Mode::Nested)]
}

fn ordinal() -> impl Strategy<Value = Ordinal> {
    any::<u64>().prop_map(|seed| OrdinalGen::default().sample(&mut ChaCha8Rng::seed_from_u64(seed)))
}

fn cap() -> Nat {
    num_traits::pow(Nat::from(10u32), 2000)
}

proptest! {
    #[test]
    fn trees_round_trip_on_wide_values(c in any::<u128>(), k in 2u64..=7, m in mode()) {
        let c = Nat::from(c);
        let t = to_tree(&c, k, m).unwrap();
        prop_assert_eq!(eval_tree(&t, k, &c).unwrap(), BoundedValue::Exact(c));
    }

    #[test]
    fn tree_order_matches_numeric_order(c in any::<u64>(), d in any::<u64>(), k in 2u64..=5, m in mode()) {
        let tc = to_tree(&Nat::from(c), k, m).unwrap();
        let td = to_tree(&Nat::from(d), k, m).unwrap();
        prop_assert_eq!(tree_cmp(&tc, &td), c.cmp(&d));
    }

    #[test]
    fn base_change_routes_agree(c in any::<u64>(), k in 2u64..=5, m in mode()) {
        let c = Nat::from(c);
        prop_assert_eq!(base_change(&c, k, &cap(), m).unwrap(), bc_via_tree(&c, k, &cap(), m).unwrap());
    }

    #[test]
    fn base_change_is_monotone(c in 0u64..1_000_000, gap in 1u64..1000, k in 2u64..=6, m in mode()) {
        let lo = base_change(&Nat::from(c), k, &cap(), m).unwrap();
        let hi = base_change(&Nat::from(c + gap), k, &cap(), m).unwrap();
        if let (BoundedValue::Exact(x), BoundedValue::Exact(y)) = (&lo, &hi) {
            prop_assert!(Nat::from(c) <= *x && x < y);
        }
        prop_assert!(!(lo.is_exceeded() && !hi.is_exceeded()));
    }

    #[test]
    fn psi_is_monotone(c in any::<u64>(), d in any::<u64>(), k in 2u64..=5) {
        let (pc, pd) = (psi(k, &Nat::from(c)).unwrap(), psi(k, &Nat::from(d)).unwrap());
        prop_assert_eq!(pc.cmp(&pd), c.cmp(&d));
    }

    #[test]
    fn ordinal_text_round_trips(a in ordinal()) {
        prop_assert_eq!(a.to_string().parse::<Ordinal>().unwrap(), a);
    }

    #[test]
    fn addition_laws(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        if b < c {
            prop_assert!(a.add(&b) < a.add(&c));
        }
        prop_assert!(a <= a.add(&b));
        prop_assert!(b <= a.add(&b));
    }

    #[test]
    fn fund_is_below_and_monotone(a in ordinal(), k in 0u64..6) {
        let (x, y) = (a.fund(k), a.fund(k + 1));
        prop_assert!(x.is_canonical() && y.is_canonical());
        prop_assert!(x <= y);
        prop_assert_eq!(x.cmp(&a), if a.is_zero() { Ordering::Equal } else { Ordering::Less });
    }
}
