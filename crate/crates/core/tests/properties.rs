use proptest::prelude::*;
use qkit_core::{enumerate, fixtures, starred, FiniteSemigroup, GreenData};
use std::sync::OnceLock;

fn pool() -> &'static [FiniteSemigroup] {
    static POOL: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v = Vec::new();
        for n in 1..=3 {
            enumerate::enumerate_semigroups(n, |s| v.push(s.clone())).unwrap();
        }
        v.extend(fixtures::curated().into_iter().map(|f| f.semigroup));
        v
    })
}

/// A pool semigroup, optionally with an identity adjoined, reversed, or
/// multiplied by a second small one.
fn semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    let n = pool().len();
    (0..n, 0..n, 0u8..4).prop_map(|(i, j, op)| {
        let s = pool()[i].clone();
        match op {
            0 => s,
            1 => s.adjoin_identity(),
            2 => s.opposite(),
            _ if s.order() * pool()[j].order() <= 12 => s.direct_product(&pool()[j]),
            _ => s.adjoin_zero(),
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn constructions_stay_associative(s in semigroup()) {
        prop_assert_eq!(s.associativity_violation(), None);
    }

    #[test]
    fn closure_is_idempotent(s in semigroup(), seed in proptest::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let seed: Vec<usize> = seed.iter().map(|i| i.index(s.order())).collect();
        let once = s.closure(&seed).unwrap();
        let twice = s.closure(once.members()).unwrap();
        prop_assert_eq!(once.members(), twice.members());
        for &x in &seed {
            prop_assert!(once.contains(x));
        }
    }

    #[test]
    fn adjoined_identity_is_new_and_acts_trivially(s in semigroup()) {
        let m = s.adjoin_identity();
        prop_assert_eq!(m.order(), s.order() + 1);
        let one = m.identity().unwrap();
        prop_assert_eq!(one, s.order());
        for x in s.elements() {
            prop_assert_eq!(m.mul(one, x), x);
            prop_assert_eq!(m.mul(x, one), x);
            for y in s.elements() {
                prop_assert_eq!(m.mul(x, y), s.mul(x, y));
            }
        }
    }

    #[test]
    fn green_preorders_are_compatible_preorders(s in semigroup()) {
        let g = GreenData::new(&s);
        prop_assert!(g.leq_l.is_preorder() && g.leq_r.is_preorder() && g.leq_j.is_preorder());
        prop_assert_eq!(g.l.to_relation(), g.leq_l.symmetric_part());
        prop_assert_eq!(g.r.to_relation(), g.leq_r.symmetric_part());
        prop_assert_eq!(starred::compatibility_failure(&s, &g.leq_l, false), None);
        prop_assert_eq!(starred::compatibility_failure(&s, &g.leq_r, true), None);
        prop_assert!(g.h.to_relation().is_subset(&g.d.to_relation()));
        prop_assert!(g.d.to_relation().is_subset(&g.j.to_relation()));
    }

    #[test]
    fn opposite_swaps_left_and_right(s in semigroup()) {
        let g = GreenData::new(&s);
        let op = GreenData::new(&s.opposite());
        prop_assert_eq!(g.leq_l, op.leq_r);
        prop_assert_eq!(g.leq_r, op.leq_l);
    }
}
