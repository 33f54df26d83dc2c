use proptest::prelude::*;

use durfee_core::bijections::{psi, psi_inverse};
use durfee_core::durfee::{from_durfee, to_durfee};
use durfee_core::marked::{balanced_parts, is_strict_shifted_pair};
use durfee_core::partition::conjugate;
use durfee_core::{rank, Partition, PartitionPair};

fn partition(max_part: u32, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, len)
        .prop_map(|parts| Partition::from_multiset(parts).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn durfee_dissection_round_trips(p in partition(30, 1..=25)) {
        let s = to_durfee(&p).unwrap();
        prop_assert_eq!(s.weight(), p.weight());
        prop_assert_eq!(s.rank(), rank(&p));
        prop_assert_eq!(from_durfee(&s).unwrap(), p);
    }

    #[test]
    fn conjugation_negates_rank(p in partition(30, 0..=25)) {
        let c = conjugate(&p);
        prop_assert_eq!(conjugate(&c), p.clone());
        prop_assert_eq!(rank(&c), -rank(&p));
    }

    #[test]
    fn psi_round_trips(a in partition(20, 1..=15), b in partition(20, 0..=15)) {
        prop_assume!(b.largest() <= a.largest());
        let p = PartitionPair::new(a, b);
        let r = balanced_parts(&p).len();
        let q = psi(&p).unwrap();
        prop_assert!(is_strict_shifted_pair(&q));
        prop_assert_eq!(q.weight(), p.weight());
        prop_assert_eq!(psi_inverse(&q, r).unwrap(), p);
    }
}
