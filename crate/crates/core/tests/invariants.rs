//! Randomized invariants on spaces larger than the exhaustive sweeps reach.

use proptest::prelude::*;

use topolab_core::classes::{is_n_scattered, space_report, SpaceReport};
use topolab_core::operators::{is_hsg_closed_def, is_hsg_open_def, is_sg_closed_def, set_flags, SetFlags};
use topolab_core::setcore::{find_homeomorphism, FiniteSpace, PointSet};

fn space_strategy(max_n: usize) -> impl Strategy<Value = FiniteSpace> {
    (1..=max_n).prop_flat_map(|n| {
        let full = (1u32 << n) - 1;
        prop::collection::vec(0..=full, 0..6)
            .prop_map(move |gens| FiniteSpace::generated_by(n, gens.into_iter().map(PointSet::from_bits)).unwrap())
    })
}

fn space_and_set(max_n: usize) -> impl Strategy<Value = (FiniteSpace, PointSet)> {
    space_strategy(max_n).prop_flat_map(|s| {
        let full = (1u32 << s.n()) - 1;
        (Just(s), (0..=full).prop_map(PointSet::from_bits))
    })
}

fn space_and_two_sets(max_n: usize) -> impl Strategy<Value = (FiniteSpace, PointSet, PointSet)> {
    space_strategy(max_n).prop_flat_map(|s| {
        let full = (1u32 << s.n()) - 1;
        (Just(s), (0..=full).prop_map(PointSet::from_bits), (0..=full).prop_map(PointSet::from_bits))
    })
}

fn space_and_perm(max_n: usize) -> impl Strategy<Value = (FiniteSpace, Vec<usize>)> {
    space_strategy(max_n).prop_flat_map(|s| {
        let n = s.n();
        (Just(s), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

fn bools(r: &SpaceReport) -> Vec<bool> {
    SpaceReport::BOOL_NAMES.iter().map(|n| r.get(n).unwrap()).collect()
}

fn flag_vec(f: &SetFlags) -> Vec<bool> {
    SetFlags::NAMES.iter().map(|n| f.get(n).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn generated_families_are_topologies(s in space_strategy(8)) {
        for &u in s.opens() {
            for &v in s.opens() {
                prop_assert!(s.is_open(u | v) && s.is_open(u & v));
            }
        }
        prop_assert!(s.is_open(PointSet::EMPTY) && s.is_open(s.ground()));
    }

    #[test]
    fn kuratowski_axioms((s, a, b) in space_and_two_sets(8)) {
        prop_assert_eq!(s.closure(a | b), s.closure(a) | s.closure(b));
        prop_assert_eq!(s.closure(s.closure(a)), s.closure(a));
        prop_assert!(a.is_subset(s.closure(a)));
        prop_assert_eq!(s.interior(a), s.complement(s.closure(s.complement(a))));
        prop_assert_eq!(s.semi_closure(a), a | s.interior(s.closure(a)));
    }

    #[test]
    fn characterizations_match_definitions((s, a) in space_and_set(7)) {
        let f = set_flags(&s, a).unwrap();
        prop_assert_eq!(f.sg_closed, is_sg_closed_def(&s, a).unwrap());
        prop_assert_eq!(f.sg_open, is_sg_closed_def(&s, s.complement(a)).unwrap());
        prop_assert_eq!(f.hsg_closed, is_hsg_closed_def(&s, a).unwrap());
        prop_assert_eq!(f.hsg_open, is_hsg_open_def(&s, a).unwrap());
    }

    #[test]
    fn implication_chains((s, a) in space_and_set(8)) {
        let f = set_flags(&s, a).unwrap();
        prop_assert!(!f.nowhere_dense || f.hsg_closed);
        prop_assert!(!f.hsg_closed || f.sg_closed);
        prop_assert!(!f.semi_closed || f.sg_closed);
        prop_assert!(!f.sg_open || f.beta_open);
        prop_assert!(!f.alpha_open || (f.semi_open && f.preopen));
        prop_assert_eq!(f.regular_open, f.alpha_open && f.sg_closed);
    }

    #[test]
    fn sg_closed_plus_closed_is_sg_closed((s, a, b) in space_and_two_sets(7)) {
        let b = s.closure(b);
        if set_flags(&s, a).unwrap().sg_closed {
            prop_assert!(set_flags(&s, a | b).unwrap().sg_closed);
        }
    }

    #[test]
    fn every_space_is_sg_t_half(s in space_strategy(8)) {
        for x in 0..s.n() {
            let f = set_flags(&s, PointSet::singleton(x)).unwrap();
            prop_assert!(f.sg_open || f.sg_closed);
        }
    }

    #[test]
    fn relabeling_preserves_everything((s, perm) in space_and_perm(6)) {
        let t = s.permute(&perm);
        prop_assert!(find_homeomorphism(&s, &t).is_some());
        prop_assert_eq!(bools(&space_report(&s)), bools(&space_report(&t)));
        for a in s.subsets() {
            let fa = set_flags(&s, a).unwrap();
            let ft = set_flags(&t, a.map(&perm)).unwrap();
            prop_assert_eq!(flag_vec(&fa), flag_vec(&ft));
        }
    }

    #[test]
    fn class_chain(s in space_strategy(6)) {
        let r = space_report(&s);
        prop_assert!(!r.scattered || r.hsg_scattered);
        prop_assert!(!r.hsg_scattered || r.n_scattered);
        prop_assert_eq!(r.n_scattered, is_n_scattered(&s));
        prop_assert_eq!(r.scattered, r.alpha_scattered && r.n_scattered);
        prop_assert!(!r.submaximal || r.alpha_space);
        prop_assert!(!r.alpha_space || r.n_scattered);
        prop_assert_eq!(r.so_topology, r.extremally_disconnected);
    }
}
