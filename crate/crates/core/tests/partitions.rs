use partition_forge::partitions::{
    is_strip, order_compare, partition_of_profile, partitions_of, partitions_up_to, profile_of,
    strip_neighbors, BoxCoords, Comparison, Direction, Partition, PartitionOrder, StripBound, StripKind,
};
use proptest::prelude::*;

/// Column-length test for a horizontal strip, independent of the interlacing test.
fn at_most_one_box_per_column(mu: &Partition, lambda: &Partition) -> bool {
    mu.is_contained_in(lambda) && (1..=lambda.first_part()).all(|j| lambda.col(j) - mu.col(j) <= 1)
}

#[test]
fn profile_round_trip_up_to_15() {
    for lam in partitions_up_to(15) {
        let pi = profile_of(&lam, None).unwrap();
        assert_eq!(partition_of_profile(&pi), lam);
        if !lam.is_empty() {
            assert!(pi.bit(1) && !pi.bit(pi.len()));
        }
        let framed = profile_of(&lam, Some((lam.len() + 2, lam.first_part() as usize + 3))).unwrap();
        assert_eq!(partition_of_profile(&framed), lam);
        assert_eq!(framed.zeros(), lam.len() + 2);
        assert_eq!(framed.ones(), lam.first_part() as usize + 3);
    }
}

#[test]
fn conjugation_is_an_involution_and_reverses_profiles() {
    for lam in partitions_up_to(12) {
        assert_eq!(lam.conjugate().conjugate(), lam);
        let pi = profile_of(&lam, None).unwrap();
        assert_eq!(profile_of(&lam.conjugate(), None).unwrap(), pi.conjugate());
    }
}

#[test]
fn hooks_add_up() {
    for lam in partitions_up_to(12) {
        let pi = profile_of(&lam, None).unwrap();
        let boxes = pi.inversions();
        assert_eq!(boxes.len() as u32, lam.size());
        for s in boxes {
            let h = pi.hook_stats(s).unwrap();
            assert_eq!(h.hook, h.arm + h.leg + 1);
        }
    }
    let pi = profile_of(&Partition::new(vec![2]).unwrap(), None).unwrap();
    assert!(pi.hook_stats(BoxCoords { i: 3, j: 1 }).is_err());
}

#[test]
fn hook_lengths_match_arm_and_leg_from_rows_and_columns() {
    for lam in partitions_up_to(9) {
        let pi = profile_of(&lam, None).unwrap();
        let mut from_profile: Vec<(usize, usize)> = pi
            .inversions()
            .into_iter()
            .map(|s| {
                let h = pi.hook_stats(s).unwrap();
                (h.arm, h.leg)
            })
            .collect();
        let mut from_cells = Vec::new();
        for i in 1..=lam.len() {
            for j in 1..=lam.row(i) {
                from_cells.push(((lam.row(i) - j) as usize, lam.col(j) - i));
            }
        }
        from_profile.sort();
        from_cells.sort();
        assert_eq!(from_profile, from_cells);
    }
}

#[test]
fn outside_corners_exceed_inside_by_one() {
    for lam in partitions_up_to(10).into_iter().filter(|l| !l.is_empty()) {
        let (outside, inside) = profile_of(&lam, None).unwrap().corners();
        assert_eq!(outside.len(), inside.len() + 1);
    }
}

#[test]
fn strip_kinds_are_conjugate() {
    let all = partitions_up_to(10);
    for lam in &all {
        for mu in all.iter().filter(|m| m.size() <= lam.size()) {
            let h = is_strip(mu, lam, StripKind::Horizontal);
            assert_eq!(h, is_strip(&mu.conjugate(), &lam.conjugate(), StripKind::Vertical));
            assert_eq!(h, at_most_one_box_per_column(mu, lam), "{mu} {lam}");
        }
    }
}

#[test]
fn upward_strips_match_brute_force() {
    for mu in partitions_up_to(8) {
        for r in 0..=8 - mu.size() {
            let fast = strip_neighbors(&mu, Direction::Up, StripBound::Exact(r)).unwrap();
            let mut slow: Vec<Partition> = partitions_of(mu.size() + r)
                .into_iter()
                .filter(|nu| at_most_one_box_per_column(&mu, nu))
                .collect();
            slow.sort();
            assert_eq!(fast, slow, "U_{r}({mu})");
        }
        let down = strip_neighbors(&mu, Direction::Down, StripBound::Unbounded).unwrap();
        let slow_down: Vec<Partition> = partitions_up_to(mu.size())
            .into_iter()
            .filter(|nu| at_most_one_box_per_column(nu, &mu))
            .collect();
        assert_eq!(down.len(), slow_down.len());
    }
}

#[test]
fn dominance_implies_lex() {
    for n in 0..=8 {
        let all = partitions_of(n);
        for mu in &all {
            for lam in &all {
                let dom = order_compare(mu, lam, PartitionOrder::Dominance);
                let lex = order_compare(mu, lam, PartitionOrder::Lex);
                if dom == Comparison::Less {
                    assert_eq!(lex, Comparison::Less);
                }
                assert_ne!(lex, Comparison::Incomparable);
            }
        }
    }
}

#[test]
fn union_and_meet_are_lattice_operations() {
    let all = partitions_up_to(7);
    for a in &all {
        for b in &all {
            let (join, meet) = (a.union(b), a.intersection(b));
            assert!(a.is_contained_in(&join) && b.is_contained_in(&join));
            assert!(meet.is_contained_in(a) && meet.is_contained_in(b));
            for c in &all {
                if a.is_contained_in(c) && b.is_contained_in(c) {
                    assert!(join.is_contained_in(c));
                }
                if c.is_contained_in(a) && c.is_contained_in(b) {
                    assert!(c.is_contained_in(&meet));
                }
            }
        }
    }
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..8, 0..8).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn json_round_trip(lam in arb_partition()) {
        let text = serde_json::to_string(&lam).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&text).unwrap(), lam);
    }

    #[test]
    fn containment_agrees_with_componentwise_comparison(a in arb_partition(), b in arb_partition()) {
        let c = order_compare(&a, &b, PartitionOrder::Containment);
        let le = (1..=8).all(|i| a.row(i) <= b.row(i));
        let ge = (1..=8).all(|i| a.row(i) >= b.row(i));
        let expected = match (le, ge) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::Less,
            (false, true) => Comparison::Greater,
            (false, false) => Comparison::Incomparable,
        };
        prop_assert_eq!(c, expected);
    }
}
