use std::collections::BTreeSet;

use grainlat::infinite::{build_l_leq, chi, inf_join, inf_leq, inf_meet, Reachability};
use grainlat::lattice::{build_incremental_to, join, meet};
use grainlat::oracle::enumerate_partitions;
use grainlat::tree;
use grainlat::Partition;

#[test]
fn each_level_is_a_sublattice_of_the_filter() {
    let d = build_l_leq(10).unwrap();
    let reach = Reachability::new(&d);
    for n in 0..=8 {
        let all = enumerate_partitions(n);
        for a in &all {
            for b in &all {
                let (x, y) = (d.find(a).unwrap(), d.find(b).unwrap());
                let m = d.partition(reach.meet(x, y).unwrap());
                let j = d.partition(reach.join(x, y).unwrap());
                assert_eq!(m, meet(a, b).unwrap(), "{a} and {b}");
                assert_eq!(j, join(a, b).unwrap(), "{a} and {b}");
            }
        }
    }
}

#[test]
fn filter_order_matches_the_infinite_order() {
    let d = build_l_leq(7).unwrap();
    let reach = Reachability::new(&d);
    for x in d.node_ids() {
        for y in d.node_ids() {
            let (s, t) = (d.partition(x), d.partition(y));
            assert_eq!(reach.leq(x, y), inf_leq(&chi(&s), &chi(&t)), "{s} vs {t}");
        }
    }
}

#[test]
fn filters_are_upward_closed() {
    let small: BTreeSet<Partition> = build_l_leq(5).unwrap().sorted_partitions().into_iter().collect();
    let big = build_l_leq(9).unwrap();
    for s in &small {
        for t in big.sorted_partitions() {
            if inf_leq(&chi(s), &chi(&t)) {
                assert!(small.contains(&t), "{t} is above {s} but outside the filter");
            }
        }
    }
}

#[test]
fn filter_meets_and_joins_stay_inside() {
    let all: Vec<Partition> = (0..=6).flat_map(enumerate_partitions).collect();
    for s in &all {
        for t in &all {
            let bound = s.weight().max(t.weight());
            assert!(inf_meet(&chi(s), &chi(t)).tail_weight() <= bound);
            assert!(inf_join(&chi(s), &chi(t)).tail_weight() <= bound);
        }
    }
}

#[test]
fn tails_of_a_level_form_a_rooted_subtree() {
    for n in 1..=12 {
        let tails: BTreeSet<Partition> = build_incremental_to(n)
            .sorted_partitions()
            .iter()
            .map(|s| Partition::new(s.parts()[1..].to_vec()).unwrap())
            .collect();
        assert!(tails.contains(&Partition::empty()));
        for t in &tails {
            if !t.is_empty() {
                assert!(tails.contains(&tree::parent(t).unwrap().1), "n = {n}, {t}");
            }
        }
    }
}
