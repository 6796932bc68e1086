mod common;

use std::collections::BTreeSet;

use common::rng;
use lapcs::harness::{all_labeled_graphs, random_graph};
use lapcs::reductions::{
    construct::bracket_arc, extract_independent_set, mapping_from_independent_set,
    max_independent_set, reduce, reduce_theorem1, reduce_theorem2, Construction, Theorem,
};
use lapcs::{is_arc_preserving, solve, Graph, MatchConstraint, StructureLevel};
use proptest::prelude::*;

fn independent_subsets(g: &Graph) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = g.order();
    (0u32..1 << n)
        .map(move |mask| {
            (1..=n)
                .filter(|v| mask >> (v - 1) & 1 == 1)
                .collect::<Vec<_>>()
        })
        .filter(|s| g.is_independent(s))
}

fn brute_force_mis(g: &Graph) -> usize {
    independent_subsets(g).map(|s| s.len()).max().unwrap()
}

#[test]
fn independent_set_oracle_matches_enumeration() {
    for n in 0..=5 {
        for g in all_labeled_graphs(n).unwrap() {
            let (size, set) = max_independent_set(&g, 20).unwrap();
            assert_eq!(size, brute_force_mis(&g), "{}", g.id());
            assert_eq!(set.len(), size);
            assert!(g.is_independent(&set));
        }
    }
    assert!(max_independent_set(&Graph::empty(21), 20)
        .unwrap_err()
        .is_budget());
}

#[test]
fn first_reduction_optimum_equals_independence_number() {
    for n in 1..=5 {
        for g in all_labeled_graphs(n).unwrap() {
            let inst = reduce_theorem1(&g, 1).unwrap();
            let r = solve(&inst.a1, &inst.a2, inst.mc).unwrap();
            assert_eq!(r.length, brute_force_mis(&g), "{}", g.id());
            let set = extract_independent_set(&inst, &r.witness).unwrap();
            assert_eq!(set.vertices.len(), r.length);
            assert!(g.is_independent(&set.vertices));
        }
    }
}

#[test]
fn first_reduction_forward_mappings_round_trip() {
    for n in 1..=4 {
        for g in all_labeled_graphs(n).unwrap() {
            let inst = reduce_theorem1(&g, 1).unwrap();
            for set in independent_subsets(&g) {
                let m = mapping_from_independent_set(&inst, &set).unwrap();
                assert!(is_arc_preserving(&m, &inst.a1, &inst.a2).unwrap());
                assert!(m.satisfies(inst.mc));
                assert_eq!(extract_independent_set(&inst, &m).unwrap().vertices, set);
            }
        }
    }
}

#[test]
fn block_construction_is_well_formed() {
    for n in 1..=4 {
        let w = n + 2;
        for g in all_labeled_graphs(n).unwrap() {
            for k in 1..=n {
                let inst = reduce_theorem2(&g, k).unwrap();
                assert_eq!(inst.provenance.construction, Construction::Theorem2CaseII);
                assert_eq!(inst.mc, MatchConstraint::identity());
                assert_eq!(inst.threshold, k * w);
                let block = format!("b{}b", "a".repeat(n));
                assert_eq!(inst.a1.sequence(), block.repeat(n));
                assert_eq!(inst.a2.sequence(), block.repeat(n));

                let brackets: BTreeSet<_> = (1..=n).map(|i| bracket_arc(n, i)).collect();
                assert_eq!(inst.a2.arcs(), &brackets);
                assert!(brackets.is_subset(inst.a1.arcs()));
                assert_eq!(inst.a1.arcs().len(), n + g.size());
                assert_eq!(inst.a2.structure(), StructureLevel::Chain);
                let expected = if g.size() == 0 {
                    StructureLevel::Chain
                } else {
                    StructureLevel::Crossing
                };
                assert_eq!(inst.a1.structure(), expected, "{}", g.id());
            }
        }
    }
}

#[test]
fn block_forward_mappings_reach_the_threshold() {
    for n in 1..=4 {
        for g in all_labeled_graphs(n).unwrap() {
            let inst = reduce_theorem2(&g, 1).unwrap();
            for set in independent_subsets(&g) {
                let m = mapping_from_independent_set(&inst, &set).unwrap();
                assert!(is_arc_preserving(&m, &inst.a1, &inst.a2).unwrap());
                assert_eq!(m.len(), set.len() * (n + 2));
                let back = extract_independent_set(&inst, &m).unwrap();
                assert_eq!(back.vertices, set);
                assert!(back.is_independent());
            }
        }
    }
}

#[test]
fn block_optimum_drops_one_position_per_edge() {
    for n in 1..=4 {
        for g in all_labeled_graphs(n).unwrap() {
            let inst = reduce_theorem2(&g, 1).unwrap();
            let r = solve(&inst.a1, &inst.a2, inst.mc).unwrap();
            assert_eq!(r.length, n * (n + 2) - g.size(), "{}", g.id());
        }
    }
}

#[test]
fn constant_instance_when_k_exceeds_n() {
    let g = Graph::complete(3);
    let inst = reduce(&g, 4, Theorem::Two).unwrap();
    assert_eq!(inst.provenance.construction, Construction::Theorem2CaseI);
    assert_eq!(inst.a1.sequence(), "a");
    assert_eq!(inst.threshold, 4);
    let r = solve(&inst.a1, &inst.a2, inst.mc).unwrap();
    assert!(r.length < inst.threshold);
    assert!(mapping_from_independent_set(&inst, &[1])
        .unwrap()
        .is_empty());
}

#[test]
fn zero_threshold_is_rejected() {
    for t in [Theorem::One, Theorem::Two] {
        assert!(reduce(&Graph::path(3), 0, t).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn first_reduction_on_random_graphs(seed in any::<u64>(), n in 1usize..=9, p in 0.0f64..=1.0) {
        let g = random_graph(n, p, &mut rng(seed));
        let inst = reduce_theorem1(&g, 1).unwrap();
        let r = solve(&inst.a1, &inst.a2, inst.mc).unwrap();
        prop_assert_eq!(r.length, max_independent_set(&g, 20).unwrap().0);
    }
}
