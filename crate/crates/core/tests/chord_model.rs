#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::BTreeSet;

use chordcolor::{connected_components, gen_diagram, ChordDiagram, ChordId, GenMode};
use proptest::prelude::*;

fn diagram_strategy(max_n: usize) -> impl Strategy<Value = ChordDiagram> {
    (0..=max_n, any::<u64>())
        .prop_map(|(n, seed)| gen_diagram(n, GenMode::UniformMatching, seed).unwrap())
}

#[test]
fn random_ten_chord_graph_matches_geometry() {
    for seed in 0..50 {
        let d = gen_diagram(10, GenMode::UniformMatching, seed).unwrap();
        let g = d.graph();
        let adj = common::adjacency(&d);
        for i in 0..10 {
            for j in 0..10 {
                assert_eq!(g.adjacent(ChordId(i), ChordId(j)), adj[i][j], "seed {seed} ({i},{j})");
            }
        }
    }
}

#[test]
fn components_match_union_find() {
    for seed in 0..50 {
        let d = gen_diagram(14, GenMode::K4Free, seed).unwrap();
        let ours: BTreeSet<BTreeSet<usize>> = connected_components(&d.graph())
            .into_iter()
            .map(|c| c.into_iter().map(|id| id.0).collect())
            .collect();
        assert_eq!(ours, common::components_union_find(&common::adjacency(&d)));
    }
}

proptest! {
    #[test]
    fn crossing_is_symmetric_and_irreflexive(d in diagram_strategy(16)) {
        for i in d.chord_ids() {
            prop_assert!(!d.intersects(i, i).unwrap());
            for j in d.chord_ids() {
                prop_assert_eq!(d.intersects(i, j).unwrap(), d.intersects(j, i).unwrap());
            }
        }
    }

    #[test]
    fn rotation_keeps_the_graph(d in diagram_strategy(16), k in 0usize..64) {
        prop_assert_eq!(d.rotated(k).graph(), d.graph());
    }

    #[test]
    fn restriction_is_the_induced_subgraph(d in diagram_strategy(14), mask in any::<u32>()) {
        let keep: Vec<ChordId> = d.chord_ids().filter(|id| mask >> id.0 & 1 == 1).collect();
        let view = d.restrict(keep.iter().copied()).unwrap();
        prop_assert_eq!(view.graph(), d.graph().induced(keep.iter().copied()).unwrap());
        for &a in &keep {
            for &b in &keep {
                prop_assert_eq!(view.intersects(a, b).unwrap(), d.intersects(a, b).unwrap());
            }
        }
    }

    #[test]
    fn sequence_round_trips(d in diagram_strategy(20)) {
        prop_assert_eq!(ChordDiagram::from_sequence(&d.sequence()).unwrap(), d);
    }
}
