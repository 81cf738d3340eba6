mod common;

use chordcolor::oracle::find_coloring;
use chordcolor::{
    chromatic_number_exact, clique_number, enumerate_triangles, gen_diagram, is_proper,
    ChromaticNumber, GenMode, OracleConfig,
};

#[test]
fn clique_number_matches_subset_enumeration() {
    for seed in 0..200 {
        let d = gen_diagram(12, GenMode::UniformMatching, seed).unwrap();
        let adj = common::adjacency(&d);
        let expected = common::max_clique_up_to_4(&adj);
        let r = clique_number(&d.graph(), 4);
        assert_eq!(r.omega, expected, "seed {seed}");
        for (x, a) in r.witness.iter().enumerate() {
            for b in &r.witness[x + 1..] {
                assert!(adj[a.0][b.0]);
            }
        }
    }
}

#[test]
fn triangles_match_triple_loop() {
    for seed in 0..100 {
        let d = gen_diagram(12, GenMode::UniformMatching, seed).unwrap();
        let expected = common::triangles(&common::adjacency(&d));
        let ours: std::collections::BTreeSet<[usize; 3]> = enumerate_triangles(&d.graph())
            .into_iter()
            .map(|t| [t[0].0, t[1].0, t[2].0])
            .collect();
        assert_eq!(ours, expected, "seed {seed}");
        assert_eq!(ours.is_empty(), clique_number(&d.graph(), 3).omega <= 2);
    }
}

#[test]
fn chromatic_number_matches_plain_backtracking() {
    let cfg = OracleConfig::default();
    for seed in 0..150 {
        let mode = if seed % 2 == 0 { GenMode::UniformMatching } else { GenMode::K4Free };
        let d = gen_diagram(12, mode, seed).unwrap();
        let g = d.graph();
        let expected = common::brute_chromatic(&common::adjacency(&d));
        match chromatic_number_exact(&g, 30, &cfg).unwrap() {
            ChromaticNumber::Exact { chi, coloring } => {
                assert_eq!(chi, expected, "seed {seed}");
                assert_eq!(coloring.colors_used(), chi);
                assert!(is_proper(&g, &coloring).unwrap().is_proper());
                assert!(chi >= clique_number(&g, g.len()).omega);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}

#[test]
fn limit_below_chi_is_reported() {
    let cfg = OracleConfig::default();
    for seed in 0..40 {
        let d = gen_diagram(10, GenMode::UniformMatching, seed).unwrap();
        let chi = common::brute_chromatic(&common::adjacency(&d));
        if chi < 2 {
            continue;
        }
        let r = chromatic_number_exact(&d.graph(), chi - 1, &cfg).unwrap();
        assert_eq!(r, ChromaticNumber::AboveLimit { limit: chi - 1 });
        assert!(find_coloring(&d.graph(), chi - 1).is_none());
    }
}

#[test]
fn triangle_free_diagrams_take_five_colors() {
    for seed in 0..100 {
        let d = gen_diagram(14, GenMode::TriangleFree, seed).unwrap();
        let c = find_coloring(&d.graph(), 5).expect("five colors suffice");
        assert!(common::proper_by_geometry(&d, &d.chord_ids().collect::<Vec<_>>(), &c));
    }
}
