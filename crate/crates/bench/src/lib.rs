//! Shared workloads for the benchmarks.

use chordcolor::{gen_diagram, ChordDiagram, GenMode};

/// `count` K4-free diagrams with `n` chords, seeds `0 .. count`.
pub fn k4_free_corpus(n: usize, count: u64) -> Vec<ChordDiagram> {
    (0..count)
        .map(|seed| gen_diagram(n, GenMode::K4Free, seed).expect("generator succeeds"))
        .collect()
}
