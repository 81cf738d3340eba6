//! Exact, slow ground truth: proper-coloring checks, clique number, exact
//! chromatic number and triangle enumeration.
//!
//! Everything here is written against [`IntersectionGraph`] alone and never
//! looks at chord geometry, so it can check the constructive pipeline
//! independently.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chord::ChordId;
use crate::error::{Error, Result};
use crate::graph::IntersectionGraph;

pub type Color = u32;

/// Exact search refuses graphs above this many vertices unless configured
/// otherwise.
pub const DEFAULT_MAX_EXACT_VERTICES: usize = 16;

/// Assignment of colors to chords.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Coloring {
    colors: BTreeMap<ChordId, Color>,
}

impl Coloring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, id: ChordId, color: Color) -> Option<Color> {
        self.colors.insert(id, color)
    }

    pub fn get(&self, id: ChordId) -> Option<Color> {
        self.colors.get(&id).copied()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn contains(&self, id: ChordId) -> bool {
        self.colors.contains_key(&id)
    }

    /// `(chord, color)` pairs in ascending chord order.
    pub fn iter(&self) -> impl Iterator<Item = (ChordId, Color)> + '_ {
        self.colors.iter().map(|(&k, &v)| (k, v))
    }

    pub fn ids(&self) -> impl Iterator<Item = ChordId> + '_ {
        self.colors.keys().copied()
    }

    /// Number of distinct colors.
    pub fn colors_used(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }

    pub fn max_color(&self) -> Option<Color> {
        self.colors.values().max().copied()
    }

    /// Restriction to the chords in `ids` that this coloring covers.
    pub fn restricted<'a, I>(&self, ids: I) -> Coloring
    where
        I: IntoIterator<Item = &'a ChordId>,
    {
        ids.into_iter()
            .filter_map(|&id| self.get(id).map(|c| (id, c)))
            .collect()
    }
}

impl FromIterator<(ChordId, Color)> for Coloring {
    fn from_iter<T: IntoIterator<Item = (ChordId, Color)>>(iter: T) -> Self {
        Coloring {
            colors: iter.into_iter().collect(),
        }
    }
}

impl Extend<(ChordId, Color)> for Coloring {
    fn extend<T: IntoIterator<Item = (ChordId, Color)>>(&mut self, iter: T) {
        self.colors.extend(iter)
    }
}

/// Outcome of [`is_proper`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Properness {
    Proper,
    /// First monochromatic edge in lexicographic order.
    Conflict(ChordId, ChordId),
}

impl Properness {
    pub fn is_proper(&self) -> bool {
        matches!(self, Properness::Proper)
    }
}

/// Checks that no edge of `graph` is monochromatic. The coloring must cover
/// every vertex; extra entries are ignored.
pub fn is_proper(graph: &IntersectionGraph, coloring: &Coloring) -> Result<Properness> {
    let colors = graph
        .vertices()
        .iter()
        .map(|&id| coloring.get(id).ok_or(Error::PartialColoring(id)))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..graph.len() {
        for &j in graph.neighbors_local(i) {
            if i < j && colors[i] == colors[j] {
                let (a, b) = (graph.id(i), graph.id(j));
                return Ok(Properness::Conflict(a.min(b), a.max(b)));
            }
        }
    }
    Ok(Properness::Proper)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueReport {
    pub omega: usize,
    /// Pairwise-adjacent chords, ascending, of size `omega`.
    pub witness: Vec<ChordId>,
}

/// Largest clique, stopping as soon as one of size `cap` is found.
///
/// `omega` is exact when the true clique number is below `cap`; otherwise it
/// equals `cap`.
pub fn clique_number(graph: &IntersectionGraph, cap: usize) -> CliqueReport {
    let cap = cap.max(1);
    let mut best = Vec::new();
    let mut current = Vec::new();
    let all: Vec<usize> = (0..graph.len()).collect();
    grow_clique(graph, &mut current, &all, &mut best, cap);
    let mut witness: Vec<ChordId> = best.iter().map(|&v| graph.id(v)).collect();
    witness.sort_unstable();
    CliqueReport {
        omega: witness.len(),
        witness,
    }
}

fn grow_clique(
    g: &IntersectionGraph,
    current: &mut Vec<usize>,
    candidates: &[usize],
    best: &mut Vec<usize>,
    cap: usize,
) {
    if current.len() > best.len() {
        best.clone_from(current);
    }
    for (idx, &v) in candidates.iter().enumerate() {
        if best.len() >= cap || current.len() + (candidates.len() - idx) <= best.len() {
            return;
        }
        let next: Vec<usize> = candidates[idx + 1..]
            .iter()
            .copied()
            .filter(|&w| g.adjacent_local(v, w))
            .collect();
        current.push(v);
        grow_clique(g, current, &next, best, cap);
        current.pop();
    }
}

/// All 3-cliques, each once as an ascending triple, in lexicographic order.
pub fn enumerate_triangles(graph: &IntersectionGraph) -> Vec<[ChordId; 3]> {
    let mut out = Vec::new();
    for i in 0..graph.len() {
        for &j in graph.neighbors_local(i).iter().filter(|&&j| j > i) {
            for &k in graph.neighbors_local(j).iter().filter(|&&k| k > j) {
                if graph.adjacent_local(i, k) {
                    out.push([graph.id(i), graph.id(j), graph.id(k)]);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest vertex count [`chromatic_number_exact`] accepts.
    pub max_vertices: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: DEFAULT_MAX_EXACT_VERTICES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ChromaticNumber {
    Exact { chi: usize, coloring: Coloring },
    AboveLimit { limit: usize },
}

impl ChromaticNumber {
    pub fn chi(&self) -> Option<usize> {
        match self {
            ChromaticNumber::Exact { chi, .. } => Some(*chi),
            ChromaticNumber::AboveLimit { .. } => None,
        }
    }
}

/// Exact chromatic number by branch and bound, if it is at most `limit`.
///
/// The clique number is the starting lower bound and a greedy saturation
/// coloring the starting upper bound; each `k` in between is decided by
/// backtracking search.
pub fn chromatic_number_exact(
    graph: &IntersectionGraph,
    limit: usize,
    config: &OracleConfig,
) -> Result<ChromaticNumber> {
    if graph.len() > config.max_vertices {
        return Err(Error::SizeCap {
            vertices: graph.len(),
            cap: config.max_vertices,
        });
    }
    if graph.is_empty() {
        return Ok(ChromaticNumber::Exact {
            chi: 0,
            coloring: Coloring::new(),
        });
    }
    let lower = clique_number(graph, graph.len()).omega;
    if lower > limit {
        return Ok(ChromaticNumber::AboveLimit { limit });
    }
    let greedy = greedy_saturation(graph);
    let upper = greedy.colors_used();
    for k in lower..upper.min(limit + 1) {
        if let Some(coloring) = find_coloring(graph, k) {
            return Ok(ChromaticNumber::Exact { chi: k, coloring });
        }
    }
    if upper <= limit {
        Ok(ChromaticNumber::Exact {
            chi: upper,
            coloring: greedy,
        })
    } else {
        Ok(ChromaticNumber::AboveLimit { limit })
    }
}

/// Greedy coloring in saturation order (most distinct neighbor colors first).
pub fn greedy_saturation(graph: &IntersectionGraph) -> Coloring {
    let n = graph.len();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut seen: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v].is_none())
            .max_by_key(|&v| (seen[v].len(), graph.neighbors_local(v).len(), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = (0..).find(|c| !seen[v].contains(c)).unwrap();
        colors[v] = Some(c);
        for &w in graph.neighbors_local(v) {
            seen[w].insert(c);
        }
    }
    colors
        .into_iter()
        .enumerate()
        .map(|(v, c)| (graph.id(v), c.unwrap() as Color))
        .collect()
}

/// A proper coloring with colors `0 .. k`, if one exists. No size cap: the
/// caller is responsible for keeping the instance small enough.
///
/// # Panics
///
/// If `k > 64`.
pub fn find_coloring(graph: &IntersectionGraph, k: usize) -> Option<Coloring> {
    assert!(k <= 64, "at most 64 colors are supported");
    let n = graph.len();
    if n == 0 {
        return Some(Coloring::new());
    }
    if k == 0 {
        return None;
    }
    let mut search = Search {
        g: graph,
        k,
        colors: vec![None; n],
        counts: vec![[0u16; 64]; n],
        masks: vec![0u64; n],
    };
    if search.solve(0, 0) {
        Some(
            search
                .colors
                .iter()
                .enumerate()
                .map(|(v, c)| (graph.id(v), c.unwrap() as Color))
                .collect(),
        )
    } else {
        None
    }
}

struct Search<'g> {
    g: &'g IntersectionGraph,
    k: usize,
    colors: Vec<Option<usize>>,
    // per vertex: how many neighbors hold each color
    counts: Vec<[u16; 64]>,
    masks: Vec<u64>,
}

impl Search<'_> {
    fn pick(&self) -> Option<usize> {
        (0..self.g.len())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| {
                let free_deg = self
                    .g
                    .neighbors_local(v)
                    .iter()
                    .filter(|&&w| self.colors[w].is_none())
                    .count();
                (self.masks[v].count_ones(), free_deg, std::cmp::Reverse(v))
            })
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
        for &w in self.g.neighbors_local(v) {
            self.counts[w][c] += 1;
            self.masks[w] |= 1 << c;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = None;
        for &w in self.g.neighbors_local(v) {
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.masks[w] &= !(1 << c);
            }
        }
    }

    fn solve(&mut self, colored: usize, used: usize) -> bool {
        if colored == self.g.len() {
            return true;
        }
        let v = self.pick().expect("uncolored vertex");
        // new colors are interchangeable, so only try the first unused one
        let top = (used + 1).min(self.k);
        for c in 0..top {
            if self.masks[v] & (1 << c) != 0 {
                continue;
            }
            self.assign(v, c);
            if self.solve(colored + 1, used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::ChordDiagram;

    fn k4() -> IntersectionGraph {
        ChordDiagram::new(vec![(0, 4), (1, 5), (2, 6), (3, 7)]).unwrap().graph()
    }

    #[test]
    fn proper_checks() {
        let g = ChordDiagram::new(vec![(0, 2), (1, 3)]).unwrap().graph();
        let distinct: Coloring = [(ChordId(0), 0), (ChordId(1), 1)].into_iter().collect();
        assert!(is_proper(&g, &distinct).unwrap().is_proper());
        let same: Coloring = [(ChordId(0), 4), (ChordId(1), 4)].into_iter().collect();
        assert_eq!(
            is_proper(&g, &same).unwrap(),
            Properness::Conflict(ChordId(0), ChordId(1))
        );
        let partial: Coloring = [(ChordId(0), 0)].into_iter().collect();
        assert!(matches!(
            is_proper(&g, &partial),
            Err(Error::PartialColoring(ChordId(1)))
        ));
    }

    #[test]
    fn clique_of_k4_and_matching() {
        let r = clique_number(&k4(), 4);
        assert_eq!(r.omega, 4);
        assert_eq!(r.witness.len(), 4);
        let m = ChordDiagram::new(vec![(0, 1), (2, 3), (4, 5)]).unwrap().graph();
        assert_eq!(clique_number(&m, 4).omega, 1);
        // cap stops the search early
        assert_eq!(clique_number(&k4(), 2).omega, 2);
        assert_eq!(clique_number(&IntersectionGraph::from_edges([], []).unwrap(), 4).omega, 0);
    }

    #[test]
    fn chromatic_small_cases() {
        let cfg = OracleConfig::default();
        let empty = IntersectionGraph::from_edges((0..5).map(ChordId), []).unwrap();
        assert_eq!(chromatic_number_exact(&empty, 30, &cfg).unwrap().chi(), Some(1));
        let r = chromatic_number_exact(&k4(), 30, &cfg).unwrap();
        assert_eq!(r.chi(), Some(4));
        if let ChromaticNumber::Exact { coloring, .. } = r {
            assert!(is_proper(&k4(), &coloring).unwrap().is_proper());
        }
        assert_eq!(
            chromatic_number_exact(&k4(), 3, &cfg).unwrap(),
            ChromaticNumber::AboveLimit { limit: 3 }
        );
    }

    #[test]
    fn five_cycle_needs_three_colors() {
        let ids = (0..5).map(ChordId);
        let edges = (0..5).map(|i| (ChordId(i), ChordId((i + 1) % 5)));
        let c5 = IntersectionGraph::from_edges(ids, edges).unwrap();
        let r = chromatic_number_exact(&c5, 10, &OracleConfig::default()).unwrap();
        assert_eq!(r.chi(), Some(3));
        assert!(find_coloring(&c5, 2).is_none());
    }

    #[test]
    fn size_cap_is_enforced() {
        let g = IntersectionGraph::from_edges((0..17).map(ChordId), []).unwrap();
        assert!(matches!(
            chromatic_number_exact(&g, 30, &OracleConfig::default()),
            Err(Error::SizeCap { vertices: 17, cap: 16 })
        ));
        let wide = OracleConfig { max_vertices: 20 };
        assert_eq!(chromatic_number_exact(&g, 30, &wide).unwrap().chi(), Some(1));
    }

    #[test]
    fn triangles() {
        let t = ChordDiagram::new(vec![(0, 3), (1, 4), (2, 5)]).unwrap().graph();
        assert_eq!(
            enumerate_triangles(&t),
            vec![[ChordId(0), ChordId(1), ChordId(2)]]
        );
        let path = ChordDiagram::new(vec![(0, 2), (1, 4), (3, 5)]).unwrap().graph();
        assert!(enumerate_triangles(&path).is_empty());
        assert_eq!(enumerate_triangles(&k4()).len(), 4);
    }
}
