use std::collections::{BTreeMap, VecDeque};

use crate::chord::{interleave, ChordDiagram, ChordId};
use crate::error::{Error, Result};

/// Undirected simple graph on a set of chord ids.
///
/// Vertices are kept in ascending id order; algorithms work on local indices
/// `0 .. len()` into that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    ids: Vec<ChordId>,
    index: BTreeMap<ChordId, usize>,
    matrix: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
}

impl IntersectionGraph {
    /// Graph of the chords `ids` of `diagram`, with an edge per crossing pair.
    pub(crate) fn from_diagram<I>(diagram: &ChordDiagram, ids: I) -> Self
    where
        I: IntoIterator<Item = ChordId>,
    {
        let mut ids: Vec<ChordId> = ids.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        let ends: Vec<_> = ids.iter().map(|&id| diagram.ends(id)).collect();
        let n = ids.len();
        let mut g = IntersectionGraph::empty_on(ids);
        for i in 0..n {
            for j in i + 1..n {
                if interleave(ends[i], ends[j]) {
                    g.link(i, j);
                }
            }
        }
        g
    }

    /// Arbitrary graph from an explicit edge list. Used for oracle testing on
    /// graphs that need not come from a chord diagram.
    pub fn from_edges<I, E>(ids: I, edges: E) -> Result<Self>
    where
        I: IntoIterator<Item = ChordId>,
        E: IntoIterator<Item = (ChordId, ChordId)>,
    {
        let mut ids: Vec<ChordId> = ids.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        let mut g = IntersectionGraph::empty_on(ids);
        for (a, b) in edges {
            let ia = g.local(a)?;
            let ib = g.local(b)?;
            if ia == ib {
                return Err(Error::InvalidDiagram(format!("self-loop on {a}")));
            }
            if !g.matrix[ia * g.len() + ib] {
                g.link(ia, ib);
            }
        }
        Ok(g)
    }

    fn empty_on(ids: Vec<ChordId>) -> Self {
        let n = ids.len();
        let index = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        IntersectionGraph {
            ids,
            index,
            matrix: vec![false; n * n],
            neighbors: vec![Vec::new(); n],
        }
    }

    fn link(&mut self, i: usize, j: usize) {
        let n = self.len();
        self.matrix[i * n + j] = true;
        self.matrix[j * n + i] = true;
        self.neighbors[i].push(j);
        self.neighbors[j].push(i);
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Vertex ids, ascending.
    pub fn vertices(&self) -> &[ChordId] {
        &self.ids
    }

    pub fn contains(&self, id: ChordId) -> bool {
        self.index.contains_key(&id)
    }

    pub fn local(&self, id: ChordId) -> Result<usize> {
        self.index.get(&id).copied().ok_or(Error::UnknownChord(id))
    }

    pub fn id(&self, local: usize) -> ChordId {
        self.ids[local]
    }

    #[inline]
    pub fn adjacent_local(&self, i: usize, j: usize) -> bool {
        self.matrix[i * self.ids.len() + j]
    }

    /// Local neighbor indices of local vertex `i`, ascending.
    pub fn neighbors_local(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn adjacent(&self, a: ChordId, b: ChordId) -> bool {
        match (self.index.get(&a), self.index.get(&b)) {
            (Some(&i), Some(&j)) => self.adjacent_local(i, j),
            _ => false,
        }
    }

    pub fn neighbors(&self, id: ChordId) -> Result<impl Iterator<Item = ChordId> + '_> {
        let i = self.local(id)?;
        Ok(self.neighbors[i].iter().map(|&j| self.ids[j]))
    }

    pub fn degree(&self, id: ChordId) -> Result<usize> {
        Ok(self.neighbors[self.local(id)?].len())
    }

    /// Every edge once, as `(smaller id, larger id)`, in lexicographic order.
    pub fn edges(&self) -> Vec<(ChordId, ChordId)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adjacent_local(i, j) {
                    out.push((self.ids[i], self.ids[j]));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Subgraph induced on `keep`; ids outside the graph are an error.
    pub fn induced<I>(&self, keep: I) -> Result<IntersectionGraph>
    where
        I: IntoIterator<Item = ChordId>,
    {
        let mut ids: Vec<ChordId> = keep.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        let locals = ids.iter().map(|&id| self.local(id)).collect::<Result<Vec<_>>>()?;
        let mut g = IntersectionGraph::empty_on(ids);
        for a in 0..locals.len() {
            for b in a + 1..locals.len() {
                if self.adjacent_local(locals[a], locals[b]) {
                    g.link(a, b);
                }
            }
        }
        Ok(g)
    }
}

/// Connected components, each sorted ascending, ordered by smallest member.
pub fn connected_components(graph: &IntersectionGraph) -> Vec<Vec<ChordId>> {
    let n = graph.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(graph.id(v));
            for &w in graph.neighbors_local(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_crossing_chords_give_k4() {
        let d = ChordDiagram::new(vec![(0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        let g = d.graph();
        assert_eq!(g.len(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(connected_components(&g).len(), 1);
    }

    #[test]
    fn single_chord_is_isolated() {
        let d = ChordDiagram::new(vec![(0, 1)]).unwrap();
        let g = d.graph();
        assert_eq!(g.len(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn disjoint_chords_are_separate_components() {
        let d = ChordDiagram::new(vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            connected_components(&d.graph()),
            vec![vec![ChordId(0)], vec![ChordId(1)]]
        );
    }

    #[test]
    fn explicit_edges() {
        let ids = (0..3).map(ChordId);
        let g = IntersectionGraph::from_edges(ids, [(ChordId(0), ChordId(2))]).unwrap();
        assert!(g.adjacent(ChordId(2), ChordId(0)));
        assert!(!g.adjacent(ChordId(0), ChordId(1)));
        assert!(IntersectionGraph::from_edges([ChordId(0)], [(ChordId(0), ChordId(0))]).is_err());
    }
}
