//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use chordcolor::{ChordDiagram, ChordId, Coloring};

/// Crossing test by actual geometry: slots evenly spaced on the unit circle,
/// chords as straight segments.
pub fn segments_cross(d: &ChordDiagram, i: ChordId, j: ChordId) -> bool {
    let total = d.slot_count() as f64;
    let pt = |s: usize| {
        let t = std::f64::consts::TAU * s as f64 / total;
        (t.cos(), t.sin())
    };
    let (a, b) = d.endpoints(i).unwrap();
    let (c, e) = d.endpoints(j).unwrap();
    let (p1, p2, p3, p4) = (pt(a), pt(b), pt(c), pt(e));
    let orient = |p: (f64, f64), q: (f64, f64), r: (f64, f64)| {
        (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)
    };
    let d1 = orient(p3, p4, p1);
    let d2 = orient(p3, p4, p2);
    let d3 = orient(p1, p2, p3);
    let d4 = orient(p1, p2, p4);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// Adjacency matrix by the geometric oracle.
pub fn adjacency(d: &ChordDiagram) -> Vec<Vec<bool>> {
    let n = d.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i != j && segments_cross(d, ChordId(i), ChordId(j)))
                .collect()
        })
        .collect()
}

/// Largest clique of size at most 4 by enumerating all subsets up to 4.
pub fn max_clique_up_to_4(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    let mut best = n.min(1);
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a][b] {
                continue;
            }
            best = best.max(2);
            for c in b + 1..n {
                if !(adj[a][c] && adj[b][c]) {
                    continue;
                }
                best = best.max(3);
                for e in c + 1..n {
                    if adj[a][e] && adj[b][e] && adj[c][e] {
                        return 4;
                    }
                }
            }
        }
    }
    best
}

pub fn triangles(adj: &[Vec<bool>]) -> BTreeSet<[usize; 3]> {
    let n = adj.len();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if adj[a][b] && adj[a][c] && adj[b][c] {
                    out.insert([a, b, c]);
                }
            }
        }
    }
    out
}

/// Chromatic number by trying k = 1, 2, ... with plain index-order
/// backtracking.
pub fn brute_chromatic(adj: &[Vec<bool>]) -> usize {
    fn fits(adj: &[Vec<bool>], k: usize, v: usize, col: &mut Vec<usize>) -> bool {
        if v == adj.len() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !adj[u][v] || col[u] != c) {
                col.push(c);
                if fits(adj, k, v + 1, col) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    if adj.is_empty() {
        return 0;
    }
    (1..).find(|&k| fits(adj, k, 0, &mut Vec::new())).unwrap()
}

/// Every crossing pair gets distinct colors, by the geometric oracle.
pub fn proper_by_geometry(d: &ChordDiagram, ids: &[ChordId], c: &Coloring) -> bool {
    ids.iter().enumerate().all(|(x, &i)| {
        ids[x + 1..]
            .iter()
            .all(|&j| !segments_cross(d, i, j) || c.get(i) != c.get(j))
    })
}

/// Connected components via union-find over the geometric adjacency.
pub fn components_union_find(adj: &[Vec<bool>]) -> BTreeSet<BTreeSet<usize>> {
    let n = adj.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for a in 0..n {
        for b in a + 1..n {
            if adj[a][b] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    let mut groups = std::collections::BTreeMap::<usize, BTreeSet<usize>>::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().insert(v);
    }
    groups.into_values().collect()
}
