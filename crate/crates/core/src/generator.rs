//! Seeded instance generators.
//!
//! Diagrams are grown as label sequences read around the circle. Restricted
//! modes insert one chord at a time and reject placements that would break
//! the mode's contract; every emitted instance is re-checked with the oracle
//! before it is returned.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chord::{Arc, ChordDiagram, ChordId};
use crate::error::{Error, Result};
use crate::graph::IntersectionGraph;
use crate::intervals::check_one_inner_per_triangle;
use crate::oracle::clique_number;

/// Below this size the K4-free and triangle-free modes first try plain
/// rejection of uniform matchings.
const SMALL_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GenMode {
    UniformMatching,
    K4Free,
    TriangleFree,
    /// Fan chords with one end on an arc plus inner chords crossing them, no
    /// triangle holding two inner chords.
    IntervalShape,
    /// Fan chords with at most one end on an arc plus inner chords crossing
    /// them, no K4 overall.
    UntangleShape,
}

impl GenMode {
    pub const ALL: [GenMode; 5] = [
        GenMode::UniformMatching,
        GenMode::K4Free,
        GenMode::TriangleFree,
        GenMode::IntervalShape,
        GenMode::UntangleShape,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GenMode::UniformMatching => "uniform-matching",
            GenMode::K4Free => "k4-free",
            GenMode::TriangleFree => "triangle-free",
            GenMode::IntervalShape => "lemma1-shape",
            GenMode::UntangleShape => "lemma2-shape",
        }
    }
}

impl std::str::FromStr for GenMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        GenMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mode {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenSpec {
    pub n: usize,
    pub mode: GenMode,
    pub seed: u64,
    /// Rejection budget, per chord for incremental modes and overall for
    /// whole-matching rejection.
    pub max_attempts: usize,
}

impl GenSpec {
    pub fn new(n: usize, mode: GenMode, seed: u64) -> Self {
        GenSpec {
            n,
            mode,
            seed,
            max_attempts: 10_000,
        }
    }
}

/// Arc, fan and inner chords of a shaped instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Shape {
    pub arc: Arc,
    pub fan: Vec<ChordId>,
    pub inner: Vec<ChordId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub diagram: ChordDiagram,
    pub shape: Option<Shape>,
}

pub fn generate(spec: &GenSpec) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let instance = match spec.mode {
        GenMode::UniformMatching => Instance {
            diagram: uniform_matching(spec.n, &mut rng),
            shape: None,
        },
        GenMode::K4Free => Instance {
            diagram: clique_bounded(spec, 4, &mut rng)?,
            shape: None,
        },
        GenMode::TriangleFree => Instance {
            diagram: clique_bounded(spec, 3, &mut rng)?,
            shape: None,
        },
        GenMode::IntervalShape | GenMode::UntangleShape => shaped(spec, &mut rng)?,
    };
    verify(spec.mode, &instance)?;
    Ok(instance)
}

/// Shorthand for [`generate`] with default attempts, returning the diagram.
pub fn gen_diagram(n: usize, mode: GenMode, seed: u64) -> Result<ChordDiagram> {
    generate(&GenSpec::new(n, mode, seed)).map(|i| i.diagram)
}

fn uniform_matching(n: usize, rng: &mut ChaCha8Rng) -> ChordDiagram {
    let mut slots: Vec<usize> = (0..2 * n).collect();
    slots.shuffle(rng);
    let pairs = slots.chunks(2).map(|p| (p[0], p[1])).collect();
    ChordDiagram::new(pairs).expect("shuffled slots form a perfect pairing")
}

/// Diagram with clique number below `bound`.
fn clique_bounded(spec: &GenSpec, bound: usize, rng: &mut ChaCha8Rng) -> Result<ChordDiagram> {
    if spec.n <= SMALL_N {
        for _ in 0..spec.max_attempts {
            let d = uniform_matching(spec.n, rng);
            if clique_number(&d.graph(), bound).omega < bound {
                return Ok(d);
            }
        }
    }
    let mut b = Builder::default();
    for label in 0..spec.n {
        let ok = b.try_insert(label, spec.max_attempts, rng, |b, rng| {
            let len = b.seq.len();
            let i = rng.random_range(0..=len);
            let j = rng.random_range(0..=len);
            (i.min(j), i.max(j), 0)
        }, |b, nbrs| b.clique_free_with(nbrs, bound));
        if !ok {
            return Err(Error::Generation {
                attempts: spec.max_attempts,
                detail: format!("could not place chord {label} without a {bound}-clique"),
            });
        }
    }
    b.diagram()
}

fn shaped(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Result<Instance> {
    let untangle = spec.mode == GenMode::UntangleShape;
    if spec.n == 0 {
        return Ok(Instance {
            diagram: ChordDiagram::empty(),
            shape: Some(Shape {
                arc: Arc::full(0),
                fan: vec![],
                inner: vec![],
            }),
        });
    }
    let fans = (spec.n / 3).max(1);
    let off_fans = if untangle { rng.random_range(0..=fans / 3) } else { 0 };
    let on_fans = fans - off_fans;
    let fail = |label: usize, what: &str| Error::Generation {
        attempts: spec.max_attempts,
        detail: format!("could not place {what} chord {label}"),
    };

    let mut b = Builder::default();
    for label in 0..on_fans {
        let ok = b.try_insert(label, spec.max_attempts, rng, |b, rng| {
            let i = rng.random_range(0..=b.arc_len);
            let j = rng.random_range(b.arc_len..=b.seq.len());
            (i, j, 1)
        }, |b, nbrs| !untangle || b.clique_free_with(nbrs, 4));
        if !ok {
            return Err(fail(label, "fan"));
        }
    }
    for label in on_fans..fans {
        let ok = b.try_insert(label, spec.max_attempts, rng, |b, rng| {
            let i = rng.random_range(b.arc_len..=b.seq.len());
            let j = rng.random_range(b.arc_len..=b.seq.len());
            (i.min(j), i.max(j), 0)
        }, |b, nbrs| b.clique_free_with(nbrs, 4));
        if !ok {
            return Err(fail(label, "off-arc fan"));
        }
    }
    for label in fans..spec.n {
        let ok = b.try_insert(label, spec.max_attempts, rng, |b, rng| {
            let len = b.arc_len;
            let i = rng.random_range(0..=len);
            // half the proposals are short chords, which almost always fit
            let j = if rng.random_bool(0.5) {
                rng.random_range(i..=len.min(i + 3))
            } else {
                rng.random_range(i..=len)
            };
            (i, j, 2)
        }, |b, nbrs| {
            nbrs.iter().any(|&x| x < fans)
                && if untangle {
                    b.clique_free_with(nbrs, 4)
                } else {
                    // no inner neighbor may share a neighbor with the new chord
                    nbrs.iter()
                        .filter(|&&x| x >= fans)
                        .all(|&x| nbrs.iter().all(|&y| !b.adj[x][y]))
                }
        });
        if !ok {
            return Err(fail(label, "inner"));
        }
    }

    let total = b.seq.len();
    let arc_len = b.arc_len;
    let shift = rng.random_range(0..total);
    b.seq.rotate_left(shift);
    let arc = Arc::with_len((total - shift) % total, arc_len, total)?;
    Ok(Instance {
        diagram: b.diagram()?,
        shape: Some(Shape {
            arc,
            fan: (0..fans).map(ChordId).collect(),
            inner: (fans..spec.n).map(ChordId).collect(),
        }),
    })
}

/// Growing label sequence with the crossing relation between labels. The
/// first `arc_len` entries are the arc of shaped instances.
#[derive(Default)]
struct Builder {
    seq: Vec<usize>,
    adj: Vec<Vec<bool>>,
    arc_len: usize,
}

impl Builder {
    /// Labels crossing a chord inserted before indices `i <= j`.
    ///
    /// Proposals are `(i, j, arc_ends)`: the new chord lands at final indices
    /// `i` and `j + 1`, and `arc_ends` of them (the leading ones) join the
    /// arc prefix.
    fn crossings(&self, i: usize, j: usize) -> Vec<usize> {
        let mut count = vec![0u8; self.adj.len()];
        for &x in &self.seq[i..j] {
            count[x] += 1;
        }
        (0..self.adj.len()).filter(|&x| count[x] == 1).collect()
    }

    /// No clique of size `bound` through a new chord with neighbors `nbrs`.
    fn clique_free_with(&self, nbrs: &[usize], bound: usize) -> bool {
        let ids = nbrs.iter().map(|&x| ChordId(x));
        let edges = nbrs.iter().enumerate().flat_map(|(a, &x)| {
            nbrs[a + 1..]
                .iter()
                .filter(move |&&y| self.adj[x][y])
                .map(move |&y| (ChordId(x), ChordId(y)))
        });
        let g = IntersectionGraph::from_edges(ids, edges).expect("labels are distinct");
        clique_number(&g, bound - 1).omega < bound - 1
    }

    fn try_insert<P, A>(
        &mut self,
        label: usize,
        attempts: usize,
        rng: &mut ChaCha8Rng,
        mut propose: P,
        accept: A,
    ) -> bool
    where
        P: FnMut(&Builder, &mut ChaCha8Rng) -> (usize, usize, usize),
        A: Fn(&Builder, &[usize]) -> bool,
    {
        debug_assert_eq!(label, self.adj.len());
        for _ in 0..attempts.max(1) {
            let (i, j, arc_ends) = propose(self, rng);
            let nbrs = self.crossings(i, j);
            if !accept(self, &nbrs) {
                continue;
            }
            for row in &mut self.adj {
                row.push(false);
            }
            self.adj.push(vec![false; label + 1]);
            for &x in &nbrs {
                self.adj[x][label] = true;
                self.adj[label][x] = true;
            }
            self.arc_len += arc_ends;
            self.seq.insert(j, label);
            self.seq.insert(i, label);
            return true;
        }
        false
    }

    fn diagram(&self) -> Result<ChordDiagram> {
        ChordDiagram::from_sequence(&self.seq)
    }
}

fn verify(mode: GenMode, instance: &Instance) -> Result<()> {
    let d = &instance.diagram;
    let broken = |what: String| Error::Generation {
        attempts: 0,
        detail: format!("{} instance failed its check: {what}", mode.name()),
    };
    match mode {
        GenMode::UniformMatching => Ok(()),
        GenMode::K4Free | GenMode::TriangleFree => {
            let bound = if mode == GenMode::K4Free { 4 } else { 3 };
            let r = clique_number(&d.graph(), bound);
            if r.omega >= bound {
                return Err(broken(format!("clique {:?}", r.witness)));
            }
            Ok(())
        }
        GenMode::IntervalShape | GenMode::UntangleShape => {
            let shape = instance.shape.as_ref().expect("shaped");
            if d.is_empty() {
                return Ok(());
            }
            let max_fan_ends = if mode == GenMode::IntervalShape { 1..=1 } else { 0..=1 };
            for &a in &shape.fan {
                let e = d.ends_on_arc(a, &shape.arc)?;
                if !max_fan_ends.contains(&e) {
                    return Err(broken(format!("fan chord {a} has {e} ends on the arc")));
                }
            }
            for &b in &shape.inner {
                if d.ends_on_arc(b, &shape.arc)? != 2 {
                    return Err(broken(format!("inner chord {b} leaves the arc")));
                }
                let mut crosses = false;
                for &a in &shape.fan {
                    crosses |= d.intersects(a, b)?;
                }
                if !crosses {
                    return Err(broken(format!("inner chord {b} crosses no fan chord")));
                }
            }
            if mode == GenMode::IntervalShape {
                check_one_inner_per_triangle(d, &shape.fan, &shape.inner, crate::error::Stage::Intervals)
                    .map_err(|e| broken(e.to_string()))
            } else {
                let r = clique_number(&d.graph(), 4);
                if r.omega >= 4 {
                    return Err(broken(format!("clique {:?}", r.witness)));
                }
                Ok(())
            }
        }
    }
}

/// Adds four pairwise crossing chords at seeded random positions. Returns the
/// new diagram and the ids of the planted chords.
pub fn plant_k4(diagram: &ChordDiagram, seed: u64) -> (ChordDiagram, [ChordId; 4]) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq = diagram.sequence();
    let n = diagram.len();
    let mut cuts: Vec<usize> = (0..8).map(|_| rng.random_range(0..=seq.len())).collect();
    cuts.sort_unstable();
    // insert from the back so earlier cut indices stay valid
    let labels = [n, n + 1, n + 2, n + 3, n, n + 1, n + 2, n + 3];
    for (&cut, &label) in cuts.iter().zip(&labels).rev() {
        seq.insert(cut, label);
    }
    let planted = ChordDiagram::from_sequence(&seq).expect("planted labels pair up");
    (planted, [ChordId(n), ChordId(n + 1), ChordId(n + 2), ChordId(n + 3)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_one_chord() {
        for mode in GenMode::ALL {
            let d = gen_diagram(0, mode, 7).unwrap();
            assert!(d.is_empty());
            let d = gen_diagram(1, mode, 7).unwrap();
            assert_eq!(d.len(), 1);
            if mode != GenMode::IntervalShape && mode != GenMode::UntangleShape {
                assert_eq!(d.pairs(), &[(0, 1)]);
            }
        }
    }

    #[test]
    fn same_seed_same_diagram() {
        for mode in GenMode::ALL {
            let a = generate(&GenSpec::new(12, mode, 99)).unwrap();
            let b = generate(&GenSpec::new(12, mode, 99)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn k4_free_has_no_k4() {
        for seed in 0..20 {
            let d = gen_diagram(20, GenMode::K4Free, seed).unwrap();
            assert_eq!(d.len(), 20);
            assert!(clique_number(&d.graph(), 4).omega <= 3);
        }
    }

    #[test]
    fn mode_names_parse() {
        for m in GenMode::ALL {
            assert_eq!(m.name().parse::<GenMode>().unwrap(), m);
        }
        assert!("nope".parse::<GenMode>().is_err());
    }

    #[test]
    fn planted_chords_form_k4() {
        let d = gen_diagram(10, GenMode::K4Free, 3).unwrap();
        let (p, ids) = plant_k4(&d, 11);
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                assert!(p.intersects(a, b).unwrap());
            }
        }
    }
}
