//! Chord diagrams, arcs on the circle, and restricted views.
//!
//! Slots are abstract positions `0 .. 2n` in cyclic order. Two chords cross
//! exactly when their endpoints interleave, so no geometry is needed anywhere.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::IntersectionGraph;

/// A position on the circle.
pub type Slot = usize;

/// Stable identifier of a chord within its diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ChordId(pub usize);

impl fmt::Display for ChordId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for ChordId {
    fn from(value: usize) -> Self {
        ChordId(value)
    }
}

/// True when chords `(a0, a1)` and `(b0, b1)` interleave. Endpoints must be
/// pairwise distinct and each pair sorted.
#[inline]
pub(crate) fn interleave(a: (Slot, Slot), b: (Slot, Slot)) -> bool {
    let inside = |s: Slot| a.0 < s && s < a.1;
    inside(b.0) != inside(b.1)
}

/// A perfect pairing of `2n` circle slots into `n` chords.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    chords: Vec<(Slot, Slot)>,
    owner: Vec<ChordId>,
}

impl ChordDiagram {
    /// Builds a diagram from endpoint pairs; chord `i` gets `ChordId(i)`.
    ///
    /// The pairs must cover every slot in `0 .. 2 * pairs.len()` exactly once.
    pub fn new(pairs: Vec<(Slot, Slot)>) -> Result<Self> {
        let total = 2 * pairs.len();
        let mut owner = vec![None; total];
        let mut chords = Vec::with_capacity(pairs.len());
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if a == b {
                return Err(Error::InvalidDiagram(format!(
                    "chord {i} has both ends on slot {a}"
                )));
            }
            for s in [a, b] {
                if s >= total {
                    return Err(Error::InvalidDiagram(format!(
                        "chord {i} uses slot {s}, but only slots 0..{total} exist"
                    )));
                }
                if let Some(prev) = owner[s] {
                    return Err(Error::InvalidDiagram(format!(
                        "slot {s} is shared by chords {prev} and {i}"
                    )));
                }
                owner[s] = Some(ChordId(i));
            }
            chords.push((a.min(b), a.max(b)));
        }
        // every slot is taken: 2n distinct slots below 2n
        let owner = owner.into_iter().map(|o| o.expect("pairing is perfect")).collect();
        Ok(ChordDiagram { chords, owner })
    }

    /// Builds a diagram from the sequence of chord labels read around the
    /// circle. Each label in `0 .. n` must appear exactly twice; the label
    /// becomes the chord's id.
    pub fn from_sequence(labels: &[usize]) -> Result<Self> {
        if !labels.len().is_multiple_of(2) {
            return Err(Error::InvalidDiagram(format!(
                "sequence has odd length {}",
                labels.len()
            )));
        }
        let n = labels.len() / 2;
        let mut ends: Vec<Vec<Slot>> = vec![Vec::with_capacity(2); n];
        for (slot, &label) in labels.iter().enumerate() {
            let Some(e) = ends.get_mut(label) else {
                return Err(Error::InvalidDiagram(format!(
                    "label {label} at slot {slot} exceeds chord count {n}"
                )));
            };
            e.push(slot);
        }
        let mut pairs = Vec::with_capacity(n);
        for (label, e) in ends.into_iter().enumerate() {
            if e.len() != 2 {
                return Err(Error::InvalidDiagram(format!(
                    "label {label} appears {} times",
                    e.len()
                )));
            }
            pairs.push((e[0], e[1]));
        }
        ChordDiagram::new(pairs)
    }

    pub fn empty() -> Self {
        ChordDiagram {
            chords: Vec::new(),
            owner: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    pub fn slot_count(&self) -> usize {
        self.owner.len()
    }

    pub fn chord_ids(&self) -> impl Iterator<Item = ChordId> + '_ {
        (0..self.chords.len()).map(ChordId)
    }

    /// Endpoint pairs in id order, smaller slot first.
    pub fn pairs(&self) -> &[(Slot, Slot)] {
        &self.chords
    }

    pub fn contains(&self, id: ChordId) -> bool {
        id.0 < self.chords.len()
    }

    /// Endpoints of `id`, smaller slot first.
    pub fn endpoints(&self, id: ChordId) -> Result<(Slot, Slot)> {
        self.chords.get(id.0).copied().ok_or(Error::UnknownChord(id))
    }

    /// Chord occupying `slot`.
    pub fn owner(&self, slot: Slot) -> Result<ChordId> {
        self.owner.get(slot).copied().ok_or(Error::SlotOutOfRange(slot))
    }

    /// Chord labels read around the circle from slot 0.
    pub fn sequence(&self) -> Vec<usize> {
        self.owner.iter().map(|c| c.0).collect()
    }

    pub(crate) fn ends(&self, id: ChordId) -> (Slot, Slot) {
        self.chords[id.0]
    }

    /// Whether chords `i` and `j` have a common inner point. A chord does not
    /// cross itself.
    pub fn intersects(&self, i: ChordId, j: ChordId) -> Result<bool> {
        let a = self.endpoints(i)?;
        let b = self.endpoints(j)?;
        Ok(i != j && interleave(a, b))
    }

    /// How many endpoints of `id` lie on `arc` (0, 1 or 2).
    pub fn ends_on_arc(&self, id: ChordId, arc: &Arc) -> Result<u8> {
        let (a, b) = self.endpoints(id)?;
        self.check_arc(arc)?;
        Ok(arc.contains(a) as u8 + arc.contains(b) as u8)
    }

    pub(crate) fn check_arc(&self, arc: &Arc) -> Result<()> {
        if arc.total() != self.slot_count() {
            return Err(Error::InvalidArc(format!(
                "arc lives on a circle of {} slots, diagram has {}",
                arc.total(),
                self.slot_count()
            )));
        }
        Ok(())
    }

    /// A view exposing only the chords in `keep`. Slots and ids are untouched.
    pub fn restrict<I>(&self, keep: I) -> Result<DiagramView<'_>>
    where
        I: IntoIterator<Item = ChordId>,
    {
        let mut ids = BTreeSet::new();
        for id in keep {
            if !self.contains(id) {
                return Err(Error::UnknownChord(id));
            }
            ids.insert(id);
        }
        Ok(DiagramView {
            diagram: self,
            ids: ids.into_iter().collect(),
        })
    }

    /// Intersection graph over all chords.
    pub fn graph(&self) -> IntersectionGraph {
        IntersectionGraph::from_diagram(self, self.chord_ids())
    }

    /// Same chords with every slot relabelled `s -> (s + k) mod 2n`.
    pub fn rotated(&self, k: usize) -> ChordDiagram {
        let total = self.slot_count();
        if total == 0 {
            return self.clone();
        }
        let pairs = self
            .chords
            .iter()
            .map(|&(a, b)| ((a + k) % total, (b + k) % total))
            .collect();
        ChordDiagram::new(pairs).expect("rotation preserves the pairing")
    }
}

/// The chords of a diagram restricted to a subset of ids.
#[derive(Debug, Clone)]
pub struct DiagramView<'a> {
    diagram: &'a ChordDiagram,
    ids: Vec<ChordId>,
}

impl<'a> DiagramView<'a> {
    pub fn diagram(&self) -> &'a ChordDiagram {
        self.diagram
    }

    /// Kept ids, ascending.
    pub fn ids(&self) -> &[ChordId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: ChordId) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    pub fn intersects(&self, i: ChordId, j: ChordId) -> Result<bool> {
        for id in [i, j] {
            if !self.contains(id) {
                return Err(Error::UnknownChord(id));
            }
        }
        self.diagram.intersects(i, j)
    }

    pub fn graph(&self) -> IntersectionGraph {
        IntersectionGraph::from_diagram(self.diagram, self.ids.iter().copied())
    }
}

/// A contiguous cyclic run of slots, possibly empty.
///
/// Positions along the arc count from its first slot, so position order is the
/// order "from X to Y".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Arc {
    first: Slot,
    len: usize,
    total: usize,
}

impl Arc {
    /// The inclusive run `first ..= last` read cyclically on a circle of
    /// `total` slots.
    pub fn new(first: Slot, last: Slot, total: usize) -> Result<Self> {
        if first >= total || last >= total {
            return Err(Error::InvalidArc(format!(
                "slots {first}..={last} do not fit a circle of {total} slots"
            )));
        }
        let len = (last + total - first) % total + 1;
        Ok(Arc { first, len, total })
    }

    /// The run of `len` slots starting at `first`.
    pub fn with_len(first: Slot, len: usize, total: usize) -> Result<Self> {
        if len > total || (total > 0 && first >= total) || (total == 0 && first != 0) {
            return Err(Error::InvalidArc(format!(
                "{len} slots from {first} do not fit a circle of {total} slots"
            )));
        }
        Ok(Arc { first, len, total })
    }

    pub fn full(total: usize) -> Self {
        Arc {
            first: 0,
            len: total,
            total,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn first_slot(&self) -> Option<Slot> {
        (self.len > 0).then_some(self.first)
    }

    pub fn last_slot(&self) -> Option<Slot> {
        (self.len > 0).then(|| (self.first + self.len - 1) % self.total)
    }

    /// Offset of `slot` from the start of the arc, if it lies on the arc.
    pub fn position(&self, slot: Slot) -> Option<usize> {
        if slot >= self.total {
            return None;
        }
        let pos = (slot + self.total - self.first) % self.total;
        (pos < self.len).then_some(pos)
    }

    pub fn contains(&self, slot: Slot) -> bool {
        self.position(slot).is_some()
    }

    /// Slot at offset `pos`; `pos` must be below `len`.
    pub fn slot_at(&self, pos: usize) -> Slot {
        debug_assert!(pos < self.len);
        (self.first + pos) % self.total
    }

    /// Slots strictly between offsets `lo` and `hi`, where `lo` may be `None`
    /// for the point before the arc and `hi` may equal `len` for the point
    /// after it.
    pub(crate) fn between(&self, lo: Option<usize>, hi: usize) -> Arc {
        let start = lo.map_or(0, |p| p + 1);
        debug_assert!(start <= hi && hi <= self.len);
        Arc {
            first: if self.total == 0 { 0 } else { (self.first + start) % self.total },
            len: hi - start,
            total: self.total,
        }
    }

    pub fn slots(&self) -> impl Iterator<Item = Slot> + '_ {
        (0..self.len).map(move |p| self.slot_at(p))
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.last_slot() {
            Some(last) => write!(f, "{}..={} ({} slots)", self.first, last, self.len),
            None => write!(f, "empty arc at {}", self.first),
        }
    }
}
