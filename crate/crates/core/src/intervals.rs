//! Three-coloring of chords that lie inside an arc and cross a fan of chords
//! leaving it.
//!
//! The fan chords `A` each have one endpoint on the arc; numbering them by
//! that endpoint, every inner chord `b` becomes the integer interval
//! `(first crossed index - 1, last crossed index)`. Crossing inner chords give
//! touching intervals, and touching intervals are colored with three colors
//! by a left-endpoint scan.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chord::{Arc, ChordDiagram, ChordId, Slot};
use crate::context::Context;
use crate::error::{Error, Result, Stage};
use crate::oracle::{enumerate_triangles, Color, Coloring};

/// A fan chord together with where its on-arc endpoint sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumeratedChord {
    pub chord: ChordId,
    pub slot: Slot,
    /// Offset of `slot` from the start of the arc.
    pub position: usize,
}

/// Fan chords numbered `1 ..= k` in the order their endpoints appear on the
/// arc. Index 0 stands for the start of the arc and `k + 1` for its end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcEnumeration {
    arc: Arc,
    entries: Vec<EnumeratedChord>,
}

impl ArcEnumeration {
    pub(crate) fn build(
        diagram: &ChordDiagram,
        chords: &[ChordId],
        arc: &Arc,
        stage: Stage,
    ) -> Result<Self> {
        diagram.check_arc(arc)?;
        let mut entries = Vec::with_capacity(chords.len());
        for &chord in chords {
            let (a, b) = diagram.endpoints(chord)?;
            let on = [a, b]
                .into_iter()
                .filter_map(|s| arc.position(s).map(|p| (s, p)))
                .collect::<Vec<_>>();
            match on.as_slice() {
                &[(slot, position)] => entries.push(EnumeratedChord {
                    chord,
                    slot,
                    position,
                }),
                _ => {
                    return Err(Error::precondition(
                        stage,
                        format!(
                            "fan chord {chord} has {} ends on arc {arc}, expected exactly one",
                            on.len()
                        ),
                    ))
                }
            }
        }
        entries.sort_by_key(|e| e.position);
        Ok(ArcEnumeration { arc: *arc, entries })
    }

    pub fn arc(&self) -> &Arc {
        &self.arc
    }

    /// Number of enumerated chords `k`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in arc order; entry `i` carries index `i + 1`.
    pub fn entries(&self) -> &[EnumeratedChord] {
        &self.entries
    }

    pub fn chords(&self) -> Vec<ChordId> {
        self.entries.iter().map(|e| e.chord).collect()
    }

    /// Number of fan endpoints strictly before arc offset `position`; this is
    /// also the index of the gap containing `position`.
    pub fn count_before(&self, position: usize) -> usize {
        self.entries.partition_point(|e| e.position < position)
    }

    /// Number of gaps, `k + 1`.
    pub fn gap_count(&self) -> usize {
        self.entries.len() + 1
    }

    /// The open run of slots between the endpoints of indices `j` and `j + 1`.
    pub fn gap_arc(&self, j: usize) -> Arc {
        assert!(j < self.gap_count(), "gap {j} out of range");
        let lo = j.checked_sub(1).map(|i| self.entries[i].position);
        let hi = self.entries.get(j).map_or(self.arc.len(), |e| e.position);
        self.arc.between(lo, hi)
    }
}

/// Orders `chords` along `arc`; each must have exactly one endpoint on it.
pub fn enumerate_arc(diagram: &ChordDiagram, chords: &[ChordId], arc: &Arc) -> Result<ArcEnumeration> {
    ArcEnumeration::build(diagram, chords, arc, Stage::Intervals)
}

/// Integer interval `(left, right)` with `left < right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Interval {
    pub left: usize,
    pub right: usize,
}

impl Interval {
    pub fn new(left: usize, right: usize) -> Self {
        Interval { left, right }
    }

    /// One interval's left end is the other's right end.
    pub fn touches(&self, other: &Interval) -> bool {
        self.left == other.right || self.right == other.left
    }

    /// `self.left < other.left < self.right < other.right` or the mirror case.
    pub fn crosses(&self, other: &Interval) -> bool {
        let one = |x: &Interval, y: &Interval| x.left < y.left && y.left < x.right && x.right < y.right;
        one(self, other) || one(other, self)
    }
}

/// Intervals of the inner chords, with equal intervals merged.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IntervalSystem {
    per_chord: BTreeMap<ChordId, Interval>,
    groups: BTreeMap<Interval, Vec<ChordId>>,
}

impl IntervalSystem {
    /// System from explicit intervals. Rejects `left >= right` and properly
    /// crossing pairs.
    pub fn from_intervals<I>(intervals: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ChordId, Interval)>,
    {
        let mut sys = IntervalSystem::default();
        for (id, iv) in intervals {
            if iv.left >= iv.right {
                return Err(Error::invariant(
                    Stage::Intervals,
                    format!("interval ({}, {}) of chord {id} is empty", iv.left, iv.right),
                ));
            }
            sys.per_chord.insert(id, iv);
            sys.groups.entry(iv).or_default().push(id);
        }
        sys.check_non_crossing()?;
        Ok(sys)
    }

    fn check_non_crossing(&self) -> Result<()> {
        let distinct: Vec<&Interval> = self.groups.keys().collect();
        for (i, x) in distinct.iter().enumerate() {
            for y in &distinct[i + 1..] {
                if x.crosses(y) {
                    return Err(Error::invariant(
                        Stage::Intervals,
                        format!(
                            "intervals ({}, {}) and ({}, {}) cross; some triangle holds two inner chords",
                            x.left, x.right, y.left, y.right
                        ),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.per_chord.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_chord.is_empty()
    }

    pub fn interval(&self, id: ChordId) -> Option<Interval> {
        self.per_chord.get(&id).copied()
    }

    /// Distinct intervals with the chords sharing each, ascending.
    pub fn groups(&self) -> impl Iterator<Item = (&Interval, &[ChordId])> {
        self.groups.iter().map(|(k, v)| (k, v.as_slice()))
    }

    pub fn distinct(&self) -> impl Iterator<Item = &Interval> {
        self.groups.keys()
    }
}

/// Maps every inner chord to `(min index - 1, max index)` over the fan chords
/// it crosses.
///
/// Besides non-crossing, checks that crossing inner chords get touching
/// intervals; chord properness of the scan coloring rests on that.
pub fn build_intervals(
    diagram: &ChordDiagram,
    fan: &ArcEnumeration,
    inner: &[ChordId],
) -> Result<IntervalSystem> {
    let arc = fan.arc();
    let mut intervals = Vec::with_capacity(inner.len());
    for &b in inner {
        let (s, t) = diagram.endpoints(b)?;
        if !(arc.contains(s) && arc.contains(t)) {
            return Err(Error::precondition(
                Stage::Intervals,
                format!("inner chord {b} does not have both ends on arc {arc}"),
            ));
        }
        let mut crossed = fan
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, e)| diagram.intersects(b, e.chord).unwrap_or(false))
            .map(|(i, _)| i + 1);
        let Some(first) = crossed.next() else {
            return Err(Error::precondition(
                Stage::Intervals,
                format!("inner chord {b} crosses no fan chord"),
            ));
        };
        let last = crossed.next_back().unwrap_or(first);
        intervals.push((b, Interval::new(first - 1, last)));
    }
    let sys = IntervalSystem::from_intervals(intervals)?;

    let all: Vec<(ChordId, Interval)> = sys.per_chord.iter().map(|(&k, &v)| (k, v)).collect();
    for (i, &(b, ib)) in all.iter().enumerate() {
        for &(c, ic) in &all[i + 1..] {
            if diagram.intersects(b, c)? && !ib.touches(&ic) {
                let why = if ib == ic { "share" } else { "do not touch" };
                return Err(Error::invariant(
                    Stage::Intervals,
                    format!(
                        "crossing inner chords {b} and {c} {why} intervals ({}, {}) / ({}, {})",
                        ib.left, ib.right, ic.left, ic.right
                    ),
                ));
            }
        }
    }
    Ok(sys)
}

/// Colors the distinct left endpoints with at most three colors so that
/// touching intervals differ; an interval takes its left end's color.
///
/// Scan order: the largest uncolored left end that is the right end of an
/// already colored interval, or failing that the smallest uncolored left end.
/// Each step takes the lowest color not forbidden.
pub fn color_interval_points(system: &IntervalSystem) -> Result<BTreeMap<usize, Color>> {
    let mut by_left: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    let mut by_right: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for iv in system.distinct() {
        by_left.entry(iv.left).or_default().insert(iv.right);
        by_right.entry(iv.right).or_default().insert(iv.left);
    }
    let mut uncolored: BTreeSet<usize> = by_left.keys().copied().collect();
    let mut colors: BTreeMap<usize, Color> = BTreeMap::new();

    while !uncolored.is_empty() {
        let reached = uncolored.iter().rev().copied().find(|l| {
            by_right
                .get(l)
                .is_some_and(|ps| ps.iter().any(|p| colors.contains_key(p)))
        });
        let point = reached.unwrap_or_else(|| *uncolored.first().expect("nonempty"));

        // partners to the right, already colored as left ends
        let right_colored: Vec<usize> = by_left[&point]
            .iter()
            .copied()
            .filter(|r| colors.contains_key(r))
            .collect();
        if right_colored.len() > 1 {
            return Err(Error::invariant(
                Stage::Intervals,
                format!(
                    "left end {point}: partners {right_colored:?} are all colored already"
                ),
            ));
        }
        // colored intervals ending at this point
        let left_colored: Vec<usize> = by_right
            .get(&point)
            .into_iter()
            .flatten()
            .copied()
            .filter(|p| colors.contains_key(p))
            .collect();
        if left_colored.len() > 1 {
            return Err(Error::invariant(
                Stage::Intervals,
                format!(
                    "left end {point}: colored intervals from {left_colored:?} all end here"
                ),
            ));
        }
        let forbidden: BTreeSet<Color> = right_colored
            .iter()
            .chain(&left_colored)
            .map(|p| colors[p])
            .collect();
        let Some(color) = (0..3).find(|c| !forbidden.contains(c)) else {
            return Err(Error::invariant(
                Stage::Intervals,
                format!("left end {point}: all three colors forbidden"),
            ));
        };
        colors.insert(point, color);
        uncolored.remove(&point);
    }
    Ok(colors)
}

/// Chord coloring induced by [`color_interval_points`].
pub fn color_intervals(system: &IntervalSystem) -> Result<Coloring> {
    let points = color_interval_points(system)?;
    Ok(system
        .per_chord
        .iter()
        .map(|(&id, iv)| (id, points[&iv.left]))
        .collect())
}

/// Properly colors `inner` with colors `{0, 1, 2}`.
///
/// Hypotheses: every fan chord has exactly one end on `arc`; every inner chord
/// has both ends on `arc` and crosses a fan chord; no triangle of the
/// intersection graph of `fan ∪ inner` holds two inner chords. The last one is
/// only verified when the context asks for hypothesis checks; a violation
/// otherwise surfaces as a crossing-interval or scan failure.
pub fn three_color(
    ctx: &mut Context,
    diagram: &ChordDiagram,
    fan: &[ChordId],
    inner: &[ChordId],
    arc: &Arc,
) -> Result<Coloring> {
    let enumeration = enumerate_arc(diagram, fan, arc)?;
    if ctx.checking() {
        check_one_inner_per_triangle(diagram, fan, inner, Stage::Intervals)?;
    }
    let system = build_intervals(diagram, &enumeration, inner)?;
    let coloring = color_intervals(&system)?;
    ctx.stats.interval_calls += 1;
    ctx.stats.interval_max_colors = ctx.stats.interval_max_colors.max(coloring.colors_used());
    Ok(coloring)
}

pub(crate) fn check_one_inner_per_triangle(
    diagram: &ChordDiagram,
    fan: &[ChordId],
    inner: &[ChordId],
    stage: Stage,
) -> Result<()> {
    let inner_set: BTreeSet<ChordId> = inner.iter().copied().collect();
    let g = diagram.restrict(fan.iter().chain(inner).copied())?.graph();
    for t in enumerate_triangles(&g) {
        if t.iter().filter(|c| inner_set.contains(c)).count() >= 2 {
            return Err(Error::precondition(
                stage,
                format!(
                    "triangle {{{}, {}, {}}} holds more than one inner chord",
                    t[0], t[1], t[2]
                ),
            ));
        }
    }
    Ok(())
}
