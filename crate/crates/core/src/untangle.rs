//! Fifteen-coloring of chords inside an arc that each cross some chord
//! leaving it, assuming no four chords pairwise cross.
//!
//! The fan endpoints cut the arc into gaps. Inside each gap, moving all right
//! endpoints of inner chords ahead of all left endpoints removes every
//! crossing that lives in one gap and keeps all others; the result is
//! triangle-free and gets five colors. Each of those five classes is then
//! refined with the interval three-coloring, for `5 * 3` colors overall.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chord::{Arc, ChordDiagram, ChordId, Slot};
use crate::context::Context;
use crate::error::{Error, Result, Stage};
use crate::intervals::{self, ArcEnumeration};
use crate::oracle::{enumerate_triangles, find_coloring, Color, Coloring};

/// Colors available to the triangle-free subroutine.
pub const TRIANGLE_FREE_COLORS: usize = 5;
/// Colors used by one refined class.
pub const CLASS_COLORS: usize = 3;

/// Drops fan chords with no end on `arc` (they cannot cross anything inside
/// it) and orders the rest. A fan chord with both ends on the arc is an error.
pub fn prune_and_enumerate(
    diagram: &ChordDiagram,
    fan: &[ChordId],
    arc: &Arc,
) -> Result<ArcEnumeration> {
    prune_for(diagram, fan, arc, Stage::Untangle)
}

pub(crate) fn prune_for(
    diagram: &ChordDiagram,
    fan: &[ChordId],
    arc: &Arc,
    stage: Stage,
) -> Result<ArcEnumeration> {
    let mut kept = Vec::with_capacity(fan.len());
    for &a in fan {
        match diagram.ends_on_arc(a, arc)? {
            0 => {}
            1 => kept.push(a),
            _ => {
                return Err(Error::precondition(
                    stage,
                    format!("fan chord {a} has both ends on arc {arc}"),
                ))
            }
        }
    }
    ArcEnumeration::build(diagram, &kept, arc, stage)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Side {
    /// Endpoint nearer the start of the arc.
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GapEndpoint {
    pub chord: ChordId,
    pub slot: Slot,
    pub position: usize,
    pub side: Side,
}

/// Inner-chord endpoints grouped by the gap between consecutive fan
/// endpoints that contains them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapStructure {
    enumeration: ArcEnumeration,
    /// `gaps[j]` lists endpoints between fan indices `j` and `j + 1`, in arc
    /// order.
    gaps: Vec<Vec<GapEndpoint>>,
    /// chord -> (gap of left end, gap of right end)
    placement: BTreeMap<ChordId, (usize, usize)>,
}

impl GapStructure {
    pub fn enumeration(&self) -> &ArcEnumeration {
        &self.enumeration
    }

    pub fn gaps(&self) -> &[Vec<GapEndpoint>] {
        &self.gaps
    }

    /// Gaps of `chord`'s left and right ends.
    pub fn placement(&self, chord: ChordId) -> Option<(usize, usize)> {
        self.placement.get(&chord).copied()
    }

    pub fn inner(&self) -> impl Iterator<Item = ChordId> + '_ {
        self.placement.keys().copied()
    }
}

/// Sorts every endpoint of `inner` into its gap.
pub fn build_gaps(
    diagram: &ChordDiagram,
    enumeration: &ArcEnumeration,
    inner: &[ChordId],
) -> Result<GapStructure> {
    let arc = enumeration.arc();
    let mut gaps = vec![Vec::new(); enumeration.gap_count()];
    let mut placement = BTreeMap::new();
    for &b in inner {
        let (s, t) = diagram.endpoints(b)?;
        let (Some(ps), Some(pt)) = (arc.position(s), arc.position(t)) else {
            return Err(Error::precondition(
                Stage::Untangle,
                format!("inner chord {b} does not have both ends on arc {arc}"),
            ));
        };
        let ((ls, lp), (rs, rp)) = if ps < pt { ((s, ps), (t, pt)) } else { ((t, pt), (s, ps)) };
        let (lg, rg) = (enumeration.count_before(lp), enumeration.count_before(rp));
        if lg == rg {
            return Err(Error::precondition(
                Stage::Untangle,
                format!("inner chord {b} has both ends in gap {lg}, so it crosses no fan chord"),
            ));
        }
        gaps[lg].push(GapEndpoint { chord: b, slot: ls, position: lp, side: Side::Left });
        gaps[rg].push(GapEndpoint { chord: b, slot: rs, position: rp, side: Side::Right });
        placement.insert(b, (lg, rg));
    }
    for g in &mut gaps {
        g.sort_by_key(|e| e.position);
    }
    Ok(GapStructure {
        enumeration: enumeration.clone(),
        gaps,
        placement,
    })
}

/// The inner chords after per-gap reordering. Other chords keep their slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UntangledDiagram {
    pub diagram: ChordDiagram,
    /// Old slot to new slot, for every inner-chord endpoint.
    pub permutation: BTreeMap<Slot, Slot>,
}

/// Within each gap, hands the slots occupied by inner endpoints first to the
/// right ends, then to the left ends, each block in original order. Fails if
/// the reordered inner chords still form a triangle, which can only happen
/// when the fan plus inner chords contain four pairwise crossing chords.
pub fn untangle(diagram: &ChordDiagram, gaps: &GapStructure) -> Result<UntangledDiagram> {
    let mut pairs = diagram.pairs().to_vec();
    let mut permutation = BTreeMap::new();
    let mut moved: BTreeMap<(ChordId, Side), Slot> = BTreeMap::new();
    for gap in &gaps.gaps {
        let slots = gap.iter().map(|e| e.slot);
        let order = gap
            .iter()
            .filter(|e| e.side == Side::Right)
            .chain(gap.iter().filter(|e| e.side == Side::Left));
        for (slot, e) in slots.zip(order) {
            permutation.insert(e.slot, slot);
            moved.insert((e.chord, e.side), slot);
        }
    }
    for b in gaps.inner() {
        pairs[b.0] = (moved[&(b, Side::Left)], moved[&(b, Side::Right)]);
    }
    let untangled = ChordDiagram::new(pairs).map_err(|e| {
        Error::invariant(Stage::Untangle, format!("reordering broke the pairing: {e}"))
    })?;

    let inner: Vec<ChordId> = gaps.inner().collect();
    let g = untangled.restrict(inner.iter().copied())?.graph();
    if let Some(t) = enumerate_triangles(&g).first() {
        let arc = gaps.enumeration.arc();
        let pos = |id: ChordId| {
            let (s, t) = untangled.ends(id);
            let (p, q) = (arc.position(s).unwrap(), arc.position(t).unwrap());
            (p.min(q), p.max(q))
        };
        let lo = t.iter().map(|&c| pos(c).0).max().unwrap();
        let hi = t.iter().map(|&c| pos(c).1).min().unwrap();
        let witness = gaps
            .enumeration
            .entries()
            .iter()
            .find(|e| lo < e.position && e.position < hi)
            .map_or_else(|| "none found".to_string(), |e| format!("fan chord {}", e.chord));
        return Err(Error::precondition(
            Stage::Untangle,
            format!(
                "untangled chords {}, {}, {} still form a triangle (crossed by {witness}); input contains K4",
                t[0], t[1], t[2]
            ),
        ));
    }
    Ok(UntangledDiagram {
        diagram: untangled,
        permutation,
    })
}

/// Properly colors the chords `ids` of a triangle-free diagram with at most
/// five colors, by exact search.
pub fn color_triangle_free(
    ctx: &mut Context,
    diagram: &ChordDiagram,
    ids: &[ChordId],
) -> Result<Coloring> {
    let g = diagram.restrict(ids.iter().copied())?.graph();
    if let Some(t) = enumerate_triangles(&g).first() {
        return Err(Error::precondition(
            Stage::TriangleFree,
            format!("chords {}, {}, {} form a triangle", t[0], t[1], t[2]),
        ));
    }
    let coloring = find_coloring(&g, TRIANGLE_FREE_COLORS).ok_or_else(|| {
        Error::invariant(
            Stage::TriangleFree,
            format!("no {TRIANGLE_FREE_COLORS}-coloring of a triangle-free circle graph on {} chords", ids.len()),
        )
    })?;
    ctx.stats.triangle_free_calls += 1;
    ctx.stats.triangle_free_max_colors = ctx.stats.triangle_free_max_colors.max(coloring.colors_used());
    Ok(coloring)
}

/// Every intermediate product of [`fifteen_color`].
#[derive(Debug, Clone)]
pub struct UntangleTrace {
    pub gaps: GapStructure,
    pub untangled: UntangledDiagram,
    /// Five-coloring of the untangled chords, read back on the originals.
    pub classes: Coloring,
    pub coloring: Coloring,
}

/// Properly colors `inner` with colors `0 .. 15` as `3 * class + refinement`.
///
/// Hypotheses: no K4 among `fan ∪ inner`; each fan chord has at most one end
/// on `arc`; each inner chord has both ends on `arc` and crosses a fan chord.
pub fn fifteen_color(
    ctx: &mut Context,
    diagram: &ChordDiagram,
    fan: &[ChordId],
    inner: &[ChordId],
    arc: &Arc,
) -> Result<Coloring> {
    fifteen_color_traced(ctx, diagram, fan, inner, arc).map(|t| t.coloring)
}

pub fn fifteen_color_traced(
    ctx: &mut Context,
    diagram: &ChordDiagram,
    fan: &[ChordId],
    inner: &[ChordId],
    arc: &Arc,
) -> Result<UntangleTrace> {
    let enumeration = prune_and_enumerate(diagram, fan, arc)?;
    let gaps = build_gaps(diagram, &enumeration, inner)?;
    let untangled = untangle(diagram, &gaps)?;
    let classes = color_triangle_free(ctx, &untangled.diagram, inner)?;

    let mut by_class: BTreeMap<Color, Vec<ChordId>> = BTreeMap::new();
    for (id, w) in classes.iter() {
        by_class.entry(w).or_default().push(id);
    }
    let pruned = enumeration.chords();
    let mut coloring = Coloring::new();
    for (&w, members) in &by_class {
        if ctx.checking() {
            check_class_shape(diagram, &gaps, members)?;
            intervals::check_one_inner_per_triangle(diagram, &pruned, members, Stage::Untangle)?;
        }
        let refined = intervals::three_color(ctx, diagram, &pruned, members, arc)?;
        coloring.extend(refined.iter().map(|(id, s)| (id, CLASS_COLORS as Color * w + s)));
    }
    let used = coloring.colors_used();
    if coloring.max_color().is_some_and(|c| c as usize >= TRIANGLE_FREE_COLORS * CLASS_COLORS) {
        return Err(Error::invariant(
            Stage::Untangle,
            format!("color {} escapes the 15-color band", coloring.max_color().unwrap()),
        ));
    }
    ctx.stats.untangle_calls += 1;
    ctx.stats.untangle_max_colors = ctx.stats.untangle_max_colors.max(used);
    Ok(UntangleTrace {
        gaps,
        untangled,
        classes,
        coloring,
    })
}

/// Two crossing chords of one class must have the left end of one and the
/// right end of the other in a common gap.
fn check_class_shape(diagram: &ChordDiagram, gaps: &GapStructure, members: &[ChordId]) -> Result<()> {
    let set: BTreeSet<ChordId> = members.iter().copied().collect();
    for (i, &b) in members.iter().enumerate() {
        for &c in &members[i + 1..] {
            if !diagram.intersects(b, c)? {
                continue;
            }
            let (bl, br) = gaps.placement(b).expect("placed");
            let (cl, cr) = gaps.placement(c).expect("placed");
            if bl != cr && cl != br {
                return Err(Error::invariant(
                    Stage::Untangle,
                    format!("class chords {b} and {c} cross without sharing a left/right gap"),
                ));
            }
        }
    }
    debug_assert_eq!(set.len(), members.len());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::is_proper;

    // arc 0..=5 on 8 slots; fan chord a = (2, 7); inner chords crossing it
    fn sample() -> (ChordDiagram, Arc) {
        // slots: 0 b0, 1 b1, 2 a, 3 b0, 4 b1, 5 c, 6 c', 7 a
        let seq = [1, 2, 0, 1, 2, 3, 3, 0];
        (ChordDiagram::from_sequence(&seq).unwrap(), Arc::new(0, 5, 8).unwrap())
    }

    #[test]
    fn prune_drops_off_arc_fans() {
        let (d, arc) = sample();
        let e = prune_and_enumerate(&d, &[ChordId(0), ChordId(3)], &arc);
        // chord 3 = (5, 6) has one end on the arc, so it stays
        assert_eq!(e.unwrap().len(), 2);
        let off = Arc::new(0, 4, 8).unwrap();
        let e = prune_and_enumerate(&d, &[ChordId(0), ChordId(3)], &off).unwrap();
        assert_eq!(e.chords(), vec![ChordId(0)]);
        assert!(prune_and_enumerate(&d, &[ChordId(1)], &arc).is_err());
    }

    #[test]
    fn gaps_and_reordering() {
        let (d, arc) = sample();
        let e = prune_and_enumerate(&d, &[ChordId(0)], &arc).unwrap();
        let g = build_gaps(&d, &e, &[ChordId(1), ChordId(2)]).unwrap();
        assert_eq!(g.gaps().len(), 2);
        assert_eq!(g.placement(ChordId(1)), Some((0, 1)));
        let empty = build_gaps(&d, &e, &[]).unwrap();
        assert!(empty.gaps().iter().all(Vec::is_empty));
        // chords 1 = (0, 3), 2 = (1, 4) cross; after untangling gap 0 holds
        // left ends only and gap 1 right ends only, so nothing changes
        let u = untangle(&d, &g).unwrap();
        assert_eq!(u.diagram, d);
    }

    #[test]
    fn left_then_right_in_one_gap_is_swapped() {
        // gap between fan endpoints holds left end of x then right end of y:
        // slots: 0 y, 1 a0, 2 x, 3 y, 4 a1, 5 x, then 6 a0', 7 a1'
        let seq = [2, 0, 3, 2, 1, 3, 0, 1];
        let d = ChordDiagram::from_sequence(&seq).unwrap();
        let arc = Arc::new(0, 5, 8).unwrap();
        let e = prune_and_enumerate(&d, &[ChordId(0), ChordId(1)], &arc).unwrap();
        let g = build_gaps(&d, &e, &[ChordId(2), ChordId(3)]).unwrap();
        assert!(d.intersects(ChordId(2), ChordId(3)).unwrap());
        let u = untangle(&d, &g).unwrap();
        assert!(!u.diagram.intersects(ChordId(2), ChordId(3)).unwrap());
        assert_eq!(u.diagram.endpoints(ChordId(2)).unwrap(), (0, 2));
        assert_eq!(u.diagram.endpoints(ChordId(3)).unwrap(), (3, 5));
    }

    #[test]
    fn both_ends_in_one_gap_is_rejected() {
        let (d, _) = sample();
        let arc = Arc::new(0, 6, 8).unwrap();
        let e = prune_and_enumerate(&d, &[ChordId(0)], &arc).unwrap();
        let r = build_gaps(&d, &e, &[ChordId(3)]);
        assert!(matches!(r, Err(Error::Precondition { stage: Stage::Untangle, .. })));
    }

    #[test]
    fn triangle_free_subroutine() {
        let mut ctx = Context::default();
        let d = ChordDiagram::new(vec![(0, 1), (2, 3), (4, 5)]).unwrap();
        let ids: Vec<_> = d.chord_ids().collect();
        assert!(color_triangle_free(&mut ctx, &d, &[]).unwrap().is_empty());
        assert_eq!(color_triangle_free(&mut ctx, &d, &ids).unwrap().colors_used(), 1);
        let t = ChordDiagram::new(vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        let ids: Vec<_> = t.chord_ids().collect();
        assert!(color_triangle_free(&mut ctx, &t, &ids).is_err());
    }

    #[test]
    fn fifteen_color_sample() {
        let (d, arc) = sample();
        let mut ctx = Context::checked();
        let c = fifteen_color(&mut ctx, &d, &[ChordId(0), ChordId(3)], &[ChordId(1), ChordId(2)], &arc)
            .unwrap();
        let g = d.restrict([ChordId(1), ChordId(2)]).unwrap().graph();
        assert!(is_proper(&g, &c).unwrap().is_proper());
        assert!(c.max_color().unwrap() < 15);
        let single = fifteen_color(&mut ctx, &d, &[ChordId(0)], &[ChordId(1)], &arc).unwrap();
        assert_eq!(single.get(ChordId(1)), Some(0));
        assert!(fifteen_color(&mut ctx, &d, &[ChordId(0)], &[], &arc).unwrap().is_empty());
    }
}
