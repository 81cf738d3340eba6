//! Thirty-coloring of K4-free circle graphs.
//!
//! Each connected component is handled separately. One chord is colored
//! first and the circle is cut open just past one of its endpoints. From
//! there, a frame is an arc, an already colored fan of chords with at most
//! one end on it, and uncolored inner chords lying inside it. The inner
//! chords crossing the fan get fifteen colors from the palette the fan does
//! not use; everything else sits inside a single gap between fan endpoints
//! and becomes a new frame whose fan is the chords just colored. The two
//! palettes alternate with depth, so 30 colors always suffice.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chord::{Arc, ChordDiagram, ChordId};
use crate::context::{Context, PipelineConfig, StageStats};
use crate::error::{Error, Result, Stage};
use crate::graph::connected_components;
use crate::intervals::ArcEnumeration;
use crate::oracle::{clique_number, is_proper, Color, Coloring, Properness};
use crate::untangle::{fifteen_color, prune_for};

/// Size of each of the two palettes.
pub const PALETTE_SIZE: Color = 15;
/// Upper bound on colors used by [`color_circle_graph`].
pub const MAX_COLORS: usize = 2 * PALETTE_SIZE as usize;

/// First color of the palette used at recursion depth `depth`.
pub fn palette_offset(depth: usize) -> Color {
    PALETTE_SIZE * (depth % 2) as Color
}

/// One recursion step: `fan` is colored in palette `depth`, `inner` is not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Frame {
    pub arc: Arc,
    pub fan: Vec<ChordId>,
    pub inner: Vec<ChordId>,
    pub depth: usize,
}

/// The coloring built so far and the depth at which each chord was colored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PaletteState {
    pub coloring: Coloring,
    pub depth_of: BTreeMap<ChordId, usize>,
}

impl PaletteState {
    pub fn assign(&mut self, id: ChordId, color: Color, depth: usize) {
        self.coloring.insert(id, color);
        self.depth_of.insert(id, depth);
    }
}

/// Splits `inner` into the chords crossing some fan chord and the rest.
///
/// A nonempty `inner` whose chords all miss the fan means some component of
/// the frame contains no fan chord; that is reported with the component.
pub fn split_touching(
    diagram: &ChordDiagram,
    fan: &[ChordId],
    inner: &[ChordId],
) -> Result<(Vec<ChordId>, Vec<ChordId>)> {
    let mut touching = Vec::new();
    let mut rest = Vec::new();
    for &b in inner {
        let mut crosses = false;
        for &a in fan {
            if diagram.intersects(a, b)? {
                crosses = true;
                break;
            }
        }
        if crosses { touching.push(b) } else { rest.push(b) }
    }
    if touching.is_empty() && !inner.is_empty() {
        let comp = fanless_component(diagram, fan, inner)?.unwrap_or_default();
        return Err(Error::precondition(
            Stage::Recursion,
            format!("no inner chord crosses the fan; component {comp:?} contains no fan chord"),
        ));
    }
    Ok((touching, rest))
}

fn fanless_component(
    diagram: &ChordDiagram,
    fan: &[ChordId],
    inner: &[ChordId],
) -> Result<Option<Vec<ChordId>>> {
    let fan_set: BTreeSet<ChordId> = fan.iter().copied().collect();
    let g = diagram.restrict(fan.iter().chain(inner).copied())?.graph();
    Ok(connected_components(&g)
        .into_iter()
        .find(|c| c.iter().all(|id| !fan_set.contains(id))))
}

/// Groups chords that cross no fan chord by the gap holding both their ends.
/// Only nonempty gaps are listed, in gap order.
pub fn partition_by_gap(
    diagram: &ChordDiagram,
    enumeration: &ArcEnumeration,
    rest: &[ChordId],
) -> Result<Vec<(usize, Vec<ChordId>)>> {
    let arc = enumeration.arc();
    let mut by_gap: BTreeMap<usize, Vec<ChordId>> = BTreeMap::new();
    for &b in rest {
        let (s, t) = diagram.endpoints(b)?;
        let (Some(ps), Some(pt)) = (arc.position(s), arc.position(t)) else {
            return Err(Error::precondition(
                Stage::Recursion,
                format!("chord {b} does not have both ends on arc {arc}"),
            ));
        };
        let (gs, gt) = (enumeration.count_before(ps), enumeration.count_before(pt));
        if gs != gt {
            return Err(Error::invariant(
                Stage::Recursion,
                format!("chord {b} crosses no fan chord yet spans gaps {gs}..{gt}"),
            ));
        }
        by_gap.entry(gs).or_default().push(b);
    }
    Ok(by_gap.into_iter().collect())
}

/// Colors every inner chord of `frame` (and, recursively, of the frames it
/// spawns) so that the accumulated coloring stays proper. The fan must
/// already be colored within palette `frame.depth`.
pub fn color_within_arc(
    ctx: &mut Context,
    diagram: &ChordDiagram,
    frame: Frame,
    state: &mut PaletteState,
) -> Result<()> {
    let mut pending = vec![frame];
    while let Some(frame) = pending.pop() {
        let children = step(ctx, diagram, &frame, state)?;
        pending.extend(children.into_iter().rev());
    }
    Ok(())
}

fn step(
    ctx: &mut Context,
    diagram: &ChordDiagram,
    frame: &Frame,
    state: &mut PaletteState,
) -> Result<Vec<Frame>> {
    let depth = frame.depth;
    let here = |detail: String| format!("depth {depth}, arc {}: {detail}", frame.arc);
    ctx.stats.recursion_frames += 1;
    ctx.stats.max_depth = ctx.stats.max_depth.max(depth);
    if frame.inner.is_empty() {
        return Ok(Vec::new());
    }

    let fan_lo = palette_offset(depth);
    for &a in &frame.fan {
        match state.coloring.get(a) {
            Some(c) if (fan_lo..fan_lo + PALETTE_SIZE).contains(&c) => {}
            other => {
                return Err(Error::precondition(
                    Stage::Recursion,
                    here(format!("fan chord {a} has color {other:?}, outside palette {fan_lo}..{}", fan_lo + PALETTE_SIZE)),
                ))
            }
        }
    }
    if ctx.checking() {
        if let Some(comp) = fanless_component(diagram, &frame.fan, &frame.inner)? {
            return Err(Error::precondition(
                Stage::Recursion,
                here(format!("component {comp:?} contains no fan chord")),
            ));
        }
    }

    let enumeration = prune_for(diagram, &frame.fan, &frame.arc, Stage::Recursion)?;
    let pruned = enumeration.chords();
    let (touching, rest) = split_touching(diagram, &pruned, &frame.inner)
        .map_err(|e| Error::precondition(Stage::Recursion, here(e.to_string())))?;

    let local = fifteen_color(ctx, diagram, &frame.fan, &touching, &frame.arc)?;
    let lo = palette_offset(depth + 1);
    for (id, c) in local.iter() {
        if c >= PALETTE_SIZE {
            return Err(Error::invariant(
                Stage::Recursion,
                here(format!("chord {id} got local color {c}, beyond the palette")),
            ));
        }
        state.assign(id, lo + c, depth + 1);
    }

    let groups = partition_by_gap(diagram, &enumeration, &rest)
        .map_err(|e| Error::invariant(Stage::Recursion, here(e.to_string())))?;
    if ctx.checking() {
        for (i, (gi, bi)) in groups.iter().enumerate() {
            for (gj, bj) in &groups[i + 1..] {
                for &x in bi {
                    for &y in bj {
                        if diagram.intersects(x, y)? {
                            return Err(Error::invariant(
                                Stage::Recursion,
                                here(format!("chords {x} (gap {gi}) and {y} (gap {gj}) cross")),
                            ));
                        }
                    }
                }
            }
        }
    }

    let mut children = Vec::with_capacity(groups.len());
    for (gap, members) in groups {
        if members.len() >= frame.inner.len() {
            return Err(Error::invariant(
                Stage::Recursion,
                here(format!("gap {gap} did not shrink the frame")),
            ));
        }
        children.push(Frame {
            arc: enumeration.gap_arc(gap),
            fan: touching.clone(),
            inner: members,
            depth: depth + 1,
        });
    }
    Ok(children)
}

/// Output of [`color_circle_graph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
    pub coloring: Coloring,
    /// Recursion depth at which each chord was colored; its color lies in
    /// palette `depth % 2`.
    pub depth_of: BTreeMap<ChordId, usize>,
    pub stats: StageStats,
}

impl ColoringReport {
    pub fn colors_used(&self) -> usize {
        self.coloring.colors_used()
    }
}

/// Properly colors a K4-free chord diagram with at most 30 colors.
///
/// In each component the lowest-id chord is colored 0, the arc is everything
/// but that chord's larger slot, and the rest of the component is colored by
/// [`color_within_arc`]. The result is checked for properness before it is
/// returned.
pub fn color_circle_graph(diagram: &ChordDiagram, config: PipelineConfig) -> Result<ColoringReport> {
    let graph = diagram.graph();
    let clique = clique_number(&graph, 4);
    if clique.omega >= 4 {
        let w = &clique.witness;
        return Err(Error::K4Present {
            witness: [w[0], w[1], w[2], w[3]],
        });
    }

    let mut ctx = Context::new(config);
    let mut state = PaletteState::default();
    let total = diagram.slot_count();
    for comp in connected_components(&graph) {
        let root = comp[0];
        let (_, cut) = diagram.ends(root);
        state.assign(root, palette_offset(0), 0);
        let arc = Arc::with_len((cut + 1) % total, total - 1, total)?;
        let frame = Frame {
            arc,
            fan: vec![root],
            inner: comp[1..].to_vec(),
            depth: 0,
        };
        color_within_arc(&mut ctx, diagram, frame, &mut state)?;
    }

    if state.coloring.len() != diagram.len() {
        return Err(Error::invariant(
            Stage::Driver,
            format!("{} of {} chords colored", state.coloring.len(), diagram.len()),
        ));
    }
    if let Properness::Conflict(a, b) = is_proper(&graph, &state.coloring)? {
        return Err(Error::invariant(
            Stage::Driver,
            format!("crossing chords {a} and {b} share a color"),
        ));
    }
    for (id, c) in state.coloring.iter() {
        let lo = palette_offset(state.depth_of[&id]);
        if !(lo..lo + PALETTE_SIZE).contains(&c) {
            return Err(Error::invariant(
                Stage::Driver,
                format!("chord {id} has color {c} outside its depth palette"),
            ));
        }
    }
    Ok(ColoringReport {
        coloring: state.coloring,
        depth_of: state.depth_of,
        stats: ctx.stats,
    })
}
