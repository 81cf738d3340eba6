//! SVG drawings of (optionally colored) chord diagrams.

use std::f64::consts::PI;
use std::fmt::Write;

use chordcolor::{ChordDiagram, Coloring};

/// Stroke colors indexed by chord color. Colors 0..15 and 15..30 are the two
/// alternating palettes of the recursive coloring.
pub const PALETTE: [&str; 30] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173", "#aec7e8",
    "#ffbb78", "#98df8a", "#ff9896", "#c5b0d5", "#c49c94", "#f7b6d2", "#c7c7c7", "#dbdb8d",
    "#9edae5", "#6b6ecf", "#b5cf6b", "#e7ba52", "#d6616b", "#ce6dbd",
];

const UNCOLORED: &str = "#000000";
const SIZE: f64 = 400.0;
const CENTER: f64 = 200.0;
const RADIUS: f64 = 160.0;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RenderError {
    #[error("coloring covers {colored} chords but the diagram has {chords}")]
    Mismatch { colored: usize, chords: usize },
    #[error("color {color} of chord {chord} exceeds the {}-entry palette", PALETTE.len())]
    ColorOutOfPalette { chord: usize, color: u32 },
}

fn point(slot: usize, total: usize) -> (f64, f64) {
    // slot 0 at the top, increasing clockwise
    let angle = 2.0 * PI * slot as f64 / total as f64 - PI / 2.0;
    (CENTER + RADIUS * angle.cos(), CENTER + RADIUS * angle.sin())
}

/// Draws the circle, one mark per slot and one straight segment per chord.
/// With a coloring, chords are stroked by palette entry and a
/// `colors_used` legend is added below the circle.
pub fn render_svg(diagram: &ChordDiagram, coloring: Option<&Coloring>) -> Result<String, RenderError> {
    if let Some(c) = coloring {
        if c.len() != diagram.len() || diagram.chord_ids().any(|id| !c.contains(id)) {
            return Err(RenderError::Mismatch {
                colored: c.len(),
                chords: diagram.len(),
            });
        }
        if let Some((id, color)) = c.iter().find(|&(_, x)| x as usize >= PALETTE.len()) {
            return Err(RenderError::ColorOutOfPalette { chord: id.0, color });
        }
    }
    let height = if coloring.is_some() { SIZE + 30.0 } else { SIZE };
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{height}" viewBox="0 0 {SIZE} {height}">"#
    );
    let _ = writeln!(
        s,
        r##"  <circle cx="{CENTER}" cy="{CENTER}" r="{RADIUS}" fill="none" stroke="#444444" stroke-width="1.5"/>"##
    );
    let total = diagram.slot_count();
    for id in diagram.chord_ids() {
        let (a, b) = diagram.endpoints(id).expect("id from diagram");
        let ((x1, y1), (x2, y2)) = (point(a, total), point(b, total));
        let stroke = coloring
            .and_then(|c| c.get(id))
            .map_or(UNCOLORED, |c| PALETTE[c as usize]);
        let _ = writeln!(
            s,
            r#"  <line class="chord" data-chord="{}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{stroke}" stroke-width="2"/>"#,
            id.0
        );
    }
    for slot in 0..total {
        let (x, y) = point(slot, total);
        let _ = writeln!(
            s,
            r##"  <circle class="slot" cx="{x:.3}" cy="{y:.3}" r="3" fill="#222222"/>"##
        );
    }
    if let Some(c) = coloring {
        let _ = writeln!(
            s,
            r#"  <text x="{CENTER}" y="{}" text-anchor="middle" font-family="sans-serif" font-size="16">colors_used: {}</text>"#,
            SIZE + 10.0,
            c.colors_used()
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use chordcolor::ChordId;

    #[test]
    fn palette_entries_are_distinct() {
        let mut p = PALETTE.to_vec();
        p.sort();
        p.dedup();
        assert_eq!(p.len(), 30);
    }

    #[test]
    fn empty_diagram_has_only_the_circle() {
        let svg = render_svg(&ChordDiagram::empty(), None).unwrap();
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(!svg.contains("<line"));
    }

    #[test]
    fn mismatched_coloring_is_rejected() {
        let d = ChordDiagram::new(vec![(0, 2), (1, 3)]).unwrap();
        let c: Coloring = [(ChordId(0), 0)].into_iter().collect();
        assert!(matches!(render_svg(&d, Some(&c)), Err(RenderError::Mismatch { .. })));
    }
}
