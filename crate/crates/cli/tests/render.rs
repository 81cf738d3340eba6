use chordcolor::{color_circle_graph, gen_diagram, ChordDiagram, ChordId, Coloring, GenMode, PipelineConfig};
use chordcolor_cli::{render_svg, PALETTE};

fn parse(svg: &str) -> roxmltree::Document<'_> {
    roxmltree::Document::parse(svg).expect("well-formed XML")
}

#[test]
fn empty_diagram_is_a_bare_circle() {
    let svg = render_svg(&ChordDiagram::empty(), None).unwrap();
    let doc = parse(&svg);
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    assert_eq!(root.attribute("version"), Some("1.1"));
    let kids: Vec<_> = root.children().filter(|n| n.is_element()).collect();
    assert_eq!(kids.len(), 1);
    assert_eq!(kids[0].tag_name().name(), "circle");
}

#[test]
fn two_crossing_chords_get_distinct_strokes() {
    let d = ChordDiagram::new(vec![(0, 2), (1, 3)]).unwrap();
    let c: Coloring = [(ChordId(0), 0), (ChordId(1), 1)].into_iter().collect();
    let svg = render_svg(&d, Some(&c)).unwrap();
    let doc = parse(&svg);
    let strokes: Vec<&str> = doc
        .descendants()
        .filter(|n| n.has_tag_name("line"))
        .map(|n| n.attribute("stroke").unwrap())
        .collect();
    assert_eq!(strokes, vec![PALETTE[0], PALETTE[1]]);
    assert!(doc.descendants().any(|n| n.text() == Some("colors_used: 2")));
}

#[test]
fn generated_diagrams_render_well_formed() {
    for seed in 0..50 {
        let d = gen_diagram(1 + seed as usize % 25, GenMode::K4Free, seed).unwrap();
        let c = color_circle_graph(&d, PipelineConfig::default()).unwrap().coloring;
        let svg = render_svg(&d, Some(&c)).unwrap();
        let doc = parse(&svg);
        let lines = doc.descendants().filter(|n| n.has_tag_name("line")).count();
        let slots = doc
            .descendants()
            .filter(|n| n.has_tag_name("circle") && n.attribute("class") == Some("slot"))
            .count();
        assert_eq!(lines, d.len());
        assert_eq!(slots, d.slot_count());
        // slot marks sit on the circle of radius 160 around (200, 200)
        for n in doc.descendants().filter(|n| n.attribute("class") == Some("slot")) {
            let x: f64 = n.attribute("cx").unwrap().parse().unwrap();
            let y: f64 = n.attribute("cy").unwrap().parse().unwrap();
            assert!(((x - 200.0).hypot(y - 200.0) - 160.0).abs() < 0.01);
        }
    }
}
