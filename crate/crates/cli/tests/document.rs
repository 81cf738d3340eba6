use chordcolor::{gen_diagram, ChordDiagram, ChordId, Coloring, GenMode};
use chordcolor_cli::DiagramDocument;
use proptest::prelude::*;

fn document() -> impl Strategy<Value = DiagramDocument> {
    (0usize..40, any::<u64>(), proptest::option::of(proptest::collection::vec(0u32..30, 40)))
        .prop_map(|(n, seed, colors)| {
            let d = gen_diagram(n, GenMode::UniformMatching, seed).unwrap();
            let c = colors.map(|cs| cs.into_iter().take(n).enumerate().map(|(i, c)| (ChordId(i), c)).collect());
            DiagramDocument::new(d, c)
        })
}

/// Writes `doc` in a non-canonical but valid way: comments, blank lines,
/// swapped endpoints, irregular spacing, colors over several lines.
fn messy(doc: &DiagramDocument, salt: u64) -> String {
    let mut s = String::from("# a hand-written file\n\n");
    s.push_str(&format!("  {}   # chords\n", doc.diagram.len()));
    for (i, &(a, b)) in doc.diagram.pairs().iter().enumerate() {
        if (salt >> (i % 64)) & 1 == 1 {
            s.push_str(&format!("{b}\t{a}\n\n"));
        } else {
            s.push_str(&format!("{a} {b}   # chord {i}\n"));
        }
    }
    if let Some(c) = &doc.coloring {
        s.push_str("# colors follow\ncolors:\n");
        for id in doc.diagram.chord_ids() {
            s.push_str(&format!("{}\n", c.get(id).unwrap()));
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn parse_inverts_emit(doc in document()) {
        let text = doc.emit();
        let back = DiagramDocument::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.emit(), text);
    }

    #[test]
    fn emit_canonicalizes(doc in document(), salt in any::<u64>()) {
        let parsed = DiagramDocument::parse(&messy(&doc, salt)).unwrap();
        prop_assert_eq!(parsed.emit(), doc.emit());
    }

    #[test]
    fn garbage_never_panics(text in "[0-9 #:a-z\n]{0,80}") {
        let _ = DiagramDocument::parse(&text);
    }
}

#[test]
fn duplicate_and_out_of_range_slots_are_reported() {
    let dup = DiagramDocument::parse("2\n0 1\n1 2\n").unwrap_err();
    assert_eq!(dup.line, 3);
    assert!(dup.message.contains("slot 1"));
    let range = DiagramDocument::parse("2\n0 1\n2 9\n").unwrap_err();
    assert_eq!(range.line, 3);
    assert!(range.message.contains("out of range"));
    let count = DiagramDocument::parse("3\n0 1\n2 3\n").unwrap_err();
    assert!(count.message.contains("expected 3 chords"));
}

#[test]
fn colors_attach_in_chord_order() {
    let doc = DiagramDocument::parse("2\n0 2\n1 3\ncolors:\n4 7\n").unwrap();
    let expected: Coloring = [(ChordId(0), 4), (ChordId(1), 7)].into_iter().collect();
    assert_eq!(doc.coloring, Some(expected));
    assert_eq!(doc.diagram, ChordDiagram::new(vec![(0, 2), (1, 3)]).unwrap());
}
