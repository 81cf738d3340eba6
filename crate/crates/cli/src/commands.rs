//! Subcommand implementations. Each returns the text report, its JSON
//! mirror and the exit code.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::io::Read;
use std::path::Path;

use chordcolor::intervals::{build_intervals, enumerate_arc, three_color};
use chordcolor::oracle::is_proper;
use chordcolor::untangle::{fifteen_color_traced, Side};
use chordcolor::{
    chromatic_number_exact, clique_number, color_circle_graph, enumerate_triangles, generate,
    plant_k4, Arc, ChordDiagram, ChordId, Coloring, Context, GenSpec, OracleConfig,
    PipelineConfig, Properness, StageStats,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cli::{ColorArgs, GenArgs, InputArgs, OracleArgs, RenderArgs, StageArgs};
use crate::document::DiagramDocument;
use crate::error::{exit, CliError};
use crate::render::render_svg;

pub struct Report {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, code: exit::OK }
    }
}

pub fn read_document(path: &Path) -> Result<DiagramDocument, CliError> {
    let name = path.display().to_string();
    let text = if name == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io { path: name.clone(), source })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: name.clone(), source })?
    };
    DiagramDocument::parse(&text).map_err(|source| CliError::Parse { path: name, source })
}

fn ids(list: &[ChordId]) -> String {
    list.iter().map(|id| id.0.to_string()).collect::<Vec<_>>().join(" ")
}

fn colors_in_order(d: &ChordDiagram, c: &Coloring) -> Vec<Option<u32>> {
    d.chord_ids().map(|id| c.get(id)).collect()
}

fn stats_line(s: &StageStats) -> String {
    format!(
        "interval_calls={} interval_max_colors={} untangle_calls={} untangle_max_colors={} \
         triangle_free_calls={} triangle_free_max_colors={} frames={} max_depth={}",
        s.interval_calls,
        s.interval_max_colors,
        s.untangle_calls,
        s.untangle_max_colors,
        s.triangle_free_calls,
        s.triangle_free_max_colors,
        s.recursion_frames,
        s.max_depth
    )
}

fn color_one(path: &Path, config: PipelineConfig) -> Result<(String, Value), CliError> {
    let doc = read_document(path)?;
    let d = &doc.diagram;
    let report = color_circle_graph(d, config)?;
    let omega = clique_number(&d.graph(), 4).omega;
    let colored = DiagramDocument::new(d.clone(), Some(report.coloring.clone()));
    let mut text = String::new();
    let _ = writeln!(text, "# k4_check: passed (largest clique has {omega} chords)");
    let _ = writeln!(text, "# colors_used: {}", report.colors_used());
    let _ = writeln!(text, "# stages: {}", stats_line(&report.stats));
    text.push_str(&colored.emit());
    let depth: Vec<usize> = d.chord_ids().map(|id| report.depth_of[&id]).collect();
    let json = json!({
        "file": path.display().to_string(),
        "chords": d.len(),
        "pairs": d.pairs(),
        "k4_free": true,
        "clique_number": omega,
        "colors_used": report.colors_used(),
        "colors": colors_in_order(d, &report.coloring),
        "depth": depth,
        "stats": report.stats,
    });
    Ok((text, json))
}

/// Colors every input independently, in parallel. Reports come back in input
/// order; the exit code is that of the first failing input.
pub fn color(args: &ColorArgs) -> (Report, Vec<CliError>) {
    let config = PipelineConfig {
        check_hypotheses: args.check_hypotheses,
    };
    let results: Vec<Result<(String, Value), CliError>> =
        args.inputs.par_iter().map(|p| color_one(p, config)).collect();
    let batch = args.inputs.len() > 1;
    let mut text = String::new();
    let mut items = Vec::with_capacity(results.len());
    let mut errors = Vec::new();
    let mut code = exit::OK;
    for (path, r) in args.inputs.iter().zip(results) {
        match r {
            Ok((t, j)) => {
                if batch {
                    let _ = writeln!(text, "# file: {}", path.display());
                }
                text.push_str(&t);
                items.push(j);
            }
            Err(e) => {
                if code == exit::OK {
                    code = e.exit_code();
                }
                let mut j = e.to_json();
                j["file"] = json!(path.display().to_string());
                items.push(j);
                errors.push(e);
            }
        }
    }
    let json = if batch { Value::Array(items) } else { items.pop().unwrap_or(Value::Null) };
    (Report { text, json, code }, errors)
}

pub fn verify(args: &InputArgs) -> Result<Report, CliError> {
    let doc = read_document(&args.input)?;
    let coloring = doc
        .coloring
        .ok_or_else(|| CliError::Usage("document has no colors: block to verify".into()))?;
    let verdict = is_proper(&doc.diagram.graph(), &coloring)?;
    let used = coloring.colors_used();
    Ok(match verdict {
        Properness::Proper => Report::ok(
            format!("proper: yes\ncolors_used: {used}\n"),
            json!({ "proper": true, "colors_used": used, "conflict": null }),
        ),
        Properness::Conflict(a, b) => {
            let c = coloring.get(a).expect("coloring is total");
            Report {
                text: format!(
                    "proper: no\nconflict: chords {a} and {b} cross and share color {c}\ncolors_used: {used}\n"
                ),
                json: json!({ "proper": false, "colors_used": used, "conflict": [a, b], "color": c }),
                code: exit::CHECK_FAILED,
            }
        }
    })
}

pub fn oracle(args: &OracleArgs) -> Result<Report, CliError> {
    let doc = read_document(&args.input)?;
    let g = doc.diagram.graph();
    let config = OracleConfig {
        max_vertices: args.max_vertices,
    };
    let chi = chromatic_number_exact(&g, g.len(), &config)?;
    let (Some(chi_value), chordcolor::ChromaticNumber::Exact { coloring, .. }) = (chi.chi(), &chi) else {
        unreachable!("limit equals the vertex count");
    };
    let clique = clique_number(&g, g.len());
    let triangles = enumerate_triangles(&g).len();
    let colors = colors_in_order(&doc.diagram, coloring);
    let mut text = String::new();
    let _ = writeln!(text, "chords: {}", g.len());
    let _ = writeln!(text, "edges: {}", g.edge_count());
    let _ = writeln!(text, "clique_number: {}", clique.omega);
    let _ = writeln!(text, "{}", format!("clique: {}", ids(&clique.witness)).trim_end());
    let _ = writeln!(text, "triangles: {triangles}");
    let _ = writeln!(text, "chromatic_number: {chi_value}");
    let shown: Vec<String> = colors.iter().map(|c| c.expect("total").to_string()).collect();
    let _ = writeln!(text, "{}", format!("coloring: {}", shown.join(" ")).trim_end());
    let json = json!({
        "chords": g.len(),
        "edges": g.edge_count(),
        "clique_number": clique.omega,
        "clique": clique.witness,
        "triangles": triangles,
        "chromatic_number": chi_value,
        "colors": colors,
    });
    Ok(Report::ok(text, json))
}

fn arc_flag(arc: &Arc) -> String {
    format!("{}:{}", arc.first_slot().unwrap_or(0), arc.len())
}

fn list_flag(list: &[ChordId]) -> String {
    list.iter().map(|id| id.0.to_string()).collect::<Vec<_>>().join(",")
}

pub fn gen(args: &GenArgs) -> Result<Report, CliError> {
    let spec = GenSpec {
        n: args.n,
        mode: args.mode,
        seed: args.seed,
        max_attempts: args.max_attempts,
    };
    let instance = generate(&spec)?;
    let (diagram, shape, planted) = if args.plant_k4 {
        let (d, w) = plant_k4(&instance.diagram, args.seed);
        (d, None, Some(w))
    } else {
        (instance.diagram, instance.shape, None)
    };
    let doc = DiagramDocument::new(diagram, None).emit();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "# generated: mode={} n={} seed={}",
        args.mode.name(),
        args.n,
        args.seed
    );
    if let Some(s) = &shape {
        let _ = writeln!(
            text,
            "# instance: --arc {} --a {} --b {}",
            arc_flag(&s.arc),
            list_flag(&s.fan),
            list_flag(&s.inner)
        );
    }
    if let Some(w) = &planted {
        let _ = writeln!(text, "# planted_k4: {}", ids(w));
    }
    text.push_str(&doc);
    let json = json!({
        "mode": args.mode.name(),
        "n": args.n,
        "seed": args.seed,
        "shape": shape,
        "planted_k4": planted,
        "document": doc,
    });
    Ok(Report::ok(text, json))
}

struct StageInput {
    doc: DiagramDocument,
    arc: Arc,
    fan: Vec<ChordId>,
    inner: Vec<ChordId>,
    ctx: Context,
}

fn stage_input(args: &StageArgs) -> Result<StageInput, CliError> {
    let doc = read_document(&args.input)?;
    let bad = || CliError::Usage(format!("--arc expects FIRST:LEN, found {:?}", args.arc));
    let (first, len) = args.arc.split_once(':').ok_or_else(bad)?;
    let first: usize = first.trim().parse().map_err(|_| bad())?;
    let len: usize = len.trim().parse().map_err(|_| bad())?;
    let arc = Arc::with_len(first, len, doc.diagram.slot_count())?;
    let to_ids = |v: &[usize]| -> Result<Vec<ChordId>, CliError> {
        let mut out = Vec::with_capacity(v.len());
        for &i in v {
            if !doc.diagram.contains(ChordId(i)) {
                return Err(chordcolor::Error::UnknownChord(ChordId(i)).into());
            }
            out.push(ChordId(i));
        }
        Ok(out)
    };
    let fan = to_ids(&args.a)?;
    let inner = to_ids(&args.b)?;
    let all: BTreeSet<ChordId> = fan.iter().chain(&inner).copied().collect();
    if all.len() != fan.len() + inner.len() {
        return Err(CliError::Usage("fan and inner chords must be distinct".into()));
    }
    let ctx = Context::new(PipelineConfig {
        check_hypotheses: args.check_hypotheses,
    });
    Ok(StageInput { doc, arc, fan, inner, ctx })
}

fn write_colors(text: &mut String, inner: &[ChordId], c: &Coloring) {
    let _ = writeln!(text, "colors_used: {}", c.colors_used());
    let _ = writeln!(text, "colors:");
    for &b in inner {
        let _ = writeln!(text, "  chord {b}: {}", c.get(b).expect("inner chords are colored"));
    }
}

fn inner_colors(inner: &[ChordId], c: &Coloring) -> Value {
    inner.iter().map(|&b| json!({ "chord": b, "color": c.get(b) })).collect()
}

pub fn lemma1(args: &StageArgs) -> Result<Report, CliError> {
    let StageInput { doc, arc, fan, inner, mut ctx } = stage_input(args)?;
    let d = &doc.diagram;
    let coloring = three_color(&mut ctx, d, &fan, &inner, &arc)?;
    let enumeration = enumerate_arc(d, &fan, &arc)?;
    let system = build_intervals(d, &enumeration, &inner)?;

    let mut text = String::new();
    let _ = writeln!(text, "arc: {} on {} slots", arc_flag(&arc), arc.total());
    let _ = writeln!(text, "fan:");
    for (i, e) in enumeration.entries().iter().enumerate() {
        let _ = writeln!(text, "  {}: chord {} at slot {}", i + 1, e.chord, e.slot);
    }
    let _ = writeln!(text, "intervals:");
    for (iv, members) in system.groups() {
        let _ = writeln!(text, "  ({}, {}): chords {}", iv.left, iv.right, ids(members));
    }
    write_colors(&mut text, &inner, &coloring);
    let intervals: Vec<Value> = inner
        .iter()
        .map(|&b| json!({ "chord": b, "interval": system.interval(b) }))
        .collect();
    let json = json!({
        "arc": arc,
        "fan": enumeration.entries(),
        "intervals": intervals,
        "colors_used": coloring.colors_used(),
        "colors": inner_colors(&inner, &coloring),
    });
    Ok(Report::ok(text, json))
}

pub fn lemma2(args: &StageArgs) -> Result<Report, CliError> {
    let StageInput { doc, arc, fan, inner, mut ctx } = stage_input(args)?;
    let d = &doc.diagram;
    let trace = fifteen_color_traced(&mut ctx, d, &fan, &inner, &arc)?;
    let kept = trace.gaps.enumeration().chords();
    let dropped: Vec<ChordId> = fan.iter().copied().filter(|a| !kept.contains(a)).collect();
    let untangled = &trace.untangled.diagram;

    let mut text = String::new();
    let _ = writeln!(text, "arc: {} on {} slots", arc_flag(&arc), arc.total());
    let _ = writeln!(text, "fan:");
    for (i, e) in trace.gaps.enumeration().entries().iter().enumerate() {
        let _ = writeln!(text, "  {}: chord {} at slot {}", i + 1, e.chord, e.slot);
    }
    let _ = writeln!(text, "{}", format!("dropped: {}", ids(&dropped)).trim_end());
    let _ = writeln!(text, "gaps:");
    for (j, gap) in trace.gaps.gaps().iter().enumerate() {
        let ends: Vec<String> = gap
            .iter()
            .map(|e| {
                let side = if e.side == Side::Left { "L" } else { "R" };
                format!("{}{side}@{}", e.chord, e.slot)
            })
            .collect();
        let _ = writeln!(text, "{}", format!("  {j}: {}", ends.join(" ")).trim_end());
    }
    let _ = writeln!(text, "untangled:");
    let mut moved = Vec::with_capacity(inner.len());
    for &b in &inner {
        let (s, t) = d.endpoints(b)?;
        let (u, v) = untangled.endpoints(b)?;
        let _ = writeln!(text, "  chord {b}: {s} {t} -> {u} {v}");
        moved.push(json!({ "chord": b, "before": [s, t], "after": [u, v] }));
    }
    let _ = writeln!(text, "classes:");
    for &b in &inner {
        let _ = writeln!(text, "  chord {b}: {}", trace.classes.get(b).expect("classified"));
    }
    write_colors(&mut text, &inner, &trace.coloring);
    let json = json!({
        "arc": arc,
        "fan": trace.gaps.enumeration().entries(),
        "dropped": dropped,
        "gaps": trace.gaps.gaps(),
        "untangled": moved,
        "untangled_document": DiagramDocument::new(untangled.clone(), None).emit(),
        "classes": inner_colors(&inner, &trace.classes),
        "colors_used": trace.coloring.colors_used(),
        "colors": inner_colors(&inner, &trace.coloring),
    });
    Ok(Report::ok(text, json))
}

pub fn render(args: &RenderArgs) -> Result<Report, CliError> {
    let doc = read_document(&args.input)?;
    let coloring = match (doc.coloring, args.color) {
        (Some(c), _) => Some(c),
        (None, true) => Some(color_circle_graph(&doc.diagram, PipelineConfig::default())?.coloring),
        (None, false) => None,
    };
    let svg = render_svg(&doc.diagram, coloring.as_ref())?;
    let used = coloring.as_ref().map(Coloring::colors_used);
    match &args.output {
        Some(path) => {
            std::fs::write(path, &svg).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Report::ok(
                format!("wrote {}\n", path.display()),
                json!({ "output": path.display().to_string(), "colors_used": used }),
            ))
        }
        None => Ok(Report::ok(
            svg.clone(),
            json!({ "output": null, "colors_used": used, "svg": svg }),
        )),
    }
}
