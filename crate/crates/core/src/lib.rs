//! Constructive coloring of circle graphs without four pairwise crossing
//! chords, using at most 30 colors, plus the exact oracles and generators
//! used to check it.
//!
//! A [`ChordDiagram`] pairs `2n` abstract circle slots into `n` chords; two
//! chords cross exactly when their endpoints interleave. The pipeline lives
//! in [`driver`], [`untangle`] and [`intervals`]; [`oracle`] holds the slow
//! independent checks.

pub mod chord;
pub mod context;
pub mod driver;
pub mod error;
pub mod generator;
pub mod graph;
pub mod intervals;
pub mod oracle;
pub mod untangle;

pub use chord::{Arc, ChordDiagram, ChordId, DiagramView, Slot};
pub use context::{Context, PipelineConfig, StageStats};
pub use driver::{color_circle_graph, ColoringReport, MAX_COLORS, PALETTE_SIZE};
pub use error::{Error, Result, Stage};
pub use generator::{gen_diagram, generate, plant_k4, GenMode, GenSpec, Instance, Shape};
pub use graph::{connected_components, IntersectionGraph};
pub use oracle::{
    chromatic_number_exact, clique_number, enumerate_triangles, is_proper, ChromaticNumber,
    CliqueReport, Color, Coloring, OracleConfig, Properness,
};
