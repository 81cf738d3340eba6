use std::path::PathBuf;

use chordcolor::GenMode;
use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "chordcolor", version, about = "Color circle graphs given as chord diagrams")]
pub struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color K4-free diagrams with at most 30 colors.
    Color(ColorArgs),
    /// Check the coloring stored in a document.
    Verify(InputArgs),
    /// Exact clique number and chromatic number of a small diagram.
    Oracle(OracleArgs),
    /// Generate a seeded random diagram.
    Gen(GenArgs),
    /// Run the interval 3-coloring stage on an arc, fan and inner chords.
    Lemma1(StageArgs),
    /// Run the untangle 15-coloring stage on an arc, fan and inner chords.
    Lemma2(StageArgs),
    /// Draw a diagram as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Diagram document, or `-` for standard input.
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    /// Diagram documents; several are processed in parallel.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Verify every stage hypothesis while coloring.
    #[arg(long)]
    pub check_hypotheses: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub input: PathBuf,
    /// Largest chord count accepted for the exact chromatic number.
    #[arg(long, default_value_t = chordcolor::OracleConfig::default().max_vertices)]
    pub max_vertices: usize,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "k4-free", value_parser = parse_mode)]
    pub mode: GenMode,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = chordcolor::GenSpec::new(0, GenMode::K4Free, 0).max_attempts)]
    pub max_attempts: usize,
    /// Add four pairwise crossing chords to the generated diagram.
    #[arg(long)]
    pub plant_k4: bool,
}

fn parse_mode(s: &str) -> Result<GenMode, String> {
    s.parse::<GenMode>().map_err(|_| {
        let names: Vec<&str> = GenMode::ALL.iter().map(|m| m.name()).collect();
        format!("unknown mode {s:?}, expected one of {}", names.join(", "))
    })
}

#[derive(Debug, Args)]
pub struct StageArgs {
    pub input: PathBuf,
    /// Arc as FIRST:LEN, a run of LEN slots starting at slot FIRST.
    #[arg(long)]
    pub arc: String,
    /// Fan chords, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub a: Vec<usize>,
    /// Inner chords, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub b: Vec<usize>,
    #[arg(long)]
    pub check_hypotheses: bool,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    pub input: PathBuf,
    /// Write the SVG here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Color the diagram first when the document has no colors.
    #[arg(long)]
    pub color: bool,
}
