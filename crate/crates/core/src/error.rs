use thiserror::Error;

use crate::chord::{ChordId, Slot};

/// Which pipeline stage raised a precondition or invariant failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Stage {
    Intervals,
    Untangle,
    TriangleFree,
    Recursion,
    Driver,
}

impl std::fmt::Display for Stage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Stage::Intervals => "interval-3-coloring",
            Stage::Untangle => "untangle-15-coloring",
            Stage::TriangleFree => "triangle-free-5-coloring",
            Stage::Recursion => "gap-recursion",
            Stage::Driver => "driver",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("unknown chord id {0}")]
    UnknownChord(ChordId),

    #[error("invalid arc: {0}")]
    InvalidArc(String),

    #[error("coloring does not cover chord {0}")]
    PartialColoring(ChordId),

    /// A caller handed a stage input that violates the stage's hypotheses.
    #[error("[{stage}] precondition violated: {detail}")]
    Precondition { stage: Stage, detail: String },

    /// Something the construction guarantees did not hold.
    #[error("[{stage}] invariant violated: {detail}")]
    Invariant { stage: Stage, detail: String },

    #[error("diagram contains K4: chords {}, {}, {}, {}", witness[0], witness[1], witness[2], witness[3])]
    K4Present { witness: [ChordId; 4] },

    #[error("instance has {vertices} vertices, exact search is capped at {cap}")]
    SizeCap { vertices: usize, cap: usize },

    #[error("generation failed after {attempts} attempts: {detail}")]
    Generation { attempts: usize, detail: String },

    #[error("slot {0} is out of range")]
    SlotOutOfRange(Slot),
}

impl Error {
    pub(crate) fn precondition(stage: Stage, detail: impl Into<String>) -> Self {
        Error::Precondition {
            stage,
            detail: detail.into(),
        }
    }

    pub(crate) fn invariant(stage: Stage, detail: impl Into<String>) -> Self {
        Error::Invariant {
            stage,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
