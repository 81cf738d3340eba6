use serde_json::{json, Value};

use crate::document::ParseError;
use crate::render::RenderError;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    /// `verify` found two crossing chords with the same color.
    pub const CHECK_FAILED: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const K4_PRESENT: u8 = 3;
    pub const SIZE_CAP: u8 = 4;
    pub const INVARIANT: u8 = 5;
    /// Bad flags, unreadable files, inputs that violate a subcommand's
    /// preconditions, or a generator that gave up.
    pub const USAGE: u8 = 6;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Core(#[from] chordcolor::Error),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use chordcolor::Error as E;
        match self {
            CliError::Parse { .. } => exit::PARSE,
            CliError::Core(e) => match e {
                E::InvalidDiagram(_) | E::SlotOutOfRange(_) => exit::PARSE,
                E::K4Present { .. } => exit::K4_PRESENT,
                E::SizeCap { .. } => exit::SIZE_CAP,
                E::Invariant { .. } => exit::INVARIANT,
                _ => exit::USAGE,
            },
            CliError::Io { .. } | CliError::Render(_) | CliError::Usage(_) => exit::USAGE,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            exit::PARSE => "parse",
            exit::K4_PRESENT => "k4-present",
            exit::SIZE_CAP => "size-cap",
            exit::INVARIANT => "invariant",
            _ => "usage",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "error": self.kind(), "exit_code": self.exit_code(), "message": self.to_string() });
        match self {
            CliError::Core(chordcolor::Error::K4Present { witness }) => {
                v["witness"] = json!(witness);
            }
            CliError::Parse { source, .. } => {
                v["line"] = json!(source.line);
            }
            _ => {}
        }
        v
    }
}
