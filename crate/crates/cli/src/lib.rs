//! Command-line front end for `chordcolor`: the diagram text format, SVG
//! rendering and the `chordcolor` subcommands.

pub mod cli;
pub mod commands;
pub mod document;
pub mod error;
pub mod render;

use std::ffi::OsString;

use clap::Parser;

pub use cli::{Cli, Command};
pub use document::{parse_diagram, DiagramDocument, ParseError, FORMAT_TAG};
pub use error::{exit, CliError};
pub use render::{render_svg, RenderError, PALETTE};

/// Everything one invocation writes, plus its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Invocation {
                    stdout: text,
                    stderr: String::new(),
                    code: exit::OK,
                },
                _ => Invocation {
                    stdout: String::new(),
                    stderr: text,
                    code: exit::USAGE,
                },
            };
        }
    };
    let (result, errors) = match &cli.command {
        Command::Color(a) => {
            let (r, errors) = commands::color(a);
            (Ok(r), errors)
        }
        Command::Verify(a) => (commands::verify(a), Vec::new()),
        Command::Oracle(a) => (commands::oracle(a), Vec::new()),
        Command::Gen(a) => (commands::gen(a), Vec::new()),
        Command::Lemma1(a) => (commands::lemma1(a), Vec::new()),
        Command::Lemma2(a) => (commands::lemma2(a), Vec::new()),
        Command::Render(a) => (commands::render(a), Vec::new()),
    };
    let mut stderr: String = errors.iter().map(|e| format!("error: {e}\n")).collect();
    match result {
        Ok(r) => Invocation {
            stdout: if cli.json { json_text(&r.json) } else { r.text },
            stderr,
            code: r.code,
        },
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            Invocation {
                stdout: if cli.json { json_text(&e.to_json()) } else { String::new() },
                stderr,
                code: e.exit_code(),
            }
        }
    }
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
