//! Plain-text diagram documents.
//!
//! ```text
//! # chord-diagram v1
//! 2
//! 0 2
//! 1 3
//! colors:
//! 0 1
//! ```
//!
//! The first non-comment line holds the chord count `n`, the next `n` lines
//! one chord each as two slot numbers, and an optional `colors:` block holds
//! `n` colors in chord order (spread over any number of lines). Everything
//! after a `#` is a comment.

use std::fmt;

use chordcolor::{ChordDiagram, ChordId, Color, Coloring};

/// Version tag written at the top of every emitted document.
pub const FORMAT_TAG: &str = "# chord-diagram v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramDocument {
    pub diagram: ChordDiagram,
    pub coloring: Option<Coloring>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number; one past the last line for truncated input.
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

fn number(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .or_else(|_| err(line, format!("expected {what}, found {token:?}")))
}

impl DiagramDocument {
    pub fn new(diagram: ChordDiagram, coloring: Option<Coloring>) -> Self {
        DiagramDocument { diagram, coloring }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let end = text.lines().count() + 1;

        let Some((ln, first)) = lines.next() else {
            return err(end, "missing chord count");
        };
        let n = match first.split_whitespace().collect::<Vec<_>>().as_slice() {
            [tok] => number(ln, tok, "chord count")?,
            _ => return err(ln, "expected a single chord count"),
        };

        let total = 2 * n;
        let mut seen: Vec<Option<usize>> = vec![None; total];
        let mut pairs = Vec::with_capacity(n);
        for k in 0..n {
            let Some((ln, l)) = lines.next() else {
                return err(end, format!("expected {n} chords, found {k}"));
            };
            let toks: Vec<&str> = l.split_whitespace().collect();
            let [a, b] = toks.as_slice() else {
                if l == "colors:" {
                    return err(ln, format!("expected {n} chords, found {k}"));
                }
                return err(ln, "expected two slot numbers");
            };
            let (a, b) = (number(ln, a, "slot number")?, number(ln, b, "slot number")?);
            if a == b {
                return err(ln, format!("chord has both ends on slot {a}"));
            }
            for s in [a, b] {
                if s >= total {
                    return err(ln, format!("slot {s} out of range 0..{total}"));
                }
                if let Some(prev) = seen[s] {
                    return err(ln, format!("slot {s} already used on line {prev}"));
                }
                seen[s] = Some(ln);
            }
            pairs.push((a, b));
        }
        let diagram = ChordDiagram::new(pairs).expect("pairing validated above");

        let coloring = match lines.next() {
            None => None,
            Some((_, "colors:")) => {
                let mut colors = Vec::with_capacity(n);
                for (ln, l) in lines {
                    for tok in l.split_whitespace() {
                        if colors.len() == n {
                            return err(ln, format!("more than {n} colors"));
                        }
                        let c: Color = tok
                            .parse()
                            .or_else(|_| err(ln, format!("expected a color, found {tok:?}")))?;
                        colors.push(c);
                    }
                }
                if colors.len() != n {
                    return err(end, format!("expected {n} colors, found {}", colors.len()));
                }
                Some(colors.into_iter().enumerate().map(|(i, c)| (ChordId(i), c)).collect())
            }
            Some((ln, _)) => return err(ln, format!("unexpected content after {n} chords")),
        };
        Ok(DiagramDocument { diagram, coloring })
    }

    /// Canonical text: version tag, count, chords with the smaller slot first,
    /// and the colors on a single line.
    pub fn emit(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for DiagramDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{FORMAT_TAG}")?;
        writeln!(f, "{}", self.diagram.len())?;
        for &(a, b) in self.diagram.pairs() {
            writeln!(f, "{a} {b}")?;
        }
        if let Some(c) = &self.coloring {
            writeln!(f, "colors:")?;
            let line: Vec<String> = self
                .diagram
                .chord_ids()
                .map(|id| c.get(id).map_or_else(|| "?".to_owned(), |x| x.to_string()))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Parses the diagram part of a document, ignoring any colors.
pub fn parse_diagram(text: &str) -> Result<ChordDiagram, ParseError> {
    DiagramDocument::parse(text).map(|d| d.diagram)
}
