//! Text encodings for graphs and colourings.
//!
//! Every decoder here accepts untrusted input and reports malformed data as a
//! [`ParseError`]; none of them panic.

mod coloring;
mod dimacs;
mod graph6;
mod json;

use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use coloring::{decode_coloring, decode_coloring_dimacs, decode_coloring_json};
pub use dimacs::{decode_dimacs, encode_dimacs};
pub use graph6::{decode_graph6, encode_graph6, GRAPH6_HEADER};
pub use json::{decode_json, encode_json};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside the printable range")]
    Graph6Byte { offset: usize, byte: u8 },
    #[error("graph6: expected {expected} data bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: vertex count {0} is not in its shortest encoding")]
    Graph6NonCanonical(u64),
    #[error("graph6: padding bits are not zero")]
    Graph6Padding,
    #[error("graph6: {0} vertices exceeds the supported maximum")]
    Graph6TooLarge(u64),
    #[error("dimacs line {line}: {message}")]
    Dimacs { line: usize, message: String },
    #[error("json: {0}")]
    Json(String),
    #[error("colouring line {line}: {message}")]
    ColoringText { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("input matches several formats ({0}); pass an explicit format")]
    Ambiguous(String),
    #[error("input does not parse as graph6, DIMACS or JSON")]
    Unrecognized,
}

/// Supported graph file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Graph6,
    Dimacs,
    Json,
}

impl Format {
    pub const ALL: [Format; 3] = [Format::Graph6, Format::Dimacs, Format::Json];

    pub fn name(self) -> &'static str {
        match self {
            Format::Graph6 => "graph6",
            Format::Dimacs => "dimacs",
            Format::Json => "json",
        }
    }

    pub fn from_extension(path: &Path) -> Option<Format> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "g6" | "graph6" => Some(Format::Graph6),
            "col" | "dimacs" => Some(Format::Dimacs),
            "json" => Some(Format::Json),
            _ => None,
        }
    }

    pub fn decode(self, text: &str) -> Result<Graph, ParseError> {
        match self {
            Format::Graph6 => decode_graph6(text),
            Format::Dimacs => decode_dimacs(text),
            Format::Json => decode_json(text),
        }
    }

    pub fn encode(self, graph: &Graph) -> String {
        match self {
            Format::Graph6 => {
                let mut s = encode_graph6(graph);
                s.push('\n');
                s
            }
            Format::Dimacs => encode_dimacs(graph),
            Format::Json => {
                let mut s = encode_json(graph);
                s.push('\n');
                s
            }
        }
    }
}

/// Picks the format for `text`: the file extension wins when it is known,
/// otherwise every decoder is tried and exactly one must accept the input.
pub fn detect_format(path: Option<&Path>, text: &str) -> Result<Format, ParseError> {
    if let Some(format) = path.and_then(Format::from_extension) {
        return Ok(format);
    }
    let accepted: Vec<Format> = Format::ALL
        .into_iter()
        .filter(|f| f.decode(text).is_ok())
        .collect();
    match accepted.as_slice() {
        [] => Err(ParseError::Unrecognized),
        [one] => Ok(*one),
        many => Err(ParseError::Ambiguous(
            many.iter().map(|f| f.name()).collect::<Vec<_>>().join(", "),
        )),
    }
}

/// Detects the format and decodes in one step.
pub fn decode_auto(path: Option<&Path>, text: &str) -> Result<(Format, Graph), ParseError> {
    let format = detect_format(path, text)?;
    Ok((format, format.decode(text)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sniffing_picks_the_single_matching_decoder() {
        let c5 = Graph::cycle(5);
        for format in Format::ALL {
            let text = format.encode(&c5);
            assert_eq!(detect_format(None, &text), Ok(format));
            assert_eq!(decode_auto(None, &text).unwrap().1, c5);
        }
    }

    #[test]
    fn extension_overrides_sniffing() {
        let p = Path::new("graph.col");
        assert_eq!(detect_format(Some(p), "Dhc"), Ok(Format::Dimacs));
        assert!(Format::Dimacs.decode("Dhc").is_err());
    }

    #[test]
    fn unrecognized_input_is_an_error() {
        assert_eq!(
            detect_format(None, "hello world"),
            Err(ParseError::Unrecognized)
        );
    }
}
