//! DIMACS edge format: `c` comment lines, one `p edge <n> <m>` line, then
//! `e <u> <v>` lines with 1-based vertex ids.

use super::ParseError;
use crate::graph::Graph;

pub fn encode_dimacs(graph: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", graph.n(), graph.edge_count());
    for (u, v) in graph.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Decodes DIMACS text. The declared edge count is informational: files in
/// the wild often list each edge twice, so it is parsed but not enforced.
pub fn decode_dimacs(text: &str) -> Result<Graph, ParseError> {
    let err = |line: usize, message: &str| ParseError::Dimacs {
        line,
        message: message.to_string(),
    };
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_ascii_whitespace();
        match fields.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(err(line_no, "duplicate problem line"));
                }
                match fields.next() {
                    Some("edge") | Some("col") => {}
                    _ => return Err(err(line_no, "expected `p edge <n> <m>`")),
                }
                let count = parse_number(fields.next(), line_no, "vertex count")?;
                parse_number(fields.next(), line_no, "edge count")?;
                if fields.next().is_some() {
                    return Err(err(line_no, "trailing fields on problem line"));
                }
                n = Some(count);
            }
            Some("e") => {
                let Some(count) = n else {
                    return Err(err(line_no, "edge before problem line"));
                };
                let u = parse_number(fields.next(), line_no, "endpoint")?;
                let v = parse_number(fields.next(), line_no, "endpoint")?;
                if fields.next().is_some() {
                    return Err(err(line_no, "trailing fields on edge line"));
                }
                if u == 0 || v == 0 || u > count || v > count {
                    return Err(err(line_no, "endpoint outside 1..=n"));
                }
                if u == v {
                    return Err(err(line_no, "self-loop"));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(err(line_no, "unknown line type")),
        }
    }
    let n = n.ok_or_else(|| err(0, "missing problem line"))?;
    Ok(Graph::new(n, edges)?)
}

fn parse_number(field: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    field
        .and_then(|f| f.parse::<usize>().ok())
        .ok_or_else(|| ParseError::Dimacs {
            line,
            message: format!("missing or invalid {what}"),
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encodes_c5() {
        assert_eq!(
            encode_dimacs(&Graph::cycle(5)),
            "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n"
        );
    }

    #[test]
    fn comments_duplicates_and_col_keyword() {
        let text = "c a triangle\np col 3 4\ne 1 2\ne 2 3\ne 3 1\ne 2 1\n";
        assert_eq!(decode_dimacs(text).unwrap(), Graph::complete(3));
    }

    #[test]
    fn rejects_violations() {
        for bad in [
            "",
            "e 1 2\n",
            "p edge 2 1\ne 1 3\n",
            "p edge 2 1\ne 0 1\n",
            "p edge 2 1\ne 1 1\n",
            "p edge 2\n",
            "p edge 2 1\np edge 2 1\n",
            "p edge 2 1\nx 1 2\n",
            "p edge 2 1\ne 1 2 3\n",
        ] {
            assert!(decode_dimacs(bad).is_err(), "{bad:?} should fail");
        }
    }
}
