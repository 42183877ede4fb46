use super::ParseError;
use crate::graph::Coloring;

/// `{"palette": k, "colors": {"<vertex>": <color>, ...}}`.
pub fn decode_coloring_json(text: &str) -> Result<Coloring, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))
}

/// `v <vertex> <color>` lines (1-based vertices), optionally preceded by a
/// `p palette <k>` header; without one the palette is the largest colour.
pub fn decode_coloring_dimacs(text: &str) -> Result<Coloring, ParseError> {
    let err = |line: usize, message: &str| ParseError::ColoringText {
        line,
        message: message.to_string(),
    };
    let mut palette = None;
    let mut coloring = Coloring::new(0);
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        match fields.as_slice() {
            ["p", "palette", k] => {
                if palette.is_some() {
                    return Err(err(line_no, "duplicate palette line"));
                }
                palette = Some(
                    k.parse::<usize>()
                        .map_err(|_| err(line_no, "invalid palette"))?,
                );
            }
            ["v", v, c] => {
                let v: usize = v.parse().map_err(|_| err(line_no, "invalid vertex"))?;
                let c: usize = c.parse().map_err(|_| err(line_no, "invalid colour"))?;
                if v == 0 {
                    return Err(err(line_no, "vertex ids are 1-based"));
                }
                if coloring.colors.insert(v - 1, c).is_some() {
                    return Err(err(line_no, "vertex coloured twice"));
                }
            }
            _ => return Err(err(line_no, "expected `v <vertex> <color>`")),
        }
    }
    if palette.is_none() && coloring.is_empty() {
        return Err(ParseError::Empty);
    }
    coloring.palette = palette.unwrap_or_else(|| coloring.max_color());
    Ok(coloring)
}

/// Accepts either colouring encoding.
pub fn decode_coloring(text: &str) -> Result<Coloring, ParseError> {
    if text.trim_start().starts_with('{') {
        decode_coloring_json(text)
    } else {
        decode_coloring_dimacs(text)
    }
}
