//! McKay's graph6 format.
//!
//! The vertex count is written as `N(n)`: one byte `n + 63` for `n <= 62`,
//! `126` plus three 6-bit bytes for `n <= 258047`, otherwise `126 126` plus
//! six 6-bit bytes. The upper triangle follows column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits per byte, most significant
//! bit first, zero padded, each byte offset by 63.

use super::ParseError;
use crate::graph::Graph;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

const SMALL_MAX: u64 = 62;
const MEDIUM_MAX: u64 = 258_047;
/// Largest vertex count the decoder will allocate for.
const DECODE_MAX: u64 = 100_000;

pub fn encode_graph6(graph: &Graph) -> String {
    let n = graph.n();
    let mut out: Vec<u8> = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n as u64, &mut out);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | graph.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn encode_size(n: u64, out: &mut Vec<u8>) {
    if n <= SMALL_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn decode_graph6(text: &str) -> Result<Graph, ParseError> {
    let body = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let body = body
        .strip_suffix("\r\n")
        .or_else(|| body.strip_suffix('\n'))
        .unwrap_or(body);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(ParseError::Graph6Byte { offset, byte });
        }
    }

    let (n, header_len) = decode_size(bytes)?;
    if n > DECODE_MAX {
        return Err(ParseError::Graph6TooLarge(n));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() != expected {
        return Err(ParseError::Graph6Length {
            expected,
            found: data.len(),
        });
    }
    if !bits.is_multiple_of(6) {
        let unused = 6 - bits % 6;
        let last = data[expected - 1] - 63;
        if last & ((1 << unused) - 1) != 0 {
            return Err(ParseError::Graph6Padding);
        }
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}

fn decode_size(bytes: &[u8]) -> Result<(u64, usize), ParseError> {
    let sixes = |range: &[u8]| {
        range
            .iter()
            .fold(0u64, |acc, &b| (acc << 6) | (b - 63) as u64)
    };
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as u64, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(ParseError::Graph6Length {
                expected: 8,
                found: bytes.len(),
            });
        }
        let n = sixes(&bytes[2..8]);
        if n <= MEDIUM_MAX {
            return Err(ParseError::Graph6NonCanonical(n));
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(ParseError::Graph6Length {
            expected: 4,
            found: bytes.len(),
        });
    }
    let n = sixes(&bytes[1..4]);
    if n <= SMALL_MAX {
        return Err(ParseError::Graph6NonCanonical(n));
    }
    Ok((n, 4))
}
