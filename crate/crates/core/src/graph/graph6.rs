//! The graph6 interchange format.
//!
//! A graph6 string is a size header followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte, most significant bit first, each byte offset by
//! 63. Sizes up to 62 use one header byte; larger sizes use `~` plus three
//! bytes (up to 258047) or `~~` plus six bytes.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const MAX_CHAR: u8 = 126;

/// Decodes one graph6 string. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    decode(line.as_bytes(), 0)
}

/// Decodes a stream of graph6 strings, one per line. Blank lines are
/// skipped; error offsets are relative to the start of the stream.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.trim_end_matches(['\n', '\r']);
        if !body.trim().is_empty() {
            graphs.push(decode(body.as_bytes(), offset)?);
        }
        offset += line.len();
    }
    Ok(graphs)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    if n <= 62 {
        out.push(BIAS + n as u8);
    } else if n <= 258_047 {
        out.push(MAX_CHAR);
        out.extend((0..3).rev().map(|i| BIAS + ((n >> (6 * i)) & 0x3f) as u8));
    } else {
        out.extend([MAX_CHAR, MAX_CHAR]);
        out.extend((0..6).rev().map(|i| BIAS + ((n >> (6 * i)) & 0x3f) as u8));
    }

    let mut byte = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            byte = (byte << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(BIAS + byte);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (byte << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

fn decode(bytes: &[u8], base: usize) -> Result<Graph> {
    let mut pos = 0;
    if bytes.starts_with(HEADER.as_bytes()) {
        pos = HEADER.len();
    }
    for (i, &b) in bytes.iter().enumerate().skip(pos) {
        if !(BIAS..=MAX_CHAR).contains(&b) {
            return Err(Error::parse(base + i, format!("byte 0x{b:02x} outside the graph6 range 63..=126")));
        }
    }

    let (n, data_start) = decode_size(bytes, pos, base)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &bytes[data_start..];
    if data.len() != expected {
        let at = base + data_start + data.len().min(expected);
        return Err(Error::parse(
            at,
            format!("expected {expected} data bytes for {n} vertices, found {}", data.len()),
        ));
    }

    let spare = expected * 6 - bit_count;
    if let Some(&last) = data.last() {
        let pad_mask = (1u8 << spare) - 1;
        if (last - BIAS) & pad_mask != 0 {
            return Err(Error::parse(base + bytes.len() - 1, "nonzero padding bits"));
        }
    }

    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = data[bit / 6] - BIAS;
            if (chunk >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_size(bytes: &[u8], pos: usize, base: usize) -> Result<(usize, usize)> {
    let field = |from: usize, len: usize| -> Result<usize> {
        let chunk = bytes
            .get(from..from + len)
            .ok_or_else(|| Error::parse(base + bytes.len(), "truncated size header"))?;
        Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS)))
    };
    match bytes.get(pos) {
        None => Err(Error::parse(base + pos, "empty graph6 string")),
        Some(&b) if b < MAX_CHAR => Ok((usize::from(b - BIAS), pos + 1)),
        Some(_) if bytes.get(pos + 1) == Some(&MAX_CHAR) => {
            let n = field(pos + 2, 6)?;
            if n <= 258_047 {
                return Err(Error::parse(base + pos, "non-canonical eight-byte size header"));
            }
            Ok((n, pos + 8))
        }
        Some(_) => {
            let n = field(pos + 1, 3)?;
            if n <= 62 {
                return Err(Error::parse(base + pos, "non-canonical four-byte size header"));
            }
            Ok((n, pos + 4))
        }
    }
}
