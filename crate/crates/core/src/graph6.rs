//! The graph6 text encoding of labeled simple graphs.
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, each byte offset by 63. The final byte is
//! zero-padded.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_ORDER};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        None => Err(err(offset, "unexpected end of input")),
        Some(&b) if (63..=126).contains(&b) => Ok(b - OFFSET),
        Some(&b) => Err(err(offset, format!("byte 0x{b:02x} outside 63..=126"))),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` prefix is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let skip = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let bytes = &text.as_bytes()[skip..];
    if bytes.is_empty() {
        return Err(err(skip, "empty input"));
    }

    let first = sextet(bytes, 0).map_err(|e| shift(e, skip))?;
    let (n, mut pos) = if first < 63 {
        (first as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            return Err(err(skip + 1, "eight-byte size headers are not supported"));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, skip))? as usize;
        }
        if n < 63 {
            return Err(err(skip, format!("non-canonical size header for n={n}")));
        }
        (n, 4)
    };
    if n == 0 {
        return Err(err(skip, "graph has no vertices"));
    }
    if n > MAX_ORDER {
        return Err(err(
            skip,
            format!("n={n} exceeds the supported maximum {MAX_ORDER}"),
        ));
    }

    let total_bits = n * (n - 1) / 2;
    let data_len = total_bits.div_ceil(6);
    if bytes.len() < pos + data_len {
        return Err(err(
            skip + bytes.len(),
            format!(
                "expected {} adjacency bytes, found {}",
                data_len,
                bytes.len() - pos
            ),
        ));
    }
    if bytes.len() > pos + data_len {
        return Err(err(skip + pos + data_len, "trailing bytes after graph"));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                current = sextet(bytes, pos).map_err(|e| shift(e, skip))?;
                pos += 1;
            }
            if current & (0x20 >> (k % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if current & pad_mask != 0 {
            return Err(err(skip + pos - 1, "non-zero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: offset + by,
            reason,
        },
        other => other,
    }
}

/// Canonical graph6 encoding of a labeled graph.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n < 63 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut current = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                current |= 0x20 >> (k % 6);
            }
            k += 1;
            if k.is_multiple_of(6) {
                out.push(current + OFFSET);
                current = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push(current + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses a multi-line graph6 document. Blank lines are skipped; errors carry
/// the 1-based line number.
pub fn parse_lines(text: &str) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| parse_graph6(line.trim_end()).map_err(|e| (i + 1, e)))
        .collect()
}
