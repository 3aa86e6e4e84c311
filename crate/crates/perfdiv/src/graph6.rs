//! Bit-exact graph6 encoding and decoding, restricted to the single-byte
//! size regime (`n <= 62`).
//!
//! Format: one printable line per graph. The first byte is `63 + n`; the
//! upper triangle of the adjacency matrix follows in column-major order
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ..`), packed big-endian six bits per
//! byte, each offset by 63. Padding bits are zero. The empty graph encodes
//! as the bare size byte `'?'`.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    EmptyLine,
    #[error("graph6 size {0} outside the single-byte regime (n <= 62)")]
    UnsupportedSize(usize),
    #[error("malformed graph6 line: {0}")]
    Malformed(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. Strict: the byte count must match the order
/// exactly and padding bits must be zero.
pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let Some((&size_byte, rest)) = bytes.split_first() else {
        return Err(Graph6Error::EmptyLine);
    };
    if !(63..=126).contains(&size_byte) {
        return Err(Graph6Error::Malformed("size byte out of printable range"));
    }
    let n = (size_byte - 63) as usize;
    if n > MAX_VERTICES {
        // 126 is the multi-byte size marker in the full format.
        return Err(Graph6Error::UnsupportedSize(n));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected_bytes = bit_count.div_ceil(6);
    if rest.len() != expected_bytes {
        return Err(Graph6Error::Malformed("byte count does not match order"));
    }
    let mut rows = vec![0u64; n];
    let mut bit_index = 0;
    for &b in rest {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::Malformed("data byte out of printable range"));
        }
        let chunk = b - 63;
        for k in 0..6 {
            let bit = (chunk >> (5 - k)) & 1;
            if bit_index >= bit_count {
                if bit == 1 {
                    return Err(Graph6Error::Malformed("nonzero padding bits"));
                }
                continue;
            }
            if bit == 1 {
                let (i, j) = triangle_position(bit_index);
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit_index += 1;
        }
    }
    Ok(Graph::from_rows(rows)?)
}

/// Maps a column-major upper-triangle bit offset back to the pair `(i, j)`,
/// `i < j`.
fn triangle_position(mut index: usize) -> (usize, usize) {
    let mut j = 1;
    loop {
        if index < j {
            return (index, j);
        }
        index -= j;
        j += 1;
    }
}
