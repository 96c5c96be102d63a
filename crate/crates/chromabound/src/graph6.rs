//! graph6 encoding, bit-exact per the format specification.
//!
//! A line is the order `n` (byte `n+63` for `n <= 62`, or `~`-prefixed multi-byte
//! sizes) followed by the upper triangle of the adjacency matrix in column-major
//! order `(0,1),(0,2),(1,2),(0,3),...`, packed six bits per byte (most significant
//! bit first) with value offset 63 and zero padding in the final byte.

use crate::graph::{Graph, MAX_VERTICES};
use thiserror::Error;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
#[error("graph6 parse error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub kind: Graph6ErrorKind,
    pub offset: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} outside the graph6 range [63, 126]")]
    CharOutOfRange(u8),
    #[error("input ends inside the size field")]
    TruncatedSize,
    #[error("order {0} exceeds the supported maximum {max}", max = MAX_VERTICES)]
    SizeTooLarge(usize),
    #[error("expected {expected} adjacency bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing bytes after the adjacency data")]
    TrailingGarbage,
    #[error("padding bits in the final byte are not zero")]
    NonzeroPadding,
}

fn err(kind: Graph6ErrorKind, offset: usize) -> Graph6Error {
    Graph6Error { kind, offset }
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let b = bytes[offset];
    if !(OFFSET..=126).contains(&b) {
        return Err(err(Graph6ErrorKind::CharOutOfRange(b), offset));
    }
    Ok(b - OFFSET)
}

/// Decodes the size field; returns `(n, bytes consumed)`.
fn parse_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    if bytes.is_empty() {
        return Err(err(Graph6ErrorKind::Empty, 0));
    }
    let first = sixbits(bytes, 0)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    // '~' introduces an 18-bit size; '~~' a 36-bit size
    let (start, width) = if bytes.len() > 1 && bytes[1] == 126 {
        (2, 6)
    } else {
        (1, 3)
    };
    if bytes.len() < start + width {
        return Err(err(Graph6ErrorKind::TruncatedSize, bytes.len()));
    }
    let mut n: usize = 0;
    for i in 0..width {
        n = (n << 6) | sixbits(bytes, start + i)? as usize;
    }
    Ok((n, start + width))
}

/// Parses one graph6 line into a [`Graph`].
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let (n, size_len) = parse_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(err(Graph6ErrorKind::SizeTooLarge(n), 0));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let data_len = bit_count.div_ceil(6);
    if bytes.len() < size_len + data_len {
        return Err(err(
            Graph6ErrorKind::Truncated {
                expected: data_len,
                found: bytes.len() - size_len,
            },
            bytes.len(),
        ));
    }
    if bytes.len() > size_len + data_len {
        return Err(err(Graph6ErrorKind::TrailingGarbage, size_len + data_len));
    }

    let mut edges = Vec::new();
    let mut t = 0usize;
    for j in 1..n {
        for i in 0..j {
            let val = sixbits(bytes, size_len + t / 6)?;
            if val >> (5 - t % 6) & 1 == 1 {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    for pad in bit_count..data_len * 6 {
        let val = sixbits(bytes, size_len + pad / 6)?;
        if val >> (5 - pad % 6) & 1 == 1 {
            return Err(err(Graph6ErrorKind::NonzeroPadding, size_len + pad / 6));
        }
    }
    // construction cannot fail: indices are in range and pairs are distinct
    Ok(Graph::from_edges(n, &edges).expect("decoded edge list is simple"))
}

/// Encodes a graph as a single graph6 line. Only the single-byte size form is
/// emitted, so graphs on more than 62 vertices are rejected.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(err(Graph6ErrorKind::SizeTooLarge(n), 0));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut out = vec![OFFSET + n as u8];
    out.resize(1 + bit_count.div_ceil(6), OFFSET);
    let mut t = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                out[1 + t / 6] += 1 << (5 - t % 6);
            }
            t += 1;
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ascii"))
}

/// True for corpus header lines, which carry no graph.
pub fn is_header_line(line: &str) -> bool {
    line.starts_with(HEADER)
}
