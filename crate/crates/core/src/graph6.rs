//! The graph6 format and the `i: [j, k, ...]` adjacency-list notation.

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("payload truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} unexpected bytes after the payload")]
    TooLong { extra: usize },
    #[error("padding bits in the last byte are not zero")]
    NonzeroPadding,
    #[error("vertex count {0} exceeds the format limit")]
    TooManyVertices(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjacencyError {
    #[error("entry {index}: malformed entry `{text}`")]
    Malformed { index: usize, text: String },
    #[error("pair ({i}, {j}) is not listed with i < j")]
    NotIncreasing { i: usize, j: usize },
    #[error("vertex {vertex} is out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("pair ({i}, {j}) listed twice")]
    Duplicate { i: usize, j: usize },
}

/// Decoding options. Strict padding is the default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecodeOptions {
    /// Accept nonzero bits after the last adjacency bit.
    pub lenient_padding: bool,
}

/// Decodes a graph6 string with strict padding.
pub fn decode_graph6(s: &str) -> Result<Graph, Graph6Error> {
    decode_graph6_with(s, DecodeOptions::default())
}

pub fn decode_graph6_with(s: &str, opts: DecodeOptions) -> Result<Graph, Graph6Error> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::BadCharacter { offset, byte: bytes[offset] });
    }
    let (n, header_len) = read_n(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: payload.len() });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TooLong { extra: payload.len() - expected });
    }
    if !opts.lenient_padding && bits % 6 != 0 {
        let last = payload[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    let mut b = GraphBuilder::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                b.insert(i, j);
            }
            k += 1;
        }
    }
    Ok(b.build())
}

fn read_n(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let value = |range: &[u8]| range.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::Truncated { expected: 8, found: bytes.len() });
        }
        return Ok((value(&bytes[2..8]), 8));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::Truncated { expected: 4, found: bytes.len() });
    }
    Ok((value(&bytes[1..4]), 4))
}

/// Encodes `g` in graph6, without header.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    let push_groups = |out: &mut Vec<u8>, x: usize, groups: usize| {
        for i in (0..groups).rev() {
            out.push((x >> (6 * i) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_groups(&mut out, n, 3);
    } else {
        assert!(n < 1 << 36, "graph6 supports at most 2^36 - 1 vertices");
        out.extend([126, 126]);
        push_groups(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the non-redundant adjacency-list notation, e.g.
/// `0: [2, 3, 5], 1: [3, 4, 5], 2: [4, 5], 3: [5], 4: [5]`.
///
/// Every listed pair `i: [.. j ..]` must have `i < j`. Entries for vertices
/// without larger neighbors may be omitted; when `n` is `None` the vertex
/// count is one more than the largest label seen. An optional pair of
/// surrounding braces is accepted.
pub fn parse_adjacency_list(text: &str, n: Option<usize>) -> Result<Graph, AdjacencyError> {
    let mut body = text.trim();
    if let Some(inner) = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
        body = inner.trim();
    }
    let mut pairs = Vec::new();
    let mut rest = body;
    let mut index = 0;
    while !rest.is_empty() {
        let close = rest.find(']').ok_or_else(|| AdjacencyError::Malformed { index, text: rest.to_string() })?;
        let entry = &rest[..=close];
        rest = rest[close + 1..].trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        let malformed = || AdjacencyError::Malformed { index, text: entry.trim().to_string() };
        let (head, list) = entry.split_once(':').ok_or_else(malformed)?;
        let i: usize = head.trim().parse().map_err(|_| malformed())?;
        let list = list.trim().strip_prefix('[').and_then(|l| l.strip_suffix(']')).ok_or_else(malformed)?;
        if !list.trim().is_empty() {
            for item in list.split(',') {
                let j: usize = item.trim().parse().map_err(|_| malformed())?;
                if j <= i {
                    return Err(AdjacencyError::NotIncreasing { i, j });
                }
                pairs.push((i, j));
            }
        }
        index += 1;
    }
    let n = n.unwrap_or_else(|| pairs.iter().map(|&(_, j)| j + 1).max().unwrap_or(0));
    let mut seen = std::collections::HashSet::new();
    let mut b = GraphBuilder::new(n);
    for &(i, j) in &pairs {
        if j >= n {
            return Err(AdjacencyError::OutOfRange { vertex: j, n });
        }
        if !seen.insert((i, j)) {
            return Err(AdjacencyError::Duplicate { i, j });
        }
        b.insert(i, j);
    }
    Ok(b.build())
}
